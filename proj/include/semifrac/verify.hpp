#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "semifrac/exact.hpp"

namespace semifrac {

struct SemiprimeFactors {
    u64 p = 0;
    u64 q = 0;
};

// Trial division; fills `why` with the offending structure on failure
// (prime, prime square, prime power, or three or more factors).
inline std::optional<SemiprimeFactors> factor_semiprime(u64 x, std::string* why = nullptr) {
    auto fail = [&](const std::string& reason) -> std::optional<SemiprimeFactors> {
        if (why) *why = reason;
        return std::nullopt;
    };
    if (x < 2) return fail(std::to_string(x) + " is less than the smallest semiprime 6");
    for (u64 d = 2; d * d <= x; ++d) {
        if (x % d != 0) continue;
        u64 rest = x / d;
        if (rest == d) return fail(std::to_string(x) + " = " + std::to_string(d) + "^2, a prime square");
        if (rest % d == 0)
            return fail(std::to_string(x) + " is divisible by " + std::to_string(d) + "^2");
        if (!PrimeBound::is_prime(rest))
            return fail(std::to_string(x) + " has more than two prime factors");
        return SemiprimeFactors{d, rest};
    }
    return fail(std::to_string(x) + " is prime");
}

// A claimed representation: ascending distinct semiprime denominators whose
// reciprocals sum exactly to the target. n and max_prime_factor of 0 mean
// "unclaimed" (text inputs); nonzero claims are checked for consistency.
struct SolutionRecord {
    std::vector<u64> terms;
    u32 n = 0;
    u64 max_prime_factor = 0;
    Target target{};

    bool operator==(const SolutionRecord& o) const { return terms == o.terms && target == o.target; }
};

struct VerifyReport {
    bool pass = false;
    std::vector<std::string> violations;
    std::string exact_sum; // reduced a/b of the actual reciprocal sum
};

// Exact certificate check, independent of the search engine's arithmetic:
// big-integer rational accumulation instead of the fixed-denominator
// numerators. Reports every violation, not just the first.
inline VerifyReport verify_solution(const SolutionRecord& rec,
                                    std::optional<u64> prime_bound = std::nullopt) {
    using boost::multiprecision::cpp_int;
    VerifyReport report;

    std::vector<u64> terms = rec.terms;
    std::sort(terms.begin(), terms.end());
    if (terms.empty()) report.violations.push_back("no terms");
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i] == terms[i - 1])
            report.violations.push_back("duplicate term " + std::to_string(terms[i]));

    u64 max_prime = 0;
    for (u64 t : terms) {
        std::string why;
        auto f = factor_semiprime(t, &why);
        if (!f) {
            report.violations.push_back("not a semiprime: " + why);
            continue;
        }
        max_prime = std::max(max_prime, f->q);
        if (prime_bound && f->q > *prime_bound)
            report.violations.push_back("term " + std::to_string(t) + " has prime factor " +
                                        std::to_string(f->q) + " above the bound " +
                                        std::to_string(*prime_bound));
    }

    cpp_int num = 0, den = 1;
    for (u64 t : terms) {
        num = num * t + den;
        den = den * t;
        cpp_int g = boost::multiprecision::gcd(num, den);
        num /= g;
        den /= g;
    }
    report.exact_sum = num.str() + "/" + den.str();
    if (num != rec.target.numerator || den != rec.target.denominator)
        report.violations.push_back("sum is " + report.exact_sum + ", not " + rec.target.str());

    if (rec.n != 0 && rec.n != terms.size())
        report.violations.push_back("claimed n=" + std::to_string(rec.n) + " but has " +
                                    std::to_string(terms.size()) + " terms");
    if (rec.max_prime_factor != 0 && rec.max_prime_factor != max_prime)
        report.violations.push_back("claimed max prime factor " +
                                    std::to_string(rec.max_prime_factor) + " but it is " +
                                    std::to_string(max_prime));

    report.pass = report.violations.empty();
    return report;
}

// Builds a fully populated record, throwing if the terms are not distinct
// semiprimes (the engine and corpus paths must never emit such records).
inline SolutionRecord make_record(std::vector<u64> terms, Target target = {}) {
    SolutionRecord rec;
    rec.terms = std::move(terms);
    std::sort(rec.terms.begin(), rec.terms.end());
    rec.target = target;
    rec.n = (u32)rec.terms.size();
    for (u64 t : rec.terms) {
        std::string why;
        auto f = factor_semiprime(t, &why);
        if (!f) throw ArithmeticFault("record term rejected: " + why);
        rec.max_prime_factor = std::max(rec.max_prime_factor, f->q);
    }
    return rec;
}

} // namespace semifrac
