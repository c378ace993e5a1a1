#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "semifrac/int128.hpp"

namespace semifrac {

// Upper bound on the prime factors of universe members. Must itself be prime
// (a composite bound would make reported configurations ambiguous) and at
// least 3 so the universe is nonempty.
class PrimeBound {
public:
    explicit PrimeBound(u64 p) : value_(p) {
        if (p < 3) throw ConfigError("bound must be at least 3");
        if (!is_prime(p)) throw ConfigError("bound must be prime");
    }
    u64 value() const { return value_; }

    static bool is_prime(u64 n) {
        if (n < 2) return false;
        for (u64 d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    u64 value_;
};

inline std::vector<u64> sieve_primes(PrimeBound bound) {
    const u64 P = bound.value();
    std::vector<bool> composite(P + 1, false);
    std::vector<u64> primes;
    for (u64 i = 2; i <= P; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= P; j += i) composite[j] = true;
    }
    return primes;
}

// One universe element: a product of two distinct primes, both <= bound.
// Indices are 1-based in ascending value order on every public surface.
struct Semiprime {
    u32 index = 0;
    u64 value = 0;
    u64 p = 0; // smaller prime factor
    u64 q = 0; // larger prime factor
};

// The finite search universe for a prime bound P: all semiprimes with both
// factors <= P, ascending, plus every table the prune rules consult.
//
//   L          product of all primes <= P (the fixed common denominator)
//   weight[i]  L / value[i], so a partial sum is an integer over L
//   prefix[i]  weight[1] + ... + weight[i]; suffix gains are two lookups
//
// Immutable after construction; safe to share across search workers.
class Universe {
public:
    explicit Universe(PrimeBound bound) : bound_(bound), primes_(sieve_primes(bound)) {
        for (std::size_t i = 0; i < primes_.size(); ++i)
            for (std::size_t j = i + 1; j < primes_.size(); ++j)
                semiprimes_.push_back({0, primes_[i] * primes_[j], primes_[i], primes_[j]});
        std::sort(semiprimes_.begin(), semiprimes_.end(),
                  [](const Semiprime& a, const Semiprime& b) { return a.value < b.value; });

        primorial_ = 1;
        for (u64 p : primes_)
            if (!checked_mul(primorial_, p, primorial_))
                throw ConfigError("bound " + std::to_string(bound.value()) +
                                  " exceeds 128-bit arithmetic width");

        prefix_.push_back(0);
        for (std::size_t i = 0; i < semiprimes_.size(); ++i) {
            semiprimes_[i].index = (u32)(i + 1);
            weights_.push_back(primorial_ / semiprimes_[i].value);
            u128 s;
            if (!checked_add(prefix_.back(), weights_.back(), s))
                throw ConfigError("bound " + std::to_string(bound.value()) +
                                  " exceeds 128-bit arithmetic width");
            prefix_.push_back(s);
        }

        // retirement index of r: position of the last semiprime divisible by r
        retiring_at_.assign(semiprimes_.size() + 2, {});
        for (u64 r : primes_) {
            u32 last = 0;
            for (const Semiprime& s : semiprimes_)
                if (s.value % r == 0) last = s.index;
            retirement_.push_back(last);
            retiring_at_[last + 1].push_back(r);
        }
        next_crossing_.assign(semiprimes_.size() + 3, (u32)semiprimes_.size() + 2);
        for (u32 j = (u32)semiprimes_.size() + 1; j >= 1; --j)
            next_crossing_[j] = retiring_at_[j].empty() ? next_crossing_[j + 1] : j;

        // primes ordered by retirement index, for the support rule's
        // all-retired-so-far scans
        std::vector<std::size_t> order(primes_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return retirement_[a] < retirement_[b]; });
        for (std::size_t i : order) primes_by_retirement_.push_back(primes_[i]);
        retired_count_.assign(semiprimes_.size() + 2, 0);
        for (u32 j = 1; j <= (u32)semiprimes_.size() + 1; ++j) {
            u32 c = 0;
            for (std::size_t i = 0; i < primes_.size(); ++i)
                if (retirement_[order[i]] < j) c = (u32)(i + 1);
            retired_count_[j] = c;
        }
    }

    u64 max_prime() const { return bound_.value(); }
    const std::vector<u64>& primes() const { return primes_; }
    const std::vector<Semiprime>& semiprimes() const { return semiprimes_; }
    std::size_t size() const { return semiprimes_.size(); }
    u128 primorial() const { return primorial_; }
    u128 total_weight() const { return prefix_.back(); }

    const Semiprime& at(u32 index) const { return semiprimes_[index - 1]; }
    u128 weight(u32 index) const { return weights_[index - 1]; }

    // weight[i+1] + ... + weight[min(i+m, N)]: the best gain any m further
    // terms chosen after position i can contribute
    u128 suffix_best_gain(u32 i, u32 m) const {
        u64 hi = std::min<u64>((u64)i + m, semiprimes_.size());
        return prefix_[hi] - prefix_[i];
    }

    u128 prefix_weight(u32 i) const { return prefix_[i]; }

    u32 retirement_index(u64 r) const {
        for (std::size_t i = 0; i < primes_.size(); ++i)
            if (primes_[i] == r) return retirement_[i];
        throw ConfigError(std::to_string(r) + " is not a prime <= the bound");
    }

    // primes whose last multiple sits at position next-1 (checked when the
    // search is about to decide position `next`)
    const std::vector<u64>& retiring_at(u32 next) const { return retiring_at_[next]; }

    // smallest position >= next at which some prime retires
    u32 next_crossing(u32 next) const { return next_crossing_[next]; }

    // the first retired_before(next) entries of primes_by_retirement() are
    // exactly the primes with no multiples at positions >= next
    const std::vector<u64>& primes_by_retirement() const { return primes_by_retirement_; }
    u32 retired_before(u32 next) const { return retired_count_[next]; }

private:
    PrimeBound bound_;
    std::vector<u64> primes_;
    std::vector<Semiprime> semiprimes_;
    u128 primorial_ = 1;
    std::vector<u128> weights_;
    std::vector<u128> prefix_;
    std::vector<u32> retirement_;
    std::vector<std::vector<u64>> retiring_at_;
    std::vector<u32> next_crossing_;
    std::vector<u64> primes_by_retirement_;
    std::vector<u32> retired_count_;
};

inline Universe build_universe(PrimeBound bound) { return Universe(bound); }

} // namespace semifrac
