#pragma once

#include <string>
#include <string_view>

#include "semifrac/universe.hpp"

namespace semifrac {

// Search target a/b, reduced. Default 1/1. b must divide the universe
// primorial or no partial sum can ever equal the target.
struct Target {
    u64 numerator = 1;
    u64 denominator = 1;

    Target() = default;
    Target(u64 num, u64 den) {
        if (num == 0 || den == 0) throw ConfigError("target must be a positive fraction");
        u64 g = gcd_u64(num, den);
        numerator = num / g;
        denominator = den / g;
    }

    static Target parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Target(std::stoull(std::string(text)), 1);
            return Target(std::stoull(std::string(text.substr(0, slash))),
                          std::stoull(std::string(text.substr(slash + 1))));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("cannot parse target '" + std::string(text) + "', expected a/b");
        }
    }

    std::string str() const {
        return std::to_string(numerator) + "/" + std::to_string(denominator);
    }

    bool operator==(const Target&) const = default;
};

// The integer t with: partial sum == target  iff  accumulator num == t.
// Throws ConfigError when the denominator does not divide L, overflow_error
// when a*L/b exceeds the 128-bit width (such a target exceeds the total
// universe sum and is unreachable; see search()).
inline u128 target_numerator(Target t, const Universe& u) {
    if (u.primorial() % t.denominator != 0)
        throw ConfigError("target denominator " + std::to_string(t.denominator) +
                          " does not divide the primorial of " + std::to_string(u.max_prime()));
    u128 scaled;
    if (!checked_mul(u.primorial() / t.denominator, t.numerator, scaled))
        throw std::overflow_error("target numerator exceeds 128-bit width");
    return scaled;
}

// Exact partial sum as an integer numerator over the fixed denominator L,
// plus the DFS cursor. Backtracking is by explicit undo.
struct Accumulator {
    u128 num = 0;
    u32 count = 0;
    u32 next_index = 1; // first undecided universe position

    void include(const Universe& u) {
        num += u.weight(next_index);
        ++count;
        ++next_index;
    }
    void skip() { ++next_index; }
    void undo_include(const Universe& u) {
        --next_index;
        --count;
        num -= u.weight(next_index);
    }
    void undo_skip() { --next_index; }

    bool operator==(const Accumulator&) const = default;
};

// L / gcd(num, L): the denominator of the partial sum in lowest terms.
// Undefined for an empty sum.
inline u128 reduced_denominator(const Accumulator& acc, const Universe& u) {
    if (acc.num == 0) throw ArithmeticFault("reduced denominator of an empty sum");
    return u.primorial() / gcd_u128(acc.num, u.primorial());
}

} // namespace semifrac
