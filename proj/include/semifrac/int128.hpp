#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semifrac {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Thrown for invalid user-facing configuration (bad bound, bad target, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal arithmetic contract is violated; indicates a bug,
// never bad input.
struct ArithmeticFault : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int pos = 40;
    while (v != 0) {
        buf[--pos] = char('0' + (unsigned)(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, 40 - pos);
}

inline u128 u128_from_string(std::string_view s) {
    if (s.empty()) throw ConfigError("empty integer literal");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ConfigError("invalid digit in integer literal");
        u128 next = v * 10 + (u128)(c - '0');
        if (next / 10 != v) throw ConfigError("integer literal exceeds 128-bit range");
        v = next;
    }
    return v;
}

constexpr u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// false on overflow
inline bool checked_mul(u128 a, u128 b, u128& out) {
    return !__builtin_mul_overflow(a, b, &out);
}

inline bool checked_add(u128 a, u128 b, u128& out) {
    return !__builtin_add_overflow(a, b, &out);
}

} // namespace semifrac
