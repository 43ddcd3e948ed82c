#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sweepmc/errors.hpp"

namespace sweepmc {

/// A configuration of n binary sites packed into an integer.
///
/// Convention (fixed, exposed by every serialized output): site i lives at
/// bit position i-1, i.e. site 1 is the least significant bit. A state
/// string is rendered site-1-first, so "110" has sites 1 and 2 set.
using StateIndex = std::uint32_t;

/// Sites are numbered 1..n.
inline constexpr int kMaxSites = 20;

/// Dense 2^n x 2^n matrices are limited to this many sites.
inline constexpr int kMaxDenseSites = 12;

namespace detail {
inline void require_site_count(int n) {
    if (n < 1 || n > kMaxSites)
        throw InvalidInputError("site count must be in [1, " + std::to_string(kMaxSites) +
                                "], got " + std::to_string(n));
}
inline void require_site(int site, int n) {
    if (site < 1 || site > n)
        throw InvalidInputError("site index " + std::to_string(site) + " out of range [1, " +
                                std::to_string(n) + "]");
}
inline void require_state(StateIndex x, int n) {
    if (x >= (StateIndex{1} << n))
        throw InvalidInputError("state index " + std::to_string(x) + " out of range for n = " +
                                std::to_string(n));
}
}  // namespace detail

inline std::uint32_t state_count(int n) {
    detail::require_site_count(n);
    return std::uint32_t{1} << n;
}

/// Value of one site, 0 or 1.
inline int site_bit(StateIndex x, int site) { return static_cast<int>((x >> (site - 1)) & 1u); }

/// Spin rendering of one site: 0 -> -1, 1 -> +1.
inline int site_spin(StateIndex x, int site) { return site_bit(x, site) * 2 - 1; }

/// Flip a single site.
inline StateIndex flip_site(StateIndex x, int site, int n) {
    detail::require_site_count(n);
    detail::require_site(site, n);
    return x ^ (StateIndex{1} << (site - 1));
}

/// Flip sites 1..count; count = 0 is the identity, count = n the full complement.
inline StateIndex flip_prefix(StateIndex x, int count, int n) {
    detail::require_site_count(n);
    if (count < 0 || count > n)
        throw InvalidInputError("prefix length " + std::to_string(count) + " out of range [0, " +
                                std::to_string(n) + "]");
    return x ^ ((StateIndex{1} << count) - 1);
}

/// Flip sites first..n; first = n + 1 is the identity, first = 1 the full complement.
inline StateIndex flip_suffix(StateIndex x, int first, int n) {
    detail::require_site_count(n);
    if (first < 1 || first > n + 1)
        throw InvalidInputError("suffix start " + std::to_string(first) + " out of range [1, " +
                                std::to_string(n + 1) + "]");
    const StateIndex all = (StateIndex{1} << n) - 1;
    const StateIndex low = (StateIndex{1} << (first - 1)) - 1;
    return x ^ (all & ~low);
}

/// Flip every site.
inline StateIndex complement_state(StateIndex x, int n) {
    detail::require_site_count(n);
    return x ^ ((StateIndex{1} << n) - 1);
}

inline std::vector<int> state_to_bits(StateIndex x, int n) {
    detail::require_site_count(n);
    detail::require_state(x, n);
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) bits[static_cast<std::size_t>(i - 1)] = site_bit(x, i);
    return bits;
}

inline StateIndex bits_to_state(const std::vector<int>& bits) {
    const int n = static_cast<int>(bits.size());
    detail::require_site_count(n);
    StateIndex x = 0;
    for (int i = 1; i <= n; ++i) {
        const int b = bits[static_cast<std::size_t>(i - 1)];
        if (b != 0 && b != 1) throw InvalidInputError("site values must be 0 or 1");
        x |= static_cast<StateIndex>(b) << (i - 1);
    }
    return x;
}

/// Site-1-first rendering, e.g. n=3, index 1 -> "100".
inline std::string state_to_string(StateIndex x, int n) {
    detail::require_site_count(n);
    detail::require_state(x, n);
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 1; i <= n; ++i)
        if (site_bit(x, i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

inline StateIndex state_from_string(const std::string& s) {
    const int n = static_cast<int>(s.size());
    detail::require_site_count(n);
    StateIndex x = 0;
    for (int i = 1; i <= n; ++i) {
        const char c = s[static_cast<std::size_t>(i - 1)];
        if (c != '0' && c != '1') throw InvalidInputError("state string must be over {0,1}");
        if (c == '1') x |= StateIndex{1} << (i - 1);
    }
    return x;
}

}  // namespace sweepmc
