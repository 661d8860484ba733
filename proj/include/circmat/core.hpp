#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circmat {

// An argument violated a documented precondition.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An instance exceeded a brute-force size guard.  Callers may retry with a
// larger explicit guard; the defaults keep accidental blow-ups impossible.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Digit strings.  Binary and quaternary sequences share the representation;
// validity is checked at the parsing boundary and by the *_q helpers.
using Bits = std::vector<std::uint8_t>;    // every element 0 or 1
using Digits = std::vector<std::uint8_t>;  // every element 0..3

// Injective map [k'] -> [k], stored as the 1-based image list <n_1,...,n_k'>.
using IndexMap = std::vector<int>;

inline Bits parse_bits(std::string_view s) {
    Bits out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw DomainError("binary sequence may contain only 0/1: " + std::string(s));
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

inline Digits parse_digits(std::string_view s) {
    Digits out;
    out.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '3') throw DomainError("quaternary sequence may contain only 0..3: " + std::string(s));
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

inline std::string to_string(const Digits& a) {
    std::string s;
    s.reserve(a.size());
    for (auto d : a) s.push_back(static_cast<char>('0' + d));
    return s;
}

inline bool is_binary(const Digits& a) {
    for (auto d : a)
        if (d > 1) return false;
    return true;
}

inline bool is_quaternary(const Digits& a) {
    for (auto d : a)
        if (d > 3) return false;
    return true;
}

// Maps i (any integer) into [k] = {1,...,k}.
inline int mod1(int i, int k) {
    int r = i % k;
    return r <= 0 ? r + k : r;
}

inline IndexMap identity_map(int k) {
    IndexMap m(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) m[static_cast<std::size_t>(i)] = i + 1;
    return m;
}

// Validates injectivity and that every image lies in [limit].
inline void check_index_map(const IndexMap& m, int limit, const char* what) {
    std::vector<bool> seen(static_cast<std::size_t>(limit) + 1, false);
    for (int v : m) {
        if (v < 1 || v > limit) throw DomainError(std::string(what) + ": image value out of range");
        if (seen[static_cast<std::size_t>(v)]) throw DomainError(std::string(what) + ": image values must be distinct");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

inline int popcount64(std::uint64_t x) { return std::popcount(x); }

}  // namespace circmat
