#pragma once

// Sequence primitives: shifts, complements, bracelets, circular occurrence,
// index maps.  Everything operates on plain digit vectors and is pure.

#include <algorithm>
#include <set>

#include "circmat/core.hpp"

namespace circmat {

// Cyclic left rotation by one: a_1 a_2 ... a_k  ->  a_2 ... a_k a_1.
inline Digits shift(const Digits& a) {
    if (a.empty()) throw DomainError("shift: sequence must be nonempty");
    Digits out(a.begin() + 1, a.end());
    out.push_back(a.front());
    return out;
}

inline Bits complement(const Bits& a) {
    Bits out;
    out.reserve(a.size());
    for (auto b : a) {
        if (b > 1) throw DomainError("complement: sequence must be binary");
        out.push_back(static_cast<std::uint8_t>(1 - b));
    }
    return out;
}

inline Digits reversed(const Digits& a) { return Digits(a.rbegin(), a.rend()); }

// Lexicographically smallest sequence in the orbit of `a` under shifts and
// reversal (0 < 1).
inline Bits canonical_bracelet(const Bits& a) {
    if (a.empty()) throw DomainError("canonical_bracelet: sequence must be nonempty");
    Bits best = a;
    Bits cur = a;
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (cur < best) best = cur;
        Bits rev = reversed(cur);
        if (rev < best) best = rev;
        cur = shift(cur);
    }
    return best;
}

// A_k: for k = 3 exactly {000, 111}; for k >= 4 all binary bracelets of
// length k, in lexicographic order.
inline std::vector<Bits> enumerate_bracelets(int k) {
    if (k < 3) throw DomainError("enumerate_bracelets: k must be >= 3");
    if (k == 3) return {Bits{0, 0, 0}, Bits{1, 1, 1}};
    std::set<Bits> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
        Bits a(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((x >> i) & 1u);
        out.insert(canonical_bracelet(a));
    }
    return std::vector<Bits>(out.begin(), out.end());
}

// True iff pattern occurs circularly in `a` at 1-based position i, i.e.
// a_i a_{i+1} ... a_{i+|pattern|-1} = pattern with subscripts taken mod |a|.
// A pattern longer than `a` never occurs (by definition, not an error).
inline bool occurs_circularly(const Digits& a, const Digits& pattern, int i) {
    const int k = static_cast<int>(a.size());
    if (i < 1 || i > k) throw DomainError("occurs_circularly: position out of range");
    if (pattern.size() > a.size()) return false;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
        int idx = mod1(i + static_cast<int>(j), k);
        if (a[static_cast<std::size_t>(idx - 1)] != pattern[j]) return false;
    }
    return true;
}

// a_rho: element j of the result is a_{rho(j)}.
inline Digits apply_index_map(const Digits& a, const IndexMap& rho) {
    check_index_map(rho, static_cast<int>(a.size()), "apply_index_map");
    Digits out;
    out.reserve(rho.size());
    for (int v : rho) out.push_back(a[static_cast<std::size_t>(v - 1)]);
    return out;
}

}  // namespace circmat
