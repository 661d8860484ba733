#pragma once

// Consecutive-ones and circular-ones recognition with witness orders, the
// exhaustive oracles, and forbidden-submatrix certificates for the
// circular-ones property.

#include "circmat/families.hpp"
#include "circmat/pqtree.hpp"

namespace circmat {

inline constexpr int kDefaultBruteForceCols = 9;

// Linear order of columns: a permutation of [l] (1-based column ids).
using LinearOrder = std::vector<int>;

// Cyclic permutation of columns.  Canonical form starts at column 1 with the
// reflection fixed so the second element is the smaller neighbor of column 1.
struct CircularOrder {
    std::vector<int> cols;

    static CircularOrder canonical(std::vector<int> order) {
        const std::size_t l = order.size();
        if (l > 1) {
            auto it = std::find(order.begin(), order.end(), 1);
            if (it == order.end()) throw DomainError("CircularOrder: column 1 missing");
            std::rotate(order.begin(), it, order.end());
            if (l > 2 && order[1] > order[l - 1]) std::reverse(order.begin() + 1, order.end());
        }
        return CircularOrder{std::move(order)};
    }

    friend bool operator==(const CircularOrder&, const CircularOrder&) = default;
};

namespace detail {

// arranged[p] = entry of `rowMask` at the column placed at position p.
inline std::uint64_t arrange(std::uint64_t rowMask, const std::vector<int>& order) {
    std::uint64_t out = 0;
    for (std::size_t p = 0; p < order.size(); ++p)
        if ((rowMask >> (order[p] - 1)) & 1u) out |= std::uint64_t{1} << p;
    return out;
}

// Is the set of positions in `x` a single cyclic block among l positions?
inline bool cyclically_contiguous(std::uint64_t x, int l) {
    if (l <= 0) return true;
    const std::uint64_t full = ~std::uint64_t{0} >> (64 - l);
    x &= full;
    if (x == 0 || x == full) return true;
    const std::uint64_t prev = ((x >> 1) | (x << (l - 1))) & full;
    return popcount64(x & ~prev) == 1;
}

// Is `x` a single block in the linear (non-wrapping) sense?
inline bool linearly_contiguous(std::uint64_t x) {
    if (x == 0) return true;
    const int lo = std::countr_zero(x);
    const int hi = 63 - std::countl_zero(x);
    return hi - lo + 1 == popcount64(x);
}

// Enumerates canonical circular orders of [l] in lexicographic order of the
// tail, invoking f(order) until it returns true; returns that order.
template <typename F>
std::optional<CircularOrder> first_canonical_circular(int l, F&& accept) {
    std::vector<int> order(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    if (l <= 2) {
        if (accept(order)) return CircularOrder{order};
        return std::nullopt;
    }
    std::vector<int> tail(order.begin() + 1, order.end());
    do {
        if (tail.front() > tail.back()) continue;  // reflection representative
        std::copy(tail.begin(), tail.end(), order.begin() + 1);
        if (accept(order)) return CircularOrder{order};
    } while (std::next_permutation(tail.begin(), tail.end()));
    return std::nullopt;
}

}  // namespace detail

// Is the column set a circular interval under the given cyclic order?
inline bool is_circular_interval(std::uint64_t colSet, const CircularOrder& order) {
    return detail::cyclically_contiguous(detail::arrange(colSet, order.cols), static_cast<int>(order.cols.size()));
}

inline bool rows_all_circular(const BinaryMatrix& m, const CircularOrder& order) {
    for (int r = 0; r < m.rows(); ++r)
        if (!is_circular_interval(m.row(r), order)) return false;
    return true;
}

// Consecutive-ones recognition via PQ-tree; returns a witness linear order.
inline std::optional<LinearOrder> has_consecutive_ones(const BinaryMatrix& m) {
    const int l = m.cols();
    LinearOrder order = identity_map(l);
    if (l > 1) {
        PQTree tree(l);
        for (int r = 0; r < m.rows(); ++r)
            if (!tree.reduce(m.row(r))) return std::nullopt;
        order = tree.frontier();
    }
    for (int r = 0; r < m.rows(); ++r)
        if (!detail::linearly_contiguous(detail::arrange(m.row(r), order)))
            throw std::logic_error("has_consecutive_ones: frontier violates a row");
    return order;
}

// Exhaustive consecutive-ones oracle over all l! column orders.
inline std::optional<LinearOrder> brute_force_consecutive_ones(const BinaryMatrix& m, int guardCols = kDefaultBruteForceCols) {
    const int l = m.cols();
    if (l > guardCols) throw GuardError("brute_force_consecutive_ones: too many columns for exhaustive search");
    LinearOrder order = identity_map(l);
    do {
        bool ok = true;
        for (int r = 0; ok && r < m.rows(); ++r) ok = detail::linearly_contiguous(detail::arrange(m.row(r), order));
        if (ok) return order;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

// Circular-ones recognition via the classical reduction: fix a column,
// complement every row with a 1 there, and test consecutive-ones.  The
// decision is independent of the fixed column.
inline std::optional<CircularOrder> has_circular_ones_fixing(const BinaryMatrix& m, int fixedCol) {
    const int l = m.cols();
    if (l <= 1) return CircularOrder{identity_map(l)};
    if (fixedCol < 1 || fixedCol > l) throw DomainError("has_circular_ones_fixing: fixed column out of range");
    BinaryMatrix reduced = m;
    const std::uint64_t bit = std::uint64_t{1} << (fixedCol - 1);
    for (int r = 0; r < m.rows(); ++r)
        if (m.row(r) & bit) reduced.set_row(r, ~m.row(r) & m.full_mask());
    auto linear = has_consecutive_ones(reduced);
    if (!linear) return std::nullopt;
    CircularOrder order = CircularOrder::canonical(*linear);
    if (!rows_all_circular(m, order)) throw std::logic_error("has_circular_ones: reduction produced an invalid order");
    return order;
}

inline std::optional<CircularOrder> has_circular_ones(const BinaryMatrix& m) {
    return has_circular_ones_fixing(m, 1);
}

// Exhaustive circular-ones oracle over the (l-1)!/2 canonical circular orders.
inline std::optional<CircularOrder> brute_force_circular_ones(const BinaryMatrix& m, int guardCols = kDefaultBruteForceCols) {
    const int l = m.cols();
    if (l > guardCols) throw GuardError("brute_force_circular_ones: too many columns for exhaustive search");
    if (l <= 1) return CircularOrder{identity_map(l)};
    return detail::first_canonical_circular(l, [&](const std::vector<int>& order) {
        for (int r = 0; r < m.rows(); ++r)
            if (!detail::cyclically_contiguous(detail::arrange(m.row(r), order), l)) return false;
        return true;
    });
}

struct C1Certificate {
    FamilyId family;
    BinaryMatrix forbidden;
    ConfigWitness witness;
};

// Raw search: smallest (by columns, then rows, then matrix text) member of
// the circular-ones forbidden family contained in M as a configuration.
inline std::optional<C1Certificate> contains_forb_member(const BinaryMatrix& m, int maxCols = -1) {
    if (maxCols < 0 || maxCols > m.cols()) maxCols = m.cols();
    if (m.rows() < 3 || maxCols < 4) return std::nullopt;
    for (const FamilyMember& mem : forb_circular(m.rows(), maxCols))
        if (auto w = contains_configuration(m, mem.matrix)) return C1Certificate{mem.id, mem.matrix, *w};
    return std::nullopt;
}

// Absent iff M has the circular-ones property; otherwise a certificate.
inline std::optional<C1Certificate> find_forb_certificate(const BinaryMatrix& m) {
    if (has_circular_ones(m)) return std::nullopt;
    auto cert = contains_forb_member(m);
    if (!cert) throw std::logic_error("find_forb_certificate: no forbidden member found in a non-circular-ones matrix");
    return cert;
}

}  // namespace circmat
