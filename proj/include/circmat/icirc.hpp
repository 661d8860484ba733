#pragma once

// The I-circular property: a circular-ones order under which every pairwise
// row intersection is also a circular interval.  Decided through the Lambda
// closure, with a direct exhaustive oracle and forbidden-submatrix
// certificates.

#include "circmat/c1p.hpp"

namespace circmat {

struct LambdaResult {
    BinaryMatrix matrix;  // original rows followed by the added rows
    struct Added {
        int r, s;               // 1-based source pair, r < s
        std::uint64_t rowMask;  // intersection of rows r and s
    };
    std::vector<Added> added;
    int originalRows = 0;

    // 1-based row index in `matrix` of the row added for pair {r,s}.
    std::optional<int> added_row_index(int r, int s) const {
        for (std::size_t i = 0; i < added.size(); ++i)
            if (added[i].r == r && added[i].s == s) return originalRows + static_cast<int>(i) + 1;
        return std::nullopt;
    }
};

// For each unordered pair {r,s} of nontrivial rows with complement(r)
// properly contained in s (in either orientation), appends one row equal to
// the intersection of rows r and s.  Applied once, not to a fixed point.
inline LambdaResult lambda_closure(const BinaryMatrix& m) {
    LambdaResult res{m, {}, m.rows()};
    const std::uint64_t full = m.full_mask();
    for (int r = 0; r < m.rows(); ++r) {
        const std::uint64_t a = m.row(r);
        if (a == 0 || a == full) continue;
        for (int s = r + 1; s < m.rows(); ++s) {
            const std::uint64_t b = m.row(s);
            if (b == 0 || b == full) continue;
            const std::uint64_t ca = ~a & full, cb = ~b & full;
            const bool qualifies = ((ca & b) == ca && ca != b) || ((cb & a) == cb && cb != a);
            if (qualifies) {
                res.matrix.append_row(a & b);
                res.added.push_back({r + 1, s + 1, a & b});
            }
        }
    }
    return res;
}

namespace detail {

inline bool definition_holds(const BinaryMatrix& m, const CircularOrder& order) {
    if (!rows_all_circular(m, order)) return false;
    for (int r = 0; r < m.rows(); ++r)
        for (int s = r + 1; s < m.rows(); ++s)
            if (!is_circular_interval(m.row(r) & m.row(s), order)) return false;
    return true;
}

}  // namespace detail

// Present iff Lambda(M) has the circular-ones property; the returned order
// is checked against the direct definition (rows and pairwise intersections).
inline std::optional<CircularOrder> has_i_circular(const BinaryMatrix& m) {
    auto order = has_circular_ones(lambda_closure(m).matrix);
    if (!order) return std::nullopt;
    if (!detail::definition_holds(m, *order)) throw std::logic_error("has_i_circular: order fails the definitional check");
    return order;
}

// Exhaustive oracle checking the definition directly, without Lambda.
inline std::optional<CircularOrder> brute_force_i_circular(const BinaryMatrix& m, int guardCols = kDefaultBruteForceCols) {
    const int l = m.cols();
    if (l > guardCols) throw GuardError("brute_force_i_circular: too many columns for exhaustive search");
    if (l <= 1) return CircularOrder{identity_map(l)};
    return detail::first_canonical_circular(l, [&](const std::vector<int>& order) {
        return detail::definition_holds(m, CircularOrder{order});
    });
}

struct ICircCertificate {
    FamilyId family;
    BinaryMatrix forbidden;
    ConfigWitness witness;
};

// Raw search over the I-circular forbidden family bounded by M's dimensions
// (optionally by a smaller column bound), fewest columns first.
inline std::optional<ICircCertificate> contains_iforb_member(const BinaryMatrix& m, int maxCols = -1) {
    if (maxCols < 0 || maxCols > m.cols()) maxCols = m.cols();
    if (m.rows() < 3 || maxCols < 4) return std::nullopt;
    for (const FamilyMember& mem : forb_icircular(m.rows(), maxCols))
        if (auto w = contains_configuration(m, mem.matrix)) return ICircCertificate{mem.id, mem.matrix, *w};
    return std::nullopt;
}

// Absent iff M has the I-circular property; otherwise a certificate.
inline std::optional<ICircCertificate> find_iforb_certificate(const BinaryMatrix& m) {
    if (has_i_circular(m)) return std::nullopt;
    auto cert = contains_iforb_member(m);
    if (!cert) throw std::logic_error("find_iforb_certificate: no forbidden member found in a non-I-circular matrix");
    return cert;
}

// True iff F lacks the I-circular property but every single row or column
// deletion restores it.
inline bool is_minimal_forbidden_icircular(const BinaryMatrix& f) {
    if (has_i_circular(f)) return false;
    for (int r = 1; r <= f.rows(); ++r)
        if (!has_i_circular(delete_row(f, r))) return false;
    for (int c = 1; c <= f.cols(); ++c)
        if (!has_i_circular(delete_col(f, c))) return false;
    return true;
}

}  // namespace circmat
