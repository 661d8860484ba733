#pragma once

// Generators for the named matrix families: Tucker matrices MI..MV, the
// extra shapes MVI and the starred variants, the forbidden families for the
// circular-ones and I-circular properties, and the block constructions
// Q/R, U/W, H, G.

#include "circmat/binmat.hpp"

namespace circmat {

enum class Family { MI, MIstar, MII, MIII, MIV, MV, MVstar, MVI, MaskedMIstar, MaskedMII };

struct FamilyId {
    Family family;
    int k = 0;     // size parameter where applicable
    Bits mask;     // complementation mask where applicable (MaskedMIstar, MaskedMII,
                   // and the complemented MIV / MVstar members)

    std::string base_name() const {
        switch (family) {
            case Family::MI: return "MI(" + std::to_string(k) + ")";
            case Family::MIstar: return "MIstar(" + std::to_string(k) + ")";
            case Family::MII: return "MII(" + std::to_string(k) + ")";
            case Family::MIII: return "MIII(" + std::to_string(k) + ")";
            case Family::MIV: return "MIV";
            case Family::MV: return "MV";
            case Family::MVstar: return "MVstar";
            case Family::MVI: return "MVI";
            case Family::MaskedMIstar: return "MIstar(" + std::to_string(k) + ")";
            case Family::MaskedMII: return "MII(" + std::to_string(k) + ")";
        }
        return "?";
    }

    std::string name() const {
        std::string b = base_name();
        if (mask.empty()) return b;
        return to_string(mask) + "o" + b;
    }
};

inline BinaryMatrix gen_mi(int k) {
    if (k < 3) throw DomainError("MI(k): k must be >= 3");
    BinaryMatrix m(k, k);
    for (int i = 0; i + 1 < k; ++i) {
        m.set(i, i, true);
        m.set(i, i + 1, true);
    }
    m.set(k - 1, 0, true);
    m.set(k - 1, k - 1, true);
    return m;
}

inline BinaryMatrix gen_mistar(int k) { return star(gen_mi(k)); }

inline BinaryMatrix gen_mii(int k) {
    if (k < 4) throw DomainError("MII(k): k must be >= 4");
    BinaryMatrix m(k, k);
    for (int i = 0; i + 2 < k; ++i) {
        m.set(i, i, true);
        m.set(i, i + 1, true);
    }
    for (int c = 0; c + 2 < k; ++c) m.set(k - 2, c, true);
    m.set(k - 2, k - 1, true);
    for (int c = 1; c < k; ++c) m.set(k - 1, c, true);
    return m;
}

inline BinaryMatrix gen_miii(int k) {
    if (k < 3) throw DomainError("MIII(k): k must be >= 3");
    BinaryMatrix m(k, k + 1);
    for (int i = 0; i + 1 < k; ++i) {
        m.set(i, i, true);
        m.set(i, i + 1, true);
    }
    for (int c = 1; c + 1 < k; ++c) m.set(k - 1, c, true);
    m.set(k - 1, k, true);
    return m;
}

inline BinaryMatrix gen_miv() { return mat({"110000", "001100", "000011", "010101"}); }
inline BinaryMatrix gen_mv() { return mat({"11000", "11110", "00110", "10011"}); }
inline BinaryMatrix gen_mvstar() { return star(gen_mv()); }
inline BinaryMatrix gen_mvi() { return mat({"1101", "0111", "1011"}); }

struct FamilyMember {
    FamilyId id;
    BinaryMatrix matrix;
};

namespace detail {

inline void sort_members(std::vector<FamilyMember>& v) {
    std::sort(v.begin(), v.end(), [](const FamilyMember& a, const FamilyMember& b) {
        if (a.matrix.cols() != b.matrix.cols()) return a.matrix.cols() < b.matrix.cols();
        if (a.matrix.rows() != b.matrix.rows()) return a.matrix.rows() < b.matrix.rows();
        return a.matrix.to_string() < b.matrix.to_string();
    });
}

inline bool all_zero(const Bits& a) {
    for (auto b : a)
        if (b) return false;
    return true;
}

inline bool all_one(const Bits& a) {
    for (auto b : a)
        if (!b) return false;
    return true;
}

}  // namespace detail

// Minimal forbidden submatrices for the circular-ones property with at most
// maxRows rows and maxCols columns:
//   { a (.) MIstar(k) : k >= 3, a in A_k }  u  { MIV, ~MIV, MVstar, ~MVstar },
// sorted by (columns, rows, matrix text) for deterministic certificate search.
inline std::vector<FamilyMember> forb_circular(int maxRows, int maxCols) {
    if (maxRows < 3 || maxCols < 4) throw DomainError("forb_circular: bounds must be at least (3,4)");
    std::vector<FamilyMember> out;
    for (int k = 3; k <= maxRows && k + 1 <= maxCols; ++k) {
        BinaryMatrix base = gen_mistar(k);
        for (const Bits& a : enumerate_bracelets(k)) {
            if (detail::all_zero(a))
                out.push_back({FamilyId{Family::MIstar, k, {}}, base});
            else
                out.push_back({FamilyId{Family::MaskedMIstar, k, a}, mask_complement(a, base)});
        }
    }
    if (maxRows >= 4 && maxCols >= 6) {
        out.push_back({FamilyId{Family::MIV, 0, {}}, gen_miv()});
        out.push_back({FamilyId{Family::MIV, 0, Bits{1, 1, 1, 1}}, complement_matrix(gen_miv())});
        out.push_back({FamilyId{Family::MVstar, 0, {}}, gen_mvstar()});
        out.push_back({FamilyId{Family::MVstar, 0, Bits{1, 1, 1, 1}}, complement_matrix(gen_mvstar())});
    }
    detail::sort_members(out);
    return out;
}

// Minimal forbidden submatrices for the I-circular property within bounds:
//   { MIstar(k), MIII(k), MII(k+1) : k >= 3 }
//   u { 0101 (.) MIstar(4), 0100 (.) MII(4), MIV, MV, MVI }.
inline std::vector<FamilyMember> forb_icircular(int maxRows, int maxCols) {
    if (maxRows < 3 || maxCols < 4) throw DomainError("forb_icircular: bounds must be at least (3,4)");
    std::vector<FamilyMember> out;
    for (int k = 3;; ++k) {
        bool any = false;
        if (k <= maxRows && k + 1 <= maxCols) {
            out.push_back({FamilyId{Family::MIstar, k, {}}, gen_mistar(k)});
            out.push_back({FamilyId{Family::MIII, k, {}}, gen_miii(k)});
            any = true;
        }
        if (k + 1 <= maxRows && k + 1 <= maxCols) {
            out.push_back({FamilyId{Family::MII, k + 1, {}}, gen_mii(k + 1)});
            any = true;
        }
        if (!any) break;
    }
    if (maxRows >= 4 && maxCols >= 5)
        out.push_back({FamilyId{Family::MaskedMIstar, 4, parse_bits("0101")}, mask_complement(parse_bits("0101"), gen_mistar(4))});
    if (maxRows >= 4 && maxCols >= 4)
        out.push_back({FamilyId{Family::MaskedMII, 4, parse_bits("0100")}, mask_complement(parse_bits("0100"), gen_mii(4))});
    if (maxRows >= 4 && maxCols >= 6) out.push_back({FamilyId{Family::MIV, 0, {}}, gen_miv()});
    if (maxRows >= 4 && maxCols >= 5) out.push_back({FamilyId{Family::MV, 0, {}}, gen_mv()});
    out.push_back({FamilyId{Family::MVI, 0, {}}, gen_mvi()});
    detail::sort_members(out);
    return out;
}

// Q_j(i,k): the elementary row blocks of R(b).  All are 1x(k+1) or 2x(k+1);
// i+1 is taken mod k into [k], so the blocks live on the first k columns
// except where the definition names column k+1.
inline BinaryMatrix gen_q(int j, int i, int k) {
    if (k < 3) throw DomainError("Q_j(i,k): k must be >= 3");
    if (i < 1 || i > k) throw DomainError("Q_j(i,k): i must lie in [k]");
    if (j < 0 || j > 3) throw DomainError("Q_j(i,k): j must lie in {0,1,2,3}");
    const int n = k + 1;
    const int iNext = mod1(i + 1, k);
    switch (j) {
        case 0: {
            BinaryMatrix m(1, n);
            m.set(0, i - 1, true);
            m.set(0, iNext - 1, true);
            return m;
        }
        case 1: {
            BinaryMatrix m(1, n);
            m.set_row(0, m.full_mask());
            m.set(0, i - 1, false);
            m.set(0, iNext - 1, false);
            return m;
        }
        case 2: {
            BinaryMatrix m(2, n);
            m.set_row(0, m.full_mask());
            m.set(0, n - 1, false);
            m.set(1, i - 1, true);
            m.set(1, iNext - 1, true);
            m.set(1, n - 1, true);
            return m;
        }
        default: {
            BinaryMatrix m(2, n);
            m.set_row(0, m.full_mask());
            m.set(0, i - 1, false);
            m.set_row(1, m.full_mask());
            m.set(1, iNext - 1, false);
            return m;
        }
    }
}

// R(b): the rows of Q_{b_1}(1,k), ..., Q_{b_k}(k,k) stacked in block order.
inline BinaryMatrix gen_r(const Digits& b) {
    const int k = static_cast<int>(b.size());
    if (k < 3) throw DomainError("R(b): |b| must be >= 3");
    if (!is_quaternary(b)) throw DomainError("R(b): b must be quaternary");
    BinaryMatrix out(0, k + 1);
    for (int i = 1; i <= k; ++i) {
        BinaryMatrix q = gen_q(b[static_cast<std::size_t>(i - 1)], i, k);
        for (int r = 0; r < q.rows(); ++r) out.append_row(q.row(r));
    }
    return out;
}

enum class UVariant { Literal, Figure };

// U_j(i): the 6-column row blocks of W(b).  The U_2 column offsets differ
// between the written definition (`Literal`: zero pairs at 5-2i,6-2i and
// 7-2i,8-2i) and the offsets consistent with the displayed W(2310)
// (`Figure`: 3-2i,4-2i and 5-2i,6-2i); both are kept.
inline BinaryMatrix gen_u(int j, int i, UVariant variant) {
    auto mvs = gen_mvstar();
    auto twoZeroRow = [&](int c1, int c2) {
        BinaryMatrix m(1, 6);
        m.set_row(0, m.full_mask());
        m.set(0, mod1(c1, 6) - 1, false);
        m.set(0, mod1(c2, 6) - 1, false);
        return m.row(0);
    };
    switch (j) {
        case 0: {
            if (i < 1 || i > 4) throw DomainError("U_0(i): i must lie in [4]");
            BinaryMatrix m(1, 6);
            m.set_row(0, mvs.row(i - 1));
            return m;
        }
        case 1: {
            if (i < 1 || i > 4) throw DomainError("U_1(i): i must lie in [4]");
            BinaryMatrix m(1, 6);
            m.set_row(0, ~mvs.row(i - 1) & mvs.full_mask());
            return m;
        }
        case 2: {
            if (i < 1 || i > 3) throw DomainError("U_2(i): i must lie in [3]");
            BinaryMatrix m(2, 6);
            if (variant == UVariant::Literal) {
                m.set_row(0, twoZeroRow(5 - 2 * i, 6 - 2 * i));
                m.set_row(1, twoZeroRow(7 - 2 * i, 8 - 2 * i));
            } else {
                m.set_row(0, twoZeroRow(3 - 2 * i, 4 - 2 * i));
                m.set_row(1, twoZeroRow(5 - 2 * i, 6 - 2 * i));
            }
            return m;
        }
        case 3: {
            if (i != 2) throw DomainError("U_3(i): only i = 2 is defined");
            BinaryMatrix m(2, 6);
            m.set_row(0, twoZeroRow(5, 5));
            m.set_row(1, twoZeroRow(6, 6));
            return m;
        }
        default: throw DomainError("U_j(i): j must lie in {0,1,2,3}");
    }
}

// W(b): rows of U_{b_1}(1), U_{b_2}(2), U_{b_3}(3), U_0(4) stacked.
inline BinaryMatrix gen_w(const Digits& b, UVariant variant) {
    if (b.size() != 4) throw DomainError("W(b): |b| must be 4");
    if (b[3] != 0) throw DomainError("W(b): b_4 must be 0");
    if (b[0] > 2 || b[2] > 2) throw DomainError("W(b): b_1 and b_3 must lie in {0,1,2}");
    if (b[1] > 3) throw DomainError("W(b): b_2 must lie in {0,1,2,3}");
    BinaryMatrix out(0, 6);
    for (int i = 1; i <= 4; ++i) {
        BinaryMatrix u = gen_u(b[static_cast<std::size_t>(i - 1)], i, variant);
        for (int r = 0; r < u.rows(); ++r) out.append_row(u.row(r));
    }
    return out;
}

// H_i(alpha): MVstar plus two rows; both carry 1s at columns 3-2i, 4-2i, the
// fifth row carries alpha at columns 5-2i, 6-2i, 1-2i, 2-2i and the sixth
// its complement (all column arithmetic mod 6 into [6]).
inline BinaryMatrix gen_h(int i, const Bits& alpha) {
    if (i < 1 || i > 3) throw DomainError("H_i(alpha): i must lie in [3]");
    if (alpha.size() != 4 || !is_binary(alpha)) throw DomainError("H_i(alpha): alpha must be binary of length 4");
    BinaryMatrix out(6, 6);
    BinaryMatrix mvs = gen_mvstar();
    for (int r = 0; r < 4; ++r) out.set_row(r, mvs.row(r));
    const std::array<int, 4> alphaCols = {mod1(5 - 2 * i, 6), mod1(6 - 2 * i, 6), mod1(1 - 2 * i, 6), mod1(2 - 2 * i, 6)};
    for (int r = 4; r < 6; ++r) {
        out.set(r, mod1(3 - 2 * i, 6) - 1, true);
        out.set(r, mod1(4 - 2 * i, 6) - 1, true);
        for (int t = 0; t < 4; ++t) {
            bool v = alpha[static_cast<std::size_t>(t)] != 0;
            out.set(r, alphaCols[static_cast<std::size_t>(t)] - 1, r == 4 ? v : !v);
        }
    }
    return out;
}

// G(gamma): MVstar plus the rows (1 g1 g2 1 1 g3) and (1 ~g1 ~g2 1 1 ~g3).
inline BinaryMatrix gen_g(const Bits& gamma) {
    if (gamma.size() != 3 || !is_binary(gamma)) throw DomainError("G(gamma): gamma must be binary of length 3");
    BinaryMatrix out(6, 6);
    BinaryMatrix mvs = gen_mvstar();
    for (int r = 0; r < 4; ++r) out.set_row(r, mvs.row(r));
    const std::array<int, 3> cols = {2, 3, 6};
    for (int r = 4; r < 6; ++r) {
        out.set(r, 0, true);
        out.set(r, 3, true);
        out.set(r, 4, true);
        for (int t = 0; t < 3; ++t) {
            bool v = gamma[static_cast<std::size_t>(t)] != 0;
            out.set(r, cols[static_cast<std::size_t>(t)] - 1, r == 4 ? v : !v);
        }
    }
    return out;
}

}  // namespace circmat
