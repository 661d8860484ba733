#pragma once

// Binary matrix core.  Rows are stored as column bitmasks (bit c = column
// c+1), which makes row complement, intersection and containment single
// machine operations.  Matrices stay small here (every decision procedure in
// this library is exponential in the worst case), so the 62-column cap is a
// non-issue in practice.

#include <array>
#include <optional>
#include <sstream>

#include "circmat/seq.hpp"

namespace circmat {

inline constexpr int kMaxCols = 62;

class BinaryMatrix {
public:
    BinaryMatrix() = default;

    BinaryMatrix(int rows, int cols) : cols_(cols) {
        if (rows < 0 || cols < 0 || cols > kMaxCols) throw DomainError("BinaryMatrix: bad dimensions");
        rows_.assign(static_cast<std::size_t>(rows), 0);
    }

    static BinaryMatrix from_strings(const std::vector<std::string>& lines) {
        if (lines.empty()) throw DomainError("BinaryMatrix: at least one row required");
        BinaryMatrix m(static_cast<int>(lines.size()), static_cast<int>(lines.front().size()));
        for (int r = 0; r < m.rows(); ++r) {
            const std::string& s = lines[static_cast<std::size_t>(r)];
            if (static_cast<int>(s.size()) != m.cols()) throw DomainError("BinaryMatrix: rows must have equal length");
            for (int c = 0; c < m.cols(); ++c) {
                if (s[static_cast<std::size_t>(c)] == '1')
                    m.set(r, c, true);
                else if (s[static_cast<std::size_t>(c)] != '0')
                    throw DomainError("BinaryMatrix: entries must be 0/1");
            }
        }
        return m;
    }

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (rows_[static_cast<std::size_t>(r)] >> c) & 1u; }

    void set(int r, int c, bool v) {
        if (v)
            rows_[static_cast<std::size_t>(r)] |= std::uint64_t{1} << c;
        else
            rows_[static_cast<std::size_t>(r)] &= ~(std::uint64_t{1} << c);
    }

    std::uint64_t row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
    void set_row(int r, std::uint64_t m) { rows_[static_cast<std::size_t>(r)] = m; }
    void append_row(std::uint64_t m) { rows_.push_back(m & full_mask()); }

    std::uint64_t full_mask() const { return cols_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - cols_)); }

    int row_sum(int r) const { return popcount64(row(r)); }

    std::string row_string(int r) const {
        std::string s(static_cast<std::size_t>(cols_), '0');
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) s[static_cast<std::size_t>(c)] = '1';
        return s;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int r = 0; r < rows(); ++r) os << row_string(r) << '\n';
        return os.str();
    }

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    int cols_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Test/literal convenience: mat({"110","011","101"}).
inline BinaryMatrix mat(std::initializer_list<std::string> lines) {
    return BinaryMatrix::from_strings(std::vector<std::string>(lines));
}

inline BinaryMatrix complement_matrix(const BinaryMatrix& m) {
    BinaryMatrix out = m;
    for (int r = 0; r < m.rows(); ++r) out.set_row(r, ~m.row(r) & m.full_mask());
    return out;
}

// a (.) M: complement exactly the rows flagged by the binary mask a.
inline BinaryMatrix mask_complement(const Bits& a, const BinaryMatrix& m) {
    if (static_cast<int>(a.size()) != m.rows()) throw DomainError("mask_complement: mask length must equal row count");
    BinaryMatrix out = m;
    for (int r = 0; r < m.rows(); ++r)
        if (a[static_cast<std::size_t>(r)]) out.set_row(r, ~m.row(r) & m.full_mask());
    return out;
}

// M_{rho,sigma}: entry (i,j) of the result is entry (rho(i), sigma(j)) of M.
// Both maps are 1-based image lists.
inline BinaryMatrix submatrix(const BinaryMatrix& m, const IndexMap& rho, const IndexMap& sigma) {
    check_index_map(rho, m.rows(), "submatrix row map");
    check_index_map(sigma, m.cols(), "submatrix column map");
    BinaryMatrix out(static_cast<int>(rho.size()), static_cast<int>(sigma.size()));
    for (std::size_t i = 0; i < rho.size(); ++i)
        for (std::size_t j = 0; j < sigma.size(); ++j)
            out.set(static_cast<int>(i), static_cast<int>(j), m.get(rho[i] - 1, sigma[j] - 1));
    return out;
}

// M*: M with one all-zero column appended.
inline BinaryMatrix star(const BinaryMatrix& m) {
    BinaryMatrix out(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) out.set_row(r, m.row(r));
    return out;
}

inline BinaryMatrix delete_row(const BinaryMatrix& m, int r1) {
    if (r1 < 1 || r1 > m.rows()) throw DomainError("delete_row: index out of range");
    BinaryMatrix out(m.rows() - 1, m.cols());
    for (int r = 0, t = 0; r < m.rows(); ++r)
        if (r != r1 - 1) out.set_row(t++, m.row(r));
    return out;
}

inline BinaryMatrix delete_col(const BinaryMatrix& m, int c1) {
    if (c1 < 1 || c1 > m.cols()) throw DomainError("delete_col: index out of range");
    BinaryMatrix out(m.rows(), m.cols() - 1);
    const std::uint64_t low = (std::uint64_t{1} << (c1 - 1)) - 1;
    for (int r = 0; r < m.rows(); ++r) {
        std::uint64_t x = m.row(r);
        out.set_row(r, (x & low) | ((x >> c1) << (c1 - 1)));
    }
    return out;
}

struct ConfigWitness {
    IndexMap rowMap;
    IndexMap colMap;
};

namespace detail {

// Backtracking search for injective maps rho, sigma with M_{rho,sigma} = F.
// F's rows are assigned in order to distinct rows of M; a partial assignment
// survives only while the multiset of F's column patterns (restricted to the
// assigned rows) is contained in the multiset of M's column patterns.
class ConfigSearch {
public:
    ConfigSearch(const BinaryMatrix& m, const BinaryMatrix& f) : m_(m), f_(f) {}

    std::optional<ConfigWitness> run() {
        const int fR = f_.rows(), fC = f_.cols();
        if (fR > m_.rows() || fC > m_.cols()) return std::nullopt;
        assigned_.assign(static_cast<std::size_t>(fR), -1);
        used_.assign(static_cast<std::size_t>(m_.rows()), false);
        fpat_.assign(static_cast<std::size_t>(fC), 0);
        mpat_.assign(static_cast<std::size_t>(m_.cols()), 0);
        candidates_.resize(static_cast<std::size_t>(fR));
        for (int i = 0; i < fR; ++i) {
            auto& cand = candidates_[static_cast<std::size_t>(i)];
            cand.clear();
            const int ones = f_.row_sum(i), zeros = fC - ones;
            for (int r = 0; r < m_.rows(); ++r)
                if (m_.row_sum(r) >= ones && m_.cols() - m_.row_sum(r) >= zeros) cand.push_back(r);
        }
        if (!dfs(0)) return std::nullopt;
        ConfigWitness w;
        for (int v : assigned_) w.rowMap.push_back(v + 1);
        std::vector<bool> colUsed(static_cast<std::size_t>(m_.cols()), false);
        for (int j = 0; j < fC; ++j) {
            for (int c = 0; c < m_.cols(); ++c) {
                if (!colUsed[static_cast<std::size_t>(c)] && mpat_[static_cast<std::size_t>(c)] == fpat_[static_cast<std::size_t>(j)]) {
                    colUsed[static_cast<std::size_t>(c)] = true;
                    w.colMap.push_back(c + 1);
                    break;
                }
            }
        }
        return w;
    }

private:
    bool feasible(int depth) const {
        // Multiset containment of column patterns at this depth.
        std::vector<std::uint64_t> fs = fpat_, ms = mpat_;
        std::sort(fs.begin(), fs.end());
        std::sort(ms.begin(), ms.end());
        std::size_t j = 0;
        for (std::uint64_t p : fs) {
            while (j < ms.size() && ms[j] < p) ++j;
            if (j == ms.size() || ms[j] != p) return false;
            ++j;
        }
        (void)depth;
        return true;
    }

    bool dfs(int depth) {
        if (depth == f_.rows()) return true;
        const std::uint64_t bit = std::uint64_t{1} << depth;
        for (int r : candidates_[static_cast<std::size_t>(depth)]) {
            if (used_[static_cast<std::size_t>(r)]) continue;
            for (int j = 0; j < f_.cols(); ++j)
                if (f_.get(depth, j)) fpat_[static_cast<std::size_t>(j)] |= bit;
            for (int c = 0; c < m_.cols(); ++c)
                if (m_.get(r, c)) mpat_[static_cast<std::size_t>(c)] |= bit;
            used_[static_cast<std::size_t>(r)] = true;
            assigned_[static_cast<std::size_t>(depth)] = r;
            if (feasible(depth) && dfs(depth + 1)) return true;
            used_[static_cast<std::size_t>(r)] = false;
            for (auto& p : fpat_) p &= ~bit;
            for (auto& p : mpat_) p &= ~bit;
        }
        return false;
    }

    const BinaryMatrix& m_;
    const BinaryMatrix& f_;
    std::vector<int> assigned_;
    std::vector<bool> used_;
    std::vector<std::uint64_t> fpat_, mpat_;
    std::vector<std::vector<int>> candidates_;
};

}  // namespace detail

// Some submatrix of M equals F up to row/column permutations; returns the
// witnessing maps (first found in a deterministic search order), or nothing.
inline std::optional<ConfigWitness> contains_configuration(const BinaryMatrix& m, const BinaryMatrix& f) {
    return detail::ConfigSearch(m, f).run();
}

// Configuration equality: equal dimensions and mutual containment (injective
// maps between equal-sized index sets are bijections).
inline bool same_configuration(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && contains_configuration(a, b).has_value();
}

}  // namespace circmat
