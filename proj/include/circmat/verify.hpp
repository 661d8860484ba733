#pragma once

// Machine verification: one runnable check per lemma/theorem, each sweeping
// its full stated range up to configurable bounds and reporting counts plus
// any counterexample found.

#include <chrono>
#include <random>

#include "circmat/wordrep.hpp"

namespace circmat {

struct LemmaReport {
    std::string lemma;
    long long cases = 0;
    long long failureCount = 0;
    std::vector<std::string> failures;  // first few, for diagnostics
    std::vector<std::string> notes;
    double elapsedMs = 0.0;

    LemmaReport() = default;
    explicit LemmaReport(std::string name) : lemma(std::move(name)) {}

    bool passed() const { return failureCount == 0; }

    void fail(const std::string& what) {
        ++failureCount;
        if (failures.size() < 8) failures.push_back(what);
    }
};

namespace detail {

class ReportTimer {
public:
    explicit ReportTimer(LemmaReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() {
        r_.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    LemmaReport& r_;
    std::chrono::steady_clock::time_point start_;
};

inline std::string flat(const BinaryMatrix& m) {
    std::string s;
    for (int r = 0; r < m.rows(); ++r) {
        if (r) s.push_back('/');
        s += m.row_string(r);
    }
    return s;
}

inline BinaryMatrix matrix_from_counter(int rows, int cols, std::uint64_t x) {
    BinaryMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if ((x >> (r * cols + c)) & 1u) m.set(r, c, true);
    return m;
}

inline BinaryMatrix random_matrix(int rows, int cols, std::mt19937& rng, double density) {
    BinaryMatrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

}  // namespace detail

// For every binary a = a_1..a_{k-2} 0 0 other than 0100, a (.) MII(k)
// contains an I-circular forbidden member as a configuration (4 <= k <= kMax).
inline LemmaReport verify_lemma_m2(int kMax) {
    LemmaReport rep("m2");
    detail::ReportTimer t(rep);
    if (kMax < 4) throw DomainError("verify_lemma_m2: kMax must be >= 4");
    for (int k = 4; k <= kMax; ++k) {
        const BinaryMatrix base = gen_mii(k);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (k - 2)); ++x) {
            Bits a(static_cast<std::size_t>(k), 0);
            for (int i = 0; i < k - 2; ++i) a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((x >> i) & 1u);
            if (a == parse_bits("0100")) continue;
            ++rep.cases;
            if (!contains_iforb_member(mask_complement(a, base)))
                rep.fail("k=" + std::to_string(k) + " a=" + to_string(a));
        }
    }
    return rep;
}

// Every I-circular forbidden member F within the bounds satisfies: Lambda(F)
// contains a circular-ones forbidden member, and F is a minimal forbidden
// submatrix for the I-circular property.
inline LemmaReport verify_lemma_L1(int maxRows = 8, int maxCols = 9) {
    LemmaReport rep("L1");
    detail::ReportTimer t(rep);
    for (const FamilyMember& mem : forb_icircular(maxRows, maxCols)) {
        ++rep.cases;
        if (!contains_forb_member(lambda_closure(mem.matrix).matrix))
            rep.fail(mem.id.name() + ": Lambda image lacks a circular-ones forbidden member");
        if (!is_minimal_forbidden_icircular(mem.matrix)) rep.fail(mem.id.name() + ": not minimal");
    }
    return rep;
}

// Every circular-ones forbidden member with at most kMax rows contains an
// I-circular forbidden member as a configuration.
inline LemmaReport verify_lemma_fc(int kMax) {
    LemmaReport rep("fc");
    detail::ReportTimer t(rep);
    if (kMax < 3) throw DomainError("verify_lemma_fc: kMax must be >= 3");
    for (const FamilyMember& mem : forb_circular(kMax, std::max(kMax + 1, 6))) {
        ++rep.cases;
        if (!contains_iforb_member(mem.matrix)) rep.fail(mem.id.name());
    }
    return rep;
}

// Every a (.) MVstar is configuration-equal to exactly one of MIV, ~MIV,
// MVstar, ~MVstar; all four classes are realized and pairwise distinct.
inline LemmaReport verify_lemma_MVast() {
    LemmaReport rep("MVast");
    detail::ReportTimer t(rep);
    const std::vector<std::pair<std::string, BinaryMatrix>> reps = {
        {"MIV", gen_miv()},
        {"~MIV", complement_matrix(gen_miv())},
        {"MVstar", gen_mvstar()},
        {"~MVstar", complement_matrix(gen_mvstar())},
    };
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            if (same_configuration(reps[i].second, reps[j].second))
                rep.fail(reps[i].first + " and " + reps[j].first + " are configuration-equal");
    std::array<int, 4> classSize{0, 0, 0, 0};
    for (std::uint64_t x = 0; x < 16; ++x) {
        ++rep.cases;
        Bits a(4);
        for (int i = 0; i < 4; ++i) a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((x >> i) & 1u);
        const BinaryMatrix masked = mask_complement(a, gen_mvstar());
        int hits = 0;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (same_configuration(masked, reps[i].second)) {
                ++hits;
                ++classSize[i];
            }
        }
        if (hits != 1) rep.fail("a=" + to_string(a) + " matched " + std::to_string(hits) + " classes");
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (classSize[i] == 0) rep.fail("class " + reps[i].first + " not realized");
        rep.notes.push_back("class " + reps[i].first + ": " + std::to_string(classSize[i]) + " masks");
    }
    return rep;
}

// R(b) contains an I-circular forbidden member for every quaternary b with
// 3 <= |b| <= kMax; at |b| = 3 only sequences over {1,3} or over {0,2} are
// covered by the statement, and the excluded ones are reported informally.
inline LemmaReport verify_lemma_rb(int kMax) {
    LemmaReport rep("rb");
    detail::ReportTimer t(rep);
    if (kMax < 3) throw DomainError("verify_lemma_rb: kMax must be >= 3");
    long long excludedWithCertificate = 0, excludedTotal = 0;
    for (int k = 3; k <= kMax; ++k) {
        std::uint64_t total = 1;
        for (int i = 0; i < k; ++i) total *= 4;
        for (std::uint64_t x = 0; x < total; ++x) {
            Digits b(static_cast<std::size_t>(k));
            std::uint64_t y = x;
            for (int i = 0; i < k; ++i) {
                b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(y & 3u);
                y >>= 2;
            }
            if (k == 3) {
                bool odd = true, even = true;
                for (auto d : b) {
                    odd = odd && (d == 1 || d == 3);
                    even = even && (d == 0 || d == 2);
                }
                if (!odd && !even) {
                    ++excludedTotal;
                    if (contains_iforb_member(gen_r(b))) ++excludedWithCertificate;
                    continue;
                }
            }
            ++rep.cases;
            if (!contains_iforb_member(gen_r(b))) rep.fail("b=" + to_string(b));
        }
    }
    if (excludedTotal > 0)
        rep.notes.push_back("excluded |b|=3 sequences: " + std::to_string(excludedWithCertificate) + " of " +
                            std::to_string(excludedTotal) + " still contain a forbidden member");
    return rep;
}

// W(b) contains an I-circular forbidden member for every admissible b
// (b_4 = 0, b_1, b_3 != 3), under both U_2 column conventions.
inline LemmaReport verify_lemma_W() {
    LemmaReport rep("W");
    detail::ReportTimer t(rep);
    for (UVariant variant : {UVariant::Literal, UVariant::Figure}) {
        for (std::uint8_t b1 = 0; b1 <= 2; ++b1) {
            for (std::uint8_t b2 = 0; b2 <= 3; ++b2) {
                for (std::uint8_t b3 = 0; b3 <= 2; ++b3) {
                    ++rep.cases;
                    const Digits b{b1, b2, b3, 0};
                    if (!contains_iforb_member(gen_w(b, variant)))
                        rep.fail("b=" + to_string(b) + (variant == UVariant::Literal ? " literal" : " figure"));
                }
            }
        }
    }
    return rep;
}

namespace detail {

inline bool alpha_excluded(const Bits& a) {
    static const std::vector<Bits> excluded = {parse_bits("0000"), parse_bits("0011"), parse_bits("1100"), parse_bits("1111")};
    return std::find(excluded.begin(), excluded.end(), a) != excluded.end();
}

}  // namespace detail

// H_i(alpha) contains a circular-ones forbidden member with fewer than six
// columns for every i in [3] and alpha outside {0000, 0011, 1100, 1111}.
inline LemmaReport verify_lemma_X() {
    LemmaReport rep("X");
    detail::ReportTimer t(rep);
    long long excludedSmall = 0;
    for (int i = 1; i <= 3; ++i) {
        for (std::uint64_t x = 0; x < 16; ++x) {
            Bits a(4);
            for (int j = 0; j < 4; ++j) a[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((x >> j) & 1u);
            const bool small = contains_forb_member(gen_h(i, a), 5).has_value();
            if (detail::alpha_excluded(a)) {
                if (small) ++excludedSmall;
                continue;
            }
            ++rep.cases;
            if (!small) rep.fail("i=" + std::to_string(i) + " alpha=" + to_string(a));
        }
    }
    rep.notes.push_back("excluded alpha cases with a sub-6-column certificate: " + std::to_string(excludedSmall) + " of 12");
    return rep;
}

// G(gamma) contains a circular-ones forbidden member with fewer than six
// columns for every nonconstant gamma.
inline LemmaReport verify_lemma_G() {
    LemmaReport rep("G");
    detail::ReportTimer t(rep);
    long long constantSmall = 0;
    for (std::uint64_t x = 0; x < 8; ++x) {
        Bits g(3);
        for (int j = 0; j < 3; ++j) g[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((x >> j) & 1u);
        const bool constant = (g[0] == g[1] && g[1] == g[2]);
        const bool small = contains_forb_member(gen_g(g), 5).has_value();
        if (constant) {
            if (small) ++constantSmall;
            continue;
        }
        ++rep.cases;
        if (!small) rep.fail("gamma=" + to_string(g));
    }
    rep.notes.push_back("constant gamma cases with a sub-6-column certificate: " + std::to_string(constantSmall) + " of 2");
    return rep;
}

// I-circularity coincides with the absence of any I-circular forbidden
// member, exhaustively over all matrices within (rowMax, colMax) plus seeded
// random 5x6 samples.
inline LemmaReport verify_theorem_icp(int rowMax, int colMax, long long samples = 10000, unsigned seed = 12345) {
    LemmaReport rep("icp");
    detail::ReportTimer t(rep);
    if (rowMax * colMax > 20) throw GuardError("verify_theorem_icp: exhaustive bounds too large");
    auto check = [&](const BinaryMatrix& m, const std::string& tag) {
        ++rep.cases;
        const bool icirc = has_i_circular(m).has_value();
        const bool clean = !contains_iforb_member(m).has_value();
        if (icirc != clean) rep.fail(tag + " " + detail::flat(m));
    };
    for (int r = 1; r <= rowMax; ++r)
        for (int c = 1; c <= colMax; ++c)
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << (r * c)); ++x) check(detail::matrix_from_counter(r, c, x), "exhaustive");
    std::mt19937 rng(seed);
    const double densities[] = {0.25, 0.5, 0.75};
    for (long long i = 0; i < samples; ++i) check(detail::random_matrix(5, 6, rng, densities[i % 3]), "random");
    return rep;
}

// The split graph of M is semi-transitive (by the orientation oracle) iff M
// is I-circular, exhaustively over matrices without all-ones rows.
inline LemmaReport verify_theorem_sgicp(int rowMax, int colMax) {
    LemmaReport rep("sgicp");
    detail::ReportTimer t(rep);
    for (int r = 1; r <= rowMax; ++r) {
        for (int c = 1; c <= colMax; ++c) {
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << (r * c)); ++x) {
                const BinaryMatrix m = detail::matrix_from_counter(r, c, x);
                bool allOnes = false;
                for (int i = 0; i < r && !allOnes; ++i) allOnes = m.row(i) == m.full_mask();
                if (allOnes) continue;
                ++rep.cases;
                const SplitGraph sg = sg_from_matrix(m);
                const bool viaMatrix = is_semi_transitive_split(sg).verdict;
                const bool viaOracle = brute_force_semi_transitive(sg.graph).has_value();
                if (viaMatrix != viaOracle) rep.fail(detail::flat(m));
            }
        }
    }
    return rep;
}

// Every forbidden induced subgraph with at most maxVertices vertices is
// non-semi-transitive, and deleting any single vertex makes it
// semi-transitive (both by the orientation oracle).
inline LemmaReport verify_gforb_minimality(int maxVertices = 11, int guardEdges = 30) {
    LemmaReport rep("gforb");
    detail::ReportTimer t(rep);
    for (const GForbMember& mem : gen_gforb(maxVertices)) {
        ++rep.cases;
        const Graph& g = mem.graph.graph;
        if (brute_force_semi_transitive(g, guardEdges)) {
            rep.fail(mem.name + ": semi-transitive");
            continue;
        }
        for (int v = 1; v <= g.vertex_count(); ++v) {
            std::vector<int> verts;
            for (int u = 1; u <= g.vertex_count(); ++u)
                if (u != v) verts.push_back(u);
            if (!brute_force_semi_transitive(g.induced(verts), guardEdges))
                rep.fail(mem.name + ": still non-semi-transitive after deleting vertex " + std::to_string(v));
        }
    }
    return rep;
}

inline std::vector<LemmaReport> verify_all() {
    return {
        verify_lemma_m2(7),
        verify_lemma_L1(8, 9),
        verify_lemma_fc(7),
        verify_lemma_MVast(),
        verify_lemma_rb(5),
        verify_lemma_W(),
        verify_lemma_X(),
        verify_lemma_G(),
        verify_theorem_icp(4, 4),
        verify_theorem_sgicp(3, 4),
        verify_gforb_minimality(),
    };
}

}  // namespace circmat
