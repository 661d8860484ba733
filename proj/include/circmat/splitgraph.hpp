#pragma once

// Split graphs and semi-transitivity.  A split graph's cross adjacencies are
// encoded as a binary matrix A(G) (rows = independent set, columns = clique);
// the semi-transitivity decision goes through the I-circular property of
// A(G), with a brute-force orientation oracle as the independent route and
// forbidden-induced-subgraph certificates on the negative side.

#include "circmat/icirc.hpp"

namespace circmat {

inline constexpr int kDefaultBruteForceEdges = 24;
inline constexpr int kMaxVertices = 62;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices) throw DomainError("Graph: vertex count out of range");
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw DomainError("Graph: loops are not allowed");
        adj_[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
        adj_[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1u;
    }

    std::uint64_t neighbors(int u) const { return adj_[static_cast<std::size_t>(u - 1)]; }
    int degree(int u) const { return popcount64(neighbors(u)); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    int edge_count() const {
        int total = 0;
        for (int u = 1; u <= n_; ++u) total += degree(u);
        return total / 2;
    }

    // Induced subgraph on the listed vertices, relabeled 1..k in list order.
    Graph induced(const std::vector<int>& verts) const {
        Graph g(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (adjacent(verts[i], verts[j])) g.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        return g;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int u) const {
        if (u < 1 || u > n_) throw DomainError("Graph: vertex out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

struct SplitGraph {
    Graph graph;
    std::vector<int> clique;       // ascending
    std::vector<int> independent;  // ascending
};

namespace detail {

inline std::uint64_t vertex_set_mask(const std::vector<int>& verts) {
    std::uint64_t m = 0;
    for (int v : verts) m |= std::uint64_t{1} << (v - 1);
    return m;
}

// Moves independent vertices adjacent to the whole clique into the clique,
// repeating to a fixpoint, and sorts both sides.
inline void normalize_partition(const Graph& g, std::vector<int>& clique, std::vector<int>& indep) {
    bool changed = true;
    while (changed) {
        changed = false;
        const std::uint64_t cmask = vertex_set_mask(clique);
        for (std::size_t i = 0; i < indep.size(); ++i) {
            const int v = indep[i];
            if ((g.neighbors(v) & cmask) == cmask) {
                clique.push_back(v);
                indep.erase(indep.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    std::sort(clique.begin(), clique.end());
    std::sort(indep.begin(), indep.end());
}

inline bool valid_partition(const Graph& g, const std::vector<int>& clique, const std::vector<int>& indep) {
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adjacent(clique[i], clique[j])) return false;
    for (std::size_t i = 0; i < indep.size(); ++i)
        for (std::size_t j = i + 1; j < indep.size(); ++j)
            if (g.adjacent(indep[i], indep[j])) return false;
    return true;
}

}  // namespace detail

// Split recognition by the degree-sequence criterion: with degrees sorted
// non-increasingly and m the largest index with d_m >= m-1, the graph is
// split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, in which case the top m
// vertices form a clique and the rest an independent set.  The returned
// partition is normalized so no independent vertex sees the whole clique.
inline std::optional<SplitGraph> split_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;
    std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(verts[static_cast<std::size_t>(i - 1)]) >= i - 1) m = i;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 1; i <= n; ++i) {
        if (i <= m)
            lhs += g.degree(verts[static_cast<std::size_t>(i - 1)]);
        else
            rhs += g.degree(verts[static_cast<std::size_t>(i - 1)]);
    }
    if (lhs != rhs) return std::nullopt;
    std::vector<int> clique(verts.begin(), verts.begin() + m);
    std::vector<int> indep(verts.begin() + m, verts.end());
    if (!detail::valid_partition(g, clique, indep)) throw std::logic_error("split_partition: degree criterion produced an invalid partition");
    detail::normalize_partition(g, clique, indep);
    return SplitGraph{g, std::move(clique), std::move(indep)};
}

// A(G): rows indexed by the independent set in ascending vertex order,
// columns by the clique likewise.  Empty independent set yields the 0 x |C|
// sentinel (trivially semi-transitive).
inline BinaryMatrix adjacency_matrix(const SplitGraph& sg) {
    BinaryMatrix m(static_cast<int>(sg.independent.size()), static_cast<int>(sg.clique.size()));
    for (std::size_t i = 0; i < sg.independent.size(); ++i)
        for (std::size_t j = 0; j < sg.clique.size(); ++j)
            if (sg.graph.adjacent(sg.independent[i], sg.clique[j])) m.set(static_cast<int>(i), static_cast<int>(j), true);
    return m;
}

// SG(M): rows become independent vertices 1..m, columns become the clique
// m+1..m+n, with cross edges at the 1 entries.  All-ones rows are absorbed
// into the clique by normalization, so A(SG(M)) = M exactly whenever M has
// no all-ones row.
inline SplitGraph sg_from_matrix(const BinaryMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    Graph g(rows + cols);
    for (int j = 0; j < cols; ++j)
        for (int j2 = j + 1; j2 < cols; ++j2) g.add_edge(rows + j + 1, rows + j2 + 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (m.get(i, j)) g.add_edge(i + 1, rows + j + 1);
    std::vector<int> clique, indep;
    for (int j = 0; j < cols; ++j) clique.push_back(rows + j + 1);
    for (int i = 0; i < rows; ++i) indep.push_back(i + 1);
    detail::normalize_partition(g, clique, indep);
    return SplitGraph{std::move(g), std::move(clique), std::move(indep)};
}

struct Orientation {
    Graph graph;
    std::vector<std::pair<int, int>> arcs;  // one per edge, (tail, head)
};

// Witness refuting semi-transitivity of an orientation: either a directed
// cycle, or a directed path v_0...v_m whose endpoints are joined by the arc
// v_0 -> v_m while the listed path pair is non-adjacent.
struct ShortcutWitness {
    std::vector<int> path;
    std::optional<std::pair<int, int>> missing;
    std::vector<int> cycle;
};

namespace detail {

struct ArcView {
    int n = 0;
    std::vector<std::uint64_t> out;    // out-neighbor masks
    std::vector<std::uint64_t> reach;  // reach[v] includes v

    explicit ArcView(int n_) : n(n_), out(static_cast<std::size_t>(n_), 0), reach(static_cast<std::size_t>(n_), 0) {}

    // Topological sort; fills reach on success, returns false on a cycle.
    bool compute_reach() {
        std::vector<int> indeg(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if ((out[static_cast<std::size_t>(u)] >> v) & 1u) ++indeg[static_cast<std::size_t>(v)];
        std::vector<int> topo;
        std::vector<int> stack;
        for (int v = 0; v < n; ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            topo.push_back(u);
            for (int v = 0; v < n; ++v)
                if ((out[static_cast<std::size_t>(u)] >> v) & 1u)
                    if (--indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
        }
        if (static_cast<int>(topo.size()) != n) return false;
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            int u = *it;
            std::uint64_t r = std::uint64_t{1} << u;
            for (int v = 0; v < n; ++v)
                if ((out[static_cast<std::size_t>(u)] >> v) & 1u) r |= reach[static_cast<std::size_t>(v)];
            reach[static_cast<std::size_t>(u)] = r;
        }
        return true;
    }

    bool reaches(int a, int b) const { return (reach[static_cast<std::size_t>(a)] >> b) & 1u; }

    // Directed path a -> ... -> b (0-based), following smallest successors.
    std::vector<int> walk(int a, int b) const {
        std::vector<int> path{a};
        while (a != b) {
            for (int v = 0; v < n; ++v) {
                if (((out[static_cast<std::size_t>(a)] >> v) & 1u) && reaches(v, b)) {
                    a = v;
                    path.push_back(v);
                    break;
                }
            }
        }
        return path;
    }

    std::vector<int> find_cycle() const {
        // Some vertex lies on a cycle; walk successors inside the 'never
        // finished' set found by DFS coloring.
        std::vector<int> color(static_cast<std::size_t>(n), 0);
        std::vector<int> cyc;
        std::vector<int> pathStack;
        auto dfs = [&](auto&& self, int u) -> bool {
            color[static_cast<std::size_t>(u)] = 1;
            pathStack.push_back(u);
            for (int v = 0; v < n; ++v) {
                if (!((out[static_cast<std::size_t>(u)] >> v) & 1u)) continue;
                if (color[static_cast<std::size_t>(v)] == 1) {
                    auto it = std::find(pathStack.begin(), pathStack.end(), v);
                    cyc.assign(it, pathStack.end());
                    return true;
                }
                if (color[static_cast<std::size_t>(v)] == 0 && self(self, v)) return true;
            }
            color[static_cast<std::size_t>(u)] = 2;
            pathStack.pop_back();
            return false;
        };
        for (int v = 0; v < n; ++v)
            if (color[static_cast<std::size_t>(v)] == 0 && dfs(dfs, v)) break;
        return cyc;
    }
};

// In an acyclic orientation, semi-transitivity fails exactly when some arc
// u -> w admits a directed u-w path through a non-adjacent vertex pair
// (adjacent pairs along such a path can only be oriented forward, or the
// orientation would contain a cycle).
inline bool shortcut_free(const Graph& g, const ArcView& av, const std::vector<std::pair<int, int>>& arcs) {
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || g.adjacent(x + 1, y + 1) || !av.reaches(x, y)) continue;
            for (const auto& [u, w] : arcs)
                if (av.reaches(u - 1, x) && av.reaches(y, w - 1)) return false;
        }
    }
    return true;
}

}  // namespace detail

// Absent iff the orientation is acyclic and shortcut-free; otherwise a
// checkable witness.
inline std::optional<ShortcutWitness> verify_orientation(const Orientation& o) {
    const int n = o.graph.vertex_count();
    detail::ArcView av(n);
    for (const auto& [u, v] : o.arcs) av.out[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
    if (!av.compute_reach()) {
        ShortcutWitness w;
        for (int v : av.find_cycle()) w.cycle.push_back(v + 1);
        return w;
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || o.graph.adjacent(x + 1, y + 1) || !av.reaches(x, y)) continue;
            for (const auto& [u, w] : o.arcs) {
                if (av.reaches(u - 1, x) && av.reaches(y, w - 1)) {
                    ShortcutWitness wit;
                    std::vector<int> p = av.walk(u - 1, x);
                    std::vector<int> q = av.walk(x, y);
                    std::vector<int> r = av.walk(y, w - 1);
                    p.insert(p.end(), q.begin() + 1, q.end());
                    p.insert(p.end(), r.begin() + 1, r.end());
                    for (int v : p) wit.path.push_back(v + 1);
                    wit.missing = std::make_pair(x + 1, y + 1);
                    return wit;
                }
            }
        }
    }
    return std::nullopt;
}

// Enumerates acyclic orientations (depth-first over edges, pruning directed
// cycles via incremental reachability) and returns the first shortcut-free
// one.  Deterministic: edges in sorted order, low->high direction tried
// first.
inline std::optional<Orientation> brute_force_semi_transitive(const Graph& g, int guardEdges = kDefaultBruteForceEdges) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > guardEdges) throw GuardError("brute_force_semi_transitive: too many edges for exhaustive search");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> arcs(static_cast<std::size_t>(m));
    detail::ArcView base(n);
    for (int v = 0; v < n; ++v) base.reach[static_cast<std::size_t>(v)] = std::uint64_t{1} << v;

    std::optional<Orientation> found;
    auto dfs = [&](auto&& self, int idx, const detail::ArcView& av) -> bool {
        if (idx == m) {
            if (detail::shortcut_free(g, av, arcs)) {
                found = Orientation{g, arcs};
                return true;
            }
            return false;
        }
        const auto [a, b] = edges[static_cast<std::size_t>(idx)];
        for (int dir = 0; dir < 2; ++dir) {
            const int u = dir == 0 ? a : b, v = dir == 0 ? b : a;
            if (av.reaches(v - 1, u - 1)) continue;  // would close a cycle
            detail::ArcView next = av;
            next.out[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
            const std::uint64_t ubit = std::uint64_t{1} << (u - 1);
            const std::uint64_t add = av.reach[static_cast<std::size_t>(v - 1)];
            for (int p = 0; p < n; ++p)
                if (next.reach[static_cast<std::size_t>(p)] & ubit) next.reach[static_cast<std::size_t>(p)] |= add;
            arcs[static_cast<std::size_t>(idx)] = {u, v};
            if (self(self, idx + 1, next)) return true;
        }
        return false;
    };
    dfs(dfs, 0, base);
    return found;
}

inline std::string gforb_member_name(const FamilyId& id) {
    if (id.family == Family::MaskedMIstar) return "MVII";
    return id.base_name();
}

struct SemiTransCertificate {
    bool verdict;
    std::optional<CircularOrder> order;  // witness order of A(G) columns
    struct Negative {
        std::string member;           // forbidden induced subgraph name
        std::vector<int> vertexMap;   // vertices of G inducing that subgraph
        ICircCertificate certificate; // underlying matrix certificate
    };
    std::optional<Negative> negative;
};

// Semi-transitivity of a split graph via the I-circular property of A(G).
// Negative verdicts carry a forbidden induced subgraph: the matrix witness
// pushed through SG, with the 0100 (.) MII(4) member shrunk to its columns
// {1,2,4}, whose SG image is the MIstar(3) graph.
inline SemiTransCertificate is_semi_transitive_split(const SplitGraph& sg) {
    if (sg.independent.empty())
        return SemiTransCertificate{true, CircularOrder{identity_map(static_cast<int>(sg.clique.size()))}, {}};
    const BinaryMatrix a = adjacency_matrix(sg);
    if (auto order = has_i_circular(a)) return SemiTransCertificate{true, *order, {}};
    auto cert = contains_iforb_member(a);
    if (!cert) throw std::logic_error("is_semi_transitive_split: certificate search failed");
    SemiTransCertificate out{false, {}, {}};
    SemiTransCertificate::Negative neg{gforb_member_name(cert->family), {}, *cert};
    std::vector<int> colPick;
    if (cert->family.family == Family::MaskedMII) {
        neg.member = "MIstar(3)";
        colPick = {1, 2, 4};
    } else {
        colPick = identity_map(static_cast<int>(cert->witness.colMap.size()));
    }
    for (int i : cert->witness.rowMap) neg.vertexMap.push_back(sg.independent[static_cast<std::size_t>(i - 1)]);
    for (int j : colPick) {
        const int col = cert->witness.colMap[static_cast<std::size_t>(j - 1)];
        neg.vertexMap.push_back(sg.clique[static_cast<std::size_t>(col - 1)]);
    }
    std::sort(neg.vertexMap.begin(), neg.vertexMap.end());
    out.negative = std::move(neg);
    return out;
}

struct GForbMember {
    std::string name;
    BinaryMatrix matrix;  // the I-circular forbidden matrix whose SG image this is
    SplitGraph graph;
};

// The minimal forbidden induced subgraphs for semi-transitive split graphs:
// SG images of the I-circular forbidden family, except 0100 (.) MII(4)
// (whose SG image properly contains the MIstar(3) graph), with MVII
// realized as SG(0101 (.) MIstar(4)).
inline std::vector<GForbMember> gen_gforb(int maxVertices) {
    if (maxVertices < 7) throw DomainError("gen_gforb: bound must be at least 7");
    std::vector<GForbMember> out;
    auto push = [&](std::string name, const BinaryMatrix& m) {
        if (m.rows() + m.cols() <= maxVertices) out.push_back({std::move(name), m, sg_from_matrix(m)});
    };
    for (int k = 3; 2 * k + 1 <= maxVertices; ++k) {
        push("MIstar(" + std::to_string(k) + ")", gen_mistar(k));
        push("MIII(" + std::to_string(k) + ")", gen_miii(k));
        push("MII(" + std::to_string(k + 1) + ")", gen_mii(k + 1));
    }
    push("MIV", gen_miv());
    push("MV", gen_mv());
    push("MVI", gen_mvi());
    push("MVII", mask_complement(parse_bits("0101"), gen_mistar(4)));
    std::sort(out.begin(), out.end(), [](const GForbMember& a, const GForbMember& b) {
        const int va = a.graph.graph.vertex_count(), vb = b.graph.graph.vertex_count();
        return va != vb ? va < vb : a.name < b.name;
    });
    return out;
}

// Row condition on a linearly arranged matrix: whenever a row reads
// 1^a 0^b 1^c with a,b,c >= 1, no other row may carry 1s in all positions
// a .. a+b+1.  `arrangement` lists column ids by position.
inline bool kp_condition(const BinaryMatrix& m, const std::vector<int>& arrangement) {
    if (static_cast<int>(arrangement.size()) != m.cols()) throw DomainError("kp_condition: arrangement size mismatch");
    check_index_map(arrangement, m.cols(), "kp_condition");
    const int l = m.cols();
    if (l == 0) return true;
    const std::uint64_t full = ~std::uint64_t{0} >> (64 - l);
    for (int r = 0; r < m.rows(); ++r) {
        const std::uint64_t x = detail::arrange(m.row(r), arrangement);
        if (x == full || !(x & 1u) || !((x >> (l - 1)) & 1u)) continue;
        if (!detail::linearly_contiguous(~x & full)) continue;  // more than one 0 block
        const int a = std::countr_zero(~x);            // leading-ones count
        const int b = popcount64(~x & full);           // zero-block length
        const std::uint64_t gap = ((std::uint64_t{1} << (b + 2)) - 1) << (a - 1);  // positions a..a+b+1
        for (int s = 0; s < m.rows(); ++s) {
            if (s == r) continue;
            if ((detail::arrange(m.row(s), arrangement) & gap) == gap) return false;
        }
    }
    return true;
}

// Existential reading over all l! linear arrangements: some arrangement makes
// every row a circular interval and satisfies kp_condition.
inline bool kp_decision(const BinaryMatrix& m, int guardCols = 8) {
    const int l = m.cols();
    if (l > guardCols) throw GuardError("kp_decision: too many columns for exhaustive search");
    if (l <= 1) return true;
    std::vector<int> arrangement = identity_map(l);
    do {
        bool ok = true;
        for (int r = 0; ok && r < m.rows(); ++r)
            ok = detail::cyclically_contiguous(detail::arrange(m.row(r), arrangement), l);
        if (ok && kp_condition(m, arrangement)) return true;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return false;
}

}  // namespace circmat
