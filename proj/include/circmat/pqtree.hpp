#pragma once

// PQ-tree for consecutive-ones recognition.  The tree represents the set of
// column orders in which every reduced row is contiguous: P-node children
// permute freely, Q-node children are fixed up to reversal.  reduce() applies
// the standard templates; a PARTIAL subtree is always normalized into a
// Q-node whose empty leaves come first and full leaves last, which lets the
// parent splice it at a block boundary.

#include <memory>
#include <optional>

#include "circmat/core.hpp"

namespace circmat {

class PQTree {
public:
    explicit PQTree(int ncols) : ncols_(ncols) {
        if (ncols < 1) throw DomainError("PQTree: need at least one column");
        if (ncols == 1) {
            root_ = leaf(1);
        } else {
            root_ = node(Type::P);
            for (int c = 1; c <= ncols; ++c) root_->kids.push_back(leaf(c));
        }
    }

    // Constrains the tree so the columns in `s` (bit c = column c+1) are
    // consecutive in every represented order.  Returns false when impossible;
    // the tree is then in an unspecified state and must be discarded.
    bool reduce(std::uint64_t s) {
        s &= full_mask();
        const int count = popcount64(s);
        if (count <= 1 || count == ncols_) return true;
        Ptr* pert = &root_;
        for (;;) {
            Node* n = pert->get();
            if (n->type == Type::Leaf) break;
            Ptr* next = nullptr;
            for (auto& k : n->kids) {
                if (count_in(k.get(), s) == count) {
                    next = &k;
                    break;
                }
            }
            if (!next) break;
            pert = next;
        }
        return reduce_root(*pert, s);
    }

    std::vector<int> frontier() const {
        std::vector<int> out;
        collect(root_.get(), out);
        return out;
    }

    std::uint64_t full_mask() const { return ~std::uint64_t{0} >> (64 - ncols_); }

private:
    enum class Type { Leaf, P, Q };
    enum class Label { Empty, Full, Partial };

    struct Node {
        Type type;
        int col = 0;
        std::vector<std::unique_ptr<Node>> kids;
    };
    using Ptr = std::unique_ptr<Node>;

    static Ptr leaf(int col) {
        Ptr n = std::make_unique<Node>();
        n->type = Type::Leaf;
        n->col = col;
        return n;
    }

    static Ptr node(Type t) {
        Ptr n = std::make_unique<Node>();
        n->type = t;
        return n;
    }

    static int count_in(const Node* n, std::uint64_t s) {
        if (n->type == Type::Leaf) return (s >> (n->col - 1)) & 1u;
        int total = 0;
        for (const auto& k : n->kids) total += count_in(k.get(), s);
        return total;
    }

    static void collect(const Node* n, std::vector<int>& out) {
        if (n->type == Type::Leaf) {
            out.push_back(n->col);
            return;
        }
        for (const auto& k : n->kids) collect(k.get(), out);
    }

    // Wraps a child group in a P-node unless it is a single child already.
    static Ptr group(std::vector<Ptr>& kids) {
        if (kids.size() == 1) return std::move(kids.front());
        Ptr p = node(Type::P);
        p->kids = std::move(kids);
        return p;
    }

    struct Red {
        bool ok;
        Label label;
    };

    // Non-root reduction.  On Partial the node is replaced by a Q-node whose
    // children read empty part first, full part last.
    Red reduce_non_root(Ptr& np, std::uint64_t s) {
        Node* n = np.get();
        if (n->type == Type::Leaf) return {true, ((s >> (n->col - 1)) & 1u) ? Label::Full : Label::Empty};

        if (n->type == Type::P) {
            std::vector<Ptr> empty, full, part;
            for (auto& k : n->kids) {
                Red r = reduce_non_root(k, s);
                if (!r.ok) return {false, Label::Empty};
                if (r.label == Label::Empty)
                    empty.push_back(std::move(k));
                else if (r.label == Label::Full)
                    full.push_back(std::move(k));
                else
                    part.push_back(std::move(k));
            }
            if (part.size() >= 2) return {false, Label::Empty};
            if (part.empty()) {
                if (full.empty()) {
                    n->kids = std::move(empty);
                    return {true, Label::Empty};
                }
                if (empty.empty()) {
                    n->kids = std::move(full);
                    return {true, Label::Full};
                }
                Ptr q = node(Type::Q);
                q->kids.push_back(group(empty));
                q->kids.push_back(group(full));
                np = std::move(q);
                return {true, Label::Partial};
            }
            // One partial child: splice its children between the grouped
            // empty and full children.
            Ptr q = node(Type::Q);
            if (!empty.empty()) q->kids.push_back(group(empty));
            for (auto& k : part.front()->kids) q->kids.push_back(std::move(k));
            if (!full.empty()) q->kids.push_back(group(full));
            np = std::move(q);
            return {true, Label::Partial};
        }

        // Q-node: after reduction the child labels must read E* [partial] F*
        // in one of the two directions.
        std::vector<Label> labels(n->kids.size());
        for (std::size_t i = 0; i < n->kids.size(); ++i) {
            Red r = reduce_non_root(n->kids[i], s);
            if (!r.ok) return {false, Label::Empty};
            labels[i] = r.label;
        }
        bool anyEmpty = false, anyFull = false, anyPart = false;
        for (Label l : labels) {
            anyEmpty |= l == Label::Empty;
            anyFull |= l == Label::Full;
            anyPart |= l == Label::Partial;
        }
        if (!anyFull && !anyPart) return {true, Label::Empty};
        if (!anyEmpty && !anyPart) return {true, Label::Full};

        auto matches = [&](bool reversedDir) {
            // Checks for the pattern E* [partial] F* scanning left to right
            // (or right to left when reversedDir).
            const int m = static_cast<int>(labels.size());
            int idx = 0;
            auto lab = [&](int i) { return reversedDir ? labels[static_cast<std::size_t>(m - 1 - i)] : labels[static_cast<std::size_t>(i)]; };
            while (idx < m && lab(idx) == Label::Empty) ++idx;
            if (idx < m && lab(idx) == Label::Partial) ++idx;
            while (idx < m && lab(idx) == Label::Full) ++idx;
            return idx == m;
        };

        bool direct = matches(false);
        bool rev = !direct && matches(true);
        if (!direct && !rev) return {false, Label::Empty};
        if (rev) {
            std::reverse(n->kids.begin(), n->kids.end());
            std::reverse(labels.begin(), labels.end());
        }
        // Splice the single partial child (if any); its orientation already
        // has empties first, matching the empty side on the left.
        std::vector<Ptr> kids;
        for (std::size_t i = 0; i < n->kids.size(); ++i) {
            if (labels[i] == Label::Partial) {
                for (auto& k : n->kids[i]->kids) kids.push_back(std::move(k));
            } else {
                kids.push_back(std::move(n->kids[i]));
            }
        }
        n->kids = std::move(kids);
        return {true, Label::Partial};
    }

    // Root reduction: the full leaves only need to become consecutive, not
    // reach an end.
    bool reduce_root(Ptr& np, std::uint64_t s) {
        Node* n = np.get();
        if (n->type == Type::Leaf) return true;

        if (n->type == Type::P) {
            std::vector<Ptr> empty, full, part;
            for (auto& k : n->kids) {
                Red r = reduce_non_root(k, s);
                if (!r.ok) return false;
                if (r.label == Label::Empty)
                    empty.push_back(std::move(k));
                else if (r.label == Label::Full)
                    full.push_back(std::move(k));
                else
                    part.push_back(std::move(k));
            }
            if (part.size() > 2) return false;
            if (part.empty()) {
                if (empty.empty() || full.empty()) {
                    n->kids = std::move(empty.empty() ? full : empty);
                    return true;
                }
                n->kids = std::move(empty);
                n->kids.push_back(group(full));
                return true;
            }
            Ptr q;
            if (part.size() == 1) {
                q = std::move(part.front());
                if (!full.empty()) q->kids.push_back(group(full));
            } else {
                q = node(Type::Q);
                for (auto& k : part[0]->kids) q->kids.push_back(std::move(k));
                if (!full.empty()) q->kids.push_back(group(full));
                for (auto it = part[1]->kids.rbegin(); it != part[1]->kids.rend(); ++it) q->kids.push_back(std::move(*it));
            }
            if (empty.empty()) {
                np = std::move(q);
            } else {
                n->kids = std::move(empty);
                n->kids.push_back(std::move(q));
            }
            return true;
        }

        // Root Q-node: non-empty children must be consecutive, with partial
        // children only at the two boundaries of the block, oriented so
        // their full sides face inward.
        std::vector<Label> labels(n->kids.size());
        for (std::size_t i = 0; i < n->kids.size(); ++i) {
            Red r = reduce_non_root(n->kids[i], s);
            if (!r.ok) return false;
            labels[i] = r.label;
        }
        int first = -1, last = -1;
        for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
            if (labels[static_cast<std::size_t>(i)] != Label::Empty) {
                if (first < 0) first = i;
                last = i;
            }
        }
        if (first < 0) return true;
        for (int i = first + 1; i < last; ++i)
            if (labels[static_cast<std::size_t>(i)] != Label::Full) return false;
        std::vector<Ptr> kids;
        for (int i = 0; i < static_cast<int>(n->kids.size()); ++i) {
            Label l = labels[static_cast<std::size_t>(i)];
            if (l == Label::Partial) {
                // Left boundary keeps its normalized order (full side right);
                // a right-boundary partial is reversed so its full side faces
                // the block.
                auto& pk = n->kids[static_cast<std::size_t>(i)]->kids;
                if (i == last && i != first) std::reverse(pk.begin(), pk.end());
                for (auto& k : pk) kids.push_back(std::move(k));
            } else {
                kids.push_back(std::move(n->kids[static_cast<std::size_t>(i)]));
            }
        }
        n->kids = std::move(kids);
        return true;
    }

    Ptr root_;
    int ncols_;
};

}  // namespace circmat
