#pragma once

// Alternation words: a word over [n] represents the graph whose edges are
// exactly the letter pairs that alternate in it.

#include "circmat/splitgraph.hpp"

namespace circmat {

using Word = std::vector<int>;  // letters in [n]

inline bool alternates(const Word& w, int x, int y) {
    if (x == y) throw DomainError("alternates: letters must differ");
    bool sawX = false, sawY = false;
    int last = 0;
    bool ok = true;
    for (int c : w) {
        if (c == x) sawX = true;
        if (c == y) sawY = true;
        if (c != x && c != y) continue;
        if (c == last) ok = false;
        last = c;
    }
    if (!sawX || !sawY) throw DomainError("alternates: both letters must occur in the word");
    return ok;
}

inline Graph graph_from_word(const Word& w, int n) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int c : w) {
        if (c < 1 || c > n) throw DomainError("graph_from_word: letter outside the alphabet");
        seen[static_cast<std::size_t>(c)] = true;
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[static_cast<std::size_t>(v)]) throw DomainError("graph_from_word: vertex missing from the word");
    Graph g(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (alternates(w, x, y)) g.add_edge(x, y);
    return g;
}

inline bool word_represents(const Word& w, const Graph& g) {
    return graph_from_word(w, g.vertex_count()) == g;
}

// Bounded search used by consistency checks only: tries every word with per
// letter multiplicity 1..3 and total length at most maxLen (default 3n).
inline std::optional<Word> find_representing_word(const Graph& g, int maxLen = -1) {
    const int n = g.vertex_count();
    if (n == 0) return Word{};
    if (maxLen < 0) maxLen = 3 * n;
    std::vector<int> mult(static_cast<std::size_t>(n), 1);
    for (;;) {
        int total = 0;
        for (int m : mult) total += m;
        if (total <= maxLen) {
            Word w;
            for (int v = 1; v <= n; ++v)
                for (int i = 0; i < mult[static_cast<std::size_t>(v - 1)]; ++i) w.push_back(v);
            std::sort(w.begin(), w.end());
            do {
                if (word_represents(w, g)) return w;
            } while (std::next_permutation(w.begin(), w.end()));
        }
        int i = 0;
        while (i < n && mult[static_cast<std::size_t>(i)] == 3) mult[static_cast<std::size_t>(i++)] = 1;
        if (i == n) return std::nullopt;
        ++mult[static_cast<std::size_t>(i)];
    }
}

}  // namespace circmat
