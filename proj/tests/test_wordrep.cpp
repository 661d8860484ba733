#include <doctest.h>

#include "circmat/wordrep.hpp"
#include "oracles.hpp"

using namespace circmat;

namespace {

Word w(std::initializer_list<int> letters) { return Word(letters); }

}  // namespace

TEST_CASE("alternates") {
    CHECK(alternates(w({1, 2, 1, 2}), 1, 2));
    CHECK_FALSE(alternates(w({1, 1, 2, 2}), 1, 2));
    CHECK(alternates(w({1, 2, 3, 1, 2, 3}), 1, 3));
    CHECK_THROWS_AS(alternates(w({1, 2}), 1, 3), DomainError);
    CHECK_THROWS_AS(alternates(w({1, 2}), 2, 2), DomainError);
}

TEST_CASE("graph_from_word") {
    const Graph k3 = graph_from_word(w({1, 2, 3, 1, 2, 3}), 3);
    CHECK(k3.edge_count() == 3);

    const Graph none = graph_from_word(w({1, 1, 2, 2, 3, 3}), 3);
    CHECK(none.edge_count() == 0);

    const Graph oneEdge = graph_from_word(w({1, 2, 1, 2, 3}), 3);
    CHECK(oneEdge.edge_count() == 1);
    CHECK(oneEdge.adjacent(1, 2));

    CHECK_THROWS_AS(graph_from_word(w({1, 1}), 2), DomainError);
    CHECK_THROWS_AS(graph_from_word(w({1, 4}), 3), DomainError);
}

TEST_CASE("word_represents") {
    Graph edge(2);
    edge.add_edge(1, 2);
    CHECK(word_represents(w({1, 2, 1, 2}), edge));
    CHECK_FALSE(word_represents(w({1, 1, 2, 2}), edge));
    Graph k3(3);
    k3.add_edge(1, 2);
    k3.add_edge(1, 3);
    k3.add_edge(2, 3);
    CHECK(word_represents(w({1, 2, 3, 1, 2, 3}), k3));
}

TEST_CASE("graph_from_word is invariant under word reversal") {
    std::mt19937 rng(61);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        Word word;
        for (int v = 1; v <= n; ++v) word.push_back(v);
        for (int i = 0; i < 6; ++i) word.push_back(1 + static_cast<int>(rng() % n));
        const Graph g = graph_from_word(word, n);
        Word rev(word.rbegin(), word.rend());
        CHECK(graph_from_word(rev, n) == g);
    }
}

TEST_CASE("permutation words represent complete graphs") {
    for (int n = 1; n <= 6; ++n) {
        Word word;
        for (int v = n; v >= 1; --v) word.push_back(v);
        const Graph g = graph_from_word(word, n);
        CHECK(g.edge_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("every graph on at most 4 vertices has a representing word") {
    for (int n = 1; n <= 4; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t e = 0; e < (std::uint64_t{1} << pairs); ++e) {
            Graph g(n);
            int idx = 0;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v, ++idx)
                    if ((e >> idx) & 1u) g.add_edge(u, v);
            const auto word = find_representing_word(g);
            REQUIRE(word);
            CHECK(word_represents(*word, g));
            // Split members must agree with the orientation oracle.
            if (split_partition(g)) CHECK(brute_force_semi_transitive(g));
        }
    }
}
