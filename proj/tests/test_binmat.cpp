#include <doctest.h>

#include "circmat/families.hpp"
#include "oracles.hpp"

using namespace circmat;

TEST_CASE("complement_matrix") {
    CHECK(complement_matrix(mat({"11", "01"})) == mat({"00", "10"}));
    CHECK(complement_matrix(mat({"000", "000"})) == mat({"111", "111"}));
    // ~MIV belongs to the circular-ones forbidden family.
    const BinaryMatrix mivBar = complement_matrix(gen_miv());
    bool found = false;
    for (const auto& mem : forb_circular(4, 6)) found = found || mem.matrix == mivBar;
    CHECK(found);
}

TEST_CASE("mask_complement") {
    const BinaryMatrix m = mat({"1101", "0111", "1011"});
    CHECK(mask_complement(parse_bits("000"), m) == m);
    CHECK(mask_complement(parse_bits("111"), m) == complement_matrix(m));
    CHECK(same_configuration(mask_complement(parse_bits("111"), gen_mistar(3)), gen_miii(3)));
    CHECK_THROWS_AS(mask_complement(parse_bits("01"), m), DomainError);

    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t) {
        const int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 6);
        const BinaryMatrix x = oracles::random_matrix(r, c, rng, 0.5);
        Bits a(static_cast<std::size_t>(r));
        for (auto& b : a) b = static_cast<std::uint8_t>(rng() & 1u);
        CHECK(mask_complement(a, mask_complement(a, x)) == x);
    }
}

TEST_CASE("submatrix: identities quoted for masked MII(4)") {
    const BinaryMatrix mii4 = gen_mii(4);
    CHECK(submatrix(mii4, identity_map(4), identity_map(4)) == mii4);
    CHECK(submatrix(mask_complement(parse_bits("1100"), mii4), IndexMap{1, 2, 4, 3}, IndexMap{3, 4, 1, 2}) == mii4);
    CHECK(submatrix(mask_complement(parse_bits("1000"), mii4), IndexMap{2, 1, 4, 3}, IndexMap{3, 2, 1, 4}) ==
          mask_complement(parse_bits("0100"), mii4));
    CHECK_THROWS_AS(submatrix(mii4, IndexMap{5}, identity_map(4)), DomainError);
}

TEST_CASE("submatrix composition law on random triples") {
    std::mt19937 rng(5);
    auto randomMap = [&](int size, int limit) {
        std::vector<int> pool(static_cast<std::size_t>(limit));
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        return IndexMap(pool.begin(), pool.begin() + size);
    };
    for (int t = 0; t < 300; ++t) {
        const int r = 2 + static_cast<int>(rng() % 5), c = 2 + static_cast<int>(rng() % 5);
        const BinaryMatrix m = oracles::random_matrix(r, c, rng, 0.5);
        const int r1 = 1 + static_cast<int>(rng() % r), c1 = 1 + static_cast<int>(rng() % c);
        const IndexMap rho = randomMap(r1, r), sigma = randomMap(c1, c);
        const int r2 = 1 + static_cast<int>(rng() % r1), c2 = 1 + static_cast<int>(rng() % c1);
        const IndexMap rho2 = randomMap(r2, r1), sigma2 = randomMap(c2, c1);
        IndexMap rhoComp, sigmaComp;
        for (int v : rho2) rhoComp.push_back(rho[static_cast<std::size_t>(v - 1)]);
        for (int v : sigma2) sigmaComp.push_back(sigma[static_cast<std::size_t>(v - 1)]);
        CHECK(submatrix(m, rhoComp, sigmaComp) == submatrix(submatrix(m, rho, sigma), rho2, sigma2));
    }
}

TEST_CASE("mask_complement distributes over submatrix") {
    std::mt19937 rng(9);
    for (int t = 0; t < 10000; ++t) {
        const int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 7);
        const BinaryMatrix m = oracles::random_matrix(r, c, rng, 0.5);
        Bits a(static_cast<std::size_t>(r));
        for (auto& b : a) b = static_cast<std::uint8_t>(rng() & 1u);
        std::vector<int> rpool(static_cast<std::size_t>(r)), cpool(static_cast<std::size_t>(c));
        std::iota(rpool.begin(), rpool.end(), 1);
        std::iota(cpool.begin(), cpool.end(), 1);
        std::shuffle(rpool.begin(), rpool.end(), rng);
        std::shuffle(cpool.begin(), cpool.end(), rng);
        const IndexMap rho(rpool.begin(), rpool.begin() + 1 + static_cast<int>(rng() % r));
        const IndexMap sigma(cpool.begin(), cpool.begin() + 1 + static_cast<int>(rng() % c));
        const Bits aRho = apply_index_map(a, rho);
        CHECK(submatrix(mask_complement(a, m), rho, sigma) == mask_complement(aRho, submatrix(m, rho, sigma)));
    }
}

TEST_CASE("star appends one empty column") {
    CHECK(gen_mistar(3) == mat({"1100", "0110", "1010"}));
    CHECK(star(mat({"1"})) == mat({"10"}));
    CHECK(gen_mvstar().rows() == 4);
    CHECK(gen_mvstar().cols() == 6);
}

TEST_CASE("same_configuration") {
    const BinaryMatrix m = mat({"1100", "0110", "0101"});
    CHECK(same_configuration(m, m));
    CHECK(same_configuration(m, mat({"0011", "1001", "0101"})));
    CHECK_FALSE(same_configuration(gen_miv(), complement_matrix(gen_miv())));
}

TEST_CASE("contains_configuration: quoted witnesses") {
    const BinaryMatrix m = gen_mvi();
    const auto self = contains_configuration(m, m);
    REQUIRE(self);
    CHECK(self->rowMap == identity_map(3));
    CHECK(self->colMap == identity_map(4));

    const auto mvInMvstar = contains_configuration(gen_mvstar(), gen_mv());
    REQUIRE(mvInMvstar);
    CHECK(mvInMvstar->colMap == IndexMap{1, 2, 3, 4, 5});
    CHECK(submatrix(gen_mvstar(), identity_map(4), IndexMap{1, 2, 3, 4, 5}) == gen_mv());

    const BinaryMatrix h = gen_h(1, parse_bits("0111"));
    CHECK(submatrix(h, IndexMap{6, 3, 4}, IndexMap{1, 3, 4, 6}) == gen_mistar(3));
    const auto w = contains_configuration(h, gen_mistar(3));
    REQUIRE(w);
    CHECK(submatrix(h, w->rowMap, w->colMap) == gen_mistar(3));
}

TEST_CASE("contains_configuration agrees with the naive oracle") {
    std::mt19937 rng(17);
    int positives = 0;
    for (int t = 0; t < 1200; ++t) {
        const int mr = 1 + static_cast<int>(rng() % 5), mc = 1 + static_cast<int>(rng() % 5);
        const int fr = 1 + static_cast<int>(rng() % 3), fc = 1 + static_cast<int>(rng() % 4);
        const double d = 0.25 + 0.25 * static_cast<double>(t % 3);
        const BinaryMatrix m = oracles::random_matrix(mr, mc, rng, d);
        BinaryMatrix f(1, 1);
        if (t % 4 == 0 && fr <= mr && fc <= mc) {
            // Plant a real submatrix so positives occur often.
            std::vector<int> rp(static_cast<std::size_t>(mr)), cp(static_cast<std::size_t>(mc));
            std::iota(rp.begin(), rp.end(), 1);
            std::iota(cp.begin(), cp.end(), 1);
            std::shuffle(rp.begin(), rp.end(), rng);
            std::shuffle(cp.begin(), cp.end(), rng);
            f = submatrix(m, IndexMap(rp.begin(), rp.begin() + fr), IndexMap(cp.begin(), cp.begin() + fc));
        } else {
            f = oracles::random_matrix(fr, fc, rng, d);
        }
        const auto got = contains_configuration(m, f);
        CHECK(got.has_value() == oracles::naive_contains_configuration(m, f));
        if (got) {
            ++positives;
            CHECK(submatrix(m, got->rowMap, got->colMap) == f);
        }
    }
    CHECK(positives > 200);
}

TEST_CASE("same_configuration implies mutual containment") {
    std::mt19937 rng(23);
    for (int t = 0; t < 200; ++t) {
        const int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        const BinaryMatrix a = oracles::random_matrix(r, c, rng, 0.5);
        std::vector<int> rp(static_cast<std::size_t>(r)), cp(static_cast<std::size_t>(c));
        std::iota(rp.begin(), rp.end(), 1);
        std::iota(cp.begin(), cp.end(), 1);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        const BinaryMatrix b = submatrix(a, rp, cp);
        REQUIRE(same_configuration(a, b));
        CHECK(contains_configuration(a, b));
        CHECK(contains_configuration(b, a));
    }
}

TEST_CASE("delete_row and delete_col") {
    const BinaryMatrix m = mat({"110", "011", "101"});
    CHECK(delete_row(m, 2) == mat({"110", "101"}));
    CHECK(delete_col(m, 1) == mat({"10", "11", "01"}));
    CHECK(delete_col(m, 3) == mat({"11", "01", "10"}));
    CHECK_THROWS_AS(delete_row(m, 4), DomainError);
}
