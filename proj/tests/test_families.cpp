#include <doctest.h>

#include "circmat/families.hpp"
#include "oracles.hpp"

using namespace circmat;

TEST_CASE("MI shapes") {
    CHECK(gen_mi(3) == mat({"110", "011", "101"}));
    CHECK(gen_mi(4) == mat({"1100", "0110", "0011", "1001"}));
    for (int k = 3; k <= 12; ++k) {
        const BinaryMatrix m = gen_mi(k);
        CHECK(m.rows() == k);
        CHECK(m.cols() == k);
        for (int r = 0; r < k; ++r) CHECK(m.row_sum(r) == 2);
    }
    CHECK_THROWS_AS(gen_mi(2), DomainError);
}

TEST_CASE("MII shapes") {
    CHECK(gen_mii(4) == mat({"1100", "0110", "1101", "0111"}));
    CHECK(gen_mii(5) == mat({"11000", "01100", "00110", "11101", "01111"}));
    for (int k = 4; k <= 12; ++k) {
        const BinaryMatrix m = gen_mii(k);
        CHECK(m.rows() == k);
        CHECK(m.cols() == k);
        // Rows k-1 and k intersect in a set of size k-2.
        CHECK(popcount64(m.row(k - 2) & m.row(k - 1)) == k - 2);
    }
    CHECK_THROWS_AS(gen_mii(3), DomainError);
}

TEST_CASE("MIII shapes") {
    CHECK(gen_miii(3) == mat({"1100", "0110", "0101"}));
    CHECK(gen_miii(4) == mat({"11000", "01100", "00110", "01101"}));
    for (int k = 3; k <= 12; ++k) {
        CHECK(gen_miii(k).rows() == k);
        CHECK(gen_miii(k).cols() == k + 1);
    }
    CHECK(same_configuration(gen_miii(3), mask_complement(parse_bits("111"), gen_mistar(3))));
}

TEST_CASE("fixed matrices MIV, MV, MVI") {
    const BinaryMatrix miv = gen_miv();
    CHECK(miv == mat({"110000", "001100", "000011", "010101"}));
    CHECK(miv.row_sum(0) == 2);
    CHECK(miv.row_sum(3) == 3);
    CHECK(gen_mv().row_string(1) == "11110");
    const BinaryMatrix mvi = gen_mvi();
    int colSums[4] = {0, 0, 0, 0};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) colSums[c] += mvi.get(r, c);
    CHECK(colSums[0] == 2);
    CHECK(colSums[1] == 2);
    CHECK(colSums[2] == 2);
    CHECK(colSums[3] == 3);
}

TEST_CASE("forb_circular bounded enumeration") {
    const auto small = forb_circular(3, 4);
    REQUIRE(small.size() == 2);
    CHECK(small[0].matrix == mask_complement(parse_bits("111"), gen_mistar(3)));  // lex-smaller text
    CHECK(small[1].matrix == gen_mistar(3));

    const auto mid = forb_circular(4, 6);
    CHECK(mid.size() == 12);  // 2 at k=3, 6 masked MIstar(4), 4 fixed members
    int fixedCount = 0;
    for (const auto& mem : mid)
        if (mem.matrix == gen_miv() || mem.matrix == complement_matrix(gen_miv()) || mem.matrix == gen_mvstar() ||
            mem.matrix == complement_matrix(gen_mvstar()))
            ++fixedCount;
    CHECK(fixedCount == 4);
    CHECK_THROWS_AS(forb_circular(2, 4), DomainError);
}

TEST_CASE("forb_icircular bounded enumeration") {
    const auto small = forb_icircular(3, 4);
    REQUIRE(small.size() == 3);
    CHECK(small[0].matrix == gen_miii(3));  // 3x4 members sorted by text
    CHECK(small[1].matrix == gen_mistar(3));
    CHECK(small[2].matrix == gen_mvi());

    const auto mid = forb_icircular(4, 5);
    auto contains = [&](const BinaryMatrix& m) {
        for (const auto& mem : mid)
            if (mem.matrix == m) return true;
        return false;
    };
    CHECK(contains(gen_mii(4)));
    CHECK(contains(mask_complement(parse_bits("0101"), gen_mistar(4))));
    CHECK(contains(mask_complement(parse_bits("0100"), gen_mii(4))));
    CHECK(contains(gen_mv()));
    CHECK(contains(gen_mistar(4)));
    CHECK(contains(gen_miii(4)));
    CHECK_FALSE(contains(gen_miv()));  // six columns

    // No duplicate configurations among members within (8, 9).
    const auto big = forb_icircular(8, 9);
    CHECK(big.size() == 22);
    for (std::size_t i = 0; i < big.size(); ++i)
        for (std::size_t j = i + 1; j < big.size(); ++j)
            CHECK_FALSE(same_configuration(big[i].matrix, big[j].matrix));
}

TEST_CASE("Q blocks") {
    CHECK(gen_q(0, 1, 6) == mat({"1100000"}));
    CHECK(gen_q(3, 3, 6) == mat({"1101111", "1110111"}));
    CHECK(gen_q(2, 6, 6) == mat({"1111110", "1000011"}));
    CHECK(gen_q(0, 6, 6) == mat({"1000010"}));  // i+1 wraps to column 1
    CHECK_THROWS_AS(gen_q(4, 1, 6), DomainError);
    CHECK_THROWS_AS(gen_q(0, 7, 6), DomainError);
}

TEST_CASE("R assembly") {
    CHECK(gen_r(parse_digits("003")) == gen_mii(4));
    const BinaryMatrix r = gen_r(parse_digits("013102"));
    REQUIRE(r.rows() == 8);
    REQUIRE(r.cols() == 7);
    CHECK(r.row_string(5) == "0000110");  // the b_5 = 0 block
    CHECK_THROWS_AS(gen_r(parse_digits("01")), DomainError);

    // Binary b: R(b) coincides with b (.) MIstar(|b|), exhaustively to |b|=6.
    for (int k = 3; k <= 6; ++k) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
            Bits b(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((x >> i) & 1u);
            CHECK(gen_r(Digits(b.begin(), b.end())) == mask_complement(b, gen_mistar(k)));
        }
    }
}

TEST_CASE("U blocks in both conventions") {
    CHECK(gen_u(0, 4, UVariant::Literal) == mat({"100110"}));
    CHECK(gen_u(3, 2, UVariant::Literal) == mat({"111101", "111110"}));
    CHECK(gen_u(2, 1, UVariant::Figure) == mat({"001111", "110011"}));
    CHECK(gen_u(2, 1, UVariant::Literal) == mat({"110011", "111100"}));
    CHECK(gen_u(0, 4, UVariant::Figure) == gen_u(0, 4, UVariant::Literal));
    CHECK_THROWS_AS(gen_u(3, 1, UVariant::Literal), DomainError);
    CHECK_THROWS_AS(gen_u(2, 4, UVariant::Literal), DomainError);
}

TEST_CASE("W assembly") {
    const BinaryMatrix w2310 = gen_w(parse_digits("2310"), UVariant::Figure);
    CHECK(w2310 == mat({"001111", "110011", "111101", "111110", "110011", "100110"}));
    CHECK(gen_w(parse_digits("0000"), UVariant::Literal) == gen_mvstar());
    CHECK(gen_w(parse_digits("0000"), UVariant::Figure) == gen_mvstar());
    for (std::uint64_t x = 0; x < 8; ++x) {
        Bits b{static_cast<std::uint8_t>(x & 1), static_cast<std::uint8_t>((x >> 1) & 1), static_cast<std::uint8_t>((x >> 2) & 1), 0};
        const BinaryMatrix expected = mask_complement(b, gen_mvstar());
        CHECK(gen_w(Digits(b.begin(), b.end()), UVariant::Literal) == expected);
        CHECK(gen_w(Digits(b.begin(), b.end()), UVariant::Figure) == expected);
    }
    CHECK_THROWS_AS(gen_w(parse_digits("2311"), UVariant::Literal), DomainError);
    CHECK_THROWS_AS(gen_w(parse_digits("3000"), UVariant::Literal), DomainError);
}

TEST_CASE("H template") {
    for (int i = 1; i <= 3; ++i) {
        for (std::uint64_t x = 0; x < 16; ++x) {
            Bits a(4);
            for (int j = 0; j < 4; ++j) a[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((x >> j) & 1u);
            const BinaryMatrix h = gen_h(i, a);
            for (int r = 0; r < 4; ++r) CHECK(h.row(r) == gen_mvstar().row(r));
            CHECK((h.row(4) | h.row(5)) == h.full_mask());
        }
    }
    const BinaryMatrix h1 = gen_h(1, parse_bits("0111"));
    CHECK(h1.row_string(4) == "110111");
    CHECK(h1.row_string(5) == "111000");
    CHECK(submatrix(h1, IndexMap{6, 3, 4}, IndexMap{1, 3, 4, 6}) == gen_mistar(3));
    CHECK(gen_h(2, parse_bits("0000")).row_sum(4) == 2);
    CHECK_THROWS_AS(gen_h(4, parse_bits("0000")), DomainError);
    CHECK_THROWS_AS(gen_h(1, parse_bits("000")), DomainError);
}

TEST_CASE("G template") {
    const BinaryMatrix g0 = gen_g(parse_bits("000"));
    CHECK(g0.row_string(4) == "100110");
    CHECK(g0.row_string(5) == "111111");
    CHECK(submatrix(gen_g(parse_bits("001")), IndexMap{1, 4, 3, 5}, IndexMap{2, 1, 4, 3, 6}) ==
          mask_complement(parse_bits("0001"), gen_mistar(4)));
    for (std::uint64_t x = 0; x < 8; ++x) {
        Bits g(3);
        for (int j = 0; j < 3; ++j) g[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((x >> j) & 1u);
        const BinaryMatrix gg = gen_g(g);
        for (int r = 0; r < 4; ++r) CHECK(gg.row(r) == gen_mvstar().row(r));
        // Rows 5 and 6 agree exactly at columns 1, 4, 5.
        const std::uint64_t agree = ~(gg.row(4) ^ gg.row(5)) & gg.full_mask();
        CHECK(agree == 0b011001);
    }
    CHECK_THROWS_AS(gen_g(parse_bits("0000")), DomainError);
}
