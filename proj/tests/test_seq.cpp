#include <doctest.h>

#include "circmat/seq.hpp"
#include "oracles.hpp"

using namespace circmat;

TEST_CASE("shift rotates left by one") {
    CHECK(to_string(shift(parse_digits("013102"))) == "131020");
    CHECK(to_string(shift(parse_digits("000"))) == "000");
    CHECK(to_string(shift(parse_bits("0101"))) == "1010");
    CHECK_THROWS_AS(shift(Digits{}), DomainError);
}

TEST_CASE("shift applied |a| times is the identity") {
    for (int k = 1; k <= 6; ++k) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (2 * k)); x += 3) {
            Digits a(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((x >> (2 * i)) & 3u);
            Digits cur = a;
            for (int i = 0; i < k; ++i) cur = shift(cur);
            CHECK(cur == a);
        }
    }
}

TEST_CASE("complement flips bits and is an involution") {
    CHECK(to_string(complement(parse_bits("0100"))) == "1011");
    CHECK(complement(Bits{}).empty());
    CHECK(to_string(complement(parse_bits("111"))) == "000");
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Bits a;
        for (int i = 0; i < t % 11; ++i) a.push_back(static_cast<std::uint8_t>(rng() & 1u));
        CHECK(complement(complement(a)) == a);
    }
}

TEST_CASE("canonical_bracelet is the orbit minimum") {
    CHECK(to_string(canonical_bracelet(parse_bits("1010"))) == "0101");
    CHECK(to_string(canonical_bracelet(parse_bits("1000"))) == "0001");
    CHECK(to_string(canonical_bracelet(parse_bits("110100"))) == "001011");

    // Explicit orbit enumeration cross-checks the two nontrivial cases above.
    for (const char* s : {"1000", "110100"}) {
        Bits a = parse_bits(s);
        Bits best = a;
        Bits cur = a;
        for (std::size_t i = 0; i < a.size(); ++i) {
            best = std::min(best, cur);
            best = std::min(best, reversed(cur));
            cur = shift(cur);
        }
        CHECK(canonical_bracelet(a) == best);
    }
}

TEST_CASE("canonical_bracelet is shift- and reversal-invariant up to length 10") {
    for (int k = 1; k <= 10; ++k) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
            Bits a(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((x >> i) & 1u);
            const Bits canon = canonical_bracelet(a);
            CHECK(canonical_bracelet(shift(a)) == canon);
            CHECK(canonical_bracelet(reversed(a)) == canon);
            CHECK(canonical_bracelet(canon) == canon);
        }
    }
}

TEST_CASE("enumerate_bracelets: A_3 is special, A_4 explicit, counts match the counting formula") {
    const auto a3 = enumerate_bracelets(3);
    REQUIRE(a3.size() == 2);
    CHECK(to_string(a3[0]) == "000");
    CHECK(to_string(a3[1]) == "111");

    const auto a4 = enumerate_bracelets(4);
    REQUIRE(a4.size() == 6);
    const std::vector<std::string> expected{"0000", "0001", "0011", "0101", "0111", "1111"};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(to_string(a4[i]) == expected[i]);

    CHECK(enumerate_bracelets(6).size() == 13);
    for (int k = 4; k <= 12; ++k)
        CHECK(static_cast<long long>(enumerate_bracelets(k).size()) == oracles::bracelet_count(k));
    CHECK_THROWS_AS(enumerate_bracelets(2), DomainError);
}

TEST_CASE("occurs_circularly") {
    CHECK(occurs_circularly(parse_digits("0101"), parse_digits("101"), 2));
    CHECK(occurs_circularly(parse_digits("0101"), parse_digits("1010"), 2));
    CHECK(occurs_circularly(parse_digits("1100"), parse_digits("001"), 3));
    CHECK_FALSE(occurs_circularly(parse_digits("1100"), parse_digits("00110"), 1));  // longer than a
    CHECK_THROWS_AS(occurs_circularly(parse_digits("1100"), parse_digits("0"), 5), DomainError);
}

TEST_CASE("apply_index_map") {
    CHECK(to_string(apply_index_map(parse_digits("0100"), IndexMap{3, 1})) == "00");
    CHECK(to_string(apply_index_map(parse_digits("013102"), identity_map(6))) == "013102");
    CHECK(to_string(apply_index_map(parse_digits("0111"), IndexMap{1, 2, 3, 4})) == "0111");
    CHECK_THROWS_AS(apply_index_map(parse_digits("01"), IndexMap{3}), DomainError);
    CHECK_THROWS_AS(apply_index_map(parse_digits("01"), IndexMap{1, 1}), DomainError);
}

TEST_CASE("apply_index_map commutes with complement") {
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
        const int k = 1 + static_cast<int>(rng() % 9);
        Bits a(static_cast<std::size_t>(k));
        for (auto& b : a) b = static_cast<std::uint8_t>(rng() & 1u);
        std::vector<int> pool(static_cast<std::size_t>(k));
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        IndexMap rho(pool.begin(), pool.begin() + 1 + static_cast<int>(rng() % k));
        CHECK(complement(apply_index_map(a, rho)) == apply_index_map(complement(a), rho));
    }
}
