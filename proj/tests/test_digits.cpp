#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>
#include <vector>

using namespace patseq;

TEST_CASE("to_digits produces most-significant-first expansions") {
    CHECK(to_digits(6, 2).digits == std::vector<Digit>{1, 1, 0});
    CHECK(to_digits(0, 3).digits.empty());
    CHECK(to_digits(51, 2).digits == std::vector<Digit>{1, 1, 0, 0, 1, 1});
    CHECK(to_digits(26, 3).digits == std::vector<Digit>{2, 2, 2});
    CHECK_THROWS_AS(to_digits(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(to_digits(BigInt(-1), 2), std::invalid_argument);
}

TEST_CASE("word_value inverts to_digits") {
    CHECK(word_value(Word(2, {1, 0})) == 2);
    CHECK(word_value(Word(3, {})) == 0);
    CHECK(word_value(Word(3, {1, 2})) == 5);

    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint32_t b = 2 + static_cast<std::uint32_t>(rng() % 9);
        BigInt n = BigInt(rng() % 1000000);
        if (trial % 5 == 0) n = n * big_pow(BigInt(10), 20) + BigInt(rng() % 1000); // far past 64 bits
        CAPTURE(b, n.str());
        CHECK(word_value(to_digits(n, b)) == n);
    }
}

TEST_CASE("Word validates digits and classifies patterns") {
    CHECK_THROWS_AS(Word(2, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Word(1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("12", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("1a", 4), std::invalid_argument);

    CHECK(Word::parse("0012", 3) == Word(3, {0, 0, 1, 2}));
    CHECK_FALSE(Word(2, {0, 0}).is_pattern());
    CHECK_FALSE(Word(2, {}).is_pattern());
    CHECK(Word(2, {0, 1}).is_pattern());
    CHECK(Word(2, {0, 1}).has_leading_zero());
    CHECK_FALSE(Word(2, {1, 0}).has_leading_zero());
    CHECK(Word(3, {1, 2, 0}).tail() == Word(3, {2, 0}));
    CHECK(Word(3, {1}).tail() == Word(3, {}));
}

TEST_CASE("Expansion pads with leading zeros on demand") {
    const Expansion e = Expansion::of(6, 2);
    CHECK(e.digits == std::vector<Digit>{1, 1, 0});
    CHECK(e.padded(3) == std::vector<Digit>{0, 0, 0, 1, 1, 0});
    CHECK(Expansion::of(0, 5).padded(2) == std::vector<Digit>{0, 0});
}

TEST_CASE("count_occurrences matches the paper's worked values") {
    const Word w0011 = Word::parse("0011", 2);
    CHECK(count_occurrences(w0011, 6) == 1);
    CHECK(count_occurrences(w0011, 51) == 2);
    CHECK(count_occurrences(Word::parse("11", 2), 7) == 2); // overlaps count
    CHECK_THROWS_AS(count_occurrences(Word(2, {0, 0}), 5), std::invalid_argument);
}

TEST_CASE("count_occurrences of a proper word at its own value is positive") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint32_t b = 2 + static_cast<std::uint32_t>(rng() % 4);
        const std::size_t len = 1 + rng() % 4;
        std::vector<Digit> ds(len);
        ds[0] = 1 + static_cast<Digit>(rng() % (b - 1));
        for (std::size_t i = 1; i < len; ++i) ds[i] = static_cast<Digit>(rng() % b);
        const Word w(b, ds);
        CAPTURE(w.to_string(), b);
        CHECK(count_occurrences(w, word_value(w)) >= 1);
    }
}

TEST_CASE("count_occurrences agrees with an independent string scan") {
    std::mt19937_64 rng(4321);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint32_t b = 2 + static_cast<std::uint32_t>(rng() % 4);
        const std::size_t len = 1 + rng() % 4;
        std::vector<Digit> ds(len);
        bool nonzero = false;
        for (auto& d : ds) {
            d = static_cast<Digit>(rng() % b);
            nonzero = nonzero || d != 0;
        }
        if (!nonzero) ds[rng() % len] = 1;
        const Word w(b, ds);
        const std::uint64_t n = rng() % 1048576;
        CAPTURE(w.to_string(), b, n);
        CHECK(count_occurrences(w, BigInt(n)) == testutil::string_count(w.to_string(), n, b));
    }
}
