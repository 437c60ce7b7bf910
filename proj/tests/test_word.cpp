#include <doctest.h>

#include <cstdlib>

#include "coinword/word.hpp"
#include "oracles.hpp"

using namespace coinword;

TEST_CASE("parse_word accepts H/T in either case") {
    CHECK(Word::parse("HT").str() == "HT");
    CHECK(Word::parse("hth").str() == "HTH");
    CHECK(Word::parse("HT")[0] == Letter::H);
    CHECK(Word::parse("HT")[1] == Letter::T);
}

TEST_CASE("parse_word rejects empty input and foreign letters") {
    CHECK_THROWS_AS(Word::parse(""), ParseError);
    try {
        Word::parse("HXT");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("'X'") != std::string::npos);
        CHECK(std::string(e.what()).find("position 2") != std::string::npos);
    }
}

TEST_CASE("complement swaps letters") {
    CHECK(complement(Word::parse("HH")).str() == "TT");
    CHECK(complement(Word::parse("HT")).str() == "TH");
    CHECK(complement(Word::parse("HTH")).str() == "THT");
    for (const auto& s : testing::all_words(5)) {
        const Word w = Word::parse(s);
        CHECK(complement(complement(w)) == w);
    }
}

TEST_CASE("first_occurrence_ends_at") {
    auto at = [](const char* s, const char* w) {
        return first_occurrence_ends_at(OutcomeString::parse(s), Word::parse(w));
    };
    CHECK(at("THH", "HH"));
    CHECK_FALSE(at("HHH", "HH"));
    CHECK(at("HT", "HT"));
    CHECK_FALSE(at("H", "HT"));
    CHECK_FALSE(at("HTT", "HT"));
    CHECK(at("HTHTH", "HTHTH"));
    CHECK_FALSE(at("HTHTH", "HTH"));  // overlapping earlier match at toss 3

    // Exhaustive agreement with a substring search up to length 9.
    for (unsigned len = 1; len <= 4; ++len) {
        for (const auto& w : testing::all_words(len)) {
            for (unsigned n = 1; n <= 9; ++n) {
                for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
                    const OutcomeString s{b, n};
                    REQUIRE(first_occurrence_ends_at(s, Word::parse(w)) ==
                            testing::naive_first_at_end(s.str(), w));
                }
            }
        }
    }
}

TEST_CASE("brute_force_count examples") {
    CHECK(brute_force_count(Word::parse("HT"), 3) == 2);
    CHECK(brute_force_count(Word::parse("HH"), 1) == 0);
    CHECK(brute_force_count(Word::parse("HTH"), 7) == 9);
}

TEST_CASE("parallel and serial kernels agree with the naive oracle") {
    for (unsigned len = 1; len <= 4; ++len) {
        for (const auto& text : testing::all_words(len)) {
            const Word w = Word::parse(text);
            for (unsigned n = 1; n <= 12; ++n) {
                const BigInt expected(static_cast<unsigned long>(testing::naive_count(text, n)));
                REQUIRE(brute_force_count(w, n) == expected);
                REQUIRE(brute_force_count_serial(w, n) == expected);
            }
        }
    }
}

TEST_CASE("brute force structural properties") {
    for (unsigned len = 1; len <= 5; ++len) {
        BigInt total = 0;
        for (const auto& text : testing::all_words(len)) {
            const Word w = Word::parse(text);
            for (unsigned k = 1; k < len; ++k) CHECK(brute_force_count(w, k) == 0);
            CHECK(brute_force_count(w, len) == 1);
            total += brute_force_count(w, len);
            for (unsigned n = 1; n <= 14; ++n) {
                CHECK(brute_force_count(w, n) == brute_force_count(complement(w), n));
            }
        }
        // Every length-N outcome is the first occurrence of exactly one word.
        CHECK(total == BigInt(1) << len);
    }
}

TEST_CASE("enumeration cap") {
    const Word w = Word::parse("HT");
    CHECK_THROWS_AS(brute_force_count(w, 25, 24), std::out_of_range);
    CHECK_THROWS_AS(brute_force_count(w, 0), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_count(w, 5, kMaxEnumerationCap + 1), std::invalid_argument);
    CHECK(brute_force_count(w, 24, 24) == 23);

    CHECK(enumeration_cap() == kDefaultEnumerationCap);
    setenv("COINWORD_ENUM_CAP", "12", 1);
    CHECK(enumeration_cap() == 12);
    CHECK_THROWS_AS(brute_force_count(w, 13), std::out_of_range);
    setenv("COINWORD_ENUM_CAP", "bogus", 1);
    CHECK(enumeration_cap() == kDefaultEnumerationCap);
    unsetenv("COINWORD_ENUM_CAP");
}
