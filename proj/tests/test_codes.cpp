#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "homomesy/codes.hpp"
#include "homomesy/errors.hpp"
#include "homomesy/stats.hpp"

using namespace homomesy;

TEST_CASE("lehmer code of known permutations") {
    CHECK(lehmer_encode(Permutation::parse("31452")) == Code{2, 0, 1, 1, 0});
    CHECK(lehmer_encode(Permutation::parse("42513")) == Code{3, 1, 2, 0, 0});
    CHECK(lehmer_encode(Permutation::parse("31542")) == Code{2, 0, 2, 1, 0});
    CHECK(lehmer_encode(Permutation::identity(4)) == Code{0, 0, 0, 0});
    CHECK(lehmer_encode(Permutation::parse("4321")) == Code{3, 2, 1, 0});
}

TEST_CASE("major code of known permutations") {
    CHECK(major_encode(Permutation::parse("31542")) == Code{3, 3, 1, 1, 0});
    CHECK(major_encode(Permutation::parse("21")) == Code{1, 0});
    CHECK(major_encode(Permutation::identity(5)) == Code{0, 0, 0, 0, 0});
}

TEST_CASE("lehmer entries sum to the inversion number, major entries to the major index") {
    for (int n = 1; n <= 6; ++n) {
        PermutationStream stream(n);
        while (auto p = stream.next()) {
            Code lehmer = lehmer_encode(*p);
            Code major = major_encode(*p);
            CHECK(std::accumulate(lehmer.begin(), lehmer.end(), 0L) == inversions(*p));
            CHECK(std::accumulate(major.begin(), major.end(), 0L) == major_index(*p));
        }
    }
}

TEST_CASE("decode inverts encode exhaustively") {
    for (int n = 1; n <= 6; ++n) {
        PermutationStream stream(n);
        while (auto p = stream.next()) {
            CHECK(lehmer_decode(lehmer_encode(*p)) == *p);
            CHECK(major_decode(major_encode(*p)) == *p);
        }
    }
}

TEST_CASE("every in-bounds code decodes, and encoding round-trips it") {
    // Walk the full mixed-radix space of codes for small n: both decoders
    // must accept exactly these and invert back to the same digits.
    for (int n = 1; n <= 5; ++n) {
        Code code(static_cast<std::size_t>(n), 0);
        long seen = 0;
        while (true) {
            CHECK(lehmer_encode(lehmer_decode(code)) == code);
            CHECK(major_encode(major_decode(code)) == code);
            ++seen;
            int i = n - 1;
            while (i >= 0 && code[static_cast<std::size_t>(i)] == n - 1 - i) {
                code[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++code[static_cast<std::size_t>(i)];
        }
        CHECK(seen == factorial(n));
    }
}

TEST_CASE("decoders reject out-of-bounds digits") {
    CHECK_THROWS_AS(lehmer_decode(Code{3, 0, 0}), CodeOutOfRange);   // max is n-1 = 2
    CHECK_THROWS_AS(lehmer_decode(Code{0, 0, 1}), CodeOutOfRange);   // last digit must be 0
    CHECK_THROWS_AS(lehmer_decode(Code{-1, 0, 0}), CodeOutOfRange);
    CHECK_THROWS_AS(major_decode(Code{3, 0, 0}), CodeOutOfRange);
    CHECK_THROWS_AS(major_decode(Code{0, 2, 0}), CodeOutOfRange);
    CHECK_THROWS_AS(lehmer_decode(Code{}), CodeOutOfRange);
}

TEST_CASE("code text form") {
    CHECK(code_str(Code{2, 0, 1, 1, 0}) == "(2,0,1,1,0)");
    CHECK(parse_code("(2,0,1,1,0)") == Code{2, 0, 1, 1, 0});
    CHECK(parse_code("2, 0, 1, 1, 0") == Code{2, 0, 1, 1, 0});
    CHECK_THROWS_AS(parse_code("(2,,1)"), CodeOutOfRange);
    CHECK_THROWS_AS(parse_code(""), CodeOutOfRange);
}
