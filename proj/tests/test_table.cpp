#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <string>

#include "homomesy/errors.hpp"
#include "homomesy/formula.hpp"
#include "homomesy/table.hpp"

using namespace homomesy;

namespace {

Rational eval_n(const std::string& text, int n) {
    return eval_formula(text, {{"n", Rational(n)}});
}

}  // namespace

TEST_CASE("formula arithmetic, precedence, and functions") {
    CHECK(eval_n("n*(n-1)/4", 6) == Rational(15, 2));
    CHECK(eval_n("(n!+1)/2", 4) == Rational(25, 2));
    CHECK(eval_n("H(n)", 4) == Rational(25, 12));
    CHECK(eval_n("binom(n,3)/3", 5) == Rational(10, 3));
    CHECK(eval_n("floor(n^2/4)/2", 5) == Rational(3));
    CHECK(eval_n("ceil(n/2)", 5) == Rational(3));
    CHECK(eval_n("1-1/n", 6) == Rational(5, 6));
    CHECK(eval_n("2+3*4", 0) == Rational(14));
    CHECK(eval_n("(2+3)*4", 0) == Rational(20));
    CHECK(eval_n("2^3^2", 0) == Rational(512));  // right-associative
    CHECK(eval_n("-n^2", 3) == Rational(-9));
    CHECK(eval_n("3!", 0) == Rational(6));
    CHECK(eval_n("(n-2)!", 5) == Rational(6));
    CHECK(eval_n("floor(-1/2)", 0) == Rational(-1));
    CHECK(eval_n("ceil(-1/2)", 0) == Rational(0));
    CHECK(eval_n("binom(n,0)", 7) == Rational(1));
    CHECK(eval_n("binom(3,5)", 0) == Rational(0));
    CHECK(eval_formula("(n-i)/2", {{"n", Rational(6)}, {"i", Rational(2)}}) == Rational(2));
}

TEST_CASE("formula rejects malformed input") {
    CHECK_THROWS_AS(eval_n("", 3), MalformedFormula);
    CHECK_THROWS_AS(eval_n("n+", 3), MalformedFormula);
    CHECK_THROWS_AS(eval_n("2^(0-1)", 3), MalformedFormula);  // negative exponent
    CHECK_THROWS_AS(eval_n("q+1", 3), MalformedFormula);      // unbound variable
    CHECK_THROWS_AS(eval_n("spam(n)", 3), MalformedFormula);
    CHECK_THROWS_AS(eval_n("binom(n)", 3), MalformedFormula);  // arity
    CHECK_THROWS_AS(eval_n("floor(1/2", 3), MalformedFormula);
    CHECK_THROWS_AS(eval_n("(1/2)!", 3), MalformedFormula);   // factorial of a fraction
    CHECK_THROWS_AS(eval_n("H(0-1)", 3), MalformedFormula);
    CHECK_THROWS_AS(eval_n("1 2", 3), MalformedFormula);
}

TEST_CASE("embedded table shape") {
    const ExpectedTable& table = ExpectedTable::embedded();
    CHECK(table.rows().size() == 122);
    std::map<std::string, int> groups;
    int family_rows = 0;
    for (const auto& row : table.rows()) {
        ++groups[row.group];
        if (!row.family.empty()) ++family_rows;
    }
    CHECK(groups["lehmer_rotation"] == 47);
    CHECK(groups["reverse_and_complement"] == 44);
    CHECK(groups["complement_only"] == 15);
    CHECK(groups["reverse_only"] == 5);
    CHECK(groups["code_bijections"] == 4);
    CHECK(groups["kreweras"] == 7);
    CHECK(family_rows == 5);
}

TEST_CASE("find matches plain rows by map and stat") {
    const ExpectedTable& table = ExpectedTable::embedded();
    const ExpectedRow* row = table.find(MapId::LehmerRotation, "18");
    REQUIRE(row != nullptr);
    CHECK(row->average == "n*(n-1)/4");
    CHECK(table.find(MapId::Reverse, "304") != nullptr);
    CHECK(table.find(MapId::Complement, "304") == nullptr);
    CHECK(table.find(MapId::Kreweras, "155") != nullptr);
    CHECK(table.find(MapId::KrewerasInverse, "155") != nullptr);
    CHECK(table.find(MapId::Inverse, "18") == nullptr);
    // min_degree-restricted row carries its bound.
    CHECK(table.find(MapId::Reverse, "1520")->min_degree == 3);
}

TEST_CASE("every embedded formula evaluates for n up to 10") {
    for (const auto& row : ExpectedTable::embedded().rows())
        for (int n = std::max(2, row.min_degree); n <= 10; ++n) {
            std::map<std::string, Rational> vars{{"n", Rational(n)}};
            if (!row.family.empty()) vars["i"] = Rational(1);
            CHECK_NOTHROW(eval_formula(row.average, vars));
        }
}

TEST_CASE("index specifications expand per degree") {
    CHECK(expand_index_spec("1..n", 5) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(expand_index_spec("1..n-1", 6) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(expand_index_spec("n/2", 6) == std::vector<int>{3});
    CHECK(expand_index_spec("n/2", 5).empty());  // non-integer: not applicable
    CHECK(expand_index_spec("3..2", 4).empty());
    CHECK_THROWS_AS(expand_index_spec("q..n", 4), MalformedFormula);
}

TEST_CASE("parse validates rows and reports the offender") {
    CHECK_THROWS_WITH_AS(ExpectedTable::parse(R"({"rows":[{"group":"g","map":"nope","stat":"18","average":"0"}]})"),
                         doctest::Contains("row 1"), std::invalid_argument);
    CHECK_THROWS_AS(ExpectedTable::parse(R"({"rows":[{"group":"g","map":"64","stat":"nope","average":"0"}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExpectedTable::parse(R"({"rows":[{"group":"g","map":"64","stat":"18","family":"entry","average":"0"}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExpectedTable::parse(R"x({"rows":[{"group":"g","map":"64","stat":"18","average":"spam(n)"}]})x"),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExpectedTable::parse(R"({"rows":[{"group":"g","maps":[],"stat":"18","average":"0"}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExpectedTable::parse("not json"), std::invalid_argument);
    CHECK_THROWS_AS(ExpectedTable::parse(R"({"rows": 3})"), std::invalid_argument);

    ExpectedTable ok = ExpectedTable::parse(
        R"({"rows":[{"group":"g","maps":["88","89"],"family":"entry","index":"n/2",)"
        R"("average":"(n+1)/2","even_degree_only":true,"min_degree":4}]})");
    REQUIRE(ok.rows().size() == 1);
    CHECK(ok.rows()[0].maps.size() == 2);
    CHECK(ok.rows()[0].even_degree_only);
    CHECK(ok.rows()[0].min_degree == 4);
}

TEST_CASE("load_file reads what was written") {
    const char* path = "test_table_roundtrip.json";
    {
        std::ofstream out(path);
        out << R"({"rows":[{"group":"g","map":"149","stat":"18","average":"n*(n-1)/4"}]})";
    }
    ExpectedTable table = ExpectedTable::load_file(path);
    CHECK(table.rows().size() == 1);
    CHECK(table.find(MapId::LehmerRotation, "18") != nullptr);
    std::remove(path);
    CHECK_THROWS_AS(ExpectedTable::load_file("no_such_file.json"), std::invalid_argument);
}
