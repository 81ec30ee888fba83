#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "homomesy/codes.hpp"
#include "homomesy/errors.hpp"
#include "homomesy/stats.hpp"

using namespace homomesy;

namespace {

Rational st(const std::string& id, const std::string& perm) {
    auto stat = StatCatalog::instance().find(id);
    REQUIRE(stat.has_value());
    return stat->eval(Permutation::parse(perm));
}

}  // namespace

TEST_CASE("catalog lookup and id normalization") {
    CHECK(StatCatalog::instance().all().size() == 70);
    CHECK(StatCatalog::instance().find("18").has_value());
    CHECK(StatCatalog::instance().find("St000018")->id == "18");
    CHECK(StatCatalog::instance().find("St001640")->id == "1640");
    CHECK(StatCatalog::instance().find("ltr_min").has_value());
    CHECK(StatCatalog::instance().find("invs_at:3")->id == "invs_at:3");
    CHECK(!StatCatalog::instance().find("9999").has_value());
    CHECK(!StatCatalog::instance().find("").has_value());
    CHECK_THROWS_AS(StatCatalog::instance().find("invs_at:0"), ParameterOutOfRange);
    // Ids unique.
    std::set<std::string> ids;
    for (const auto& s : StatCatalog::instance().all()) ids.insert(s.id);
    CHECK(ids.size() == 70);
}

TEST_CASE("core counting statistics on fixed permutations") {
    CHECK(st("4", "634215") == 8);    // major index
    CHECK(st("4", "512436") == 5);
    CHECK(st("4", "216354") == 9);
    CHECK(st("18", "216354") == 5);   // inversions
    CHECK(st("21", "634215") == 3);   // descents
    CHECK(st("470", "216354") == 4);  // ascending runs
    CHECK(st("20", "634215") == 663); // rank
    CHECK(st("54", "634215") == 6);
    CHECK(st("740", "634215") == 5);
    CHECK(st("155", "23451") == 4);   // excedances
    CHECK(st("342", "4321") == Rational(1 * 4 + 2 * 3 + 3 * 2 + 4 * 1));
}

TEST_CASE("derived and pattern statistics on fixed permutations") {
    CHECK(st("692", "634215") == 8);
    CHECK(st("692", "512436") == 5);
    CHECK(st("446", "12543") == 3);    // disorder
    CHECK(st("446", "132465") == 5);
    CHECK(st("446", "645312") == 8);
    CHECK(st("662", "15286347") == 3); // staircase size
    CHECK(st("662", "84713652") == 4);
    CHECK(st("662", "21453") == 1);
    CHECK(st("662", "35412") == 2);
    CHECK(st("638", "216354") == 6);   // up-down runs
    CHECK(st("1332", "634215") == 0);  // walk steps at or above zero
    CHECK(st("1332", "512436") == 3);
    CHECK(st("1332", "21") == 0);
    CHECK(st("1332", "123456") == 5);
    CHECK(st("677", "12") == 0);
    CHECK(st("677", "21") == 1);
    CHECK(st("1640", "1324") == 1);
    CHECK(st("1640", "123456") == 5);
    CHECK(st("616", "132465") == 9);
    CHECK(st("616", "645312") == 63);
    CHECK(st("798", "132465") == 7);
    CHECK(st("798", "12543") == 7);
    CHECK(st("798", "645312") == 10);
    CHECK(st("304", "132465") == 10);
    CHECK(st("304", "645312") == 7);
    CHECK(st("305", "132465") == 7);
    CHECK(st("305", "645312") == 10);
    CHECK(st("1114", "21345") == 1);
    CHECK(st("1114", "54312") == 2);
}

TEST_CASE("677 values are integers; the halving never leaves the integers") {
    // The signed pair sum and the (n/2)^2 offset always have the same
    // parity, so dividing by two stays integral -- on values.  Averages are
    // another matter (two of them differ by 1 in a size-2 orbit), which is
    // why the engine carries rationals.
    auto stat = *StatCatalog::instance().find("677");
    for (int n = 1; n <= 6; ++n) {
        PermutationStream stream(n);
        while (auto p = stream.next()) CHECK(stat.eval(*p).is_integer());
    }
}

TEST_CASE("statistics below their minimum degree throw") {
    CHECK(StatCatalog::instance().find("1556")->min_degree == 3);
    CHECK(StatCatalog::instance().find("1557")->min_degree == 2);
    CHECK_THROWS_AS(st("1556", "21"), ParameterOutOfRange);
    CHECK_THROWS_AS(st("1557", "1"), ParameterOutOfRange);
    CHECK(st("1556", "321") == 0);
    CHECK(st("1557", "321") == 1);
}

TEST_CASE("parametric families") {
    // invs_at i is the i-th Lehmer code entry.
    Statistic invs3 = StatCatalog::family("invs_at", 3);
    CHECK(invs3.min_degree == 3);
    CHECK(invs3.eval(Permutation::parse("31542")) == 2);
    CHECK_THROWS_AS(invs3.eval(Permutation::parse("21")), ParameterOutOfRange);

    Statistic desc2 = StatCatalog::family("descent_at", 2);
    CHECK(desc2.min_degree == 3);
    CHECK(desc2.eval(Permutation::parse("1324")) == 1);
    CHECK(desc2.eval(Permutation::parse("1234")) == 0);

    Statistic entry4 = StatCatalog::family("entry", 4);
    CHECK(entry4.eval(Permutation::parse("43152")) == 5);
    CHECK_THROWS_AS(entry4.eval(Permutation::parse("321")), ParameterOutOfRange);

    CHECK_THROWS_AS(StatCatalog::family("no_such_family", 1), ParameterOutOfRange);
    CHECK_THROWS_AS(StatCatalog::family("entry", 0), ParameterOutOfRange);
}

TEST_CASE("structural identities hold exhaustively") {
    auto& catalog = StatCatalog::instance();
    auto get = [&](const char* id) { return *catalog.find(id); };
    Statistic s4 = get("4"), s18 = get("18"), s21 = get("21"), s23 = get("23"),
              s155 = get("155"), s245 = get("245"), s246 = get("246"), s304 = get("304"),
              s305 = get("305"), s325 = get("325"), s353 = get("353"), s354 = get("354"),
              s470 = get("470"), s483 = get("483"), s538 = get("538"), s539 = get("539"),
              s55 = get("55"), s341 = get("341"), s446 = get("446"), s702 = get("702"),
              s824 = get("824"), s833 = get("833"), s1377 = get("1377"), s1379 = get("1379");
    for (int n = 1; n <= 6; ++n) {
        PermutationStream stream(n);
        while (auto perm = stream.next()) {
            const Permutation& p = *perm;
            Rational maj = s4.eval(p), inv = s18.eval(p), des = s21.eval(p);
            CHECK(s325.eval(p) == des + 1);
            CHECK(s470.eval(p) == des + 1);
            CHECK(s245.eval(p) == Rational(n - 1) - des);
            CHECK(s833.eval(p) == Rational(n) * des - maj);
            CHECK(s1377.eval(p) == maj - inv);
            CHECK(s1379.eval(p) == maj + inv);
            CHECK(s483.eval(p) == s23.eval(p) + s353.eval(p));
            CHECK(s824.eval(p) == des + s354.eval(p));
            CHECK(s354.eval(p) == s21.eval(p.inverse()));
            CHECK(s305.eval(p) == s4.eval(p.inverse()));
            CHECK(s304.eval(p) == s4.eval(p.inverse().reverse()));
            CHECK(s702.eval(p) == Rational(n) - s155.eval(p));
            CHECK(inv + s246.eval(p) == Rational(static_cast<std::int64_t>(n) * (n - 1) / 2));
            CHECK(s538.eval(p) + s539.eval(p) == inv);
            CHECK(s55.eval(p) + s341.eval(p) ==
                  Rational(static_cast<std::int64_t>(n + 1) * n * (n - 1) / 6));
            CHECK(StatCatalog::family("entry", n).eval(p) == get("740").eval(p));

            // The Lehmer code splits the inversion number by position, and
            // descent indicators split the descent count.
            Rational lehmer_sum = 0, descent_sum = 0;
            for (int i = 1; i <= n; ++i) lehmer_sum += StatCatalog::family("invs_at", i).eval(p);
            for (int i = 1; i < n; ++i) descent_sum += StatCatalog::family("descent_at", i).eval(p);
            CHECK(lehmer_sum == inv);
            CHECK(descent_sum == des);

            // Disorder counts survivors per sweep, which is the same as
            // summing n - i over the recoil positions i.
            Rational recoil_weight = 0;
            for (int i = 1; i < n; ++i)
                if (p.position_of(i + 1) < p.position_of(i)) recoil_weight += Rational(n - i);
            CHECK(s446.eval(p) == recoil_weight);
        }
    }
}

TEST_CASE("helper exports agree with the catalog") {
    Permutation p = Permutation::parse("216354");
    CHECK(inversions(p) == 5);
    CHECK(descents(p) == 3);
    CHECK(major_index(p) == 9);
    CHECK(excedances(p) == 2);
}
