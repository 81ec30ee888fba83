#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "homomesy/codes.hpp"
#include "homomesy/maps.hpp"
#include "homomesy/stats.hpp"

using namespace homomesy;

namespace {

Permutation apply(MapId id, const std::string& perm) {
    return apply_map(id, Permutation::parse(perm));
}

}  // namespace

TEST_CASE("registry holds all ten maps in catalog order") {
    const auto& registry = map_registry();
    REQUIRE(registry.size() == 10);
    std::vector<int> numbers;
    for (const auto& info : registry) numbers.push_back(info.number);
    CHECK(numbers == std::vector<int>{62, 64, 67, 69, 73, 88, 89, 149, 175, 0});
    CHECK(registry.back().name == "inverse_map");
}

TEST_CASE("find_map accepts numbers, prefixed numbers, and names") {
    CHECK(find_map("149")->id == MapId::LehmerRotation);
    CHECK(find_map("Mp00149")->id == MapId::LehmerRotation);
    CHECK(find_map("lehmer_rotation")->id == MapId::LehmerRotation);
    CHECK(find_map("64")->id == MapId::Reverse);
    CHECK(find_map("inverse_map")->id == MapId::Inverse);
    CHECK(find_map("inverse")->id == MapId::Inverse);
    CHECK(find_map("0") == nullptr);
    CHECK(find_map("999") == nullptr);
    CHECK(find_map("") == nullptr);
}

TEST_CASE("lehmer rotation steps every code digit once around its wheel") {
    CHECK(apply(MapId::LehmerRotation, "31452") == Permutation::parse("42513"));
    CHECK(apply(MapId::LehmerRotation, "5371246") == Permutation::parse("6413572"));
    // The all-maximal code rolls over to the identity.
    CHECK(apply_map(MapId::LehmerRotation, lehmer_decode(Code{5, 4, 3, 2, 1, 0})) ==
          Permutation::identity(6));
    // Digit-wise: (2,0,1,1,0) -> (3,1,2,0,0).
    CHECK(lehmer_encode(apply(MapId::LehmerRotation, "31452")) == Code{3, 1, 2, 0, 0});
}

TEST_CASE("reverse, complement, inverse act as on the one-line word") {
    CHECK(apply(MapId::Reverse, "52134") == Permutation::parse("43125"));
    CHECK(apply(MapId::Complement, "52134") == Permutation::parse("14532"));
    CHECK(apply(MapId::Complement, "132465") == Permutation::parse("645312"));
    CHECK(apply(MapId::Inverse, "43152") == Permutation::parse("35214"));
}

TEST_CASE("foata pair on known words") {
    CHECK(apply(MapId::Foata, "31542") == Permutation::parse("53412"));
    CHECK(apply(MapId::FoataInverse, "53412") == Permutation::parse("31542"));
    CHECK(apply(MapId::Foata, "1") == Permutation::identity(1));
    CHECK(apply(MapId::Foata, "21") == Permutation::parse("21"));
}

TEST_CASE("foata sends the major index to the inversion number") {
    for (int n = 1; n <= 6; ++n) {
        PermutationStream stream(n);
        while (auto p = stream.next()) {
            CHECK(major_index(*p) == inversions(apply_map(MapId::Foata, *p)));
            CHECK(inversions(*p) == major_index(apply_map(MapId::LcodeToMcode, *p)));
        }
    }
}

TEST_CASE("code reinterpretation maps transfer the code between flavors") {
    for (int n = 1; n <= 6; ++n) {
        PermutationStream stream(n);
        while (auto p = stream.next()) {
            CHECK(major_encode(apply_map(MapId::LcodeToMcode, *p)) == lehmer_encode(*p));
            CHECK(lehmer_encode(apply_map(MapId::McodeToLcode, *p)) == major_encode(*p));
        }
    }
}

TEST_CASE("kreweras map on known permutations") {
    CHECK(apply(MapId::Kreweras, "43152") == Permutation::parse("41325"));
    CHECK(apply(MapId::Kreweras, "1234") == Permutation::parse("2341"));
    CHECK(apply(MapId::Kreweras, "45123") == Permutation::parse("45123"));  // fixed point
    // Definition: long cycle composed with the inverse.
    Permutation p = Permutation::parse("31452");
    CHECK(apply_map(MapId::Kreweras, p) == Permutation::long_cycle(5).compose(p.inverse()));
}

TEST_CASE("kreweras complements excedances") {
    for (int n = 2; n <= 6; ++n) {
        PermutationStream stream(n);
        while (auto p = stream.next())
            CHECK(excedances(apply_map(MapId::Kreweras, *p)) == n - excedances(*p) - 1);
    }
}

TEST_CASE("every map inverts exactly") {
    for (const auto& info : map_registry()) {
        for (int n = 1; n <= 6; ++n) {
            PermutationStream stream(n);
            while (auto p = stream.next()) {
                CHECK(apply_map_inverse(info.id, apply_map(info.id, *p)) == *p);
                CHECK(apply_map(info.id, apply_map_inverse(info.id, *p)) == *p);
            }
        }
    }
}

TEST_CASE("registry inverse pairings and involutions") {
    PermutationStream stream(5);
    while (auto p = stream.next()) {
        // Involutions.
        CHECK(apply_map(MapId::Reverse, apply_map(MapId::Reverse, *p)) == *p);
        CHECK(apply_map(MapId::Complement, apply_map(MapId::Complement, *p)) == *p);
        CHECK(apply_map(MapId::Inverse, apply_map(MapId::Inverse, *p)) == *p);
        // Paired maps.
        CHECK(apply_map(MapId::FoataInverse, apply_map(MapId::Foata, *p)) == *p);
        CHECK(apply_map(MapId::McodeToLcode, apply_map(MapId::LcodeToMcode, *p)) == *p);
        CHECK(apply_map(MapId::KrewerasInverse, apply_map(MapId::Kreweras, *p)) == *p);
        // Reverse and complement commute, and each conjugates the inverse
        // into the other.
        Permutation rc = apply_map(MapId::Reverse, apply_map(MapId::Complement, *p));
        CHECK(apply_map(MapId::Reverse, apply_map(MapId::Complement, rc)) == *p);
        CHECK(p->complement().inverse() == p->inverse().reverse());
    }
}

TEST_CASE("kreweras_power matches plain iteration, both directions") {
    for (int n = 2; n <= 5; ++n) {
        PermutationStream stream(n);
        while (auto p = stream.next()) {
            Permutation forward = *p;
            for (long j = 0; j <= 2 * n; ++j) {
                CHECK(kreweras_power(*p, j) == forward);
                forward = apply_map(MapId::Kreweras, forward);
            }
            Permutation backward = *p;
            for (long j = 0; j >= -2 * n; --j) {
                CHECK(kreweras_power(*p, j) == backward);
                backward = apply_map(MapId::KrewerasInverse, backward);
            }
            // The map order divides 2n.
            CHECK(kreweras_power(*p, 2 * n) == *p);
        }
    }
}

TEST_CASE("maps are bijections on every degree up to 6") {
    for (const auto& info : map_registry()) {
        for (int n = 1; n <= 6; ++n) {
            std::vector<bool> hit(static_cast<std::size_t>(factorial(n)), false);
            PermutationStream stream(n);
            while (auto p = stream.next()) {
                auto index = static_cast<std::size_t>(apply_map(info.id, *p).rank() - 1);
                CHECK(!hit[index]);
                hit[index] = true;
            }
        }
    }
}
