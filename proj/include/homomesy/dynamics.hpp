#ifndef HOMOMESY_DYNAMICS_HPP
#define HOMOMESY_DYNAMICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "homomesy/maps.hpp"
#include "homomesy/permutation.hpp"
#include "homomesy/rational.hpp"
#include "homomesy/stats.hpp"

namespace homomesy {

// One cycle of a map acting on all permutations of a fixed degree.  Elements
// are stored as lexicographic ranks in iteration order, starting from the
// lexicographically smallest element of the cycle.
struct Orbit {
    MapId map;
    int degree;
    std::vector<std::int64_t> ranks;

    std::int64_t size() const { return static_cast<std::int64_t>(ranks.size()); }
    Permutation representative() const { return Permutation::unrank(degree, ranks.front()); }
};

// Splits all n! permutations into orbits, ordered by representative rank
// (the scan is deterministic: ascending ranks, each unvisited rank opens the
// orbit it represents).  Exhaustive work is capped at degree 10.
std::vector<Orbit> decompose(MapId map, int n);

// The single orbit through a starting permutation, subject to the same
// degree cap as decompose.
Orbit orbit_of(MapId map, const Permutation& start);

// stat values for all permutations of degree n, indexed by rank-1.  jobs > 1
// splits the rank space across threads; the result is identical either way.
std::vector<Rational> stat_values(const Statistic& stat, int n, int jobs = 1);

Rational orbit_average(const Orbit& orbit, const Statistic& stat);

// Verdict for one (map, stat, degree) triple: homomesic means every orbit
// average equals the global average exactly.
struct HomomesyCheck {
    bool homomesic = false;
    Rational global_average;
    std::vector<Rational> orbit_averages;  // aligned with the orbit list
    // First orbit whose average differs from the global one, and the first
    // whose average matches it; -1 when no such orbit exists.
    std::ptrdiff_t violating_orbit = -1;
    std::ptrdiff_t matching_orbit = -1;
};

HomomesyCheck check_homomesy(const std::vector<Orbit>& orbits,
                             const std::vector<Rational>& values);
HomomesyCheck check_homomesy(MapId map, const Statistic& stat, int n, int jobs = 1);

// size -> number of orbits of that size.
std::map<std::int64_t, std::int64_t> orbit_size_distribution(const std::vector<Orbit>& orbits);

// "[1, 2^(2), 5^(5), 10^(9)]": sizes ascending, multiplicity as an exponent,
// bare size for multiplicity one.
std::string distribution_str(const std::map<std::int64_t, std::int64_t>& distribution);

// Number of orbits of size 2k of the Kreweras map on degree n, for k
// dividing n (anything else throws NotADivisor).  Orbits of smaller size
// are subtracted out of the count of 2k-periodic points: even sizes
// recursively through this same formula, odd sizes from the supplied counts
// (odd orbits occur only in odd degrees; pass the observed counts there and
// an empty map for even degrees).
std::int64_t kreweras_even_orbit_count(
    int n, int k, const std::map<std::int64_t, std::int64_t>& odd_orbit_counts);

// Outcome of one (map, stat) pair across a degree range.
struct ScanCell {
    int degree;
    bool homomesic;
    Rational average;  // global average; the shared constant when homomesic
};

struct ScanRow {
    MapId map;
    std::string stat_id;
    std::vector<ScanCell> cells;  // only degrees the stat is defined on
    bool stable = false;          // homomesic at every evaluated degree
};

// Full grid scan, maps x stats x degrees.  Rows come out map-major in the
// order given; degrees below a stat's minimum are skipped.
std::vector<ScanRow> scan(const std::vector<MapId>& maps, const std::vector<Statistic>& stats,
                          int n_lo, int n_hi, int jobs = 1);

}  // namespace homomesy

#endif
