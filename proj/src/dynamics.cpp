#include "homomesy/dynamics.hpp"

#include <algorithm>
#include <thread>

#include "homomesy/errors.hpp"

namespace homomesy {

namespace {

void require_exhaustive_degree(int n, const char* what) {
    if (n < 1 || n > kMaxEnumerationDegree)
        throw DegreeTooLarge(std::string(what) + ": degree " + std::to_string(n) +
                             " outside 1.." + std::to_string(kMaxEnumerationDegree));
}

// Runs fn(begin, end) over a partition of [0, total) -- on this thread when
// jobs <= 1, otherwise on jobs threads with contiguous chunks.  Chunking is
// by index, so results written to preallocated slots are identical for any
// job count.
template <typename Fn>
void parallel_chunks(std::int64_t total, int jobs, Fn fn) {
    if (jobs <= 1 || total < 2) {
        fn(static_cast<std::int64_t>(0), total);
        return;
    }
    const int workers = static_cast<int>(std::min<std::int64_t>(jobs, total));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace

std::vector<Orbit> decompose(MapId map, int n) {
    require_exhaustive_degree(n, "decompose");
    const std::int64_t total = factorial(n);
    std::vector<bool> visited(static_cast<std::size_t>(total), false);
    std::vector<Orbit> orbits;
    for (std::int64_t r = 1; r <= total; ++r) {
        if (visited[static_cast<std::size_t>(r - 1)]) continue;
        Orbit orbit{map, n, {}};
        std::int64_t cur = r;
        while (true) {
            visited[static_cast<std::size_t>(cur - 1)] = true;
            orbit.ranks.push_back(cur);
            const std::int64_t next = apply_map(map, Permutation::unrank(n, cur)).rank();
            if (next == r) break;
            if (visited[static_cast<std::size_t>(next - 1)])
                throw NonClosure("walk from rank " + std::to_string(r) +
                                 " under map " + map_info(map).name +
                                 " re-entered rank " + std::to_string(next) +
                                 " without closing");
            cur = next;
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

Orbit orbit_of(MapId map, const Permutation& start) {
    require_exhaustive_degree(start.degree(), "orbit_of");
    const std::int64_t first = start.rank();
    const std::int64_t limit = factorial(start.degree());
    Orbit orbit{map, start.degree(), {}};
    std::int64_t cur = first;
    do {
        orbit.ranks.push_back(cur);
        if (orbit.size() > limit)
            throw NonClosure("walk from rank " + std::to_string(first) + " under map " +
                             map_info(map).name + " exceeded " + std::to_string(limit) +
                             " steps without closing");
        cur = apply_map(map, Permutation::unrank(orbit.degree, cur)).rank();
    } while (cur != first);
    // Rotate so iteration starts at the lexicographically smallest element,
    // matching what decompose produces for this cycle.
    auto smallest = std::min_element(orbit.ranks.begin(), orbit.ranks.end());
    std::rotate(orbit.ranks.begin(), smallest, orbit.ranks.end());
    return orbit;
}

std::vector<Rational> stat_values(const Statistic& stat, int n, int jobs) {
    require_exhaustive_degree(n, "stat_values");
    if (n < stat.min_degree)
        throw ParameterOutOfRange("statistic " + stat.id + " needs degree >= " +
                                  std::to_string(stat.min_degree));
    const std::int64_t total = factorial(n);
    std::vector<Rational> values(static_cast<std::size_t>(total));
    parallel_chunks(total, jobs, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t r = begin; r < end; ++r)
            values[static_cast<std::size_t>(r)] = stat.eval(Permutation::unrank(n, r + 1));
    });
    return values;
}

Rational orbit_average(const Orbit& orbit, const Statistic& stat) {
    Rational sum;
    for (std::int64_t r : orbit.ranks) sum += stat.eval(Permutation::unrank(orbit.degree, r));
    return sum / Rational(orbit.size());
}

HomomesyCheck check_homomesy(const std::vector<Orbit>& orbits,
                             const std::vector<Rational>& values) {
    HomomesyCheck result;
    result.orbit_averages.reserve(orbits.size());
    Rational total_sum;
    std::int64_t total_count = 0;
    for (const auto& orbit : orbits) {
        Rational sum;
        for (std::int64_t r : orbit.ranks) sum += values[static_cast<std::size_t>(r - 1)];
        result.orbit_averages.push_back(sum / Rational(orbit.size()));
        total_sum += sum;
        total_count += orbit.size();
    }
    result.global_average = total_sum / Rational(total_count);
    result.homomesic = true;
    for (std::size_t i = 0; i < result.orbit_averages.size(); ++i) {
        const bool matches = result.orbit_averages[i] == result.global_average;
        if (matches && result.matching_orbit < 0)
            result.matching_orbit = static_cast<std::ptrdiff_t>(i);
        if (!matches && result.violating_orbit < 0) {
            result.violating_orbit = static_cast<std::ptrdiff_t>(i);
            result.homomesic = false;
        }
    }
    return result;
}

HomomesyCheck check_homomesy(MapId map, const Statistic& stat, int n, int jobs) {
    return check_homomesy(decompose(map, n), stat_values(stat, n, jobs));
}

std::map<std::int64_t, std::int64_t> orbit_size_distribution(const std::vector<Orbit>& orbits) {
    std::map<std::int64_t, std::int64_t> distribution;
    for (const auto& orbit : orbits) ++distribution[orbit.size()];
    return distribution;
}

std::string distribution_str(const std::map<std::int64_t, std::int64_t>& distribution) {
    std::string s = "[";
    bool first = true;
    for (const auto& [size, count] : distribution) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(size);
        if (count != 1) s += "^(" + std::to_string(count) + ")";
    }
    return s + "]";
}

std::int64_t kreweras_even_orbit_count(
    int n, int k, const std::map<std::int64_t, std::int64_t>& odd_orbit_counts) {
    if (k < 1 || n % k != 0)
        throw NotADivisor("orbit size 2*" + std::to_string(k) + " requires " +
                          std::to_string(k) + " to divide the degree " + std::to_string(n));
    // Permutations fixed by the 2k-th power of the map: (n/k)^k * k! in
    // total.  Everything sitting on a strictly smaller orbit whose size
    // divides 2k must be discarded; what remains splits into orbits of size
    // exactly 2k.
    std::int64_t fixed = factorial(k);
    for (int i = 0; i < k; ++i) fixed *= n / k;
    std::int64_t smaller = 0;
    for (int d = 1; d < 2 * k; ++d) {
        if ((2 * k) % d != 0) continue;
        if (d % 2 == 0) {
            smaller += d * kreweras_even_orbit_count(n, d / 2, odd_orbit_counts);
        } else {
            auto it = odd_orbit_counts.find(d);
            if (it != odd_orbit_counts.end()) smaller += d * it->second;
        }
    }
    const std::int64_t remaining = fixed - smaller;
    if (remaining % (2 * k) != 0)
        throw NonClosure("periodic-point count " + std::to_string(remaining) +
                         " is not divisible by the orbit size " + std::to_string(2 * k));
    return remaining / (2 * k);
}

std::vector<ScanRow> scan(const std::vector<MapId>& maps, const std::vector<Statistic>& stats,
                          int n_lo, int n_hi, int jobs) {
    require_exhaustive_degree(n_lo, "scan");
    require_exhaustive_degree(n_hi, "scan");

    std::vector<ScanRow> rows;
    rows.reserve(maps.size() * stats.size());
    for (MapId map : maps)
        for (const auto& stat : stats) rows.push_back(ScanRow{map, stat.id, {}, false});

    for (int n = n_lo; n <= n_hi; ++n) {
        std::vector<std::vector<Orbit>> orbits_by_map;
        orbits_by_map.reserve(maps.size());
        for (MapId map : maps) orbits_by_map.push_back(decompose(map, n));
        for (std::size_t s = 0; s < stats.size(); ++s) {
            if (n < stats[s].min_degree) continue;
            const std::vector<Rational> values = stat_values(stats[s], n, jobs);
            for (std::size_t m = 0; m < maps.size(); ++m) {
                const HomomesyCheck check = check_homomesy(orbits_by_map[m], values);
                rows[m * stats.size() + s].cells.push_back(
                    ScanCell{n, check.homomesic, check.global_average});
            }
        }
    }
    for (auto& row : rows) {
        row.stable = !row.cells.empty() &&
                     std::all_of(row.cells.begin(), row.cells.end(),
                                 [](const ScanCell& c) { return c.homomesic; });
    }
    return rows;
}

}  // namespace homomesy
