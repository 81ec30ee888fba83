#ifndef HOMOMESY_STATS_HPP
#define HOMOMESY_STATS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homomesy/permutation.hpp"
#include "homomesy/rational.hpp"

namespace homomesy {

// A permutation statistic.  Values are exact rationals (almost all entries
// are integer-valued; one is a half-integer).  min_degree is the smallest
// degree the statistic is defined on -- evaluating below it throws
// ParameterOutOfRange, and scans skip those degrees.
struct Statistic {
    std::string id;     // catalog key: "18", "1556", "ltr_min", "invs_at:3"
    std::string label;  // short description
    int min_degree = 1;
    std::function<Rational(const Permutation&)> eval;
};

class StatCatalog {
public:
    static const StatCatalog& instance();

    // The fixed catalog entries, in a stable order (numeric ids ascending,
    // then the two named ones).
    const std::vector<Statistic>& all() const { return entries_; }

    // Resolves an id: bare number ("18"), zero-padded with a "St" prefix
    // ("St000018"), a named entry ("ltr_min"), or a family instance
    // ("invs_at:3").  Returns nullopt for anything unknown.
    std::optional<Statistic> find(const std::string& id) const;

    // Parametric families.  index is 1-based; range checks against the
    // degree happen at evaluation time.
    //   invs_at i:    entry i of the Lehmer code (defined for degree >= i)
    //   descent_at i: 1 if position i starts a descent (degree >= i+1)
    //   entry i:      the value at position i (degree >= i)
    static Statistic family(const std::string& name, int index);

private:
    StatCatalog();
    std::vector<Statistic> entries_;
};

// Shared combinatorial helpers, exposed for tests and cross-checks.
long inversions(const Permutation& p);
long descents(const Permutation& p);
long major_index(const Permutation& p);
long excedances(const Permutation& p);

}  // namespace homomesy

#endif
