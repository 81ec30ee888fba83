#ifndef HOMOMESY_PATTERNS_HPP
#define HOMOMESY_PATTERNS_HPP

#include <string>
#include <vector>

#include "homomesy/permutation.hpp"

namespace homomesy {

// A (possibly vincular, possibly anchored) pattern over at most six letters.
//
// Text syntax:
//   "312"      classical: any three positions in the host, values ordered
//              like 3,1,2.  Without dashes no adjacency is required.
//   "13-2"     vincular: letters inside an undashed group must sit at
//              adjacent host positions; dashes break adjacency.
//   "|1-23"    anchored: the first two letters are pinned to host positions
//              1 and 2 (which makes any adjacency requirement among the
//              first two letters redundant, so those bonds are dropped).
struct PatternSpec {
    std::string text;               // original syntax, kept for messages
    std::vector<int> letters;       // the letters 1..k in pattern order
    std::vector<bool> bond_after;   // bond_after[t]: letters t and t+1 (0-based)
                                    // must occupy adjacent host positions
    bool anchored = false;

    int k() const { return static_cast<int>(letters.size()); }
};

// Throws MalformedPattern with a reason on anything outside the syntax
// above: letters not forming 1..k, more than six letters, empty groups,
// a stray '|', or an anchored pattern with fewer than two letters.
PatternSpec parse_pattern(const std::string& text);

// Number of occurrences of the pattern in p: index tuples i_1 < ... < i_k
// order-isomorphic to the letters, honoring adjacency bonds and, for
// anchored patterns, the pin i_1 = 1, i_2 = 2.
long count_occurrences(const Permutation& p, const PatternSpec& spec);

}  // namespace homomesy

#endif
