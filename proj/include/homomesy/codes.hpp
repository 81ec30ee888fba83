#ifndef HOMOMESY_CODES_HPP
#define HOMOMESY_CODES_HPP

#include <string>
#include <vector>

#include "homomesy/permutation.hpp"

namespace homomesy {

// Integer codes attached to a permutation of degree n.  Both code flavors
// used here share the same shape: n entries with 0 <= entry i <= n-i
// (1-based), so both decoders validate against those bounds.
using Code = std::vector<int>;

// Lehmer code: entry i counts the later positions holding a smaller value,
// i.e. the inversions opened at position i.  Entries sum to the inversion
// number.
Code lehmer_encode(const Permutation& p);

// Inverse of lehmer_encode; throws CodeOutOfRange when an entry violates the
// bound for its position.
Permutation lehmer_decode(const Code& code);

// Major code: entry i is the drop in the major index caused by deleting all
// values below i+1 instead of all values below i (deleting values never
// touched keeps the relative order, so only the position of the smallest
// remaining value matters).  Entries sum to the major index and obey the
// same per-position bounds as the Lehmer code.
Code major_encode(const Permutation& p);

// Inverse of major_encode; throws CodeOutOfRange on a bound violation.
Permutation major_decode(const Code& code);

// "(2,0,1,1,0)"
std::string code_str(const Code& code);

// Accepts the parenthesized form emitted by code_str, with or without the
// parentheses; throws CodeOutOfRange on malformed text.
Code parse_code(const std::string& text);

}  // namespace homomesy

#endif
