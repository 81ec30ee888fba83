#ifndef HOMOMESY_MAPS_HPP
#define HOMOMESY_MAPS_HPP

#include <string>
#include <vector>

#include "homomesy/permutation.hpp"

namespace homomesy {

enum class MapId {
    LehmerRotation,   // 149: add 1 to every Lehmer code entry, mod its bound
    Reverse,          // 64
    Complement,       // 69
    Foata,            // 67: sends major index to inversion number
    FoataInverse,     // 175
    LcodeToMcode,     // 62: reinterpret the Lehmer code as a major code
    McodeToLcode,     // 73
    Kreweras,         // 88: long cycle composed with the inverse
    KrewerasInverse,  // 89
    Inverse,          // plain group inverse
};

struct MapInfo {
    MapId id;
    int number;         // catalog number; 0 for the plain inverse
    std::string name;   // stable token, e.g. "lehmer_rotation"
    std::string label;  // short description
};

// All ten maps, in catalog-number order with the plain inverse last.
const std::vector<MapInfo>& map_registry();

const MapInfo& map_info(MapId id);

// Resolves "149", "Mp00149", or "lehmer_rotation" (also accepts "inverse"
// for "inverse_map").  Returns nullptr for anything unknown.
const MapInfo* find_map(const std::string& key);

Permutation apply_map(MapId id, const Permutation& p);

// The inverse bijection of each map (Lehmer rotation steps every code entry
// down instead of up; the others pair up within the registry or are
// involutions).
Permutation apply_map_inverse(MapId id, const Permutation& p);

// j-th power of the Kreweras map in closed form, any integer j (negative
// powers walk the inverse).  Matches iterating apply_map exactly.
Permutation kreweras_power(const Permutation& p, long j);

}  // namespace homomesy

#endif
