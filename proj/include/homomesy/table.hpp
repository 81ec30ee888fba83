#ifndef HOMOMESY_TABLE_HPP
#define HOMOMESY_TABLE_HPP

#include <string>
#include <vector>

#include "homomesy/maps.hpp"
#include "homomesy/stats.hpp"

namespace homomesy {

// One certified average: a statistic (or a parametric family) together with
// the maps it is homomesic under and the closed form of the orbit average.
struct ExpectedRow {
    std::string group;          // which block of results the row belongs to
    std::vector<MapId> maps;    // one map for plain rows; the even-degree
                                // family row names both Kreweras directions
    std::string stat_id;        // catalog id; empty for family rows
    std::string family;         // family name; empty for plain rows
    std::string index_spec;     // family index range, e.g. "1..n-1" or "n/2"
    std::string average;        // closed form in n (and i for families)
    int min_degree = 2;
    bool even_degree_only = false;
};

class ExpectedTable {
public:
    // The copy of data/expected_homomesies.json baked in at build time.
    static const ExpectedTable& embedded();

    static ExpectedTable load_file(const std::string& path);
    static ExpectedTable parse(const std::string& json_text);

    const std::vector<ExpectedRow>& rows() const { return rows_; }

    // The plain row for a (map, stat) pair, if the table has one.
    const ExpectedRow* find(MapId map, const std::string& stat_id) const;

private:
    std::vector<ExpectedRow> rows_;
};

// Expands a family index specification at a concrete degree: "1..n" lists
// 1..n, "n/2" is the single index n/2.  Bounds are formulas in n; a
// non-integer single index means the row does not apply at this degree and
// yields an empty list.
std::vector<int> expand_index_spec(const std::string& spec, int n);

}  // namespace homomesy

#endif
