#include "homomesy/table.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "homomesy/errors.hpp"
#include "homomesy/formula.hpp"
#include "json.hpp"

namespace homomesy {

// Generated at build time from data/expected_homomesies.json (see
// cmake/embed_file.cmake).
const std::string& embedded_expected_table();

namespace {

[[noreturn]] void bad_row(std::size_t index, const std::string& what) {
    std::ostringstream os;
    os << "expected-results table, row " << index << ": " << what;
    throw std::invalid_argument(os.str());
}

MapId resolve_map(std::size_t index, const std::string& token) {
    const MapInfo* info = find_map(token);
    if (info == nullptr) bad_row(index, "unknown map \"" + token + "\"");
    return info->id;
}

}  // namespace

const ExpectedTable& ExpectedTable::embedded() {
    static const ExpectedTable table = parse(embedded_expected_table());
    return table;
}

ExpectedTable ExpectedTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

ExpectedTable ExpectedTable::parse(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("expected-results table is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        throw std::invalid_argument("expected-results table must be an object with a \"rows\" array");

    static const std::set<std::string> known_families = {"invs_at", "descent_at", "entry"};

    ExpectedTable table;
    std::size_t index = 0;
    for (const auto& row : doc["rows"]) {
        ++index;
        if (!row.is_object()) bad_row(index, "row is not an object");

        ExpectedRow out;
        if (!row.contains("group") || !row["group"].is_string())
            bad_row(index, "missing string field \"group\"");
        out.group = row["group"].get<std::string>();

        if (row.contains("map") == row.contains("maps"))
            bad_row(index, "need exactly one of \"map\" and \"maps\"");
        if (row.contains("map")) {
            if (!row["map"].is_string()) bad_row(index, "\"map\" must be a string");
            out.maps.push_back(resolve_map(index, row["map"].get<std::string>()));
        } else {
            if (!row["maps"].is_array() || row["maps"].empty())
                bad_row(index, "\"maps\" must be a nonempty array");
            for (const auto& token : row["maps"]) {
                if (!token.is_string()) bad_row(index, "\"maps\" entries must be strings");
                out.maps.push_back(resolve_map(index, token.get<std::string>()));
            }
        }

        if (row.contains("stat") == row.contains("family"))
            bad_row(index, "need exactly one of \"stat\" and \"family\"");
        if (row.contains("stat")) {
            if (!row["stat"].is_string()) bad_row(index, "\"stat\" must be a string");
            out.stat_id = row["stat"].get<std::string>();
            if (!StatCatalog::instance().find(out.stat_id))
                bad_row(index, "unknown statistic \"" + out.stat_id + "\"");
            if (row.contains("index")) bad_row(index, "\"index\" only applies to family rows");
        } else {
            if (!row["family"].is_string()) bad_row(index, "\"family\" must be a string");
            out.family = row["family"].get<std::string>();
            if (known_families.count(out.family) == 0)
                bad_row(index, "unknown family \"" + out.family + "\"");
            if (!row.contains("index") || !row["index"].is_string())
                bad_row(index, "family rows need a string \"index\"");
            out.index_spec = row["index"].get<std::string>();
        }

        if (!row.contains("average") || !row["average"].is_string())
            bad_row(index, "missing string field \"average\"");
        out.average = row["average"].get<std::string>();

        if (row.contains("min_degree")) {
            if (!row["min_degree"].is_number_integer())
                bad_row(index, "\"min_degree\" must be an integer");
            out.min_degree = row["min_degree"].get<int>();
            if (out.min_degree < 1) bad_row(index, "\"min_degree\" must be at least 1");
        }
        if (row.contains("even_degree_only")) {
            if (!row["even_degree_only"].is_boolean())
                bad_row(index, "\"even_degree_only\" must be a boolean");
            out.even_degree_only = row["even_degree_only"].get<bool>();
        }

        // Catch formula typos at load time rather than deep inside a run:
        // evaluate once at a degree where every closed form is defined.
        try {
            eval_formula(out.average, {{"n", Rational(12)}, {"i", Rational(1)}});
            if (!out.index_spec.empty()) expand_index_spec(out.index_spec, 12);
        } catch (const std::exception& e) {
            bad_row(index, std::string("bad formula: ") + e.what());
        }

        table.rows_.push_back(std::move(out));
    }
    return table;
}

const ExpectedRow* ExpectedTable::find(MapId map, const std::string& stat_id) const {
    for (const auto& row : rows_) {
        if (!row.family.empty() || row.stat_id != stat_id) continue;
        for (MapId m : row.maps)
            if (m == map) return &row;
    }
    return nullptr;
}

namespace {

// A bound such as "n-1" or "n/2" evaluated at the given degree; non-integer
// results are reported through the bool.
bool eval_index_bound(const std::string& text, int n, int* out) {
    Rational value = eval_formula(text, {{"n", Rational(n)}});
    if (!value.is_integer()) return false;
    *out = static_cast<int>(value.num());
    return true;
}

}  // namespace

std::vector<int> expand_index_spec(const std::string& spec, int n) {
    std::vector<int> indices;
    std::size_t dots = spec.find("..");
    if (dots == std::string::npos) {
        int single = 0;
        if (eval_index_bound(spec, n, &single)) indices.push_back(single);
        return indices;
    }
    int lo = 0;
    int hi = 0;
    if (!eval_index_bound(spec.substr(0, dots), n, &lo) ||
        !eval_index_bound(spec.substr(dots + 2), n, &hi))
        throw MalformedFormula("index range bounds must be integers: " + spec);
    for (int i = lo; i <= hi; ++i) indices.push_back(i);
    return indices;
}

}  // namespace homomesy
