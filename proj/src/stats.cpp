#include "homomesy/stats.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "homomesy/codes.hpp"
#include "homomesy/errors.hpp"
#include "homomesy/patterns.hpp"

namespace homomesy {

long inversions(const Permutation& p) {
    const int n = p.degree();
    long count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) ++count;
    return count;
}

long descents(const Permutation& p) {
    long count = 0;
    for (int i = 1; i < p.degree(); ++i)
        if (p(i) > p(i + 1)) ++count;
    return count;
}

long major_index(const Permutation& p) {
    long maj = 0;
    for (int i = 1; i < p.degree(); ++i)
        if (p(i) > p(i + 1)) maj += i;
    return maj;
}

long excedances(const Permutation& p) {
    long count = 0;
    for (int i = 1; i <= p.degree(); ++i)
        if (p(i) > i) ++count;
    return count;
}

namespace {

long ascents(const Permutation& p) { return p.degree() - 1 - descents(p); }

// Peaks/valleys at interior positions 2..n-1.
long interior_peaks(const Permutation& p) {
    long count = 0;
    for (int i = 2; i < p.degree(); ++i)
        if (p(i - 1) < p(i) && p(i) > p(i + 1)) ++count;
    return count;
}

long interior_valleys(const Permutation& p) {
    long count = 0;
    for (int i = 2; i < p.degree(); ++i)
        if (p(i - 1) > p(i) && p(i) < p(i + 1)) ++count;
    return count;
}

long double_ascents(const Permutation& p) {
    long count = 0;
    for (int i = 2; i < p.degree(); ++i)
        if (p(i - 1) < p(i) && p(i) < p(i + 1)) ++count;
    return count;
}

long double_descents(const Permutation& p) {
    long count = 0;
    for (int i = 2; i < p.degree(); ++i)
        if (p(i - 1) > p(i) && p(i) > p(i + 1)) ++count;
    return count;
}

bool front_descent(const Permutation& p) { return p.degree() >= 2 && p(1) > p(2); }
bool back_ascent(const Permutation& p) {
    return p.degree() >= 2 && p(p.degree() - 1) < p(p.degree());
}
bool back_descent(const Permutation& p) {
    return p.degree() >= 2 && p(p.degree() - 1) > p(p.degree());
}
bool front_ascent(const Permutation& p) { return p.degree() >= 2 && p(1) < p(2); }

long rtl_maxima(const Permutation& p) {
    long count = 0;
    int best = 0;
    for (int i = p.degree(); i >= 1; --i)
        if (p(i) > best) {
            best = p(i);
            ++count;
        }
    return count;
}

long rtl_minima(const Permutation& p) {
    long count = 0;
    int best = p.degree() + 1;
    for (int i = p.degree(); i >= 1; --i)
        if (p(i) < best) {
            best = p(i);
            ++count;
        }
    return count;
}

long ltr_minima(const Permutation& p) {
    long count = 0;
    int best = p.degree() + 1;
    for (int i = 1; i <= p.degree(); ++i)
        if (p(i) < best) {
            best = p(i);
            ++count;
        }
    return count;
}

long ltr_maxima(const Permutation& p) {
    long count = 0;
    int best = 0;
    for (int i = 1; i <= p.degree(); ++i)
        if (p(i) > best) {
            best = p(i);
            ++count;
        }
    return count;
}

long recoils(const Permutation& p) { return descents(p.inverse()); }

// Descents between positions d apart: pairs (i, i+d) with p(i) > p(i+d).
long descents_at_distance(const Permutation& p, int d) {
    long count = 0;
    for (int i = 1; i + d <= p.degree(); ++i)
        if (p(i) > p(i + d)) ++count;
    return count;
}

long inversions_of_width_at_most(const Permutation& p, int w) {
    const int n = p.degree();
    long count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n && j - i <= w; ++j)
            if (p(i) > p(j)) ++count;
    return count;
}

// Sum over inversion pairs i < j of the weight function.
template <typename Weight>
long inversion_sum(const Permutation& p, Weight weight) {
    const int n = p.degree();
    long total = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p(i) > p(j)) total += weight(p, i, j);
    return total;
}

// Repeatedly sweep the word left to right, removing the values 1, 2, ...
// whenever the next expected one is seen; every value passed over scores one
// point per sweep it survives.
long disorder(const Permutation& p) {
    std::vector<int> remaining = p.line();
    long score = 0;
    int expected = 1;
    while (!remaining.empty()) {
        std::vector<int> survivors;
        survivors.reserve(remaining.size());
        for (int v : remaining) {
            if (v == expected) {
                ++expected;
            } else {
                survivors.push_back(v);
                ++score;
            }
        }
        remaining = std::move(survivors);
    }
    return score;
}

// Largest k such that a decreasing staircase k, k-1, ..., 1 of nested
// inversion demands can be met reading the Lehmer code right to left.
long staircase_size(const Permutation& p) {
    Code code = lehmer_encode(p);
    long k = 0;
    for (int i = static_cast<int>(code.size()) - 1; i >= 0; --i)
        if (code[static_cast<std::size_t>(i)] >= k + 1) ++k;
    return k;
}

// Lattice walk: one step per adjacent pair, up on an ascent, down on a
// descent; count the steps whose two endpoints are both at height >= 0.
long walk_steps_at_or_above_zero(const Permutation& p) {
    long height = 0, count = 0;
    for (int i = 1; i < p.degree(); ++i) {
        long before = height;
        height += p(i) < p(i + 1) ? 1 : -1;
        if (before >= 0 && height >= 0) ++count;
    }
    return count;
}

long descents_at_odd_positions(const Permutation& p) {
    long count = 0;
    for (int i = 1; i < p.degree(); i += 2)
        if (p(i) > p(i + 1)) ++count;
    return count;
}

long descents_at_even_positions(const Permutation& p) {
    long count = 0;
    for (int i = 2; i < p.degree(); i += 2)
        if (p(i) > p(i + 1)) ++count;
    return count;
}

// Inversions split by the parity of the two positions.
long inversions_same_parity(const Permutation& p) {
    return inversion_sum(p, [](const Permutation&, int i, int j) {
        return (i - j) % 2 == 0 ? 1 : 0;
    });
}

long inversions_mixed_parity(const Permutation& p) {
    return inversion_sum(p, [](const Permutation&, int i, int j) {
        return (i - j) % 2 != 0 ? 1 : 0;
    });
}

long lehmer_zero_pairs(const Permutation& p) {
    Code code = lehmer_encode(p);
    long count = 0;
    for (std::size_t i = 1; i < code.size(); ++i)
        if (code[i - 1] == 0 && code[i] == 0) ++count;
    return count;
}

Rational signed_pair_balance(const Permutation& p) {
    const int n = p.degree();
    long j = 0;
    for (int x = 2; x <= n; ++x)
        for (int y = 1; y < x; ++y) {
            int sign = p(x) > p(y) ? 1 : -1;
            if ((x + y) % 2 != 0) sign = -sign;
            j += sign;
        }
    const long half_sq = static_cast<long>(n / 2) * (n / 2);
    return Rational(j + half_sq, 2);
}

Statistic make(std::string id, std::string label,
               std::function<Rational(const Permutation&)> eval, int min_degree = 1) {
    return Statistic{std::move(id), std::move(label), min_degree, std::move(eval)};
}

// Wraps an integer-valued function.
template <typename F>
std::function<Rational(const Permutation&)> of(F f) {
    return [f](const Permutation& p) { return Rational(static_cast<std::int64_t>(f(p))); };
}

std::function<Rational(const Permutation&)> pattern_count(const std::string& text) {
    PatternSpec spec = parse_pattern(text);
    return [spec](const Permutation& p) { return Rational(count_occurrences(p, spec)); };
}

std::function<Rational(const Permutation&)> pattern_sum(
    const std::vector<std::string>& texts, bool plus_descents) {
    std::vector<PatternSpec> specs;
    specs.reserve(texts.size());
    for (const auto& t : texts) specs.push_back(parse_pattern(t));
    return [specs, plus_descents](const Permutation& p) {
        long total = plus_descents ? descents(p) : 0;
        for (const auto& s : specs) total += count_occurrences(p, s);
        return Rational(total);
    };
}

}  // namespace

StatCatalog::StatCatalog() {
    auto add = [this](Statistic s) { entries_.push_back(std::move(s)); };

    add(make("4", "major index", of(major_index)));
    add(make("7", "right-to-left maxima", of(rtl_maxima)));
    add(make("18", "inversions", of(inversions)));
    add(make("20", "lexicographic rank", of([](const Permutation& p) { return p.rank(); })));
    add(make("21", "descents", of(descents)));
    add(make("23", "interior peaks", of(interior_peaks)));
    add(make("35", "left outer peaks", of([](const Permutation& p) {
            return interior_peaks(p) + (front_descent(p) ? 1 : 0);
        })));
    add(make("54", "first entry", of([](const Permutation& p) { return p(1); })));
    add(make("55", "inversion width sum", of([](const Permutation& p) {
            return inversion_sum(p, [](const Permutation&, int i, int j) { return j - i; });
        })));
    add(make("92", "outer peaks", of([](const Permutation& p) {
            return interior_peaks(p) + (front_descent(p) ? 1 : 0) + (back_ascent(p) ? 1 : 0);
        })));
    add(make("99", "outer valleys", of([](const Permutation& p) {
            return interior_valleys(p) + (front_ascent(p) ? 1 : 0) + (back_descent(p) ? 1 : 0);
        })));
    add(make("155", "excedances", of(excedances)));
    add(make("245", "ascents", of(ascents)));
    add(make("246", "non-inversions", of([](const Permutation& p) {
            const long n = p.degree();
            return n * (n - 1) / 2 - inversions(p);
        })));
    add(make("304", "major index of reversed inverse", of([](const Permutation& p) {
            return major_index(p.inverse().reverse());
        })));
    add(make("305", "major index of inverse", of([](const Permutation& p) {
            return major_index(p.inverse());
        })));
    add(make("325", "descents plus one", of([](const Permutation& p) {
            return descents(p) + 1;
        })));
    add(make("341", "non-inversion width sum", of([](const Permutation& p) {
            const int n = p.degree();
            long total = 0;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (p(i) < p(j)) total += j - i;
            return total;
        })));
    add(make("342", "position-weighted entry sum", of([](const Permutation& p) {
            long total = 0;
            for (int i = 1; i <= p.degree(); ++i) total += static_cast<long>(i) * p(i);
            return total;
        })));
    add(make("353", "interior valleys", of(interior_valleys)));
    add(make("354", "recoils", of(recoils)));
    add(make("355", "occurrences of 21-3", pattern_count("21-3")));
    add(make("356", "occurrences of 13-2", pattern_count("13-2")));
    add(make("357", "occurrences of 12-3", pattern_count("12-3")));
    add(make("358", "occurrences of 31-2", pattern_count("31-2")));
    add(make("359", "occurrences of 23-1", pattern_count("23-1")));
    add(make("360", "occurrences of 32-1", pattern_count("32-1")));
    add(make("365", "double ascents", of(double_ascents)));
    add(make("366", "double descents", of(double_descents)));
    add(make("423", "occurrences of 123 or 132", pattern_sum({"123", "132"}, false)));
    add(make("435", "occurrences of 213 or 231", pattern_sum({"213", "231"}, false)));
    add(make("437", "occurrences of 312 or 321", pattern_sum({"312", "321"}, false)));
    add(make("446", "disorder", of(disorder)));
    add(make("457", "occurrences of 132, 213 or 321",
             pattern_sum({"132", "213", "321"}, false)));
    add(make("470", "ascending runs", of([](const Permutation& p) {
            return descents(p) + 1;
        })));
    add(make("483", "interior turns", of([](const Permutation& p) {
            return interior_peaks(p) + interior_valleys(p);
        })));
    add(make("494", "inversions of width at most 3", of([](const Permutation& p) {
            return inversions_of_width_at_most(p, 3);
        })));
    add(make("495", "inversions of width at most 2", of([](const Permutation& p) {
            return inversions_of_width_at_most(p, 2);
        })));
    add(make("538", "inversions with positions of equal parity", of(inversions_same_parity)));
    add(make("539", "inversions with positions of mixed parity", of(inversions_mixed_parity)));
    add(make("616", "sum of left entries over inversions", of([](const Permutation& p) {
            return inversion_sum(p, [](const Permutation& q, int i, int) { return q(i); });
        })));
    add(make("619", "cyclic descents", of([](const Permutation& p) {
            const int n = p.degree();
            return descents(p) + (n >= 2 && p(n) > p(1) ? 1 : 0);
        })));
    add(make("638", "up-down runs", of([](const Permutation& p) {
            if (p.degree() == 1) return 1L;
            return interior_peaks(p) + interior_valleys(p) + 1 + (front_descent(p) ? 1 : 0);
        })));
    add(make("662", "staircase size", of(staircase_size)));
    add(make("677", "signed pair balance", signed_pair_balance));
    add(make("692", "descents plus 13-2, 21-3, 32-1",
             pattern_sum({"13-2", "21-3", "32-1"}, true)));
    add(make("702", "non-excedances", of([](const Permutation& p) {
            return p.degree() - excedances(p);
        })));
    add(make("709", "occurrences of 14-2-3 or 14-3-2",
             pattern_sum({"14-2-3", "14-3-2"}, false)));
    add(make("740", "last entry", of([](const Permutation& p) { return p(p.degree()); })));
    add(make("796", "descents plus 13-2, 31-2, 32-1",
             pattern_sum({"13-2", "31-2", "32-1"}, true)));
    add(make("798", "descents plus 1-32, 31-2, 32-1",
             pattern_sum({"1-32", "31-2", "32-1"}, true)));
    add(make("824", "descents plus recoils", of([](const Permutation& p) {
            return descents(p) + recoils(p);
        })));
    add(make("828", "squared displacement sum", of([](const Permutation& p) {
            long total = 0;
            for (int i = 1; i <= p.degree(); ++i)
                total += static_cast<long>(p(i) - i) * (p(i) - i);
            return total;
        })));
    add(make("833", "comajor index", of([](const Permutation& p) {
            return static_cast<long>(p.degree()) * descents(p) - major_index(p);
        })));
    add(make("834", "right outer peaks", of([](const Permutation& p) {
            return interior_peaks(p) + (back_ascent(p) ? 1 : 0);
        })));
    add(make("836", "descents at distance 2", of([](const Permutation& p) {
            return descents_at_distance(p, 2);
        })));
    add(make("837", "ascents at distance 2", of([](const Permutation& p) {
            return std::max(0, p.degree() - 2) - descents_at_distance(p, 2);
        })));
    add(make("991", "right-to-left minima", of(rtl_minima)));
    add(make("1084", "occurrences of |1-23", pattern_count("|1-23")));
    add(make("1114", "descents at odd positions", of(descents_at_odd_positions)));
    add(make("1115", "descents at even positions", of(descents_at_even_positions)));
    add(make("1332", "walk steps at or above zero", of(walk_steps_at_or_above_zero)));
    add(make("1377", "major index minus inversions", of([](const Permutation& p) {
            return major_index(p) - inversions(p);
        })));
    add(make("1379", "major index plus inversions", of([](const Permutation& p) {
            return major_index(p) + inversions(p);
        })));
    add(make("1520", "descents at distance 3", of([](const Permutation& p) {
            return descents_at_distance(p, 3);
        })));
    add(make("1556", "third Lehmer code entry", of([](const Permutation& p) {
            if (p.degree() < 3)
                throw ParameterOutOfRange("statistic 1556 needs degree >= 3");
            return static_cast<long>(lehmer_encode(p)[2]);
        }),
        3));
    add(make("1557", "second Lehmer code entry", of([](const Permutation& p) {
            if (p.degree() < 2)
                throw ParameterOutOfRange("statistic 1557 needs degree >= 2");
            return static_cast<long>(lehmer_encode(p)[1]);
        }),
        2));
    add(make("1640", "consecutive zero pairs in the Lehmer code", of(lehmer_zero_pairs)));
    add(make("ltr_min", "left-to-right minima", of(ltr_minima)));
    add(make("ltr_max", "left-to-right maxima", of(ltr_maxima)));
}

const StatCatalog& StatCatalog::instance() {
    static const StatCatalog catalog;
    return catalog;
}

Statistic StatCatalog::family(const std::string& name, int index) {
    if (index < 1)
        throw ParameterOutOfRange("family index " + std::to_string(index) +
                                  " must be at least 1");
    const std::string id = name + ":" + std::to_string(index);
    if (name == "invs_at") {
        return make(id, "Lehmer code entry " + std::to_string(index),
                    [index](const Permutation& p) {
                        if (p.degree() < index)
                            throw ParameterOutOfRange("invs_at:" + std::to_string(index) +
                                                      " needs degree >= " + std::to_string(index));
                        return Rational(lehmer_encode(p)[static_cast<std::size_t>(index - 1)]);
                    },
                    index);
    }
    if (name == "descent_at") {
        return make(id, "descent indicator at position " + std::to_string(index),
                    [index](const Permutation& p) {
                        if (p.degree() < index + 1)
                            throw ParameterOutOfRange("descent_at:" + std::to_string(index) +
                                                      " needs degree >= " +
                                                      std::to_string(index + 1));
                        return Rational(p(index) > p(index + 1) ? 1 : 0);
                    },
                    index + 1);
    }
    if (name == "entry") {
        return make(id, "entry at position " + std::to_string(index),
                    [index](const Permutation& p) {
                        if (p.degree() < index)
                            throw ParameterOutOfRange("entry:" + std::to_string(index) +
                                                      " needs degree >= " + std::to_string(index));
                        return Rational(p(index));
                    },
                    index);
    }
    throw ParameterOutOfRange("unknown statistic family \"" + name + "\"");
}

std::optional<Statistic> StatCatalog::find(const std::string& id) const {
    std::string key = id;

    // Family instance: "invs_at:3".
    std::size_t colon = key.find(':');
    if (colon != std::string::npos) {
        std::string name = key.substr(0, colon);
        std::string arg = key.substr(colon + 1);
        if (name != "invs_at" && name != "descent_at" && name != "entry") return std::nullopt;
        if (arg.empty() ||
            !std::all_of(arg.begin(), arg.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParameterOutOfRange("family index \"" + arg + "\" is not a positive integer");
        return family(name, std::stoi(arg));
    }

    // "St000018" -> "18"; leading zeros are stripped from bare numbers too.
    if (key.size() > 2 && key[0] == 'S' && key[1] == 't') key = key.substr(2);
    if (!key.empty() &&
        std::all_of(key.begin(), key.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        std::size_t nonzero = key.find_first_not_of('0');
        key = nonzero == std::string::npos ? "0" : key.substr(nonzero);
    }

    for (const auto& s : entries_)
        if (s.id == key) return s;
    return std::nullopt;
}

}  // namespace homomesy
