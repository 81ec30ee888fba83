#include "homomesy/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "homomesy/errors.hpp"

namespace homomesy {

namespace {

constexpr int kMaxPatternLetters = 6;

}  // namespace

PatternSpec parse_pattern(const std::string& text) {
    PatternSpec spec;
    spec.text = text;

    std::string body = text;
    if (!body.empty() && body.front() == '|') {
        spec.anchored = true;
        body = body.substr(1);
    }
    if (body.empty()) throw MalformedPattern("empty pattern \"" + text + "\"");
    if (body.find('|') != std::string::npos)
        throw MalformedPattern("'|' is only allowed at the front: \"" + text + "\"");

    // Split on dashes into adjacency groups.
    std::vector<std::vector<int>> groups(1);
    for (char c : body) {
        if (c == '-') {
            if (groups.back().empty())
                throw MalformedPattern("empty group in \"" + text + "\"");
            groups.emplace_back();
        } else if (c >= '1' && c <= '9') {
            groups.back().push_back(c - '0');
        } else {
            throw MalformedPattern("unexpected character '" + std::string(1, c) +
                                   "' in \"" + text + "\"");
        }
    }
    if (groups.back().empty()) throw MalformedPattern("empty group in \"" + text + "\"");

    const bool dashless = groups.size() == 1;
    for (const auto& g : groups)
        for (int v : g) spec.letters.push_back(v);

    const int k = spec.k();
    if (k > kMaxPatternLetters)
        throw MalformedPattern("pattern \"" + text + "\" has " + std::to_string(k) +
                               " letters; at most " + std::to_string(kMaxPatternLetters) +
                               " are supported");
    std::vector<int> sorted = spec.letters;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i + 1)
            throw MalformedPattern("letters of \"" + text + "\" do not form 1.." +
                                   std::to_string(k));
    if (spec.anchored && k < 2)
        throw MalformedPattern("anchored pattern \"" + text + "\" needs at least two letters");

    spec.bond_after.assign(static_cast<std::size_t>(k - 1), false);
    if (!dashless) {
        // Adjacent letters within a group are bonded.  A dashless pattern is
        // classical: every letter is its own group, no bonds at all.
        int offset = 0;
        for (const auto& g : groups) {
            for (std::size_t j = 0; j + 1 < g.size(); ++j)
                spec.bond_after[static_cast<std::size_t>(offset) + j] = true;
            offset += static_cast<int>(g.size());
        }
    }
    if (spec.anchored) {
        // The pin places letters 1 and 2 at host positions 1 and 2, which
        // already decides adjacency at the front; those bonds are dropped so
        // the third letter ranges freely.
        for (int t = 0; t < std::min(k - 1, 2); ++t)
            spec.bond_after[static_cast<std::size_t>(t)] = false;
    }
    return spec;
}

long count_occurrences(const Permutation& p, const PatternSpec& spec) {
    const int n = p.degree();
    const int k = spec.k();
    if (k > n) return 0;
    const std::vector<int>& line = p.line();

    long count = 0;
    std::vector<int> chosen;  // 0-based host indices, one per placed letter
    chosen.reserve(static_cast<std::size_t>(k));

    // Depth-first placement with incremental order checking: a new host
    // index is accepted only if its value compares to every already placed
    // value the way the letters do.
    std::function<void(int)> place = [&](int t) {
        if (t == k) {
            ++count;
            return;
        }
        int lo, hi;
        if (spec.anchored && t < 2) {
            lo = hi = t;
        } else if (t > 0 && spec.bond_after[static_cast<std::size_t>(t - 1)]) {
            lo = hi = chosen.back() + 1;
        } else {
            lo = chosen.empty() ? 0 : chosen.back() + 1;
            hi = n - (k - t);  // leave room for the remaining letters
        }
        for (int i = lo; i <= hi && i < n; ++i) {
            bool ok = true;
            for (int s = 0; s < t && ok; ++s) {
                const bool letters_up = spec.letters[static_cast<std::size_t>(s)] <
                                        spec.letters[static_cast<std::size_t>(t)];
                const bool values_up = line[static_cast<std::size_t>(chosen[static_cast<std::size_t>(s)])] <
                                       line[static_cast<std::size_t>(i)];
                ok = letters_up == values_up;
            }
            if (!ok) continue;
            chosen.push_back(i);
            place(t + 1);
            chosen.pop_back();
        }
    };
    place(0);
    return count;
}

}  // namespace homomesy
