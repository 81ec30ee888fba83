#include "homomesy/codes.hpp"

#include <cctype>
#include <stdexcept>

#include "homomesy/errors.hpp"

namespace homomesy {

namespace {

// Major index of an arbitrary word with distinct letters: sum of positions
// (1-based) followed by a strictly smaller letter.
int major_index_of(const std::vector<int>& word) {
    int maj = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) maj += static_cast<int>(i) + 1;
    return maj;
}

void validate_code_bounds(const Code& code, const char* kind) {
    const int n = static_cast<int>(code.size());
    if (n == 0) throw CodeOutOfRange(std::string(kind) + ": empty code");
    for (int i = 0; i < n; ++i) {
        const int bound = n - 1 - i;
        if (code[static_cast<std::size_t>(i)] < 0 || code[static_cast<std::size_t>(i)] > bound)
            throw CodeOutOfRange(std::string(kind) + ": entry " + std::to_string(i + 1) +
                                 " is " + std::to_string(code[static_cast<std::size_t>(i)]) +
                                 ", outside 0.." + std::to_string(bound));
    }
}

}  // namespace

Code lehmer_encode(const Permutation& p) {
    const int n = p.degree();
    Code code(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int count = 0;
        for (int j = i + 1; j <= n; ++j)
            if (p(j) < p(i)) ++count;
        code[static_cast<std::size_t>(i - 1)] = count;
    }
    return code;
}

Permutation lehmer_decode(const Code& code) {
    validate_code_bounds(code, "lehmer code");
    const int n = static_cast<int>(code.size());
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) pool.push_back(v);
    std::vector<int> line;
    line.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto idx = static_cast<std::size_t>(code[static_cast<std::size_t>(i)]);
        line.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(line));
}

Code major_encode(const Permutation& p) {
    const int n = p.degree();
    // majs[i] = major index of the word with all values below i+1 removed,
    // for i = 0..n (so majs[0] is maj of the full word and majs[n] is 0).
    std::vector<int> majs;
    majs.reserve(static_cast<std::size_t>(n) + 1);
    std::vector<int> word = p.line();
    majs.push_back(major_index_of(word));
    for (int threshold = 1; threshold <= n; ++threshold) {
        std::vector<int> kept;
        kept.reserve(word.size());
        for (int v : word)
            if (v > threshold) kept.push_back(v);
        word = std::move(kept);
        majs.push_back(major_index_of(word));
    }
    Code code(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        code[static_cast<std::size_t>(i)] = majs[static_cast<std::size_t>(i)] -
                                            majs[static_cast<std::size_t>(i) + 1];
    return code;
}

Permutation major_decode(const Code& code) {
    validate_code_bounds(code, "major code");
    const int n = static_cast<int>(code.size());
    // Rebuild from the smallest-value side.  If the values below i+1 are
    // removed and the rest relabeled down to 1..m-1, re-inserting a new
    // smallest value at each of the m possible gaps produces every major
    // index increment 0..m-1 exactly once, so each code entry pins a unique
    // insertion point.
    std::vector<int> current{1};
    for (int i = n - 2; i >= 0; --i) {
        const int m = static_cast<int>(current.size()) + 1;
        const int target = code[static_cast<std::size_t>(i)];
        std::vector<int> base;
        base.reserve(current.size());
        for (int v : current) base.push_back(v + 1);
        const int base_maj = major_index_of(base);
        bool found = false;
        for (int gap = 0; gap < m; ++gap) {
            std::vector<int> candidate = base;
            candidate.insert(candidate.begin() + gap, 1);
            if (major_index_of(candidate) - base_maj == target) {
                current = std::move(candidate);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("major code decode: no insertion point for entry " +
                                   std::to_string(i + 1));
    }
    return Permutation(std::move(current));
}

std::string code_str(const Code& code) {
    std::string s = "(";
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(code[i]);
    }
    return s + ")";
}

Code parse_code(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw CodeOutOfRange("empty code string");
    std::string s = text.substr(begin, end - begin + 1);
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw CodeOutOfRange("unterminated '(' in \"" + text + "\"");
        s = s.substr(1, s.size() - 2);
    }
    Code code;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        std::size_t digits = pos;
        while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
        if (digits == pos) throw CodeOutOfRange("expected a number in \"" + text + "\"");
        code.push_back(std::stoi(s.substr(pos, digits - pos)));
        pos = digits;
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        if (pos < s.size()) {
            if (s[pos] != ',') throw CodeOutOfRange("expected ',' in \"" + text + "\"");
            ++pos;
        }
    }
    if (code.empty()) throw CodeOutOfRange("empty code string");
    return code;
}

}  // namespace homomesy
