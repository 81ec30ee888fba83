#include "homomesy/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "homomesy/errors.hpp"

namespace homomesy {

namespace {

const std::int64_t* factorial_table() {
    // 20! is the last factorial below 2^63.
    static const std::int64_t table[] = {
        1LL,
        1LL,
        2LL,
        6LL,
        24LL,
        120LL,
        720LL,
        5040LL,
        40320LL,
        362880LL,
        3628800LL,
        39916800LL,
        479001600LL,
        6227020800LL,
        87178291200LL,
        1307674368000LL,
        20922789888000LL,
        355687428096000LL,
        6402373705728000LL,
        121645100408832000LL,
        2432902008176640000LL,
    };
    return table;
}

}  // namespace

std::int64_t factorial(int n) {
    if (n < 0 || n > kMaxRankDegree)
        throw DegreeTooLarge("factorial: degree " + std::to_string(n) +
                             " outside 0.." + std::to_string(kMaxRankDegree));
    return factorial_table()[n];
}

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line)) {
    const int n = degree();
    if (n == 0) throw NotAPermutation("empty one-line notation");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : line_) {
        if (v < 1 || v > n)
            throw NotAPermutation("value " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)])
            throw NotAPermutation("duplicate value " + std::to_string(v));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw NotAPermutation("degree must be at least 1");
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    return Permutation(std::move(line), Unchecked{});
}

Permutation Permutation::long_cycle(int n) {
    if (n < 1) throw NotAPermutation("degree must be at least 1");
    std::vector<int> line(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = i + 2 > n ? 1 : i + 2;
    return Permutation(std::move(line), Unchecked{});
}

Permutation Permutation::parse(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw NotAPermutation("empty permutation string");
    std::string s = text.substr(begin, end - begin + 1);

    std::vector<int> line;
    if (s.front() == '[') {
        if (s.back() != ']') throw NotAPermutation("unterminated '[' in \"" + text + "\"");
        std::string body = s.substr(1, s.size() - 2);
        std::size_t pos = 0;
        while (pos < body.size()) {
            while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
            std::size_t digits = pos;
            while (digits < body.size() && std::isdigit(static_cast<unsigned char>(body[digits])))
                ++digits;
            if (digits == pos)
                throw NotAPermutation("expected a number in \"" + text + "\"");
            line.push_back(std::stoi(body.substr(pos, digits - pos)));
            pos = digits;
            while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
            if (pos < body.size()) {
                if (body[pos] != ',')
                    throw NotAPermutation("expected ',' in \"" + text + "\"");
                ++pos;
            }
        }
        if (line.empty()) throw NotAPermutation("empty permutation string");
    } else {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw NotAPermutation("unexpected character '" + std::string(1, c) +
                                      "' in \"" + text + "\"");
            line.push_back(c - '0');
        }
    }
    return Permutation(std::move(line));
}

int Permutation::position_of(int v) const {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) == v) return i;
    throw DegreeMismatch("value " + std::to_string(v) + " not present in degree " +
                         std::to_string(degree()));
}

Permutation Permutation::inverse() const {
    const int n = degree();
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree())
        throw DegreeMismatch("compose: degrees " + std::to_string(degree()) + " and " +
                             std::to_string(other.degree()) + " differ");
    const int n = degree();
    std::vector<int> line(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) line[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    return Permutation(std::move(line), Unchecked{});
}

Permutation Permutation::reverse() const {
    std::vector<int> line(line_.rbegin(), line_.rend());
    return Permutation(std::move(line), Unchecked{});
}

Permutation Permutation::complement() const {
    const int n = degree();
    std::vector<int> line(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = n + 1 - line_[static_cast<std::size_t>(i)];
    return Permutation(std::move(line), Unchecked{});
}

std::int64_t Permutation::rank() const {
    const int n = degree();
    if (n > kMaxRankDegree)
        throw DegreeTooLarge("rank: degree " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxRankDegree));
    // Lexicographic rank from the inversion-table digits: rank - 1 written in
    // the factorial number system is (L_1, ..., L_n) where L_i counts later
    // values smaller than sigma_i.
    std::int64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j < n; ++j)
            if (line_[static_cast<std::size_t>(j)] < line_[static_cast<std::size_t>(i)])
                ++smaller_later;
        r += smaller_later * factorial(n - 1 - i);
    }
    return r + 1;
}

Permutation Permutation::unrank(int n, std::int64_t rank) {
    if (n < 1 || n > kMaxRankDegree)
        throw DegreeTooLarge("unrank: degree " + std::to_string(n) + " outside 1.." +
                             std::to_string(kMaxRankDegree));
    if (rank < 1 || rank > factorial(n))
        throw RankOutOfRange("unrank: rank " + std::to_string(rank) + " outside 1.." +
                             std::to_string(factorial(n)) + " at degree " + std::to_string(n));
    std::int64_t r = rank - 1;
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> line;
    line.reserve(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        std::int64_t f = factorial(i);
        auto idx = static_cast<std::size_t>(r / f);
        r %= f;
        line.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(line), Unchecked{});
}

std::string Permutation::str() const {
    if (degree() <= 9) {
        std::string s;
        for (int v : line_) s.push_back(static_cast<char>('0' + v));
        return s;
    }
    std::string s = "[";
    for (std::size_t i = 0; i < line_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(line_[i]);
    }
    return s + "]";
}

PermutationStream::PermutationStream(int n) : done_(false), first_(true) {
    if (n < 1 || n > kMaxEnumerationDegree)
        throw DegreeTooLarge("enumeration: degree " + std::to_string(n) + " outside 1.." +
                             std::to_string(kMaxEnumerationDegree));
    current_.resize(static_cast<std::size_t>(n));
    std::iota(current_.begin(), current_.end(), 1);
}

std::optional<Permutation> PermutationStream::next() {
    if (done_) return std::nullopt;
    if (first_) {
        first_ = false;
        return Permutation(std::vector<int>(current_));
    }
    if (!std::next_permutation(current_.begin(), current_.end())) {
        done_ = true;
        return std::nullopt;
    }
    return Permutation(std::vector<int>(current_));
}

}  // namespace homomesy
