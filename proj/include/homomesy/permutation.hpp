#ifndef HOMOMESY_PERMUTATION_HPP
#define HOMOMESY_PERMUTATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homomesy {

// Permutations of {1..n} in one-line notation, 1-based everywhere: sigma(i)
// is the value at position i.  Instances are immutable; all operations
// return new objects.
class Permutation {
public:
    // Construction validates: every value in 1..n exactly once.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    // The n-cycle 2 3 ... n 1 (each value shifted up by one, wrapping).
    static Permutation long_cycle(int n);

    // Accepts the compact digit form "52134" (degree <= 9) or the bracketed
    // form "[5,2,1,3,4]" (any degree, whitespace allowed).
    static Permutation parse(const std::string& text);

    int degree() const { return static_cast<int>(line_.size()); }

    // Value at 1-based position i.
    int operator()(int i) const { return line_[static_cast<std::size_t>(i - 1)]; }

    // 1-based position of value v, i.e. inverse(v).
    int position_of(int v) const;

    const std::vector<int>& line() const { return line_; }

    Permutation inverse() const;

    // Function composition: (a.compose(b))(i) == a(b(i)).
    Permutation compose(const Permutation& other) const;

    // One-line notation read right to left: sigma_n ... sigma_1.
    Permutation reverse() const;

    // Each value v replaced by n+1-v.
    Permutation complement() const;

    // Lexicographic rank, 1-based: identity has rank 1, the reverse of the
    // identity has rank n!.  Degrees up to 20 fit in 64 bits.
    std::int64_t rank() const;

    static Permutation unrank(int n, std::int64_t rank);

    // Compact digit string for degree <= 9, bracketed form otherwise.
    std::string str() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.line_ == b.line_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.line_ < b.line_;
    }

private:
    struct Unchecked {};
    Permutation(std::vector<int> one_line, Unchecked) : line_(std::move(one_line)) {}

    std::vector<int> line_;
};

// n! as int64; valid for 0 <= n <= 20.
std::int64_t factorial(int n);

// Exhaustive enumeration is bounded by memory and time, not by rank
// arithmetic; degree 10 (3.6M permutations) is the supported ceiling.
inline constexpr int kMaxEnumerationDegree = 10;

// Rank arithmetic is exact in 64 bits through degree 20.
inline constexpr int kMaxRankDegree = 20;

// Streams all n! permutations of degree n in lexicographic order, i.e. the
// k-th permutation handed out has rank k.  Nothing is materialized.
class PermutationStream {
public:
    explicit PermutationStream(int n);

    // Returns std::nullopt once the stream is exhausted.
    std::optional<Permutation> next();

private:
    std::vector<int> current_;
    bool done_;
    bool first_;
};

}  // namespace homomesy

#endif
