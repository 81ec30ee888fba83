#ifndef HOMOMESY_FORMULA_HPP
#define HOMOMESY_FORMULA_HPP

#include <map>
#include <string>

#include "homomesy/rational.hpp"

namespace homomesy {

// Evaluates a closed-form expression over exact rationals.  Supported
// syntax, enough for every average in the expected-results table:
//
//   integers, the variables bound in vars (typically n and i)
//   + - * /   exact rational arithmetic
//   ^         integer power (nonnegative exponent)
//   x!        factorial of an integer
//   floor(x), ceil(x)
//   binom(a, b)   binomial coefficient, integers
//   H(k)          harmonic number 1 + 1/2 + ... + 1/k
//
// Throws MalformedFormula on syntax errors, unknown names, or arguments
// outside a function's domain.
Rational eval_formula(const std::string& text, const std::map<std::string, Rational>& vars);

}  // namespace homomesy

#endif
