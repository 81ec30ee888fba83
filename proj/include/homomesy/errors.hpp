#ifndef HOMOMESY_ERRORS_HPP
#define HOMOMESY_ERRORS_HPP

#include <stdexcept>

namespace homomesy {

struct NotAPermutation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegreeTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CodeOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RankOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct MalformedPattern : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParameterOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotADivisor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MalformedFormula : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A walk under a registered map failed to close up into a cycle.  This can
// only happen if a map implementation is not a bijection, so it is a logic
// error rather than an input error.
struct NonClosure : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace homomesy

#endif
