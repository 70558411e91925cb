#ifndef MAHLERLAB_ERRORS_HPP
#define MAHLERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ml {

// Requested accuracy cannot be certified within the configured summation caps.
class PrecisionUnreachable : public std::runtime_error {
public:
    explicit PrecisionUnreachable(const std::string& what) : std::runtime_error(what) {}
};

// Root bracketing failed (endpoints do not straddle the target, or the
// monotonicity pre-scan of the inverted map failed).
class BracketError : public std::runtime_error {
public:
    explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

// An L-value was requested beyond the coefficient range at hand.
class InsufficientCoefficients : public std::runtime_error {
public:
    InsufficientCoefficients(const std::string& what, long required)
        : std::runtime_error(what), required_terms(required) {}
    long required_terms;
};

// Sequence acceleration stopped improving before the target accuracy.
class AccelerationStagnation : public std::runtime_error {
public:
    explicit AccelerationStagnation(const std::string& what) : std::runtime_error(what) {}
};

// A Mahler-measure argument outside every implemented evaluation route.
class UnroutableArgument : public std::runtime_error {
public:
    explicit UnroutableArgument(const std::string& what) : std::runtime_error(what) {}
};

// Functional-equation sign for which no conversion is defined.
class UnsupportedSign : public std::runtime_error {
public:
    explicit UnsupportedSign(const std::string& what) : std::runtime_error(what) {}
};

// Malformed coefficient file; carries the 1-based offending line.
class CoeffParseError : public std::runtime_error {
public:
    CoeffParseError(const std::string& what, long line_no)
        : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    long line;
};

} // namespace ml

#endif
