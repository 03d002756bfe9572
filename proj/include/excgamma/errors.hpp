#pragma once

#include <stdexcept>
#include <string>

namespace excgamma {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string& var)
        : Error("unknown variable '" + var + "'"), variable(var) {}
    std::string variable;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotHomogeneous : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("zero polynomial has no palindromic structure") {}
};

/// Carries the first coefficient pair that breaks the symmetry a_{r+i} = a_{n-i}.
class NotPalindromic : public Error {
public:
    NotPalindromic(unsigned low, unsigned high, std::string low_value, std::string high_value)
        : Error("not palindromic: coefficient of t^" + std::to_string(low) + " is " + low_value +
                " but coefficient of t^" + std::to_string(high) + " is " + high_value),
          low_exponent(low), high_exponent(high),
          low_coefficient(std::move(low_value)), high_coefficient(std::move(high_value)) {}
    unsigned low_exponent;
    unsigned high_exponent;
    std::string low_coefficient;
    std::string high_coefficient;
};

class EvenLength : public Error {
public:
    using Error::Error;
};

class NotGammaPositive : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class InvalidSpec : public Error {
public:
    using Error::Error;
};

class UndefinedStatistic : public Error {
public:
    using Error::Error;
};

class UnsupportedClass : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class DuplicateEntries : public Error {
public:
    using Error::Error;
};

class NonIncreasingLetters : public Error {
public:
    using Error::Error;
};

/// A halving that must be exact by theorem was not. Always an implementation bug.
class OddCoefficient : public Error {
public:
    using Error::Error;
};

class MissingBase : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace excgamma
