#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace motivic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Precondition violated by the caller's data (bad exponent bounds, missing symbols, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Input document does not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const Integer& required, std::uint64_t budget)
        : Error("evaluation budget exceeded: need " + required.str() + " evaluations, budget is " +
                std::to_string(budget)),
          required_(required), budget_(budget) {}

    const Integer& required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    Integer required_;
    std::uint64_t budget_;
};

inline std::string to_string(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Integer factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Smallest integer >= r.
inline Integer ceil(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Integer num = numerator(r);
    Integer den = denominator(r);
    Integer q = num / den;  // truncates toward zero
    if (q * den != num && num > 0) q += 1;
    return q;
}

inline Integer floor(const Rational& r) { return -ceil(-r); }

inline bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

}  // namespace motivic
