#pragma once

#include <stdexcept>
#include <string>

namespace sincsum {

// Argument outside the domain of an operation (non-finite input, r too
// small, x outside [0,1], ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A series could not reach the requested tolerance within its term budget.
class precision_unreachable : public std::runtime_error {
public:
    precision_unreachable(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}

    double achieved_bound() const noexcept { return achieved_; }

private:
    double achieved_;
};

// Exact arithmetic asked to go beyond the supported size (factorials past
// 201!, polynomials past r = 100).
class size_limit_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// A structural certificate failed; for the polynomial route this would
// contradict the nonnegativity of the coefficients.
class certificate_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sincsum
