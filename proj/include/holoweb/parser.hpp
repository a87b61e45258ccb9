#pragma once

#include "holoweb/ratfunc.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace holoweb {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Expression grammar: + - * / ^ ( ), integer literals (rationals via /),
// the imaginary unit i, and exactly the variables in `vars`. Multiplication
// must be written out; exponents are nonnegative integer literals.
RationalFunction parse_ratfunc(std::string_view text, const std::vector<std::string>& vars);

// As parse_ratfunc, but the result must reduce to a polynomial.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

// A closed expression (no variables) evaluating to one Gaussian rational.
GaussianRational parse_gaussian(std::string_view text);

} // namespace holoweb
