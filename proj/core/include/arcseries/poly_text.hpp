#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arcseries/polynomial.hpp"

namespace arcs {

// Text form of polynomials:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coef ('*' factor)* | factor ('*' factor)*
//   coef   := int | int '/' posint
//   factor := var ['^' posint]
//   var    := 'y' nat | 'x' posint '_' nat        (y<i> is x1_<i>)
// Whitespace between tokens is insignificant.  Canonical printing lists the
// terms strictly descending under the polynomial's order, each coefficient
// reduced, factors ascending by (level, coord), coordinate 1 printed in the
// y form; a bare integer denotes the constant term.

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

Polynomial parse_polynomial(std::string_view text, MonomialOrder order = {});

std::string to_string(const Monomial& m);
std::string to_string(const Term& t);
std::string to_string(const Polynomial& p);

}  // namespace arcs
