#pragma once

// Parser for sums of monomials with rational coefficients, shared by every
// element syntax (integers, Z_(p) fractions, dual numbers, F_p polynomials).

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "drwkit/exactnum.hpp"

namespace drwkit {

using Exponents = std::vector<unsigned>;

/// Sparse polynomial over Q in the caller's variables.
struct RationalPoly {
  std::size_t nvars = 0;
  std::map<Exponents, mpq_class> terms;  // no zero coefficients

  static RationalPoly constant(std::size_t nvars, const mpq_class& c);
  bool is_constant() const;
  mpq_class constant_term() const;
};

/// Parses `text` as a polynomial expression in `variables`. Identifiers in
/// `constants` are replaced by their values. Supports + - * ^, parentheses,
/// integer literals and division by nonzero constants. Throws ParseError.
RationalPoly parse_expression(const std::string& text,
                              const std::vector<std::string>& variables,
                              const std::map<std::string, BigInt>& constants = {});

}  // namespace drwkit
