#pragma once

// Sparse multivariate polynomials and rational functions over a prime field.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "drwkit/error.hpp"
#include "drwkit/expr.hpp"

namespace drwkit {

std::vector<std::string> default_variable_names(std::size_t nvars, const std::string& stem = "x");

/// Polynomial in F_p[x_0, ..., x_{r-1}]. Terms are kept in a lexicographically
/// ordered map without zero coefficients; printing goes from the lex-largest
/// monomial downwards.
class FpPoly {
 public:
  using Terms = std::map<Exponents, std::uint32_t>;

  FpPoly(unsigned p, std::size_t nvars);

  static FpPoly constant(unsigned p, std::size_t nvars, long long c);
  static FpPoly monomial(unsigned p, Exponents exps, long long c = 1);
  static FpPoly variable(unsigned p, std::size_t nvars, std::size_t index);

  unsigned prime() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Maximal total degree; -1 for the zero polynomial.
  long total_degree() const;
  bool is_homogeneous() const;
  std::uint32_t coefficient(const Exponents& e) const;
  /// Lex-largest term; the polynomial must be nonzero.
  const std::pair<const Exponents, std::uint32_t>& leading_term() const;

  void add_term(const Exponents& e, long long c);

  FpPoly operator-() const;
  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

  FpPoly scaled(std::uint32_t c) const;
  FpPoly pow(unsigned long e) const;
  FpPoly derivative(std::size_t var) const;
  /// f^p, computed as the coefficient-preserving exponent scaling (F_p is perfect).
  FpPoly frobenius() const;
  /// Substitutes polynomials (all in a common ring) for the variables.
  FpPoly substitute(const std::vector<FpPoly>& values) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;
  static FpPoly parse(const std::string& text, unsigned p, const std::vector<std::string>& names);

 private:
  void check_compatible(const FpPoly& o) const;

  unsigned p_;
  std::size_t nvars_;
  Terms terms_;
};

std::uint32_t fp_inverse(std::uint32_t a, unsigned p);
std::uint32_t fp_reduce(long long c, unsigned p);
std::string monomial_to_string(const Exponents& e, const std::vector<std::string>& names);

/// Element of F_p(x_0, ..., x_{r-1}); the denominator is nonzero and its
/// lex-leading coefficient is 1.
class FpRational {
 public:
  explicit FpRational(FpPoly num);
  FpRational(FpPoly num, FpPoly den);

  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  unsigned prime() const { return num_.prime(); }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  FpRational operator-() const;
  friend FpRational operator+(const FpRational& a, const FpRational& b);
  friend FpRational operator-(const FpRational& a, const FpRational& b);
  friend FpRational operator*(const FpRational& a, const FpRational& b);
  friend FpRational operator/(const FpRational& a, const FpRational& b);
  /// Equality as elements of the field (cross multiplication).
  friend bool operator==(const FpRational& a, const FpRational& b);

  FpRational derivative(std::size_t var) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;
  /// Accepts "poly" or "(poly)/(poly)".
  static FpRational parse(const std::string& text, unsigned p, const std::vector<std::string>& names);

 private:
  void normalize();

  FpPoly num_;
  FpPoly den_;
};

/// Rank over the fraction field F_p(x) of a matrix with polynomial entries,
/// by fraction-free elimination.
std::size_t fraction_field_rank(std::vector<std::vector<FpPoly>> rows);

}  // namespace drwkit
