#pragma once

// p-independence, p-rank of explicit field towers, p-dimension of monomial
// quotients of polynomial rings and truncated p-basis checks.

#include <optional>
#include <string>
#include <vector>

#include "drwkit/fppoly.hpp"

namespace drwkit::pdim {

struct TowerStep {
  enum class Kind { Transcendental, Finite } kind;
  std::string name;      // transcendental steps
  unsigned degree = 0;   // finite steps, >= 2
  bool separable = true;

  friend bool operator==(const TowerStep&, const TowerStep&) = default;
};

/// F_p followed by adjunctions of transcendentals and finite extensions.
class FieldTower {
 public:
  FieldTower() = default;
  explicit FieldTower(std::vector<TowerStep> steps);

  /// "Fp | +t1 | +t2 | fin(9)"; a finite step may be written fin(9, insep).
  static FieldTower parse(const std::string& text);

  const std::vector<TowerStep>& steps() const { return steps_; }
  /// Appends the steps of `other` (whose base F_p is dropped).
  FieldTower concat(const FieldTower& other) const;
  std::size_t transcendence_degree() const;
  std::string to_string() const;

  friend bool operator==(const FieldTower&, const FieldTower&) = default;

 private:
  std::vector<TowerStep> steps_;
};

/// p-rank: finite steps contribute nothing, transcendental steps one each.
std::size_t prank(const FieldTower& tower);

/// dy_1 ^ ... ^ dy_s != 0 in the differentials of F_p(t_1..t_m): the Jacobian has rank s.
bool p_independent(const std::vector<FpRational>& elements);

struct MonomialAlgebra {
  FieldTower field;
  std::size_t nvars = 0;
  std::vector<Exponents> generators;

  /// Generators as "x1*x2, x3^2" or "(1,1,0), (0,0,2)"; an empty string is the zero ideal.
  static MonomialAlgebra parse(const FieldTower& field, std::size_t nvars, const std::string& ideal);
};

/// Minimal primes of the monomial ideal, as sorted variable index sets.
std::vector<std::vector<std::size_t>> minimal_primes(const MonomialAlgebra& a);
/// Krull dimension nvars - (smallest variable set meeting every generator).
std::size_t krull_dimension(const MonomialAlgebra& a);
/// prank(field) + Krull dimension; throws ImproperIdeal when 1 is in the ideal.
std::size_t pdim_algebra(const MonomialAlgebra& a);
/// Supremum of prank + dim over all monomial primes containing the ideal.
std::size_t pdim_by_primes(const MonomialAlgebra& a);

struct PBasisReport {
  long max_degree;
  std::optional<long> failed_degree;
  std::string reason;  // "dependent" or "not spanning"
  bool passed;
};

/// Default truncation p * (largest family degree) * 3.
long default_pbasis_degree(const std::vector<FpPoly>& family);

/// Checks, for each bound D' <= max_degree, that the products g^p y^alpha
/// (alpha_j < p, total degree <= D') are independent and span the polynomials
/// of degree <= D'.
PBasisReport p_basis_report(const std::vector<FpPoly>& family, long max_degree);
PBasisReport p_basis_report_parallel(const std::vector<FpPoly>& family, long max_degree);
bool p_basis_check(const std::vector<FpPoly>& family, std::optional<long> max_degree = std::nullopt);

}  // namespace drwkit::pdim
