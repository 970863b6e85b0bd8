#pragma once

// W_n Omega^q of Z_(p)[eps] in the direct-sum form
//
//   a_00 + a_01 [eps] + b_0 d[eps] + sum_{s=1}^{n-1} ( V^s(a_s [eps]) + dV^s(b_s [eps]) )
//
// with a_00, a_01 in W_n Omega^q, b_0 in W_n Omega^{q-1}, a_s in W_{n-s} Omega^q and
// b_s in W_{n-s} Omega^{q-1}, all over Z_(p).
//
// EpsModel::DirectSum treats the summands as free. EpsModel::Reduced divides by the
// relations V^i(1)[eps] = 0 and V^i(1) d[eps] = 0 (i >= 1) and their consequences,
// which hold in the Witt vectors of Z_(p)[eps]; see the README for the comparison.

#include <optional>
#include <string>
#include <vector>

#include "drwkit/drw_base.hpp"
#include "drwkit/exactnum.hpp"

namespace drwkit::drw {

enum class EpsModel { DirectSum, Reduced };

std::string_view name(EpsModel model);
EpsModel parse_model(const std::string& text);

struct EpsDrwForm {
  unsigned p;
  std::size_t n;
  int q;
  EpsModel model;
  ZpDrwForm head;                 // degree q, length n
  ZpDrwForm eps;                  // degree q, length n
  ZpDrwForm deps;                 // degree q-1, length n
  std::vector<ZpDrwForm> deep_v;  // [s-1]: degree q, length n-s
  std::vector<ZpDrwForm> deep_dv; // [s-1]: degree q-1, length n-s

  static EpsDrwForm zero(unsigned p, std::size_t n, int q, EpsModel model = EpsModel::DirectSum);
  static EpsDrwForm from_head(const ZpDrwForm& a, EpsModel model = EpsModel::DirectSum);
  /// [eps]_n.
  static EpsDrwForm teich_eps(unsigned p, std::size_t n, EpsModel model = EpsModel::DirectSum);

  const ZpDrwForm& deep_v_at(std::size_t s) const { return deep_v.at(s - 1); }
  const ZpDrwForm& deep_dv_at(std::size_t s) const { return deep_dv.at(s - 1); }

  bool is_zero() const;
  /// Everything except the head.
  EpsDrwForm rest() const;
  /// Applies the model's relations; every operation returns canonical forms.
  void canonicalize();

  friend bool operator==(const EpsDrwForm&, const EpsDrwForm&) = default;

  std::string to_string() const;
  /// Inverse of to_string; components are "(a)", "(a)[eps]", "(b)d[eps]",
  /// "V^s((a)[eps])" and "dV^s((b)[eps])". q < 0 infers the degree from the
  /// first component.
  static EpsDrwForm parse(const std::string& text, unsigned p, std::size_t n, int q = -1,
                          EpsModel model = EpsModel::DirectSum);
};

EpsDrwForm operator+(const EpsDrwForm& a, const EpsDrwForm& b);
EpsDrwForm operator-(const EpsDrwForm& a, const EpsDrwForm& b);
EpsDrwForm operator-(const EpsDrwForm& a);
EpsDrwForm eps_scalar(const ZpLocal& c, const EpsDrwForm& x);

EpsDrwForm eps_d(const EpsDrwForm& x);
EpsDrwForm eps_F(const EpsDrwForm& x);
EpsDrwForm eps_V(const EpsDrwForm& x);
EpsDrwForm eps_restrict(const EpsDrwForm& x);

/// a' * x for a' in W_n Omega^{q'} of Z_(p).
EpsDrwForm left_mul_head(const ZpDrwForm& a, const EpsDrwForm& x);
EpsDrwForm eps_mul(const EpsDrwForm& x, const EpsDrwForm& y);

/// Rebuilds x from its components using only [eps], d, V and head multiplication.
EpsDrwForm reassemble(const EpsDrwForm& x);

/// [u]_n, via the Witt normal form of W_n(Z_(p)[eps]).
EpsDrwForm teich_eps_elem(const DualElem<ZpLocal>& u, std::size_t n,
                          EpsModel model = EpsModel::DirectSum);
EpsDrwForm d_teich_eps(const DualElem<ZpLocal>& u, std::size_t n,
                       EpsModel model = EpsModel::DirectSum);

/// Quotient by all V^s and dV^s summands.
struct OmegaQuotForm {
  ZpDrwForm head;
  ZpDrwForm eps;
  ZpDrwForm deps;

  friend bool operator==(const OmegaQuotForm&, const OmegaQuotForm&) = default;
  std::string to_string() const;
};

OmegaQuotForm omega_project(const EpsDrwForm& x);

struct CertificationReport {
  unsigned p = 0;
  std::size_t n = 0;
  EpsModel model = EpsModel::DirectSum;
  std::optional<std::string> symbol;
  ZpDrwForm witness{3, 1, 1};          // d[eps]-coefficient of the projected product
  std::vector<BigInt> witness_coordinates;  // dV^i(1)-coefficients mod p, i = 1..n-1
  bool claim1 = false;
  bool claim3 = false;
  bool claim4 = false;
  bool claim5 = false;
  bool nonzero = false;
  bool reduced_nonzero = false;
  std::optional<bool> agrees_with_drw;
};

/// d[1+p]_n d[1+eps]_n, projected and reduced mod p.
CertificationReport certify_nonvanishing(unsigned p, std::size_t n,
                                         EpsModel model = EpsModel::DirectSum);

std::string to_text(const CertificationReport& r);
std::string to_machine(const CertificationReport& r);

}  // namespace drwkit::drw
