#pragma once

// The de Rham-Witt groups of Z_(p):
//   W_n Omega^0 = sum_{i=0}^{n-1} Z_(p) V^i(1),
//   W_n Omega^1 = sum_{i=1}^{n-1} Z/p^i dV^i(1),
//   W_n Omega^q = 0 for q >= 2.

#include <string>
#include <vector>

#include "drwkit/exactnum.hpp"

namespace drwkit::drw {

class ZpDrwForm {
 public:
  /// Zero form of degree q (any integer; only 0 and 1 carry coordinates).
  ZpDrwForm(unsigned p, std::size_t n, int q);
  /// q = 0: coords[i] is the V^i(1) coefficient.
  /// q = 1: coords[i] is the dV^i(1) coefficient, reduced mod p^i (coords[0] ignored).
  ZpDrwForm(unsigned p, std::size_t n, int q, std::vector<ZpLocal> coords);

  static ZpDrwForm one(unsigned p, std::size_t n);
  static ZpDrwForm v_basis(unsigned p, std::size_t n, std::size_t i);   // V^i(1)
  static ZpDrwForm dv_basis(unsigned p, std::size_t n, std::size_t i);  // dV^i(1), i >= 1
  /// Element of W_n(Z_(p)) given by its coordinates in the V^i(1) basis.
  static ZpDrwForm from_vbasis(unsigned p, std::vector<ZpLocal> coords);

  unsigned prime() const { return p_; }
  std::size_t length() const { return n_; }
  int degree() const { return q_; }
  /// True for the degrees where the group is nonzero (given n).
  bool has_coordinates() const { return q_ == 0 || q_ == 1; }
  const std::vector<ZpLocal>& coords() const { return coords_; }
  ZpLocal coeff(std::size_t i) const;

  bool is_zero() const;
  /// Zero modulo p: every coordinate divisible by p.
  bool is_zero_mod_p() const;

  friend bool operator==(const ZpDrwForm&, const ZpDrwForm&) = default;

  ZpDrwForm operator-() const;
  friend ZpDrwForm operator+(const ZpDrwForm& a, const ZpDrwForm& b);
  friend ZpDrwForm operator-(const ZpDrwForm& a, const ZpDrwForm& b);

  /// "c0*1 + c1*V(1) + ..." or "c1*dV(1) + c2*dV2(1) + ...", "0" if zero.
  std::string to_string() const;
  /// Same, with coefficients reduced to {0..p-1}.
  std::string to_string_mod_p() const;
  /// Inverse of to_string. The degree is read off the basis names; `q` is
  /// required for "0" and checked otherwise (q < 0: infer, "0" is degree 0).
  static ZpDrwForm parse(const std::string& text, unsigned p, std::size_t n, int q = -1);

 private:
  void normalize();

  unsigned p_;
  std::size_t n_;
  int q_;
  std::vector<ZpLocal> coords_;  // size n when has_coordinates(), else empty
};

void check_same_shape(const ZpDrwForm& a, const ZpDrwForm& b);

ZpDrwForm zp_add(const ZpDrwForm& a, const ZpDrwForm& b);
ZpDrwForm zp_scalar(const ZpLocal& c, const ZpDrwForm& x);
ZpDrwForm zp_mul(const ZpDrwForm& x, const ZpDrwForm& y);

ZpDrwForm zp_d(const ZpDrwForm& x);
/// F: length n -> n-1.
ZpDrwForm zp_F(const ZpDrwForm& x);
/// F^s: length n -> n-s.
ZpDrwForm zp_F(const ZpDrwForm& x, std::size_t s);
/// V: length n -> n+1; on degree 1, V(c dV^i(1)) = pc dV^{i+1}(1).
ZpDrwForm zp_V(const ZpDrwForm& x);
/// R: length n -> n-1, drops the top index.
ZpDrwForm zp_restrict(const ZpDrwForm& x);

/// d[x]_n, with [x]_n expanded in the V^i(1) basis.
ZpDrwForm d_teich(const ZpLocal& x, std::size_t n);
/// [x]_n as a degree-0 form.
ZpDrwForm teich_form(const ZpLocal& x, std::size_t n);

struct AnnihilationEntry {
  std::size_t j;
  ZpLocal raw;    // dV^j(1)-coefficient of [p]_n dV^j(1) before reduction
  BigInt residue; // raw mod p^j
};

struct AnnihilationReport {
  unsigned p;
  std::size_t n;
  std::vector<AnnihilationEntry> entries;
  bool passed;
};

/// Multiplies [p]_n into every dV^j(1) and records the resulting coefficients.
AnnihilationReport check_p_annihilation(std::size_t n, unsigned p);

/// Expands V^i([x p^2]_{n-i}) for 0 <= i < n and checks that every coordinate
/// in the V^k(1) basis is divisible by p.
bool check_mod_p2_divisibility(std::size_t n, unsigned p, const ZpLocal& x);

}  // namespace drwkit::drw
