#pragma once

// De Rham complex of F_p[x_0, ..., x_{r-1}], the inverse Cartier operator and the
// towers B_n, Z_n, computed slice by slice in the total degree
// |monomial| + form degree (d preserves it, gamma multiplies it by p).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "drwkit/fp_linalg.hpp"
#include "drwkit/fppoly.hpp"

namespace drwkit::cartier {

using IndexSet = std::vector<unsigned>;  // strictly increasing
using FormKey = std::pair<Exponents, IndexSet>;

class PolyForm {
 public:
  using Terms = std::map<FormKey, std::uint32_t>;

  PolyForm(unsigned p, std::size_t r, int degree);
  static PolyForm from_poly(const FpPoly& f, const IndexSet& dx = {});

  unsigned prime() const { return p_; }
  std::size_t nvars() const { return r_; }
  int degree() const { return i_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degrees occurring in the form.
  std::vector<long> total_degrees() const;

  /// Adds c x^e dx_{j_1} ^ ... ^ dx_{j_i}; the indices may be unsorted.
  void add_term(const Exponents& e, IndexSet dx, long long c);

  PolyForm operator-() const;
  friend PolyForm operator+(const PolyForm& a, const PolyForm& b);
  friend PolyForm operator-(const PolyForm& a, const PolyForm& b);
  friend bool operator==(const PolyForm&, const PolyForm&) = default;

  /// Coefficient polynomial of dx_I.
  FpPoly coefficient(const IndexSet& dx) const;

  /// "x0^2 dx0 + (x0 + 1) dx0^dx1"; degree-0 forms print as polynomials.
  std::string to_string() const;
  /// Inverse of to_string; `degree` is used when the text is "0".
  static PolyForm parse(const std::string& text, unsigned p, std::size_t r, int degree = 0);

 private:
  void check_compatible(const PolyForm& o) const;

  unsigned p_;
  std::size_t r_;
  int i_;
  Terms terms_;
};

PolyForm form_d(const PolyForm& w);
PolyForm form_wedge(const PolyForm& a, const PolyForm& b);
PolyForm poly_times(const FpPoly& f, const PolyForm& w);
/// gamma(f dx_I) = f^p prod_{j in I} x_j^{p-1} dx_I; the result is closed.
PolyForm gamma(const PolyForm& w);

struct Context {
  unsigned p;
  std::size_t r;
};

/// Monomial basis of the slice of Omega^i in total degree d, ordered like PolyForm keys.
std::vector<FormKey> slice_basis(std::size_t r, int i, long d);
FpVector to_coords(const PolyForm& w, const std::vector<FormKey>& basis);
PolyForm from_coords(const Context& ctx, int i, const std::vector<FormKey>& basis, const FpVector& v);

FpSubspace slice_Z(const Context& ctx, int i, long d);
FpSubspace slice_B(const Context& ctx, int i, long d);
FpSubspace higher_B(const Context& ctx, unsigned n, int i, long d);
FpSubspace higher_Z(const Context& ctx, unsigned n, int i, long d);

/// Representative of gamma(w) modulo B, reduced against the echelon basis of B.
PolyForm gamma_class(const PolyForm& w);
/// Cartier operator: the form C(w) with gamma(C(w)) = w modulo B. Throws
/// InvalidArgument when w is not closed.
PolyForm cartier_C(const PolyForm& w);

struct SliceCheck {
  long degree;            // source degree d; the target is degree p*d
  std::size_t dim_source;
  std::size_t dim_target; // dim Z - dim B in degree p*d
  std::size_t rank;       // rank of the gamma-images modulo B
  bool closed;
  bool pass;
};

struct CartierReport {
  Context ctx;
  int i;
  long max_degree;
  std::vector<SliceCheck> slices;
  bool passed;
};

CartierReport verify_cartier_iso(const Context& ctx, int i, long max_degree);
/// Same report; slices are checked concurrently.
CartierReport verify_cartier_iso_parallel(const Context& ctx, int i, long max_degree);
std::string to_text(const CartierReport& r);

struct TowerViolation {
  unsigned n;
  long degree;
  std::string inclusion;
};

/// B_n in B_{n+1} in Z_{n+1} in Z_n for n <= max_n and every slice d <= max_degree.
std::vector<TowerViolation> check_tower(const Context& ctx, int i, unsigned max_n, long max_degree);

// ---- monogenic elementary extensions ---------------------------------------

/// W = V[x]/(x^p - v) over V = F_p[s1, ..., sm].
class ElementaryExt {
 public:
  /// Throws NotMonogenic for more than one relation and InvalidArgument when the
  /// relation is a p-th power in V (then W is not a domain).
  static ElementaryExt make(unsigned p, std::size_t m, const std::vector<FpPoly>& relations);
  static ElementaryExt parse(unsigned p, std::size_t m, const std::vector<std::string>& relations);

  unsigned prime() const { return p_; }
  std::size_t base_vars() const { return m_; }
  const FpPoly& relation() const { return v_; }
  std::vector<std::string> base_names() const;
  /// Base names followed by "x".
  std::vector<std::string> names() const;

 private:
  ElementaryExt(unsigned p, std::size_t m, FpPoly v) : p_(p), m_(m), v_(std::move(v)) {}
  unsigned p_;
  std::size_t m_;
  FpPoly v_;
};

/// Element of Omega^i_{W/V} (i in {0, 1}): coeffs[k] is the V-coefficient of x^k (dx).
struct RelForm {
  int degree;
  std::vector<FpPoly> coeffs;  // size p

  friend bool operator==(const RelForm&, const RelForm&) = default;
};

RelForm rel_zero(const ElementaryExt& ext, int degree);
/// Parses a polynomial in s1..sm, x and reduces it with x^p = v.
RelForm rel_parse(const ElementaryExt& ext, const std::string& text, int degree);
std::string to_string(const ElementaryExt& ext, const RelForm& w);
RelForm rel_d(const ElementaryExt& ext, const RelForm& w);

/// gamma_{W/V}(v (x) b dx^i) = v b^p (x^{p-1} dx)^i, reduced modulo B.
RelForm relative_gamma(const ElementaryExt& ext, const FpPoly& v, const RelForm& b);

struct RelativeSliceCheck {
  long degree;  // degree in the s-variables
  std::size_t dim_source;
  std::size_t dim_target;
  std::size_t rank;
  std::size_t dim_B;
  bool B_free;  // dim B = (p-1) dim V in this degree
  std::vector<RelForm> new_B_generators;
  bool pass;
};

struct RelativeReport {
  int i;
  std::vector<RelativeSliceCheck> slices;
  std::vector<RelForm> B_vbasis;  // union of the new generators
  bool passed;
};

RelativeReport verify_relative_cartier(const ElementaryExt& ext, int i, long max_degree);
std::string to_text(const ElementaryExt& ext, const RelativeReport& r);

}  // namespace drwkit::cartier
