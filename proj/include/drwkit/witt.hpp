#pragma once

// p-typical Witt vectors of finite length over p-torsion-free rings.
//
// Arithmetic goes through the ghost map w_i = sum_{j<=i} p^j a_j^{p^{i-j}},
// which is an injective ring map W_n(R) -> R^n when R has no p-torsion.

#include <string>
#include <vector>

#include "drwkit/exactnum.hpp"

namespace drwkit::witt {

struct WittContext {
  unsigned p = 3;
  std::size_t n = 1;

  friend bool operator==(const WittContext&, const WittContext&) = default;
};

void check_context(const WittContext& ctx);

template <CoefficientRing R>
class GhostVector {
 public:
  GhostVector(WittContext ctx, std::vector<R> entries) : ctx_(ctx), entries_(std::move(entries)) {
    if (entries_.size() != ctx_.n) fail(ErrorKind::ContextMismatch, "ghost vector length != n");
  }

  const WittContext& context() const { return ctx_; }
  const std::vector<R>& entries() const { return entries_; }
  const R& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const GhostVector& a, const GhostVector& b) {
    return a.ctx_ == b.ctx_ && a.entries_ == b.entries_;
  }

  std::string to_string() const {
    std::string out = "G[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ", ";
      out += drwkit::to_string(entries_[i]);
    }
    return out + "]";
  }

 private:
  WittContext ctx_;
  std::vector<R> entries_;
};

template <CoefficientRing R>
class WittVector {
 public:
  WittVector(WittContext ctx, std::vector<R> coords) : ctx_(ctx), coords_(std::move(coords)) {
    check_context(ctx_);
    if (coords_.size() != ctx_.n) fail(ErrorKind::ContextMismatch, "Witt vector length != n");
  }

  static WittVector zero(WittContext ctx) {
    return WittVector(ctx, std::vector<R>(ctx.n, RingTraits<R>::from_integer(0, ctx.p)));
  }
  static WittVector one(WittContext ctx) { return teichmueller(RingTraits<R>::from_integer(1, ctx.p), ctx); }

  /// [x] = (x, 0, ..., 0).
  static WittVector teichmueller(const R& x, WittContext ctx) {
    WittVector w = zero(ctx);
    w.coords_[0] = x;
    return w;
  }

  const WittContext& context() const { return ctx_; }
  unsigned prime() const { return ctx_.p; }
  std::size_t length() const { return ctx_.n; }
  const std::vector<R>& coords() const { return coords_; }
  const R& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const {
    for (const R& c : coords_)
      if (!drwkit::is_zero(c)) return false;
    return true;
  }

  friend bool operator==(const WittVector& a, const WittVector& b) {
    return a.ctx_ == b.ctx_ && a.coords_ == b.coords_;
  }

  /// Text form "W(p=3,n=2)[a0, a1]".
  std::string to_string() const {
    return "W(p=" + std::to_string(ctx_.p) + ",n=" + std::to_string(ctx_.n) + ")" + coords_string();
  }
  /// Coordinates only: "[a0, a1]".
  std::string coords_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ", ";
      out += drwkit::to_string(coords_[i]);
    }
    return out + "]";
  }

 private:
  WittContext ctx_;
  std::vector<R> coords_;
};

template <CoefficientRing R>
GhostVector<R> ghost(const WittVector<R>& w) {
  const WittContext& ctx = w.context();
  std::vector<R> g;
  g.reserve(ctx.n);
  // powers[j] holds a_j^{p^{i-j}} for the current i.
  std::vector<R> powers = w.coords();
  for (std::size_t i = 0; i < ctx.n; ++i) {
    R sum = RingTraits<R>::from_integer(0, ctx.p);
    for (std::size_t j = 0; j <= i; ++j) {
      sum = sum + RingTraits<R>::from_integer(ipow(ctx.p, j), ctx.p) * powers[j];
    }
    g.push_back(sum);
    for (std::size_t j = 0; j <= i; ++j) powers[j] = ring_pow(powers[j], ctx.p, ctx.p);
  }
  return GhostVector<R>(ctx, std::move(g));
}

/// Inverse of the ghost map by successive exact division by p^i.
/// Throws NotInGhostImage when some division is inexact.
template <CoefficientRing R>
WittVector<R> unghost(const GhostVector<R>& g) {
  const WittContext& ctx = g.context();
  std::vector<R> a;
  a.reserve(ctx.n);
  std::vector<R> powers;  // a_j^{p^{i-j}}
  for (std::size_t i = 0; i < ctx.n; ++i) {
    R rest = g[i];
    for (std::size_t j = 0; j < i; ++j) {
      powers[j] = ring_pow(powers[j], ctx.p, ctx.p);
      rest = rest - RingTraits<R>::from_integer(ipow(ctx.p, j), ctx.p) * powers[j];
    }
    try {
      a.push_back(div_exact(rest, ipow(ctx.p, i)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InexactDivision) throw;
      fail(ErrorKind::NotInGhostImage,
           g.to_string() + ": coordinate " + std::to_string(i) + " needs " + to_string(rest) +
               " / " + std::to_string(ctx.p) + "^" + std::to_string(i));
    }
    powers.push_back(a.back());
  }
  return WittVector<R>(ctx, std::move(a));
}

namespace detail {
template <CoefficientRing R, class Op>
WittVector<R> ghostwise(const WittVector<R>& x, const WittVector<R>& y, Op op) {
  if (!(x.context() == y.context())) fail(ErrorKind::ContextMismatch, "Witt vectors of different shape");
  GhostVector<R> gx = ghost(x), gy = ghost(y);
  std::vector<R> g;
  for (std::size_t i = 0; i < x.length(); ++i) g.push_back(op(gx[i], gy[i]));
  try {
    return unghost(GhostVector<R>(x.context(), std::move(g)));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInGhostImage)
      fail(ErrorKind::Internal, std::string("coefficient ring is not p-torsion-free: ") + e.what());
    throw;
  }
}
}  // namespace detail

template <CoefficientRing R>
WittVector<R> operator+(const WittVector<R>& x, const WittVector<R>& y) {
  return detail::ghostwise(x, y, [](const R& a, const R& b) { return a + b; });
}

template <CoefficientRing R>
WittVector<R> operator-(const WittVector<R>& x, const WittVector<R>& y) {
  return detail::ghostwise(x, y, [](const R& a, const R& b) { return a - b; });
}

template <CoefficientRing R>
WittVector<R> operator*(const WittVector<R>& x, const WittVector<R>& y) {
  return detail::ghostwise(x, y, [](const R& a, const R& b) { return a * b; });
}

template <CoefficientRing R>
WittVector<R> operator-(const WittVector<R>& x) {
  return WittVector<R>::zero(x.context()) - x;
}

template <CoefficientRing R>
WittVector<R> scale(const BigInt& k, const WittVector<R>& x) {
  // The integer k in W_n(R) has constant ghost vector (k, ..., k).
  return unghost(GhostVector<R>(x.context(),
                                std::vector<R>(x.length(), RingTraits<R>::from_integer(k, x.prime())))) *
         x;
}

template <CoefficientRing R>
WittVector<R> teichmueller(const R& x, WittContext ctx) {
  return WittVector<R>::teichmueller(x, ctx);
}

/// V: W_n -> W_{n+1}, (a_0, ..., a_{n-1}) -> (0, a_0, ..., a_{n-1}).
template <CoefficientRing R>
WittVector<R> verschiebung(const WittVector<R>& w) {
  std::vector<R> c;
  c.push_back(RingTraits<R>::from_integer(0, w.prime()));
  c.insert(c.end(), w.coords().begin(), w.coords().end());
  return WittVector<R>({w.prime(), w.length() + 1}, std::move(c));
}

/// V^s: W_n -> W_{n+s}.
template <CoefficientRing R>
WittVector<R> verschiebung(const WittVector<R>& w, std::size_t s) {
  WittVector<R> r = w;
  for (std::size_t i = 0; i < s; ++i) r = verschiebung(r);
  return r;
}

/// R: W_n -> W_{n-1}, drops the last coordinate.
template <CoefficientRing R>
WittVector<R> restrict_length(const WittVector<R>& w) {
  if (w.length() < 2) fail(ErrorKind::LengthUnderflow, "restriction needs n >= 2");
  std::vector<R> c(w.coords().begin(), w.coords().end() - 1);
  return WittVector<R>({w.prime(), w.length() - 1}, std::move(c));
}

/// Restriction down to length m <= n.
template <CoefficientRing R>
WittVector<R> restrict_to(const WittVector<R>& w, std::size_t m) {
  if (m == 0 || m > w.length()) fail(ErrorKind::LengthUnderflow, "invalid restriction length");
  std::vector<R> c(w.coords().begin(), w.coords().begin() + static_cast<std::ptrdiff_t>(m));
  return WittVector<R>({w.prime(), m}, std::move(c));
}

/// Same-length Verschiebung: V followed by restriction.
template <CoefficientRing R>
WittVector<R> verschiebung_truncated(const WittVector<R>& w) {
  return restrict_length(verschiebung(w));
}

/// F: W_n -> W_{n-1}; on ghost components (w_0, w_1, ...) -> (w_1, w_2, ...).
template <CoefficientRing R>
WittVector<R> frobenius(const WittVector<R>& w) {
  if (w.length() < 2) fail(ErrorKind::LengthUnderflow, "Frobenius needs n >= 2");
  GhostVector<R> g = ghost(w);
  std::vector<R> shifted(g.entries().begin() + 1, g.entries().end());
  return unghost(GhostVector<R>({w.prime(), w.length() - 1}, std::move(shifted)));
}

/// Coordinates (c_0; c_1, ..., c_{n-1}) of [x]_n in the basis V^i([1]_{n-i}):
/// c_0 = x and c_i = p^{-i} (x^{p^i} - x^{p^{i-1}}).
std::vector<ZpLocal> teich_expand(const ZpLocal& x, std::size_t n);

/// Coordinates of an arbitrary element of W_n(Z_(p)) in the basis V^i(1).
std::vector<ZpLocal> to_vbasis(const WittVector<ZpLocal>& w);
/// Ghost components of sum_i c_i V^i(1), namely w_k = sum_{i<=k} p^i c_i.
std::vector<ZpLocal> vbasis_ghost(const std::vector<ZpLocal>& coords);
/// Inverse of to_vbasis.
WittVector<ZpLocal> from_vbasis(const std::vector<ZpLocal>& coords);

/// Unique decomposition of an element of W_n(R[eps]) as
///   head + teich_eps_coeff * [eps]_n + sum_{s=1}^{n-1} V^s(deep_coeffs[s-1] * [eps]_{n-s}).
/// Since V^i(1) * [eps] = 0 for i >= 1, the [eps]-coefficients are only defined
/// modulo V; the normal form stores them as Teichmueller vectors [c].
template <CoefficientRing R>
struct EpsWittNormalForm {
  WittVector<R> head;
  WittVector<R> teich_eps_coeff;
  std::vector<WittVector<R>> deep_coeffs;  // lengths n-1, ..., 1

  friend bool operator==(const EpsWittNormalForm&, const EpsWittNormalForm&) = default;
};

template <CoefficientRing R>
WittVector<DualElem<R>> lift_base(const WittVector<R>& w) {
  std::vector<DualElem<R>> c;
  for (const R& x : w.coords()) c.push_back({x, RingTraits<R>::from_integer(0, w.prime())});
  return WittVector<DualElem<R>>(w.context(), std::move(c));
}

/// V^s(c [eps]_{n-s}) as an element of W_n(R[eps]).
template <CoefficientRing R>
WittVector<DualElem<R>> v_teich_eps(const WittVector<R>& coeff, std::size_t s, std::size_t n) {
  const unsigned p = coeff.prime();
  const R zero = RingTraits<R>::from_integer(0, p);
  const R one = RingTraits<R>::from_integer(1, p);
  WittContext inner{p, n - s};
  WittVector<DualElem<R>> eps = WittVector<DualElem<R>>::teichmueller({zero, one}, inner);
  return verschiebung(lift_base(coeff) * eps, s);
}

template <CoefficientRing R>
WittVector<DualElem<R>> eps_assemble(const EpsWittNormalForm<R>& nf) {
  const std::size_t n = nf.head.length();
  WittVector<DualElem<R>> w = lift_base(nf.head) + v_teich_eps(nf.teich_eps_coeff, 0, n);
  for (std::size_t s = 1; s < n; ++s) w = w + v_teich_eps(nf.deep_coeffs.at(s - 1), s, n);
  return w;
}

template <CoefficientRing R>
EpsWittNormalForm<R> eps_normal_form(const WittVector<DualElem<R>>& w) {
  const unsigned p = w.prime();
  const std::size_t n = w.length();

  // eps -> 0 is a ring map, applied coordinatewise.
  std::vector<R> head_coords;
  for (const auto& c : w.coords()) head_coords.push_back(c.base);
  WittVector<R> head(w.context(), head_coords);

  // The remainder lies in the kernel of eps -> 0, a sum of V^s([c_s eps]) with
  // disjoint coordinate supports; read c_s from coordinate s and peel it off.
  WittVector<DualElem<R>> rest = w - lift_base(head);
  std::vector<WittVector<R>> coeffs;
  for (std::size_t s = 0; s < n; ++s) {
    const DualElem<R>& c = rest[s];
    if (!is_zero(c.base)) fail(ErrorKind::Internal, "eps-kernel coordinate has a base part");
    WittVector<R> coeff = WittVector<R>::teichmueller(c.eps, {p, n - s});
    rest = rest - v_teich_eps(coeff, s, n);
    coeffs.push_back(coeff);
  }
  if (!rest.is_zero()) fail(ErrorKind::Internal, "eps normal form did not exhaust the element");

  return {head, coeffs.front(), {coeffs.begin() + 1, coeffs.end()}};
}

template <CoefficientRing R>
std::string to_string(const EpsWittNormalForm<R>& nf) {
  std::string out = "head=" + nf.head.coords_string() + " eps=" + nf.teich_eps_coeff.coords_string();
  for (std::size_t s = 0; s < nf.deep_coeffs.size(); ++s)
    out += " V" + std::to_string(s + 1) + "=" + nf.deep_coeffs[s].coords_string();
  return out;
}

}  // namespace drwkit::witt
