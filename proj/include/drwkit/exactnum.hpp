#pragma once

// Exact arithmetic over Z, Z_(p), Z/m and dual numbers R[eps].

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "drwkit/error.hpp"

namespace drwkit {

using BigInt = mpz_class;

/// p-adic valuation; std::nullopt stands for +infinity (x = 0).
using Valuation = std::optional<unsigned>;

bool is_prime(unsigned p);
void require_prime(unsigned p);

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt ipow(unsigned long base, unsigned long exponent);
Valuation p_valuation(const BigInt& x, unsigned p);

/// Exact quotient a / b; throws InexactDivision if b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

/// Least non-negative residue of a modulo m (m > 0).
BigInt mod_floor(const BigInt& a, const BigInt& m);

std::string to_string(const BigInt& x);
BigInt parse_bigint(const std::string& text);

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline BigInt div_exact(const BigInt& x, const BigInt& k) { return exact_div(x, k); }

/// Element of the localization Z_(p): a reduced fraction whose denominator
/// is positive and prime to p.
class ZpLocal {
 public:
  explicit ZpLocal(unsigned p = 3);
  ZpLocal(const BigInt& num, unsigned p);
  ZpLocal(const BigInt& num, const BigInt& den, unsigned p);

  unsigned prime() const { return p_; }
  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return sgn(num_) == 0; }
  bool is_unit() const;
  bool is_integer() const { return den_ == 1; }
  Valuation valuation() const { return p_valuation(num_, p_); }

  ZpLocal operator-() const;
  ZpLocal& operator+=(const ZpLocal& o);
  ZpLocal& operator-=(const ZpLocal& o);
  ZpLocal& operator*=(const ZpLocal& o);
  friend ZpLocal operator+(ZpLocal a, const ZpLocal& b) { return a += b; }
  friend ZpLocal operator-(ZpLocal a, const ZpLocal& b) { return a -= b; }
  friend ZpLocal operator*(ZpLocal a, const ZpLocal& b) { return a *= b; }
  friend bool operator==(const ZpLocal& a, const ZpLocal& b) {
    return a.p_ == b.p_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Division by a unit of Z_(p). Non-units give InexactDivision.
  ZpLocal divide(const ZpLocal& o) const;
  ZpLocal inverse() const;
  /// Exact division by an integer; the quotient must stay in Z_(p).
  ZpLocal div_exact(const BigInt& k) const;
  ZpLocal pow(unsigned long e) const;

  /// Residue in [0, p^k) of this element modulo p^k.
  BigInt residue_mod_ppow(unsigned k) const;
  BigInt residue_mod(const BigInt& m) const;

  std::string to_string() const;
  static ZpLocal parse(const std::string& text, unsigned p);

 private:
  void normalize();
  void check_same_prime(const ZpLocal& o) const;

  unsigned p_;
  BigInt num_;
  BigInt den_;
};

inline bool is_zero(const ZpLocal& x) { return x.is_zero(); }
inline std::string to_string(const ZpLocal& x) { return x.to_string(); }
inline ZpLocal div_exact(const ZpLocal& x, const BigInt& k) { return x.div_exact(k); }
Valuation p_valuation(const ZpLocal& x);

/// Element of Z/m, stored as the least non-negative residue.
class ResidueInt {
 public:
  ResidueInt(const BigInt& value, const BigInt& modulus);

  const BigInt& value() const { return value_; }
  const BigInt& modulus() const { return modulus_; }
  bool is_zero() const { return sgn(value_) == 0; }

  ResidueInt operator-() const;
  friend ResidueInt operator+(const ResidueInt& a, const ResidueInt& b);
  friend ResidueInt operator-(const ResidueInt& a, const ResidueInt& b);
  friend ResidueInt operator*(const ResidueInt& a, const ResidueInt& b);
  friend bool operator==(const ResidueInt& a, const ResidueInt& b) = default;

  std::string to_string() const;

 private:
  BigInt value_;
  BigInt modulus_;
};

/// a + b*eps with eps^2 = 0.
template <class R>
struct DualElem {
  R base;
  R eps;

  DualElem operator-() const { return {-base, -eps}; }
  friend DualElem operator+(const DualElem& x, const DualElem& y) {
    return {x.base + y.base, x.eps + y.eps};
  }
  friend DualElem operator-(const DualElem& x, const DualElem& y) {
    return {x.base - y.base, x.eps - y.eps};
  }
  friend DualElem operator*(const DualElem& x, const DualElem& y) {
    return {x.base * y.base, x.base * y.eps + x.eps * y.base};
  }
  friend bool operator==(const DualElem& x, const DualElem& y) {
    return x.base == y.base && x.eps == y.eps;
  }
};

template <class R>
bool is_zero(const DualElem<R>& x) {
  return is_zero(x.base) && is_zero(x.eps);
}

template <class R>
DualElem<R> div_exact(const DualElem<R>& x, const BigInt& k) {
  return {div_exact(x.base, k), div_exact(x.eps, k)};
}

template <class R>
std::string to_string(const DualElem<R>& x) {
  return to_string(x.base) + " + " + to_string(x.eps) + "*eps";
}

/// (c + d eps)^{-1} = c^{-1} - c^{-2} d eps; requires c to be a unit of Z_(p).
DualElem<ZpLocal> inverse(const DualElem<ZpLocal>& u);
bool is_unit(const DualElem<ZpLocal>& u);

DualElem<ZpLocal> parse_dual(const std::string& text, unsigned p);
DualElem<BigInt> parse_dual_integer(const std::string& text);

/// Coefficient rings usable for ghost-component Witt calculus.
template <class R>
concept CoefficientRing = requires(const R& x, const R& y, const BigInt& k) {
  { x + y } -> std::convertible_to<R>;
  { x - y } -> std::convertible_to<R>;
  { x * y } -> std::convertible_to<R>;
  { -x } -> std::convertible_to<R>;
  { x == y } -> std::convertible_to<bool>;
  { div_exact(x, k) } -> std::convertible_to<R>;
  { is_zero(x) } -> std::convertible_to<bool>;
  { to_string(x) } -> std::convertible_to<std::string>;
};

/// Construction of integers inside a coefficient ring.
template <class R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
  static BigInt from_integer(const BigInt& v, unsigned /*p*/) { return v; }
  static constexpr const char* name = "Z";
};

template <>
struct RingTraits<ZpLocal> {
  static ZpLocal from_integer(const BigInt& v, unsigned p) { return ZpLocal(v, p); }
  static constexpr const char* name = "Z_(p)";
};

template <class R>
struct RingTraits<DualElem<R>> {
  static DualElem<R> from_integer(const BigInt& v, unsigned p) {
    return {RingTraits<R>::from_integer(v, p), RingTraits<R>::from_integer(0, p)};
  }
  static constexpr const char* name = "R[eps]";
};

template <CoefficientRing R>
R ring_pow(R base, unsigned long e, unsigned p) {
  R result = RingTraits<R>::from_integer(1, p);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace drwkit
