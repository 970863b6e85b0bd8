#include "drwkit/exactnum.hpp"

#include "drwkit/expr.hpp"

namespace drwkit {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(unsigned p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt ipow(unsigned long base, unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

Valuation p_valuation(const BigInt& x, unsigned p) {
  if (sgn(x) == 0) return std::nullopt;
  BigInt q = x;
  BigInt bp = p;
  unsigned v = 0;
  while (mpz_divisible_p(q.get_mpz_t(), bp.get_mpz_t())) {
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), bp.get_mpz_t());
    ++v;
  }
  return v;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (sgn(b) == 0) fail(ErrorKind::DivisionByZero, "exact_div(" + to_string(a) + ", 0)");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    fail(ErrorKind::InexactDivision, to_string(b) + " does not divide " + to_string(a));
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

BigInt parse_bigint(const std::string& text) {
  RationalPoly e = parse_expression(text, {});
  mpq_class v = e.constant_term();
  if (v.get_den() != 1) fail(ErrorKind::ParseError, "\"" + text + "\" is not an integer");
  return v.get_num();
}

// ---- ZpLocal ---------------------------------------------------------------

ZpLocal::ZpLocal(unsigned p) : p_(p), num_(0), den_(1) {}

ZpLocal::ZpLocal(const BigInt& num, unsigned p) : p_(p), num_(num), den_(1) {}

ZpLocal::ZpLocal(const BigInt& num, const BigInt& den, unsigned p) : p_(p), num_(num), den_(den) {
  if (sgn(den_) == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  normalize();
}

void ZpLocal::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1 && sgn(g) != 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  if (sgn(num_) == 0) den_ = 1;
  if (mpz_divisible_ui_p(den_.get_mpz_t(), p_))
    fail(ErrorKind::InexactDivision,
         num_.get_str() + "/" + den_.get_str() + " is not in Z_(" + std::to_string(p_) + ")");
}

void ZpLocal::check_same_prime(const ZpLocal& o) const {
  if (o.p_ != p_)
    fail(ErrorKind::ContextMismatch,
         "Z_(" + std::to_string(p_) + ") vs Z_(" + std::to_string(o.p_) + ")");
}

bool ZpLocal::is_unit() const { return !mpz_divisible_ui_p(num_.get_mpz_t(), p_); }

ZpLocal ZpLocal::operator-() const {
  ZpLocal r = *this;
  r.num_ = -r.num_;
  return r;
}

ZpLocal& ZpLocal::operator+=(const ZpLocal& o) {
  check_same_prime(o);
  if (den_ == 1 && o.den_ == 1) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

ZpLocal& ZpLocal::operator-=(const ZpLocal& o) { return *this += -o; }

ZpLocal& ZpLocal::operator*=(const ZpLocal& o) {
  check_same_prime(o);
  num_ *= o.num_;
  den_ *= o.den_;
  if (den_ != 1) normalize();
  return *this;
}

ZpLocal ZpLocal::divide(const ZpLocal& o) const {
  check_same_prime(o);
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, to_string() + " / 0");
  if (!o.is_unit())
    fail(ErrorKind::InexactDivision,
         to_string() + " / " + o.to_string() + " is not in Z_(" + std::to_string(p_) + ")");
  return ZpLocal(num_ * o.den_, den_ * o.num_, p_);
}

ZpLocal ZpLocal::inverse() const { return ZpLocal(1, p_).divide(*this); }

ZpLocal ZpLocal::div_exact(const BigInt& k) const {
  if (sgn(k) == 0) fail(ErrorKind::DivisionByZero, to_string() + " / 0");
  return ZpLocal(num_, den_ * k, p_);
}

ZpLocal ZpLocal::pow(unsigned long e) const {
  ZpLocal r(drwkit::pow(num_, e), p_);
  r.den_ = drwkit::pow(den_, e);
  return r;
}

BigInt ZpLocal::residue_mod(const BigInt& m) const {
  if (m == 1) return 0;
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den_.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorKind::InexactDivision, "denominator not invertible modulo " + m.get_str());
  return mod_floor(num_ * inv, m);
}

BigInt ZpLocal::residue_mod_ppow(unsigned k) const { return residue_mod(ipow(p_, k)); }

std::string ZpLocal::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

ZpLocal ZpLocal::parse(const std::string& text, unsigned p) {
  RationalPoly e = parse_expression(text, {}, {{"p", BigInt(p)}});
  mpq_class v = e.constant_term();
  return ZpLocal(v.get_num(), v.get_den(), p);
}

Valuation p_valuation(const ZpLocal& x) { return x.valuation(); }

// ---- ResidueInt ------------------------------------------------------------

ResidueInt::ResidueInt(const BigInt& value, const BigInt& modulus)
    : value_(mod_floor(value, modulus)), modulus_(modulus) {
  if (sgn(modulus) <= 0) fail(ErrorKind::InvalidArgument, "modulus must be positive");
}

ResidueInt ResidueInt::operator-() const { return ResidueInt(-value_, modulus_); }

namespace {
void check_modulus(const ResidueInt& a, const ResidueInt& b) {
  if (a.modulus() != b.modulus())
    fail(ErrorKind::ContextMismatch,
         "Z/" + a.modulus().get_str() + " vs Z/" + b.modulus().get_str());
}
}  // namespace

ResidueInt operator+(const ResidueInt& a, const ResidueInt& b) {
  check_modulus(a, b);
  return ResidueInt(a.value_ + b.value_, a.modulus_);
}

ResidueInt operator-(const ResidueInt& a, const ResidueInt& b) {
  check_modulus(a, b);
  return ResidueInt(a.value_ - b.value_, a.modulus_);
}

ResidueInt operator*(const ResidueInt& a, const ResidueInt& b) {
  check_modulus(a, b);
  return ResidueInt(a.value_ * b.value_, a.modulus_);
}

std::string ResidueInt::to_string() const {
  return value_.get_str() + " mod " + modulus_.get_str();
}

// ---- dual numbers ----------------------------------------------------------

bool is_unit(const DualElem<ZpLocal>& u) { return u.base.is_unit(); }

DualElem<ZpLocal> inverse(const DualElem<ZpLocal>& u) {
  if (!is_unit(u)) fail(ErrorKind::NotAUnit, to_string(u) + " is not a unit of Z_(p)[eps]");
  ZpLocal c_inv = u.base.inverse();
  return {c_inv, -(c_inv * c_inv * u.eps)};
}

namespace {
// Splits a parsed expression in eps into (base, eps) coefficients, using eps^2 = 0.
std::pair<mpq_class, mpq_class> split_dual(const RationalPoly& e) {
  mpq_class base = 0, eps = 0;
  for (const auto& [exps, c] : e.terms) {
    if (exps[0] == 0)
      base += c;
    else if (exps[0] == 1)
      eps += c;
  }
  return {base, eps};
}
}  // namespace

DualElem<ZpLocal> parse_dual(const std::string& text, unsigned p) {
  auto [b, e] = split_dual(parse_expression(text, {"eps"}, {{"p", BigInt(p)}}));
  return {ZpLocal(b.get_num(), b.get_den(), p), ZpLocal(e.get_num(), e.get_den(), p)};
}

DualElem<BigInt> parse_dual_integer(const std::string& text) {
  auto [b, e] = split_dual(parse_expression(text, {"eps"}));
  if (b.get_den() != 1 || e.get_den() != 1)
    fail(ErrorKind::ParseError, "\"" + text + "\" has non-integer coefficients");
  return {b.get_num(), e.get_num()};
}

}  // namespace drwkit
