#include "drwkit/fppoly.hpp"

#include <algorithm>

namespace drwkit {

std::vector<std::string> default_variable_names(std::size_t nvars, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

std::uint32_t fp_reduce(long long c, unsigned p) {
  long long r = c % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t fp_inverse(std::uint32_t a, unsigned p) {
  if (a % p == 0) fail(ErrorKind::DivisionByZero, "inverse of 0 in F_" + std::to_string(p));
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  unsigned e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::string monomial_to_string(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

FpPoly::FpPoly(unsigned p, std::size_t nvars) : p_(p), nvars_(nvars) {}

FpPoly FpPoly::constant(unsigned p, std::size_t nvars, long long c) {
  FpPoly r(p, nvars);
  r.add_term(Exponents(nvars, 0), c);
  return r;
}

FpPoly FpPoly::monomial(unsigned p, Exponents exps, long long c) {
  FpPoly r(p, exps.size());
  r.add_term(exps, c);
  return r;
}

FpPoly FpPoly::variable(unsigned p, std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(p, e);
}

bool FpPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](unsigned x) { return x == 0; }));
}

long FpPoly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool FpPoly::is_homogeneous() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (unsigned x : e) s += x;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

std::uint32_t FpPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

const std::pair<const Exponents, std::uint32_t>& FpPoly::leading_term() const {
  if (terms_.empty()) fail(ErrorKind::Internal, "leading term of zero polynomial");
  return *terms_.rbegin();
}

void FpPoly::add_term(const Exponents& e, long long c) {
  if (e.size() != nvars_) fail(ErrorKind::ContextMismatch, "exponent length mismatch");
  std::uint32_t v = fp_reduce(c, p_);
  if (v == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, v);
    return;
  }
  it->second = static_cast<std::uint32_t>((it->second + v) % p_);
  if (it->second == 0) terms_.erase(it);
}

void FpPoly::check_compatible(const FpPoly& o) const {
  if (o.p_ != p_ || o.nvars_ != nvars_)
    fail(ErrorKind::ContextMismatch, "polynomials over different rings");
}

FpPoly FpPoly::operator-() const {
  FpPoly r(p_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, p_ - c);
  return r;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, static_cast<long long>(p_) - c);
  return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  a.check_compatible(b);
  FpPoly r(a.p_, a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, static_cast<long long>(static_cast<std::uint64_t>(ca) * cb % a.p_));
    }
  }
  return r;
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  FpPoly r(p_, nvars_);
  for (const auto& [e, v] : terms_)
    r.add_term(e, static_cast<long long>(static_cast<std::uint64_t>(v) * c % p_));
  return r;
}

FpPoly FpPoly::pow(unsigned long e) const {
  FpPoly result = constant(p_, nvars_, 1);
  FpPoly base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

FpPoly FpPoly::derivative(std::size_t var) const {
  FpPoly r(p_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, static_cast<long long>(static_cast<std::uint64_t>(c) * (e[var] % p_) % p_));
  }
  return r;
}

FpPoly FpPoly::frobenius() const {
  FpPoly r(p_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (unsigned& x : f) x *= p_;
    r.terms_.emplace(f, c);
  }
  return r;
}

FpPoly FpPoly::substitute(const std::vector<FpPoly>& values) const {
  if (values.size() != nvars_) fail(ErrorKind::ContextMismatch, "substitution arity");
  if (values.empty()) return *this;
  FpPoly r(p_, values.front().nvars());
  for (const auto& [e, c] : terms_) {
    FpPoly t = constant(p_, values.front().nvars(), c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * values[i].pow(e[i]);
    r += t;
  }
  return r;
}

std::string FpPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  const std::vector<std::string> n = names.empty() ? default_variable_names(nvars_) : names;
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_to_string(e, n);
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += std::to_string(c);
    else if (c == 1)
      out += mono;
    else
      out += std::to_string(c) + "*" + mono;
  }
  return out;
}

FpPoly FpPoly::parse(const std::string& text, unsigned p, const std::vector<std::string>& names) {
  RationalPoly e = parse_expression(text, names, {{"p", BigInt(p)}});
  FpPoly r(p, names.size());
  for (const auto& [exps, c] : e.terms) {
    BigInt den = c.get_den();
    BigInt num = c.get_num();
    if (mpz_divisible_ui_p(den.get_mpz_t(), p))
      fail(ErrorKind::InexactDivision, "coefficient denominator divisible by p in \"" + text + "\"");
    BigInt bp = p;
    BigInt v;
    mpz_invert(v.get_mpz_t(), den.get_mpz_t(), bp.get_mpz_t());
    v = mod_floor(num * v, bp);
    r.add_term(exps, v.get_si());
  }
  return r;
}

// ---- FpRational ------------------------------------------------------------

FpRational::FpRational(FpPoly num)
    : num_(std::move(num)), den_(FpPoly::constant(num_.prime(), num_.nvars(), 1)) {}

FpRational::FpRational(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (num_.prime() != den_.prime() || num_.nvars() != den_.nvars())
    fail(ErrorKind::ContextMismatch, "numerator and denominator over different rings");
  normalize();
}

void FpRational::normalize() {
  std::uint32_t lc = den_.leading_term().second;
  if (lc != 1) {
    std::uint32_t inv = fp_inverse(lc, den_.prime());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (num_.is_zero()) den_ = FpPoly::constant(num_.prime(), num_.nvars(), 1);
}

FpRational FpRational::operator-() const { return FpRational(-num_, den_); }

FpRational operator+(const FpRational& a, const FpRational& b) {
  if (a.den_ == b.den_) return FpRational(a.num_ + b.num_, a.den_);
  return FpRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FpRational operator-(const FpRational& a, const FpRational& b) { return a + (-b); }

FpRational operator*(const FpRational& a, const FpRational& b) {
  return FpRational(a.num_ * b.num_, a.den_ * b.den_);
}

FpRational operator/(const FpRational& a, const FpRational& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero rational function");
  return FpRational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const FpRational& a, const FpRational& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

FpRational FpRational::derivative(std::size_t var) const {
  return FpRational(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::string FpRational::to_string(const std::vector<std::string>& names) const {
  if (den_.is_constant()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

FpRational FpRational::parse(const std::string& text, unsigned p,
                             const std::vector<std::string>& names) {
  // Top-level '/' between two parenthesized groups separates num and den.
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '/' && depth == 0) {
      std::string lhs = text.substr(0, i);
      std::string rhs = text.substr(i + 1);
      auto trimmed = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      rhs = trimmed(rhs);
      // A constant divisor is handled by the expression parser itself.
      if (!rhs.empty() && rhs.front() == '(')
        return FpRational(FpPoly::parse(lhs, p, names), FpPoly::parse(rhs, p, names));
    }
  }
  return FpRational(FpPoly::parse(text, p, names));
}

std::size_t fraction_field_rank(std::vector<std::vector<FpPoly>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::vector<FpPoly>& prow = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      FpPoly factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] = prow[col] * rows[r][c] - factor * prow[c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace drwkit
