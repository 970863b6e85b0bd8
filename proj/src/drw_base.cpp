#include "drwkit/drw_base.hpp"

#include <regex>

#include "drwkit/witt.hpp"

namespace drwkit::drw {

ZpDrwForm::ZpDrwForm(unsigned p, std::size_t n, int q) : p_(p), n_(n), q_(q) {
  if (has_coordinates()) coords_.assign(n_, ZpLocal(p_));
}

ZpDrwForm::ZpDrwForm(unsigned p, std::size_t n, int q, std::vector<ZpLocal> coords)
    : p_(p), n_(n), q_(q), coords_(std::move(coords)) {
  if (!has_coordinates()) {
    coords_.clear();
    return;
  }
  if (coords_.size() != n_) fail(ErrorKind::ContextMismatch, "form needs exactly n coordinates");
  normalize();
}

void ZpDrwForm::normalize() {
  for (const ZpLocal& c : coords_)
    if (c.prime() != p_) fail(ErrorKind::ContextMismatch, "coordinate over a different prime");
  if (q_ != 1) return;
  coords_[0] = ZpLocal(p_);
  for (std::size_t i = 1; i < n_; ++i)
    coords_[i] = ZpLocal(coords_[i].residue_mod_ppow(static_cast<unsigned>(i)), p_);
}

ZpDrwForm ZpDrwForm::one(unsigned p, std::size_t n) { return v_basis(p, n, 0); }

ZpDrwForm ZpDrwForm::v_basis(unsigned p, std::size_t n, std::size_t i) {
  std::vector<ZpLocal> c(n, ZpLocal(p));
  c.at(i) = ZpLocal(1, p);
  return ZpDrwForm(p, n, 0, std::move(c));
}

ZpDrwForm ZpDrwForm::dv_basis(unsigned p, std::size_t n, std::size_t i) {
  if (i == 0) fail(ErrorKind::InvalidArgument, "dV^0(1) = d(1) = 0 is not a basis element");
  std::vector<ZpLocal> c(n, ZpLocal(p));
  c.at(i) = ZpLocal(1, p);
  return ZpDrwForm(p, n, 1, std::move(c));
}

ZpDrwForm ZpDrwForm::from_vbasis(unsigned p, std::vector<ZpLocal> coords) {
  const std::size_t n = coords.size();
  return ZpDrwForm(p, n, 0, std::move(coords));
}

ZpLocal ZpDrwForm::coeff(std::size_t i) const {
  if (!has_coordinates() || i >= coords_.size()) return ZpLocal(p_);
  return coords_[i];
}

bool ZpDrwForm::is_zero() const {
  for (const ZpLocal& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool ZpDrwForm::is_zero_mod_p() const {
  for (const ZpLocal& c : coords_)
    if (c.residue_mod_ppow(1) != 0) return false;
  return true;
}

void check_same_shape(const ZpDrwForm& a, const ZpDrwForm& b) {
  if (a.prime() != b.prime() || a.length() != b.length() || a.degree() != b.degree())
    fail(ErrorKind::ContextMismatch, "forms of different prime, length or degree");
}

ZpDrwForm ZpDrwForm::operator-() const {
  std::vector<ZpLocal> c;
  for (const ZpLocal& x : coords_) c.push_back(-x);
  return ZpDrwForm(p_, n_, q_, std::move(c));
}

ZpDrwForm operator+(const ZpDrwForm& a, const ZpDrwForm& b) {
  check_same_shape(a, b);
  std::vector<ZpLocal> c;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) c.push_back(a.coords_[i] + b.coords_[i]);
  return ZpDrwForm(a.p_, a.n_, a.q_, std::move(c));
}

ZpDrwForm operator-(const ZpDrwForm& a, const ZpDrwForm& b) { return a + (-b); }

namespace {

std::string basis_name(int q, std::size_t i) {
  std::string v = i == 1 ? "V(1)" : "V" + std::to_string(i) + "(1)";
  if (q == 1) return "d" + v;
  return i == 0 ? "1" : v;
}

template <class Coeff>
std::string render(const ZpDrwForm& x, Coeff coeff) {
  std::string out;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    std::string c = coeff(x.coords()[i]);
    if (c == "0") continue;
    if (!out.empty()) out += " + ";
    out += c + "*" + basis_name(x.degree(), i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string ZpDrwForm::to_string() const {
  return render(*this, [](const ZpLocal& c) { return c.to_string(); });
}

std::string ZpDrwForm::to_string_mod_p() const {
  return render(*this, [](const ZpLocal& c) { return c.residue_mod_ppow(1).get_str(); });
}

ZpDrwForm ZpDrwForm::parse(const std::string& text, unsigned p, std::size_t n, int q) {
  require_prime(p);
  if (n == 0) fail(ErrorKind::LengthUnderflow, "form length must be >= 1");
  static const std::regex term(R"(\s*(?:([-0-9/p]+)\s*\*\s*)?(d?)(?:(1)|V(\d*)\(1\))\s*)");
  static const std::regex zero(R"(\s*0\s*)");
  if (std::regex_match(text, zero)) return ZpDrwForm(p, n, q < 0 ? 0 : q);
  std::vector<ZpLocal> c(n, ZpLocal(p));
  int found = -1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    std::string item = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    if (!std::regex_match(item, m, term)) fail(ErrorKind::ParseError, "bad form term \"" + item + "\"");
    const int deg = m[2].length() ? 1 : 0;
    if (deg == 1 && m[3].matched) fail(ErrorKind::ParseError, "d(1) is not a basis element");
    if (found >= 0 && deg != found) fail(ErrorKind::ParseError, "terms of different degree in \"" + text + "\"");
    found = deg;
    std::size_t i = 0;
    if (m[4].matched) i = m[4].length() ? std::stoul(m[4].str()) : 1;
    if (m[4].matched && m[4].length() && i < 2) fail(ErrorKind::ParseError, "write V(1) for the first Verschiebung");
    if (i >= n) fail(ErrorKind::ParseError, "basis element beyond length " + std::to_string(n));
    c[i] += m[1].matched ? ZpLocal::parse(m[1].str(), p) : ZpLocal(1, p);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (q >= 0 && q != found) fail(ErrorKind::ParseError, "form \"" + text + "\" does not have degree " + std::to_string(q));
  return ZpDrwForm(p, n, found, std::move(c));
}

ZpDrwForm zp_add(const ZpDrwForm& a, const ZpDrwForm& b) { return a + b; }

ZpDrwForm zp_scalar(const ZpLocal& c, const ZpDrwForm& x) {
  std::vector<ZpLocal> out;
  for (const ZpLocal& v : x.coords()) out.push_back(c * v);
  return ZpDrwForm(x.prime(), x.length(), x.degree(), std::move(out));
}

ZpDrwForm zp_mul(const ZpDrwForm& x, const ZpDrwForm& y) {
  if (x.prime() != y.prime() || x.length() != y.length())
    fail(ErrorKind::ContextMismatch, "product of forms of different prime or length");
  const unsigned p = x.prime();
  const std::size_t n = x.length();
  const int q = x.degree() + y.degree();
  ZpDrwForm result(p, n, q);
  if (!x.has_coordinates() || !y.has_coordinates() || q >= 2) return result;

  std::vector<ZpLocal> c(n, ZpLocal(p));
  if (q == 0) {
    // V^i(1) V^j(1) = p^{min(i,j)} V^{max(i,j)}(1)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        c[std::max(i, j)] += ZpLocal(ipow(p, std::min(i, j)), p) * x.coords()[i] * y.coords()[j];
  } else {
    // V^i(1) dV^j(1) = p^i dV^j(1) if i < j, else 0; the degree-0 factor may sit on either side.
    const ZpDrwForm& f = x.degree() == 0 ? x : y;
    const ZpDrwForm& w = x.degree() == 0 ? y : x;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        c[j] += ZpLocal(ipow(p, i), p) * f.coords()[i] * w.coords()[j];
  }
  return ZpDrwForm(p, n, q, std::move(c));
}

ZpDrwForm zp_d(const ZpDrwForm& x) {
  if (x.degree() != 0) return ZpDrwForm(x.prime(), x.length(), x.degree() + 1);
  return ZpDrwForm(x.prime(), x.length(), 1, x.coords());
}

ZpDrwForm zp_F(const ZpDrwForm& x) {
  if (x.length() < 2) fail(ErrorKind::LengthUnderflow, "F needs n >= 2");
  const unsigned p = x.prime();
  const std::size_t m = x.length() - 1;
  if (!x.has_coordinates()) return ZpDrwForm(p, m, x.degree());
  std::vector<ZpLocal> c(m, ZpLocal(p));
  if (x.degree() == 0) {
    // F(V^i(1)) = p V^{i-1}(1), F(1) = 1
    c[0] = x.coords()[0];
    for (std::size_t i = 1; i <= m; ++i) c[i - 1] += ZpLocal(p, p) * x.coords()[i];
  } else {
    // F(dV^i(1)) = dV^{i-1}(1), F(dV(1)) = d(1) = 0
    for (std::size_t i = 2; i <= m; ++i) c[i - 1] = x.coords()[i];
  }
  return ZpDrwForm(p, m, x.degree(), std::move(c));
}

ZpDrwForm zp_F(const ZpDrwForm& x, std::size_t s) {
  ZpDrwForm r = x;
  for (std::size_t i = 0; i < s; ++i) r = zp_F(r);
  return r;
}

ZpDrwForm zp_V(const ZpDrwForm& x) {
  const unsigned p = x.prime();
  const std::size_t m = x.length() + 1;
  if (!x.has_coordinates()) return ZpDrwForm(p, m, x.degree());
  std::vector<ZpLocal> c(m, ZpLocal(p));
  const ZpLocal factor(x.degree() == 0 ? 1 : p, p);
  for (std::size_t i = 0; i < x.length(); ++i) c[i + 1] = factor * x.coords()[i];
  return ZpDrwForm(p, m, x.degree(), std::move(c));
}

ZpDrwForm zp_restrict(const ZpDrwForm& x) {
  if (x.length() < 2) fail(ErrorKind::LengthUnderflow, "restriction needs n >= 2");
  const std::size_t m = x.length() - 1;
  if (!x.has_coordinates()) return ZpDrwForm(x.prime(), m, x.degree());
  std::vector<ZpLocal> c(x.coords().begin(), x.coords().end() - 1);
  return ZpDrwForm(x.prime(), m, x.degree(), std::move(c));
}

ZpDrwForm teich_form(const ZpLocal& x, std::size_t n) {
  return ZpDrwForm::from_vbasis(x.prime(), witt::teich_expand(x, n));
}

ZpDrwForm d_teich(const ZpLocal& x, std::size_t n) { return zp_d(teich_form(x, n)); }

AnnihilationReport check_p_annihilation(std::size_t n, unsigned p) {
  require_prime(p);
  if (n < 2) fail(ErrorKind::LengthUnderflow, "p-annihilation check needs n >= 2");
  AnnihilationReport report{p, n, {}, true};
  ZpDrwForm tp = teich_form(ZpLocal(p, p), n);
  for (std::size_t j = 1; j < n; ++j) {
    ZpLocal raw(p);
    for (std::size_t i = 0; i < j; ++i) raw += ZpLocal(ipow(p, i), p) * tp.coeff(i);
    ZpDrwForm prod = zp_mul(tp, ZpDrwForm::dv_basis(p, n, j));
    BigInt residue = prod.coeff(j).num();
    if (raw.residue_mod_ppow(static_cast<unsigned>(j)) != residue)
      fail(ErrorKind::Internal, "product rule disagrees with direct expansion");
    if (!prod.is_zero()) report.passed = false;
    report.entries.push_back({j, raw, residue});
  }
  return report;
}

bool check_mod_p2_divisibility(std::size_t n, unsigned p, const ZpLocal& x) {
  require_prime(p);
  const ZpLocal y = x * ZpLocal(BigInt(p) * p, p);
  for (std::size_t i = 0; i < n; ++i) {
    // V^i shifts V-basis coordinates up by i.
    for (const ZpLocal& c : witt::teich_expand(y, n - i)) {
      Valuation v = c.valuation();
      if (v && *v < 1) return false;
    }
  }
  return true;
}

}  // namespace drwkit::drw
