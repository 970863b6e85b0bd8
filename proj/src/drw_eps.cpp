#include "drwkit/drw_eps.hpp"

#include <regex>
#include <sstream>

#include "drwkit/witt.hpp"

namespace drwkit::drw {

std::string_view name(EpsModel model) {
  return model == EpsModel::DirectSum ? "direct-sum" : "reduced";
}

EpsModel parse_model(const std::string& text) {
  if (text == "direct-sum") return EpsModel::DirectSum;
  if (text == "reduced") return EpsModel::Reduced;
  fail(ErrorKind::ParseError, "unknown model \"" + text + "\" (expected direct-sum or reduced)");
}

namespace {

ZpLocal sign(int e, unsigned p) { return ZpLocal(e % 2 == 0 ? 1 : -1, p); }

void check_compatible(const EpsDrwForm& a, const EpsDrwForm& b) {
  if (a.p != b.p || a.n != b.n || a.model != b.model)
    fail(ErrorKind::ContextMismatch, "eps-forms of different prime, length or model");
}

void check_same_degree(const EpsDrwForm& a, const EpsDrwForm& b) {
  check_compatible(a, b);
  if (a.q != b.q) fail(ErrorKind::ContextMismatch, "sum of eps-forms of different degree");
}

// Keeps the unit coordinate of a degree-0 component; degree-1 components die.
void reduce_component(ZpDrwForm& c) {
  if (c.degree() == 0) {
    std::vector<ZpLocal> coords(c.length(), ZpLocal(c.prime()));
    coords[0] = c.coeff(0);
    c = ZpDrwForm(c.prime(), c.length(), 0, std::move(coords));
  } else if (c.degree() == 1) {
    c = ZpDrwForm(c.prime(), c.length(), 1);
  }
}

}  // namespace

EpsDrwForm EpsDrwForm::zero(unsigned p, std::size_t n, int q, EpsModel model) {
  EpsDrwForm x{p, n, q, model, ZpDrwForm(p, n, q), ZpDrwForm(p, n, q), ZpDrwForm(p, n, q - 1), {}, {}};
  for (std::size_t s = 1; s < n; ++s) {
    x.deep_v.emplace_back(p, n - s, q);
    x.deep_dv.emplace_back(p, n - s, q - 1);
  }
  return x;
}

EpsDrwForm EpsDrwForm::from_head(const ZpDrwForm& a, EpsModel model) {
  EpsDrwForm x = zero(a.prime(), a.length(), a.degree(), model);
  x.head = a;
  return x;
}

EpsDrwForm EpsDrwForm::teich_eps(unsigned p, std::size_t n, EpsModel model) {
  EpsDrwForm x = zero(p, n, 0, model);
  x.eps = ZpDrwForm::one(p, n);
  return x;
}

bool EpsDrwForm::is_zero() const {
  if (!head.is_zero() || !eps.is_zero() || !deps.is_zero()) return false;
  for (const auto& c : deep_v)
    if (!c.is_zero()) return false;
  for (const auto& c : deep_dv)
    if (!c.is_zero()) return false;
  return true;
}

EpsDrwForm EpsDrwForm::rest() const {
  EpsDrwForm r = *this;
  r.head = ZpDrwForm(p, n, q);
  return r;
}

void EpsDrwForm::canonicalize() {
  if (model != EpsModel::Reduced) return;
  reduce_component(eps);
  reduce_component(deps);
  for (auto& c : deep_v) reduce_component(c);
  for (auto& c : deep_dv) reduce_component(c);
}

namespace {

std::string wrap(const ZpDrwForm& c) { return "(" + c.to_string() + ")"; }

std::string power(const std::string& op, std::size_t s) {
  return s == 1 ? op : op + "^" + std::to_string(s);
}

}  // namespace

std::string EpsDrwForm::to_string() const {
  std::vector<std::string> parts;
  if (!head.is_zero()) parts.push_back(wrap(head));
  if (!eps.is_zero()) parts.push_back(wrap(eps) + "[eps]");
  if (!deps.is_zero()) parts.push_back(wrap(deps) + "d[eps]");
  for (std::size_t s = 1; s < n; ++s) {
    if (!deep_v_at(s).is_zero()) parts.push_back(power("V", s) + "(" + wrap(deep_v_at(s)) + "[eps])");
    if (!deep_dv_at(s).is_zero()) parts.push_back(power("dV", s) + "(" + wrap(deep_dv_at(s)) + "[eps])");
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

EpsDrwForm EpsDrwForm::parse(const std::string& text, unsigned p, std::size_t n, int q, EpsModel model) {
  EpsDrwForm x = zero(p, n, q, model);
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) fail(ErrorKind::ParseError, "unbalanced parentheses in \"" + text + "\"");
    if (c == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) fail(ErrorKind::ParseError, "unbalanced parentheses in \"" + text + "\"");
  parts.push_back(cur);
  if (parts.size() == 1 && std::regex_match(parts[0], std::regex(R"(\s*0\s*)"))) return zero(p, n, q < 0 ? 0 : q, model);
  static const std::regex plain(R"(\s*\((.*)\)(\[eps\]|d\[eps\])?\s*)");
  static const std::regex deep(R"(\s*(d?)V(?:\^(\d+))?\(\((.*)\)\[eps\]\)\s*)");
  if (q < 0) {
    // Degree from the first component: its coefficient's degree, plus one under d[eps] or dV^s.
    std::smatch m;
    const std::string& first = parts.front();
    if (std::regex_match(first, m, deep)) {
      const std::size_t s = m[2].matched ? std::stoul(m[2].str()) : 1;
      if (s == 0 || s >= n) fail(ErrorKind::ParseError, "V^" + std::to_string(s) + " out of range");
      q = ZpDrwForm::parse(m[3].str(), p, n - s).degree() + (m[1].length() ? 1 : 0);
    } else if (std::regex_match(first, m, plain)) {
      q = ZpDrwForm::parse(m[1].str(), p, n).degree() + (m[2].str() == "d[eps]" ? 1 : 0);
    } else {
      fail(ErrorKind::ParseError, "bad component \"" + first + "\"");
    }
    x = zero(p, n, q, model);
  }
  for (const std::string& part : parts) {
    std::smatch m;
    if (std::regex_match(part, m, deep)) {
      const std::size_t s = m[2].matched ? std::stoul(m[2].str()) : 1;
      if (s == 0 || s >= n) fail(ErrorKind::ParseError, "V^" + std::to_string(s) + " out of range");
      const bool dv = m[1].length() > 0;
      ZpDrwForm c = ZpDrwForm::parse(m[3].str(), p, n - s, dv ? q - 1 : q);
      auto& slot = dv ? x.deep_dv[s - 1] : x.deep_v[s - 1];
      slot = slot + c;
    } else if (std::regex_match(part, m, plain)) {
      const std::string tag = m[2].str();
      const int deg = tag == "d[eps]" ? q - 1 : q;
      ZpDrwForm c = ZpDrwForm::parse(m[1].str(), p, n, deg);
      auto& slot = tag.empty() ? x.head : tag == "[eps]" ? x.eps : x.deps;
      slot = slot + c;
    } else {
      fail(ErrorKind::ParseError, "bad component \"" + part + "\"");
    }
  }
  x.canonicalize();
  return x;
}

EpsDrwForm operator+(const EpsDrwForm& a, const EpsDrwForm& b) {
  check_same_degree(a, b);
  EpsDrwForm r = a;
  r.head = a.head + b.head;
  r.eps = a.eps + b.eps;
  r.deps = a.deps + b.deps;
  for (std::size_t i = 0; i < r.deep_v.size(); ++i) {
    r.deep_v[i] = a.deep_v[i] + b.deep_v[i];
    r.deep_dv[i] = a.deep_dv[i] + b.deep_dv[i];
  }
  return r;
}

EpsDrwForm operator-(const EpsDrwForm& a) { return eps_scalar(ZpLocal(-1, a.p), a); }

EpsDrwForm operator-(const EpsDrwForm& a, const EpsDrwForm& b) { return a + (-b); }

EpsDrwForm eps_scalar(const ZpLocal& c, const EpsDrwForm& x) {
  EpsDrwForm r = x;
  r.head = zp_scalar(c, x.head);
  r.eps = zp_scalar(c, x.eps);
  r.deps = zp_scalar(c, x.deps);
  for (std::size_t i = 0; i < r.deep_v.size(); ++i) {
    r.deep_v[i] = zp_scalar(c, x.deep_v[i]);
    r.deep_dv[i] = zp_scalar(c, x.deep_dv[i]);
  }
  r.canonicalize();
  return r;
}

EpsDrwForm eps_d(const EpsDrwForm& x) {
  const unsigned p = x.p;
  EpsDrwForm r = EpsDrwForm::zero(p, x.n, x.q + 1, x.model);
  r.head = zp_d(x.head);
  // d(a[eps]) = (da)[eps] + (-1)^q a d[eps]
  r.eps = zp_d(x.eps);
  r.deps = zp_scalar(sign(x.q, p), x.eps);
  // d(b d[eps]) = (db) d[eps]
  r.deps = r.deps + zp_d(x.deps);
  // d(V^s(a[eps])) = dV^s(a[eps]); d(dV^s(...)) = 0
  for (std::size_t i = 0; i < x.deep_v.size(); ++i) r.deep_dv[i] = x.deep_v[i];
  r.canonicalize();
  return r;
}

EpsDrwForm eps_F(const EpsDrwForm& x) {
  if (x.n < 2) fail(ErrorKind::LengthUnderflow, "F needs n >= 2");
  const unsigned p = x.p;
  const ZpLocal pp(p, p);
  EpsDrwForm r = EpsDrwForm::zero(p, x.n - 1, x.q, x.model);
  r.head = zp_F(x.head);
  // F(a[eps]) = 0 and F(b d[eps]) = 0.
  // F(V(a[eps])) = p a[eps]; F(V^s(a[eps])) = p V^{s-1}(a[eps])
  r.eps = zp_scalar(pp, x.deep_v_at(1));
  for (std::size_t s = 2; s < x.n; ++s) r.deep_v[s - 2] = zp_scalar(pp, x.deep_v_at(s));
  // F(dV(b[eps])) = d(b[eps]) = (db)[eps] + (-1)^{q-1} b d[eps]; F(dV^s) = dV^{s-1}
  const ZpDrwForm& b1 = x.deep_dv_at(1);
  r.eps = r.eps + zp_d(b1);
  r.deps = zp_scalar(sign(x.q - 1, p), b1);
  for (std::size_t s = 2; s < x.n; ++s) r.deep_dv[s - 2] = x.deep_dv_at(s);
  r.canonicalize();
  return r;
}

EpsDrwForm eps_V(const EpsDrwForm& x) {
  const unsigned p = x.p;
  const ZpLocal pp(p, p);
  EpsDrwForm r = EpsDrwForm::zero(p, x.n + 1, x.q, x.model);
  r.head = zp_V(x.head);
  // V(a[eps]) is the s = 1 summand.
  r.deep_v[0] = x.eps;
  // V(b d[eps]) = (-1)^{q-1} p dV(b[eps]) + (-1)^q V((db)[eps])
  r.deep_dv[0] = zp_scalar(sign(x.q - 1, p) * pp, x.deps);
  r.deep_v[0] = r.deep_v[0] + zp_scalar(sign(x.q, p), zp_d(x.deps));
  // V(V^s(a[eps])) = V^{s+1}(a[eps]); V(dV^s(b[eps])) = p dV^{s+1}(b[eps])
  for (std::size_t s = 1; s < x.n; ++s) {
    r.deep_v[s] = x.deep_v_at(s);
    r.deep_dv[s] = zp_scalar(pp, x.deep_dv_at(s));
  }
  r.canonicalize();
  return r;
}

EpsDrwForm eps_restrict(const EpsDrwForm& x) {
  if (x.n < 2) fail(ErrorKind::LengthUnderflow, "restriction needs n >= 2");
  EpsDrwForm r = EpsDrwForm::zero(x.p, x.n - 1, x.q, x.model);
  r.head = zp_restrict(x.head);
  r.eps = zp_restrict(x.eps);
  r.deps = zp_restrict(x.deps);
  // The s = n-1 summands live in length 1 and restrict to zero.
  for (std::size_t s = 1; s + 1 < x.n; ++s) {
    r.deep_v[s - 1] = zp_restrict(x.deep_v_at(s));
    r.deep_dv[s - 1] = zp_restrict(x.deep_dv_at(s));
  }
  r.canonicalize();
  return r;
}

EpsDrwForm left_mul_head(const ZpDrwForm& a, const EpsDrwForm& x) {
  if (a.prime() != x.p || a.length() != x.n)
    fail(ErrorKind::ContextMismatch, "head factor of different prime or length");
  const unsigned p = x.p;
  const int q = x.q;
  const int qa = a.degree();
  EpsDrwForm r = EpsDrwForm::zero(p, x.n, q + qa, x.model);
  r.head = zp_mul(a, x.head);
  r.eps = zp_mul(a, x.eps);
  r.deps = zp_mul(a, x.deps);
  const ZpDrwForm da = zp_d(a);
  ZpDrwForm fa = a, fda = da;
  for (std::size_t s = 1; s < x.n; ++s) {
    fa = zp_F(fa);
    fda = zp_F(fda);
    // a' V^s(a[eps]) = V^s(F^s(a') a [eps])
    r.deep_v[s - 1] = zp_mul(fa, x.deep_v_at(s));
    // a' dV^s(b[eps]) = (-1)^{q+q q'} V^s(b F^s(da')[eps]) + (-1)^{q q'} dV^s(b F^s(a')[eps])
    const ZpDrwForm& b = x.deep_dv_at(s);
    r.deep_v[s - 1] = r.deep_v[s - 1] + zp_scalar(sign(q + q * qa, p), zp_mul(b, fda));
    r.deep_dv[s - 1] = zp_scalar(sign(q * qa, p), zp_mul(b, fa));
  }
  r.canonicalize();
  return r;
}

EpsDrwForm eps_mul(const EpsDrwForm& x, const EpsDrwForm& y) {
  check_compatible(x, y);
  // Products of two non-head summands vanish; the remaining cross term is
  // moved to the left by graded commutativity.
  EpsDrwForm r = left_mul_head(x.head, y);
  return r + eps_scalar(sign(x.q * y.q, x.p), left_mul_head(y.head, x.rest()));
}

EpsDrwForm reassemble(const EpsDrwForm& x) {
  const unsigned p = x.p;
  EpsDrwForm e = EpsDrwForm::teich_eps(p, x.n, x.model);
  EpsDrwForm r = EpsDrwForm::from_head(x.head, x.model);
  r.canonicalize();
  r = r + left_mul_head(x.eps, e);
  r = r + left_mul_head(x.deps, eps_d(e));
  for (std::size_t s = 1; s < x.n; ++s) {
    EpsDrwForm v = left_mul_head(x.deep_v_at(s), EpsDrwForm::teich_eps(p, x.n - s, x.model));
    EpsDrwForm w = left_mul_head(x.deep_dv_at(s), EpsDrwForm::teich_eps(p, x.n - s, x.model));
    for (std::size_t k = 0; k < s; ++k) {
      v = eps_V(v);
      w = eps_V(w);
    }
    r = r + v + eps_d(w);
  }
  return r;
}

EpsDrwForm teich_eps_elem(const DualElem<ZpLocal>& u, std::size_t n, EpsModel model) {
  const unsigned p = u.base.prime();
  using W = witt::WittVector<DualElem<ZpLocal>>;
  auto nf = witt::eps_normal_form(W::teichmueller(u, {p, n}));
  EpsDrwForm x = EpsDrwForm::zero(p, n, 0, model);
  x.head = ZpDrwForm::from_vbasis(p, witt::to_vbasis(nf.head));
  x.eps = ZpDrwForm::from_vbasis(p, witt::to_vbasis(nf.teich_eps_coeff));
  for (std::size_t s = 1; s < n; ++s)
    x.deep_v[s - 1] = ZpDrwForm::from_vbasis(p, witt::to_vbasis(nf.deep_coeffs[s - 1]));
  x.canonicalize();
  return x;
}

EpsDrwForm d_teich_eps(const DualElem<ZpLocal>& u, std::size_t n, EpsModel model) {
  return eps_d(teich_eps_elem(u, n, model));
}

OmegaQuotForm omega_project(const EpsDrwForm& x) { return {x.head, x.eps, x.deps}; }

std::string OmegaQuotForm::to_string() const {
  std::vector<std::string> parts;
  if (!head.is_zero()) parts.push_back(wrap(head));
  if (!eps.is_zero()) parts.push_back(wrap(eps) + "[eps]");
  if (!deps.is_zero()) parts.push_back(wrap(deps) + "d[eps]");
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

namespace {

ZpDrwForm headline_witness(unsigned p, std::size_t n, EpsModel model) {
  DualElem<ZpLocal> one_plus_p{ZpLocal(1 + p, p), ZpLocal(p)};
  DualElem<ZpLocal> one_plus_eps{ZpLocal(1, p), ZpLocal(1, p)};
  EpsDrwForm xi = eps_mul(d_teich_eps(one_plus_p, n, model), d_teich_eps(one_plus_eps, n, model));
  return omega_project(xi).deps;
}

}  // namespace

CertificationReport certify_nonvanishing(unsigned p, std::size_t n, EpsModel model) {
  require_prime(p);
  if (p == 2) fail(ErrorKind::InvalidArgument, "certification needs an odd prime");
  if (n < 2) fail(ErrorKind::LengthUnderflow, "certification needs n >= 2");
  CertificationReport r;
  r.p = p;
  r.n = n;
  r.model = model;
  r.witness = headline_witness(p, n, model);
  for (std::size_t i = 1; i < n; ++i) r.witness_coordinates.push_back(r.witness.coeff(i).residue_mod_ppow(1));
  r.nonzero = !r.witness.is_zero_mod_p();
  r.reduced_nonzero =
      model == EpsModel::Reduced ? r.nonzero : !headline_witness(p, n, EpsModel::Reduced).is_zero_mod_p();

  // d[1+eps] and d[eps] agree once the V- and dV-summands are discarded.
  DualElem<ZpLocal> eps{ZpLocal(p), ZpLocal(1, p)};
  DualElem<ZpLocal> one_plus_eps{ZpLocal(1, p), ZpLocal(1, p)};
  r.claim1 = omega_project(d_teich_eps(one_plus_eps, n, model)) == omega_project(d_teich_eps(eps, n, model));
  r.claim3 = check_p_annihilation(n, p).passed;
  r.claim4 = true;
  for (const ZpLocal& x : {ZpLocal(1, p), ZpLocal(7, p), ZpLocal(1, 2, p)})
    r.claim4 = r.claim4 && check_mod_p2_divisibility(n, p, x);
  r.claim5 = d_teich(ZpLocal(1 + p, p), 2).coeff(1).residue_mod_ppow(1) == p - 1;
  return r;
}

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }
std::string pass(bool b) { return b ? "pass" : "FAIL"; }

std::string join(const std::vector<BigInt>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i].get_str();
  return out;
}

}  // namespace

std::string to_text(const CertificationReport& r) {
  std::ostringstream out;
  out << "p = " << r.p << ", n = " << r.n << ", model = " << name(r.model) << "\n";
  if (r.symbol) out << "symbol: " << *r.symbol << "\n";
  out << "witness (d[eps]-coefficient mod p): " << r.witness.to_string_mod_p() << "\n";
  out << "witness coordinates: [" << join(r.witness_coordinates, ", ") << "]\n";
  out << "claim1 d[1+eps] = d[eps] after projection: " << pass(r.claim1) << "\n";
  out << "claim3 [p] annihilates degree-1 forms: " << pass(r.claim3) << "\n";
  out << "claim4 W_n(p^2 Z_(p)) inside p W_n(Z_(p)): " << pass(r.claim4) << "\n";
  out << "claim5 dV(1)-coefficient of d[1+p]_2 is -1 mod p: " << pass(r.claim5) << "\n";
  if (r.agrees_with_drw) out << "agrees with d[1+p] d[1+eps]: " << yes(*r.agrees_with_drw) << "\n";
  out << "nonzero: " << yes(r.nonzero) << "\n";
  out << "reduced model nonzero: " << yes(r.reduced_nonzero) << "\n";
  return out.str();
}

std::string to_machine(const CertificationReport& r) {
  std::ostringstream out;
  out << "p=" << r.p << "\n";
  out << "n=" << r.n << "\n";
  out << "model=" << name(r.model) << "\n";
  if (r.symbol) out << "symbol=" << *r.symbol << "\n";
  out << "witness=" << r.witness.to_string_mod_p() << "\n";
  out << "witness_coordinates=" << join(r.witness_coordinates, ",") << "\n";
  out << "claim1=" << yes(r.claim1) << "\n";
  out << "claim3=" << yes(r.claim3) << "\n";
  out << "claim4=" << yes(r.claim4) << "\n";
  out << "claim5=" << yes(r.claim5) << "\n";
  if (r.agrees_with_drw) out << "agrees_with_drw=" << yes(*r.agrees_with_drw) << "\n";
  out << "nonzero=" << yes(r.nonzero) << "\n";
  out << "reduced_nonzero=" << yes(r.reduced_nonzero) << "\n";
  return out.str();
}

}  // namespace drwkit::drw
