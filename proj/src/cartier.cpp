#include "drwkit/cartier.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <sstream>

#include "drwkit/error.hpp"

namespace drwkit::cartier {

// ---- PolyForm --------------------------------------------------------------

PolyForm::PolyForm(unsigned p, std::size_t r, int degree) : p_(p), r_(r), i_(degree) {
  if (degree < 0) fail(ErrorKind::InvalidArgument, "negative form degree");
}

PolyForm PolyForm::from_poly(const FpPoly& f, const IndexSet& dx) {
  PolyForm w(f.prime(), f.nvars(), static_cast<int>(dx.size()));
  for (const auto& [e, c] : f.terms()) w.add_term(e, dx, c);
  return w;
}

std::vector<long> PolyForm::total_degrees() const {
  std::vector<long> out;
  for (const auto& [key, c] : terms_) {
    long d = i_;
    for (unsigned x : key.first) d += x;
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void PolyForm::add_term(const Exponents& e, IndexSet dx, long long c) {
  if (e.size() != r_) fail(ErrorKind::ContextMismatch, "exponent length mismatch");
  if (dx.size() != static_cast<std::size_t>(i_)) fail(ErrorKind::ContextMismatch, "form degree mismatch");
  for (unsigned j : dx)
    if (j >= r_) fail(ErrorKind::InvalidArgument, "dx index out of range");
  // Sort the wedge factors, tracking the sign; a repeated factor kills the term.
  int sign = 1;
  for (std::size_t a = 0; a < dx.size(); ++a)
    for (std::size_t b = 0; b + 1 < dx.size() - a; ++b)
      if (dx[b] > dx[b + 1]) {
        std::swap(dx[b], dx[b + 1]);
        sign = -sign;
      }
  for (std::size_t a = 0; a + 1 < dx.size(); ++a)
    if (dx[a] == dx[a + 1]) return;
  std::uint32_t v = fp_reduce(sign * c, p_);
  if (v == 0) return;
  FormKey key{e, dx};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), v);
    return;
  }
  it->second = (it->second + v) % p_;
  if (it->second == 0) terms_.erase(it);
}

void PolyForm::check_compatible(const PolyForm& o) const {
  if (o.p_ != p_ || o.r_ != r_) fail(ErrorKind::ContextMismatch, "forms over different rings");
}

PolyForm PolyForm::operator-() const {
  PolyForm w(p_, r_, i_);
  for (const auto& [k, c] : terms_) w.terms_.emplace(k, p_ - c);
  return w;
}

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
  a.check_compatible(b);
  if (a.i_ != b.i_) fail(ErrorKind::ContextMismatch, "sum of forms of different degree");
  PolyForm w = a;
  for (const auto& [k, c] : b.terms_) w.add_term(k.first, k.second, c);
  return w;
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) { return a + (-b); }

FpPoly PolyForm::coefficient(const IndexSet& dx) const {
  FpPoly f(p_, r_);
  for (const auto& [k, c] : terms_)
    if (k.second == dx) f.add_term(k.first, c);
  return f;
}

namespace {

std::string dx_string(const IndexSet& dx) {
  std::string out;
  for (std::size_t a = 0; a < dx.size(); ++a) out += (a ? "^dx" : "dx") + std::to_string(dx[a]);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Polynomial used as a coefficient: omitted when 1, parenthesized when it has several terms.
std::string coefficient_prefix(const FpPoly& f, const std::vector<std::string>& names) {
  if (f == FpPoly::constant(f.prime(), f.nvars(), 1)) return "";
  std::string s = f.to_string(names);
  if (f.terms().size() > 1) s = "(" + s + ")";
  return s + " ";
}

// Splits at top-level + and binary - (the sign stays with the following item).
std::vector<std::string> split_items(const std::string& text) {
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  char prev = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    bool binary = prev != 0 && std::string("+-*^(/").find(prev) == std::string::npos;
    if (depth == 0 && (c == '+' || c == '-') && binary) {
      items.push_back(cur);
      cur = c == '-' ? "-" : "";
      prev = c;
      continue;
    }
    cur += c;
    if (c != ' ' && c != '\t') prev = c;
  }
  items.push_back(cur);
  return items;
}

}  // namespace

std::string PolyForm::to_string() const {
  if (terms_.empty()) return "0";
  const auto names = default_variable_names(r_);
  // Group by dx-index set, in increasing order of the index sets.
  std::map<IndexSet, FpPoly> groups;
  for (const auto& [k, c] : terms_) {
    auto it = groups.try_emplace(k.second, p_, r_).first;
    it->second.add_term(k.first, c);
  }
  std::string out;
  for (const auto& [dx, f] : groups) {
    if (!out.empty()) out += " + ";
    if (dx.empty())
      out += f.to_string(names);
    else
      out += coefficient_prefix(f, names) + dx_string(dx);
  }
  return out;
}

PolyForm PolyForm::parse(const std::string& text, unsigned p, std::size_t r, int degree) {
  require_prime(p);
  const auto names = default_variable_names(r);
  static const std::regex dx_tail(R"(^(.*?)\*?\s*(dx\d+(\^dx\d+)*)$)");
  std::vector<std::pair<FpPoly, IndexSet>> items;
  int found_degree = -1;
  for (const std::string& raw : split_items(text)) {
    std::string item = trim(raw);
    if (item.empty()) fail(ErrorKind::ParseError, "empty term in form \"" + text + "\"");
    IndexSet dx;
    std::string coeff = item;
    std::smatch m;
    if (std::regex_match(item, m, dx_tail) &&
        (m.position(2) == 0 || std::string(" \t*-").find(item[m.position(2) - 1]) != std::string::npos)) {
      coeff = trim(m[1].str());
      std::string tail = m[2].str();
      std::regex idx(R"(dx(\d+))");
      for (auto it = std::sregex_iterator(tail.begin(), tail.end(), idx); it != std::sregex_iterator(); ++it)
        dx.push_back(static_cast<unsigned>(std::stoul((*it)[1].str())));
    }
    if (coeff.empty()) coeff = "1";
    if (coeff == "-") coeff = "-1";
    int deg = static_cast<int>(dx.size());
    if (found_degree >= 0 && deg != found_degree)
      fail(ErrorKind::ParseError, "terms of different degree in \"" + text + "\"");
    found_degree = deg;
    for (unsigned j : dx)
      if (j >= r) fail(ErrorKind::ParseError, "dx" + std::to_string(j) + " needs more than " + std::to_string(r) + " variables");
    items.emplace_back(FpPoly::parse(coeff, p, names), dx);
  }
  PolyForm w(p, r, found_degree < 0 ? degree : found_degree);
  if (trim(text) == "0") return PolyForm(p, r, degree);
  for (const auto& [f, dx] : items) w = w + from_poly(f, dx);
  return w;
}

PolyForm poly_times(const FpPoly& f, const PolyForm& w) {
  PolyForm out(w.prime(), w.nvars(), w.degree());
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [k, v] : w.terms()) {
      Exponents s = e;
      for (std::size_t a = 0; a < s.size(); ++a) s[a] += k.first[a];
      out.add_term(s, k.second, static_cast<long long>(static_cast<std::uint64_t>(c) * v % w.prime()));
    }
  }
  return out;
}

PolyForm form_d(const PolyForm& w) {
  PolyForm out(w.prime(), w.nvars(), w.degree() + 1);
  if (static_cast<std::size_t>(w.degree()) >= w.nvars()) return out;
  for (const auto& [k, c] : w.terms()) {
    for (unsigned j = 0; j < w.nvars(); ++j) {
      if (k.first[j] % w.prime() == 0) continue;
      Exponents e = k.first;
      e[j] -= 1;
      IndexSet dx{j};
      dx.insert(dx.end(), k.second.begin(), k.second.end());
      out.add_term(e, dx, static_cast<long long>(static_cast<std::uint64_t>(c) * (k.first[j] % w.prime())));
    }
  }
  return out;
}

PolyForm form_wedge(const PolyForm& a, const PolyForm& b) {
  if (a.prime() != b.prime() || a.nvars() != b.nvars())
    fail(ErrorKind::ContextMismatch, "forms over different rings");
  PolyForm out(a.prime(), a.nvars(), a.degree() + b.degree());
  if (static_cast<std::size_t>(out.degree()) > a.nvars()) return out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Exponents e = ka.first;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += kb.first[j];
      IndexSet dx = ka.second;
      dx.insert(dx.end(), kb.second.begin(), kb.second.end());
      out.add_term(e, dx, static_cast<long long>(static_cast<std::uint64_t>(ca) * cb % a.prime()));
    }
  return out;
}

PolyForm gamma(const PolyForm& w) {
  const unsigned p = w.prime();
  PolyForm out(p, w.nvars(), w.degree());
  for (const auto& [k, c] : w.terms()) {
    Exponents e = k.first;
    for (unsigned& x : e) x *= p;
    for (unsigned j : k.second) e[j] += p - 1;
    out.add_term(e, k.second, c);
  }
  return out;
}

// ---- slices ----------------------------------------------------------------

namespace {

void monomials_of_degree(std::size_t r, long d, Exponents& cur, std::size_t pos, std::vector<Exponents>& out) {
  if (pos + 1 == r) {
    cur[pos] = static_cast<unsigned>(d);
    out.push_back(cur);
    return;
  }
  for (long a = 0; a <= d; ++a) {
    cur[pos] = static_cast<unsigned>(a);
    monomials_of_degree(r, d - a, cur, pos + 1, out);
  }
}

void subsets(std::size_t r, int k, std::size_t start, IndexSet& cur, std::vector<IndexSet>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = start; j < r; ++j) {
    cur.push_back(static_cast<unsigned>(j));
    subsets(r, k, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FormKey> slice_basis(std::size_t r, int i, long d) {
  std::vector<FormKey> basis;
  if (i < 0 || static_cast<std::size_t>(i) > r || d < i) return basis;
  std::vector<Exponents> monos;
  if (r == 0) {
    if (d == 0) monos.emplace_back();
  } else {
    Exponents cur(r, 0);
    monomials_of_degree(r, d - i, cur, 0, monos);
  }
  std::vector<IndexSet> sets;
  IndexSet cur;
  subsets(r, i, 0, cur, sets);
  for (const auto& e : monos)
    for (const auto& s : sets) basis.emplace_back(e, s);
  std::sort(basis.begin(), basis.end());
  return basis;
}

FpVector to_coords(const PolyForm& w, const std::vector<FormKey>& basis) {
  FpVector v(basis.size(), 0);
  for (const auto& [k, c] : w.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), k);
    if (it == basis.end() || *it != k) fail(ErrorKind::Internal, "form term outside the slice");
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

PolyForm from_coords(const Context& ctx, int i, const std::vector<FormKey>& basis, const FpVector& v) {
  PolyForm w(ctx.p, ctx.r, i);
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (v[a] != 0) w.add_term(basis[a].first, basis[a].second, v[a]);
  return w;
}

namespace {

PolyForm basis_form(const Context& ctx, const FormKey& k) {
  PolyForm w(ctx.p, ctx.r, static_cast<int>(k.second.size()));
  w.add_term(k.first, k.second, 1);
  return w;
}

// Matrix of d from the (i, d) slice to the (i+1, d) slice, rows = images.
FpMatrix d_matrix(const Context& ctx, int i, long d) {
  auto src = slice_basis(ctx.r, i, d);
  auto tgt = slice_basis(ctx.r, i + 1, d);
  FpMatrix m(ctx.p, 0, tgt.size());
  for (const auto& k : src) m.append_row(to_coords(form_d(basis_form(ctx, k)), tgt));
  return m;
}

// gamma applied to a subspace of the (i, d) slice, as vectors of the (i, p d) slice.
std::vector<FpVector> gamma_images(const Context& ctx, int i, long d, const FpSubspace& s) {
  auto src = slice_basis(ctx.r, i, d);
  auto tgt = slice_basis(ctx.r, i, d * static_cast<long>(ctx.p));
  std::vector<FpVector> out;
  for (const FpVector& v : s.basis()) out.push_back(to_coords(gamma(from_coords(ctx, i, src, v)), tgt));
  return out;
}

}  // namespace

FpSubspace slice_Z(const Context& ctx, int i, long d) { return left_kernel(d_matrix(ctx, i, d)); }

FpSubspace slice_B(const Context& ctx, int i, long d) {
  const std::size_t dim = slice_basis(ctx.r, i, d).size();
  if (i == 0) return FpSubspace(ctx.p, dim);
  FpMatrix m = d_matrix(ctx, i - 1, d);
  std::vector<FpVector> rows;
  for (std::size_t a = 0; a < m.rows(); ++a) rows.push_back(m.row(a));
  return FpSubspace::span(ctx.p, dim, rows);
}

namespace {

// n-th member of a tower, n >= 2: B_(d) + gamma(previous at degree d/p).
FpSubspace tower_step(const Context& ctx, int i, long d, const std::function<FpSubspace(long)>& prev) {
  FpSubspace b = slice_B(ctx, i, d);
  if (d % static_cast<long>(ctx.p) != 0) return b;
  const long src = d / static_cast<long>(ctx.p);
  return b.sum(FpSubspace::span(ctx.p, b.ambient_dim(), gamma_images(ctx, i, src, prev(src))));
}

}  // namespace

FpSubspace higher_B(const Context& ctx, unsigned n, int i, long d) {
  if (n == 0) return FpSubspace(ctx.p, slice_basis(ctx.r, i, d).size());
  if (n == 1) return slice_B(ctx, i, d);
  return tower_step(ctx, i, d, [&](long s) { return higher_B(ctx, n - 1, i, s); });
}

FpSubspace higher_Z(const Context& ctx, unsigned n, int i, long d) {
  if (n == 0) return FpSubspace::full(ctx.p, slice_basis(ctx.r, i, d).size());
  if (n == 1) return slice_Z(ctx, i, d);
  return tower_step(ctx, i, d, [&](long s) { return higher_Z(ctx, n - 1, i, s); });
}

PolyForm gamma_class(const PolyForm& w) {
  const Context ctx{w.prime(), w.nvars()};
  PolyForm g = gamma(w);
  PolyForm out(ctx.p, ctx.r, w.degree());
  for (long d : g.total_degrees()) {
    auto basis = slice_basis(ctx.r, w.degree(), d);
    PolyForm part(ctx.p, ctx.r, w.degree());
    for (const auto& [k, c] : g.terms()) {
      long td = w.degree();
      for (unsigned x : k.first) td += x;
      if (td == d) part.add_term(k.first, k.second, c);
    }
    FpVector rep = slice_B(ctx, w.degree(), d).reduce(to_coords(part, basis));
    out = out + from_coords(ctx, w.degree(), basis, rep);
  }
  return out;
}

PolyForm cartier_C(const PolyForm& w) {
  if (!form_d(w).is_zero()) fail(ErrorKind::InvalidArgument, "the Cartier operator needs a closed form");
  const Context ctx{w.prime(), w.nvars()};
  const int i = w.degree();
  const long p = static_cast<long>(ctx.p);
  PolyForm out(ctx.p, ctx.r, i);
  for (long d : w.total_degrees()) {
    PolyForm part(ctx.p, ctx.r, i);
    for (const auto& [k, c] : w.terms()) {
      long td = i;
      for (unsigned x : k.first) td += x;
      if (td == d) part.add_term(k.first, k.second, c);
    }
    const auto tgt = slice_basis(ctx.r, i, d);
    const FpSubspace b = slice_B(ctx, i, d);
    FpVector target = b.reduce(to_coords(part, tgt));
    if (std::all_of(target.begin(), target.end(), [](std::uint32_t x) { return x == 0; })) continue;
    if (d % p != 0) fail(ErrorKind::Internal, "closed form outside B in a degree prime to p");
    // Solve sum_a c_a gamma(e_a) = target modulo B over the source basis e_a.
    const auto src = slice_basis(ctx.r, i, d / p);
    const std::size_t n = src.size(), m = tgt.size();
    std::vector<FpVector> rows;
    for (const auto& key : src) {
      FpVector g = b.reduce(to_coords(gamma(basis_form(ctx, key)), tgt));
      FpVector row(m + n, 0);
      std::copy(g.begin(), g.end(), row.begin());
      rows.push_back(std::move(row));
    }
    for (std::size_t a = 0; a < n; ++a) rows[a][m + a] = 1;
    FpSubspace aug = FpSubspace::span(ctx.p, m + n, rows);
    FpVector probe(m + n, 0);
    std::copy(target.begin(), target.end(), probe.begin());
    FpVector rest = aug.reduce(probe);
    for (std::size_t a = 0; a < m; ++a)
      if (rest[a] != 0) fail(ErrorKind::Internal, "gamma is not onto Z/B in this slice");
    // probe - rest lies in the span, its tail records minus the source coefficients.
    FpVector coeffs(n);
    for (std::size_t a = 0; a < n; ++a) coeffs[a] = (ctx.p - rest[m + a]) % ctx.p;
    out = out + from_coords(ctx, i, src, coeffs);
  }
  return out;
}

namespace {

SliceCheck check_slice(const Context& ctx, int i, long d) {
  SliceCheck c{d, slice_basis(ctx.r, i, d).size(), 0, 0, true, false};
  const long pd = d * static_cast<long>(ctx.p);
  const FpSubspace z = slice_Z(ctx, i, pd);
  const FpSubspace b = slice_B(ctx, i, pd);
  c.dim_target = z.dim() - b.dim();
  auto images = gamma_images(ctx, i, d, FpSubspace::full(ctx.p, c.dim_source));
  for (const FpVector& v : images) c.closed = c.closed && z.contains(v);
  c.rank = b.sum(FpSubspace::span(ctx.p, b.ambient_dim(), images)).dim() - b.dim();
  c.pass = c.closed && c.rank == c.dim_source && c.rank == c.dim_target;
  return c;
}

void check_args(const Context& ctx, int i) {
  require_prime(ctx.p);
  if (i < 0) fail(ErrorKind::InvalidArgument, "negative form degree");
}

}  // namespace

CartierReport verify_cartier_iso(const Context& ctx, int i, long max_degree) {
  check_args(ctx, i);
  CartierReport r{ctx, i, max_degree, {}, true};
  for (long d = 0; d <= max_degree; ++d) {
    r.slices.push_back(check_slice(ctx, i, d));
    r.passed = r.passed && r.slices.back().pass;
  }
  return r;
}

CartierReport verify_cartier_iso_parallel(const Context& ctx, int i, long max_degree) {
  check_args(ctx, i);
  CartierReport r{ctx, i, max_degree, {}, true};
  const long count = max_degree + 1;
  std::vector<SliceCheck> slices(static_cast<std::size_t>(std::max(count, 0L)));
#pragma omp parallel for schedule(dynamic)
  for (long d = 0; d < count; ++d) slices[static_cast<std::size_t>(d)] = check_slice(ctx, i, d);
  r.slices = std::move(slices);
  for (const auto& s : r.slices) r.passed = r.passed && s.pass;
  return r;
}

std::string to_text(const CartierReport& r) {
  std::ostringstream out;
  out << "p = " << r.ctx.p << ", r = " << r.ctx.r << ", i = " << r.i << "\n";
  out << "degree  dim_source  dim_target  rank  pass\n";
  for (const auto& s : r.slices)
    out << s.degree << "  " << s.dim_source << "  " << s.dim_target << "  " << s.rank << "  "
        << (s.pass ? "pass" : "FAIL") << "\n";
  out << (r.passed ? "all slices pass" : "some slices FAIL") << "\n";
  return out.str();
}

std::vector<TowerViolation> check_tower(const Context& ctx, int i, unsigned max_n, long max_degree) {
  std::vector<TowerViolation> bad;
  for (long d = 0; d <= max_degree; ++d) {
    std::vector<FpSubspace> B, Z;
    for (unsigned n = 0; n <= max_n + 1; ++n) {
      B.push_back(higher_B(ctx, n, i, d));
      Z.push_back(higher_Z(ctx, n, i, d));
    }
    for (unsigned n = 0; n <= max_n; ++n) {
      if (!B[n + 1].contains(B[n])) bad.push_back({n, d, "B_n in B_{n+1}"});
      if (!Z[n + 1].contains(B[n + 1])) bad.push_back({n, d, "B_{n+1} in Z_{n+1}"});
      if (!Z[n].contains(Z[n + 1])) bad.push_back({n, d, "Z_{n+1} in Z_n"});
    }
  }
  return bad;
}

// ---- relative forms --------------------------------------------------------

ElementaryExt ElementaryExt::make(unsigned p, std::size_t m, const std::vector<FpPoly>& relations) {
  require_prime(p);
  if (relations.size() != 1)
    fail(ErrorKind::NotMonogenic, "expected exactly one relation x^p = v, got " + std::to_string(relations.size()));
  const FpPoly& v = relations.front();
  if (v.prime() != p || v.nvars() != m) fail(ErrorKind::ContextMismatch, "relation over a different ring");
  bool pth_power = true;
  for (const auto& [e, c] : v.terms())
    for (unsigned x : e) pth_power = pth_power && x % p == 0;
  if (pth_power)
    fail(ErrorKind::InvalidArgument, "relation " + v.to_string() + " is a p-th power; V[x]/(x^p - v) is not a domain");
  return ElementaryExt(p, m, v);
}

std::vector<std::string> ElementaryExt::base_names() const {
  std::vector<std::string> n;
  for (std::size_t j = 1; j <= m_; ++j) n.push_back("s" + std::to_string(j));
  return n;
}

std::vector<std::string> ElementaryExt::names() const {
  auto n = base_names();
  n.push_back("x");
  return n;
}

ElementaryExt ElementaryExt::parse(unsigned p, std::size_t m, const std::vector<std::string>& relations) {
  ElementaryExt probe(p, m, FpPoly(p, m));
  std::vector<FpPoly> rels;
  for (const auto& r : relations) rels.push_back(FpPoly::parse(r, p, probe.base_names()));
  return make(p, m, rels);
}

RelForm rel_zero(const ElementaryExt& ext, int degree) {
  if (degree != 0 && degree != 1) fail(ErrorKind::InvalidArgument, "relative forms have degree 0 or 1");
  return {degree, std::vector<FpPoly>(ext.prime(), FpPoly(ext.prime(), ext.base_vars()))};
}

RelForm rel_parse(const ElementaryExt& ext, const std::string& text, int degree) {
  const unsigned p = ext.prime();
  const std::size_t m = ext.base_vars();
  FpPoly f = FpPoly::parse(text, p, ext.names());
  RelForm w = rel_zero(ext, degree);
  for (const auto& [e, c] : f.terms()) {
    Exponents base(e.begin(), e.end() - 1);
    const unsigned k = e.back();
    FpPoly t = FpPoly::monomial(p, base, c) * ext.relation().pow(k / p);
    w.coeffs[k % p] += t;
  }
  (void)m;
  return w;
}

std::string to_string(const ElementaryExt& ext, const RelForm& w) {
  const unsigned p = ext.prime();
  FpPoly f(p, ext.base_vars() + 1);
  for (unsigned k = 0; k < p; ++k)
    for (const auto& [e, c] : w.coeffs[k].terms()) {
      Exponents full = e;
      full.push_back(k);
      f.add_term(full, c);
    }
  if (w.degree == 0) return f.to_string(ext.names());
  if (f.is_zero()) return "0";
  return coefficient_prefix(f, ext.names()) + "dx";
}

RelForm rel_d(const ElementaryExt& ext, const RelForm& w) {
  if (w.degree == 1) return rel_zero(ext, 1);  // Omega^2_{W/V} = 0
  RelForm out = rel_zero(ext, 1);
  for (unsigned k = 1; k < ext.prime(); ++k) out.coeffs[k - 1] = w.coeffs[k].scaled(k);
  return out;
}

namespace {

// Z/B representative: for degree 1, B is spanned over V by x^k dx with k < p-1.
RelForm reduce_mod_B(const ElementaryExt& ext, RelForm w) {
  if (w.degree == 1)
    for (unsigned k = 0; k + 1 < ext.prime(); ++k) w.coeffs[k] = FpPoly(ext.prime(), ext.base_vars());
  return w;
}

}  // namespace

RelForm relative_gamma(const ElementaryExt& ext, const FpPoly& v, const RelForm& b) {
  const unsigned p = ext.prime();
  // b^p = sum_k c_k^p v^k lies in V.
  FpPoly bp(p, ext.base_vars());
  for (unsigned k = 0; k < p; ++k) bp += b.coeffs[k].frobenius() * ext.relation().pow(k);
  RelForm out = rel_zero(ext, b.degree);
  out.coeffs[b.degree == 1 ? p - 1 : 0] = v * bp;
  return reduce_mod_B(ext, out);
}

namespace {

// Coordinates of the s-degree-d slice: (monomial of degree d, k) for k < p.
struct RelSlice {
  std::vector<Exponents> monos;
  unsigned p;
  std::size_t size() const { return monos.size() * p; }
  std::size_t index(std::size_t mono, unsigned k) const { return mono * p + k; }
};

RelSlice rel_slice(const ElementaryExt& ext, long d) {
  RelSlice s{{}, ext.prime()};
  if (d < 0) return s;
  if (ext.base_vars() == 0) {
    if (d == 0) s.monos.emplace_back();
    return s;
  }
  Exponents cur(ext.base_vars(), 0);
  monomials_of_degree(ext.base_vars(), d, cur, 0, s.monos);
  std::sort(s.monos.begin(), s.monos.end());
  return s;
}

FpVector rel_coords(const RelSlice& s, const RelForm& w) {
  FpVector v(s.size(), 0);
  for (unsigned k = 0; k < s.p; ++k)
    for (const auto& [e, c] : w.coeffs[k].terms()) {
      auto it = std::lower_bound(s.monos.begin(), s.monos.end(), e);
      if (it == s.monos.end() || *it != e) fail(ErrorKind::Internal, "relative form outside slice");
      v[s.index(static_cast<std::size_t>(it - s.monos.begin()), k)] = c;
    }
  return v;
}

RelForm rel_from_coords(const ElementaryExt& ext, const RelSlice& s, int degree, const FpVector& v) {
  RelForm w = rel_zero(ext, degree);
  for (std::size_t a = 0; a < s.monos.size(); ++a)
    for (unsigned k = 0; k < s.p; ++k)
      if (v[s.index(a, k)]) w.coeffs[k].add_term(s.monos[a], v[s.index(a, k)]);
  return w;
}

RelForm rel_basis(const ElementaryExt& ext, const Exponents& mono, unsigned k, int degree) {
  RelForm w = rel_zero(ext, degree);
  w.coeffs[k].add_term(mono, 1);
  return w;
}

FpSubspace rel_B(const ElementaryExt& ext, const RelSlice& s, int degree) {
  std::vector<FpVector> rows;
  if (degree == 1)
    for (const auto& mono : s.monos)
      for (unsigned k = 0; k < s.p; ++k) rows.push_back(rel_coords(s, rel_d(ext, rel_basis(ext, mono, k, 0))));
  return FpSubspace::span(ext.prime(), s.size(), rows);
}

FpSubspace rel_Z(const ElementaryExt& ext, const RelSlice& s, int degree) {
  if (degree == 1) return FpSubspace::full(ext.prime(), s.size());
  FpMatrix m(ext.prime(), 0, s.size());
  for (const auto& mono : s.monos)
    for (unsigned k = 0; k < s.p; ++k) m.append_row(rel_coords(s, rel_d(ext, rel_basis(ext, mono, k, 0))));
  return left_kernel(m);
}

}  // namespace

RelativeReport verify_relative_cartier(const ElementaryExt& ext, int i, long max_degree) {
  if (i != 0 && i != 1) fail(ErrorKind::InvalidArgument, "relative forms have degree 0 or 1");
  const unsigned p = ext.prime();
  RelativeReport report{i, {}, {}, true};
  for (long d = 0; d <= max_degree; ++d) {
    RelSlice s = rel_slice(ext, d);
    RelativeSliceCheck c{d, s.monos.size(), 0, 0, 0, true, {}, false};
    FpSubspace z = rel_Z(ext, s, i), b = rel_B(ext, s, i);
    c.dim_target = z.dim() - b.dim();
    c.dim_B = b.dim();
    // Source V (x) Omega^i is V-free on 1 (i = 0) or dx (i = 1).
    std::vector<FpVector> images;
    RelForm unit = rel_zero(ext, i);
    unit.coeffs[0] = FpPoly::constant(p, ext.base_vars(), 1);
    bool closed = true;
    for (const auto& mono : s.monos) {
      FpVector v = rel_coords(s, relative_gamma(ext, FpPoly::monomial(p, mono), unit));
      closed = closed && z.contains(v);
      images.push_back(v);
    }
    c.rank = b.sum(FpSubspace::span(p, s.size(), images)).dim() - b.dim();
    if (i == 1) {
      c.B_free = b.dim() == (p - 1) * s.monos.size();
      // V-module generators new in degree d: B_(d) modulo s_j B_(d-1).
      RelSlice prev = rel_slice(ext, d - 1);
      FpSubspace lower = rel_B(ext, prev, 1);
      std::vector<FpVector> decomposable;
      for (const FpVector& v : lower.basis()) {
        RelForm w = rel_from_coords(ext, prev, 1, v);
        for (std::size_t j = 0; j < ext.base_vars(); ++j) {
          RelForm sw = w;
          for (auto& c2 : sw.coeffs) c2 = c2 * FpPoly::variable(p, ext.base_vars(), j);
          decomposable.push_back(rel_coords(s, sw));
        }
      }
      FpSubspace dec = FpSubspace::span(p, s.size(), decomposable);
      for (const FpVector& v : b.basis()) {
        if (dec.contains(v)) continue;
        dec = dec.sum(FpSubspace::span(p, s.size(), {v}));
        RelForm g = rel_from_coords(ext, s, 1, v);
        c.new_B_generators.push_back(g);
        report.B_vbasis.push_back(g);
      }
    }
    c.pass = closed && c.B_free && c.rank == c.dim_source && c.rank == c.dim_target;
    report.passed = report.passed && c.pass;
    report.slices.push_back(std::move(c));
  }
  return report;
}

std::string to_text(const ElementaryExt& ext, const RelativeReport& r) {
  std::ostringstream out;
  out << "W = V[x]/(x^" << ext.prime() << " - (" << ext.relation().to_string(ext.base_names())
      << ")), i = " << r.i << "\n";
  out << "degree  dim_source  dim_target  rank  dim_B  pass\n";
  for (const auto& s : r.slices)
    out << s.degree << "  " << s.dim_source << "  " << s.dim_target << "  " << s.rank << "  " << s.dim_B
        << "  " << (s.pass ? "pass" : "FAIL") << "\n";
  if (r.i == 1) {
    out << "V-basis of B:";
    for (std::size_t a = 0; a < r.B_vbasis.size(); ++a) out << (a ? ", " : " ") << to_string(ext, r.B_vbasis[a]);
    out << "\n";
  }
  out << (r.passed ? "all slices pass" : "some slices FAIL") << "\n";
  return out.str();
}

}  // namespace drwkit::cartier
