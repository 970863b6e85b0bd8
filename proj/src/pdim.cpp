#include "drwkit/pdim.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "drwkit/fp_linalg.hpp"

namespace drwkit::pdim {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

FieldTower::FieldTower(std::vector<TowerStep> steps) : steps_(std::move(steps)) {
  std::set<std::string> names;
  for (const TowerStep& s : steps_) {
    if (s.kind == TowerStep::Kind::Transcendental) {
      if (s.name.empty()) fail(ErrorKind::InvalidArgument, "transcendental step without a name");
      if (!names.insert(s.name).second) fail(ErrorKind::InvalidArgument, "repeated tower variable " + s.name);
    } else if (s.degree < 2) {
      fail(ErrorKind::InvalidArgument, "finite step of degree " + std::to_string(s.degree));
    }
  }
}

FieldTower FieldTower::parse(const std::string& text) {
  auto parts = split_top(text, '|');
  if (parts.front() != "Fp") fail(ErrorKind::ParseError, "tower must start with Fp: \"" + text + "\"");
  static const std::regex trans(R"(\+([A-Za-z_][A-Za-z0-9_]*))");
  static const std::regex fin(R"(fin\(\s*(\d+)\s*(?:,\s*(sep|insep)\s*)?\))");
  std::vector<TowerStep> steps;
  for (std::size_t a = 1; a < parts.size(); ++a) {
    std::smatch m;
    if (std::regex_match(parts[a], m, trans)) {
      steps.push_back({TowerStep::Kind::Transcendental, m[1].str()});
    } else if (std::regex_match(parts[a], m, fin)) {
      if (m[1].length() > 9) fail(ErrorKind::ParseError, "extension degree too large");
      steps.push_back({TowerStep::Kind::Finite, "", static_cast<unsigned>(std::stoul(m[1].str())),
                       m[2].str() != "insep"});
    } else {
      fail(ErrorKind::ParseError, "bad tower step \"" + parts[a] + "\"");
    }
  }
  return FieldTower(std::move(steps));
}

FieldTower FieldTower::concat(const FieldTower& other) const {
  auto s = steps_;
  s.insert(s.end(), other.steps_.begin(), other.steps_.end());
  return FieldTower(std::move(s));
}

std::size_t FieldTower::transcendence_degree() const {
  return static_cast<std::size_t>(std::count_if(steps_.begin(), steps_.end(), [](const TowerStep& s) {
    return s.kind == TowerStep::Kind::Transcendental;
  }));
}

std::string FieldTower::to_string() const {
  std::string out = "Fp";
  for (const TowerStep& s : steps_) {
    if (s.kind == TowerStep::Kind::Transcendental)
      out += " | +" + s.name;
    else
      out += " | fin(" + std::to_string(s.degree) + (s.separable ? "" : ", insep") + ")";
  }
  return out;
}

// A finite extension k'/k of a field with finite p-basis has the same p-rank,
// separable or not; only transcendental steps raise it.
std::size_t prank(const FieldTower& tower) { return tower.transcendence_degree(); }

bool p_independent(const std::vector<FpRational>& elements) {
  if (elements.empty()) return true;
  const std::size_t m = elements.front().nvars();
  std::vector<std::vector<FpPoly>> rows;
  for (const FpRational& y : elements) {
    if (y.nvars() != m || y.prime() != elements.front().prime())
      fail(ErrorKind::ContextMismatch, "elements of different function fields");
    // Row of dy scaled by den^2, which does not change the rank.
    std::vector<FpPoly> row;
    for (std::size_t i = 0; i < m; ++i)
      row.push_back(y.num().derivative(i) * y.den() - y.num() * y.den().derivative(i));
    rows.push_back(std::move(row));
  }
  if (elements.size() > m) return false;
  return fraction_field_rank(std::move(rows)) == elements.size();
}

MonomialAlgebra MonomialAlgebra::parse(const FieldTower& field, std::size_t nvars, const std::string& ideal) {
  MonomialAlgebra a{field, nvars, {}};
  if (trim(ideal).empty()) return a;
  const auto names = default_variable_names(nvars);
  std::vector<std::string> renamed;
  for (std::size_t j = 1; j <= nvars; ++j) renamed.push_back("x" + std::to_string(j));
  for (const std::string& item : split_top(ideal, ',')) {
    if (item.empty()) fail(ErrorKind::ParseError, "empty ideal generator");
    if (item.front() == '(') {
      if (item.back() != ')') fail(ErrorKind::ParseError, "unbalanced exponent tuple \"" + item + "\"");
      Exponents e;
      for (const std::string& x : split_top(item.substr(1, item.size() - 2), ',')) {
        if (x.empty() || x.find_first_not_of("0123456789") != std::string::npos || x.size() > 9)
          fail(ErrorKind::ParseError, "bad exponent \"" + x + "\"");
        e.push_back(static_cast<unsigned>(std::stoul(x)));
      }
      if (e.size() != nvars) fail(ErrorKind::ParseError, "exponent tuple of the wrong length");
      a.generators.push_back(e);
      continue;
    }
    FpPoly f = FpPoly::parse(item, 2, renamed);
    if (f.terms().size() != 1 || f.terms().begin()->second != 1)
      fail(ErrorKind::ParseError, "ideal generator \"" + item + "\" is not a monomial");
    a.generators.push_back(f.terms().begin()->first);
  }
  return a;
}

namespace {

using Mask = unsigned long;

std::vector<Mask> supports(const MonomialAlgebra& a) {
  if (a.nvars > 20) fail(ErrorKind::InvalidArgument, "at most 20 variables are supported");
  std::vector<Mask> out;
  for (const Exponents& e : a.generators) {
    if (e.size() != a.nvars) fail(ErrorKind::ContextMismatch, "generator with the wrong number of variables");
    Mask m = 0;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) m |= Mask{1} << j;
    if (m == 0) fail(ErrorKind::ImproperIdeal, "the ideal contains 1");
    out.push_back(m);
  }
  return out;
}

bool covers(Mask set, const std::vector<Mask>& supp) {
  return std::all_of(supp.begin(), supp.end(), [&](Mask s) { return (s & set) != 0; });
}

}  // namespace

std::vector<std::vector<std::size_t>> minimal_primes(const MonomialAlgebra& a) {
  const auto supp = supports(a);
  std::vector<Mask> found;
  // Increasing popcount order makes minimality a subset test against earlier finds.
  std::vector<Mask> all(Mask{1} << a.nvars);
  for (Mask m = 0; m < all.size(); ++m) all[m] = m;
  std::stable_sort(all.begin(), all.end(),
                   [](Mask x, Mask y) { return __builtin_popcountl(x) < __builtin_popcountl(y); });
  for (Mask m : all) {
    if (!covers(m, supp)) continue;
    if (std::any_of(found.begin(), found.end(), [&](Mask f) { return (f & m) == f; })) continue;
    found.push_back(m);
  }
  std::vector<std::vector<std::size_t>> out;
  for (Mask m : found) {
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j < a.nvars; ++j)
      if (m >> j & 1) v.push_back(j);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t krull_dimension(const MonomialAlgebra& a) {
  std::size_t best = a.nvars;
  for (const auto& p : minimal_primes(a)) best = std::min(best, p.size());
  return a.nvars - best;
}

std::size_t pdim_algebra(const MonomialAlgebra& a) { return prank(a.field) + krull_dimension(a); }

std::size_t pdim_by_primes(const MonomialAlgebra& a) {
  const auto supp = supports(a);
  std::size_t best = 0;
  for (Mask m = 0; m < (Mask{1} << a.nvars); ++m)
    if (covers(m, supp)) best = std::max(best, prank(a.field) + a.nvars - __builtin_popcountl(m));
  return best;
}

// ---- p-bases ---------------------------------------------------------------

long default_pbasis_degree(const std::vector<FpPoly>& family) {
  long maxdeg = 1;
  for (const FpPoly& f : family) maxdeg = std::max(maxdeg, f.total_degree());
  return family.empty() ? 0 : static_cast<long>(family.front().prime()) * maxdeg * 3;
}

namespace {

void monomials_up_to(std::size_t r, long d, Exponents& cur, std::size_t pos, std::vector<Exponents>& out) {
  if (pos == r) {
    out.push_back(cur);
    return;
  }
  for (long a = 0; a <= d; ++a) {
    cur[pos] = static_cast<unsigned>(a);
    monomials_up_to(r, d - a, cur, pos + 1, out);
  }
}

struct PMonomial {
  FpPoly value;
  long degree;
};

std::vector<PMonomial> p_monomials(const std::vector<FpPoly>& family) {
  const unsigned p = family.front().prime();
  const std::size_t r = family.front().nvars();
  std::vector<PMonomial> out{{FpPoly::constant(p, r, 1), 0}};
  for (const FpPoly& y : family) {
    std::vector<PMonomial> next;
    for (const PMonomial& m : out) {
      FpPoly v = m.value;
      for (unsigned a = 0; a < p; ++a) {
        next.push_back({v, v.total_degree()});
        v = v * y;
      }
    }
    out = std::move(next);
  }
  return out;
}

// Products g^p y^alpha of degree <= bound, as vectors over the monomials of degree <= dim_bound.
std::vector<FpVector> products(const std::vector<PMonomial>& pm, unsigned p, std::size_t r, long bound,
                               const std::map<Exponents, std::size_t>& index) {
  std::vector<FpVector> vectors;
  for (const PMonomial& y : pm) {
    if (y.degree < 0) {  // a zero p-monomial is a dependence
      vectors.emplace_back(index.size(), 0);
      continue;
    }
    if (y.degree > bound) continue;
    std::vector<Exponents> gs;
    Exponents g(r, 0);
    monomials_up_to(r, (bound - y.degree) / static_cast<long>(p), g, 0, gs);
    for (const Exponents& e : gs) {
      FpVector v(index.size(), 0);
      for (const auto& [t, c] : y.value.terms()) {
        Exponents s = t;
        for (std::size_t j = 0; j < r; ++j) s[j] += e[j] * p;
        v[index.at(s)] = c;
      }
      vectors.push_back(std::move(v));
    }
  }
  return vectors;
}

// Returns "" when the truncation at degree D passes, else the reason. Independence
// is tested among products of degree <= D; spanning of the monomials of degree <= D
// allows products up to D + slack, since a non-homogeneous family may need higher
// degree terms that cancel.
std::string check_bound(const std::vector<FpPoly>& family, const std::vector<PMonomial>& pm, long D, long slack) {
  const unsigned p = family.front().prime();
  const std::size_t r = family.front().nvars();
  std::vector<Exponents> monos;
  Exponents cur(r, 0);
  monomials_up_to(r, D + slack, cur, 0, monos);
  std::map<Exponents, std::size_t> index;
  for (const auto& e : monos) index.emplace(e, index.size());

  const auto low = products(pm, p, r, D, index);
  if (rank(p, monos.size(), low) < low.size()) return "dependent";
  const FpSubspace span = FpSubspace::span(p, monos.size(), products(pm, p, r, D + slack, index));
  for (const auto& [e, idx] : index) {
    long deg = 0;
    for (unsigned x : e) deg += x;
    if (deg > D) continue;
    FpVector unit(monos.size(), 0);
    unit[idx] = 1;
    if (!span.contains(unit)) return "not spanning";
  }
  return "";
}

long slack_of(const std::vector<PMonomial>& pm) {
  long s = 0;
  for (const PMonomial& y : pm) s = std::max(s, y.degree);
  return s;
}

void check_family(const std::vector<FpPoly>& family) {
  if (family.empty()) return;
  for (const FpPoly& f : family)
    if (f.prime() != family.front().prime() || f.nvars() != family.front().nvars())
      fail(ErrorKind::ContextMismatch, "family elements in different rings");
}

PBasisReport empty_family_report(long max_degree) {
  // The empty family is a p-basis exactly of F_p itself; no ring variables are known here.
  return {max_degree, std::nullopt, "", true};
}

}  // namespace

PBasisReport p_basis_report(const std::vector<FpPoly>& family, long max_degree) {
  check_family(family);
  if (family.empty()) return empty_family_report(max_degree);
  const auto pm = p_monomials(family);
  const long slack = slack_of(pm);
  for (long D = 0; D <= max_degree; ++D) {
    std::string why = check_bound(family, pm, D, slack);
    if (!why.empty()) return {max_degree, D, why, false};
  }
  return {max_degree, std::nullopt, "", true};
}

PBasisReport p_basis_report_parallel(const std::vector<FpPoly>& family, long max_degree) {
  check_family(family);
  if (family.empty()) return empty_family_report(max_degree);
  const auto pm = p_monomials(family);
  const long slack = slack_of(pm);
  std::vector<std::string> why(static_cast<std::size_t>(std::max(max_degree + 1, 0L)));
#pragma omp parallel for schedule(dynamic)
  for (long D = 0; D <= max_degree; ++D) why[static_cast<std::size_t>(D)] = check_bound(family, pm, D, slack);
  for (long D = 0; D <= max_degree; ++D)
    if (!why[static_cast<std::size_t>(D)].empty()) return {max_degree, D, why[static_cast<std::size_t>(D)], false};
  return {max_degree, std::nullopt, "", true};
}

bool p_basis_check(const std::vector<FpPoly>& family, std::optional<long> max_degree) {
  return p_basis_report(family, max_degree.value_or(default_pbasis_degree(family))).passed;
}

}  // namespace drwkit::pdim
