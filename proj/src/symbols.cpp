#include "drwkit/symbols.hpp"

#include <algorithm>
#include <optional>

#include "drwkit/expr.hpp"

namespace drwkit::symbols {

using drw::EpsDrwForm;
using drw::EpsModel;

namespace {

void require_unit(const Dual& u) {
  if (!is_unit(u)) fail(ErrorKind::NotAUnit, to_string(u) + " is not a unit of Z_(p)[eps]");
}

std::string dual_text(const Dual& u) {
  if (u.eps.is_zero()) return u.base.to_string();
  std::string e = u.eps == ZpLocal(1, u.eps.prime()) ? "eps" : u.eps.to_string() + "*eps";
  if (u.base.is_zero()) return e;
  return u.base.to_string() + "+" + e;
}

}  // namespace

SteinbergSymbol::SteinbergSymbol(Dual a_, Dual b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.base.prime() != b.base.prime()) fail(ErrorKind::ContextMismatch, "symbol entries over different primes");
  require_unit(a);
  require_unit(b);
}

std::string SteinbergSymbol::to_string() const { return "{" + dual_text(a) + ", " + dual_text(b) + "}"; }

SteinbergSymbol SteinbergSymbol::parse(const std::string& text, unsigned p) {
  auto l = text.find('{');
  auto r = text.rfind('}');
  if (l == std::string::npos || r == std::string::npos || r < l)
    fail(ErrorKind::ParseError, "symbol must look like {a, b}: \"" + text + "\"");
  if (text.find_first_not_of(" \t", r + 1) != std::string::npos ||
      text.find_first_not_of(" \t") != l)
    fail(ErrorKind::ParseError, "trailing characters around symbol \"" + text + "\"");
  std::string inner = text.substr(l + 1, r - l - 1);
  int depth = 0;
  std::size_t comma = std::string::npos;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) {
      if (comma != std::string::npos) fail(ErrorKind::ParseError, "symbol has more than two entries");
      comma = i;
    }
  }
  if (comma == std::string::npos) fail(ErrorKind::ParseError, "symbol needs two entries");
  return SteinbergSymbol(parse_dual(inner.substr(0, comma), p), parse_dual(inner.substr(comma + 1), p));
}

EpsDrwForm dlog(const Dual& u, std::size_t n, EpsModel model) {
  require_unit(u);
  return drw::eps_mul(drw::teich_eps_elem(inverse(u), n, model), drw::d_teich_eps(u, n, model));
}

EpsDrwForm dlog_symbol(const SteinbergSymbol& sym, std::size_t n, EpsModel model) {
  return drw::eps_mul(dlog(sym.a, n, model), dlog(sym.b, n, model));
}

EpsDrwForm steinberg_product(const Dual& a, std::size_t n, EpsModel model) {
  const unsigned p = a.base.prime();
  Dual b = Dual{ZpLocal(1, p), ZpLocal(p)} - a;
  require_unit(a);
  require_unit(b);
  return drw::eps_mul(dlog(a, n, model), dlog(b, n, model));
}

bool steinberg_check(const Dual& a, std::size_t n, EpsModel model) {
  return steinberg_product(a, n, model).is_zero();
}

namespace {

struct Job {
  std::size_t ai;
  std::size_t n;
};

std::vector<Job> jobs_for(const std::vector<Dual>& as, const std::vector<std::size_t>& ns) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t n : ns) jobs.push_back({i, n});
  return jobs;
}

}  // namespace

SweepResult steinberg_sweep_serial(const std::vector<Dual>& as, const std::vector<std::size_t>& ns,
                                   EpsModel model) {
  SweepResult result;
  for (const Job& job : jobs_for(as, ns)) {
    EpsDrwForm prod = steinberg_product(as[job.ai], job.n, model);
    ++result.checked;
    if (!prod.is_zero()) result.failures.push_back({as[job.ai], job.n, prod});
  }
  return result;
}

SweepResult steinberg_sweep_parallel(const std::vector<Dual>& as, const std::vector<std::size_t>& ns,
                                     EpsModel model) {
  const std::vector<Job> jobs = jobs_for(as, ns);
  std::vector<std::optional<EpsDrwForm>> products(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < jobs.size(); ++k)
    products[k] = steinberg_product(as[jobs[k].ai], jobs[k].n, model);
  SweepResult result;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    ++result.checked;
    if (!products[k]->is_zero()) result.failures.push_back({as[jobs[k].ai], jobs[k].n, *products[k]});
  }
  return result;
}

std::vector<Dual> steinberg_units(unsigned p) {
  std::vector<Dual> out;
  for (unsigned alpha = 1; alpha < p * p; ++alpha) {
    if (alpha % p == 0 || (alpha + p - 1) % p == 0) continue;
    for (unsigned beta = 0; beta < p; ++beta) out.push_back({ZpLocal(alpha, p), ZpLocal(beta, p)});
  }
  return out;
}

drw::CertificationReport certify_symbol_nonvanishing(unsigned p, std::size_t n, EpsModel model) {
  drw::CertificationReport r = drw::certify_nonvanishing(p, n, model);
  SteinbergSymbol sym({ZpLocal(1 + p, p), ZpLocal(p)}, {ZpLocal(1, p), ZpLocal(1, p)});
  const bool drw_nonzero = r.nonzero;
  r.symbol = sym.to_string();
  r.witness = drw::omega_project(dlog_symbol(sym, n, model)).deps;
  r.witness_coordinates.clear();
  for (std::size_t i = 1; i < n; ++i) r.witness_coordinates.push_back(r.witness.coeff(i).residue_mod_ppow(1));
  r.nonzero = !r.witness.is_zero_mod_p();
  r.agrees_with_drw = r.nonzero == drw_nonzero;
  if (model == EpsModel::DirectSum)
    r.reduced_nonzero = !drw::omega_project(dlog_symbol(sym, n, EpsModel::Reduced)).deps.is_zero_mod_p();
  else
    r.reduced_nonzero = r.nonzero;
  return r;
}

}  // namespace drwkit::symbols
