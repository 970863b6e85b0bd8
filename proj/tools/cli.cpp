#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <sstream>

#include "drwkit/cartier.hpp"
#include "drwkit/drw_base.hpp"
#include "drwkit/drw_eps.hpp"
#include "drwkit/error.hpp"
#include "drwkit/pdim.hpp"
#include "drwkit/symbols.hpp"
#include "drwkit/witt.hpp"

namespace drwkit::cli {

namespace {

using drw::EpsDrwForm;
using drw::ZpDrwForm;
using Dual = DualElem<ZpLocal>;

struct Options {
  std::string op;
  std::vector<std::string> args;
  unsigned p = 3;
  std::size_t n = 2;
  int i = -1;
  std::optional<long> max_degree;
  std::size_t vars = 1;
  std::size_t base_vars = 1;
  unsigned levels = 4;
  std::string format = "text";
  std::string model = "direct-sum";
  std::vector<std::string> relations;
  std::string tower = "Fp";
  std::string names;

  bool machine() const { return format == "machine"; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- helpers ---------------------------------------------------------------

void need_args(const Options& o, std::size_t count) {
  if (o.args.size() != count)
    throw UsageError(o.op + " takes " + std::to_string(count) + " argument" + (count == 1 ? "" : "s") +
                     ", got " + std::to_string(o.args.size()));
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    fail(ErrorKind::ParseError, "expected a bracketed list: \"" + text + "\"");
  t = t.substr(1, t.size() - 2);
  std::vector<std::string> items;
  if (trim(t).empty()) return items;
  std::string cur;
  int depth = 0;
  for (char c : t) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  items.push_back(trim(cur));
  return items;
}

template <class R, class Parse>
std::vector<R> parse_list(const std::string& text, std::size_t n, Parse parse) {
  auto items = split_list(text);
  if (items.size() != n)
    fail(ErrorKind::ParseError, "expected " + std::to_string(n) + " entries in \"" + text + "\"");
  std::vector<R> out;
  for (const auto& s : items) out.push_back(parse(s));
  return out;
}

witt::WittVector<ZpLocal> parse_witt(const std::string& text, const Options& o) {
  return {{o.p, o.n}, parse_list<ZpLocal>(text, o.n, [&](const std::string& s) { return ZpLocal::parse(s, o.p); })};
}

template <class R>
std::string list_string(const std::vector<R>& v) {
  std::string out = "[";
  for (std::size_t a = 0; a < v.size(); ++a) out += (a ? ", " : "") + to_string(v[a]);
  return out + "]";
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

// Text: the value alone. Machine: key=value.
void emit(std::ostream& out, const Options& o, const std::string& key, const std::string& value) {
  if (o.machine())
    out << key << "=" << value << "\n";
  else
    out << value << "\n";
}

const char* boolean(bool b) { return b ? "true" : "false"; }

// ---- witt ------------------------------------------------------------------

void cmd_witt(const Options& o, std::ostream& out) {
  using W = witt::WittVector<ZpLocal>;
  auto one = [&]() { need_args(o, 1); return parse_witt(o.args[0], o); };
  auto two = [&]() {
    need_args(o, 2);
    return std::pair<W, W>{parse_witt(o.args[0], o), parse_witt(o.args[1], o)};
  };
  std::string r;
  if (o.op == "add") {
    auto [a, b] = two();
    r = (a + b).coords_string();
  } else if (o.op == "sub") {
    auto [a, b] = two();
    r = (a - b).coords_string();
  } else if (o.op == "mul") {
    auto [a, b] = two();
    r = (a * b).coords_string();
  } else if (o.op == "neg") {
    r = (-one()).coords_string();
  } else if (o.op == "scale") {
    need_args(o, 2);
    r = witt::scale(parse_bigint(o.args[0]), parse_witt(o.args[1], o)).coords_string();
  } else if (o.op == "ghost") {
    r = list_string(witt::ghost(one()).entries());
  } else if (o.op == "unghost") {
    need_args(o, 1);
    auto g = parse_list<ZpLocal>(o.args[0], o.n, [&](const std::string& s) { return ZpLocal::parse(s, o.p); });
    r = witt::unghost(witt::GhostVector<ZpLocal>({o.p, o.n}, g)).coords_string();
  } else if (o.op == "teich") {
    need_args(o, 1);
    r = W::teichmueller(ZpLocal::parse(o.args[0], o.p), {o.p, o.n}).coords_string();
  } else if (o.op == "F") {
    r = witt::frobenius(one()).coords_string();
  } else if (o.op == "V") {
    r = witt::verschiebung(one()).coords_string();
  } else if (o.op == "R") {
    r = witt::restrict_length(one()).coords_string();
  } else if (o.op == "expand") {
    need_args(o, 1);
    r = list_string(witt::teich_expand(ZpLocal::parse(o.args[0], o.p), o.n));
  } else if (o.op == "vbasis") {
    r = list_string(witt::to_vbasis(one()));
  } else if (o.op == "from-vbasis") {
    need_args(o, 1);
    auto c = parse_list<ZpLocal>(o.args[0], o.n, [&](const std::string& s) { return ZpLocal::parse(s, o.p); });
    r = witt::from_vbasis(c).coords_string();
  } else if (o.op == "normal-form") {
    need_args(o, 1);
    auto c = parse_list<Dual>(o.args[0], o.n, [&](const std::string& s) { return parse_dual(s, o.p); });
    r = witt::to_string(witt::eps_normal_form(witt::WittVector<Dual>({o.p, o.n}, c)));
  } else {
    throw UsageError("unknown witt operation '" + o.op + "'");
  }
  emit(out, o, "result", r);
}

// ---- drw -------------------------------------------------------------------

drw::EpsModel model_of(const Options& o) { return drw::parse_model(o.model); }

void cmd_drw(const Options& o, std::ostream& out) {
  auto form = [&](std::size_t k) { return ZpDrwForm::parse(o.args.at(k), o.p, o.n, o.i); };
  auto eform = [&](std::size_t k) { return EpsDrwForm::parse(o.args.at(k), o.p, o.n, o.i, model_of(o)); };
  // Second operands of products carry their own degree.
  auto eform_any = [&](std::size_t k) { return EpsDrwForm::parse(o.args.at(k), o.p, o.n, -1, model_of(o)); };
  std::string r;
  if (o.op == "add") {
    need_args(o, 2);
    r = (form(0) + form(1)).to_string();
  } else if (o.op == "mul") {
    need_args(o, 2);
    r = drw::zp_mul(form(0), ZpDrwForm::parse(o.args[1], o.p, o.n)).to_string();
  } else if (o.op == "scale") {
    need_args(o, 2);
    r = drw::zp_scalar(ZpLocal::parse(o.args[0], o.p), ZpDrwForm::parse(o.args[1], o.p, o.n, o.i)).to_string();
  } else if (o.op == "d") {
    need_args(o, 1);
    r = drw::zp_d(form(0)).to_string();
  } else if (o.op == "F") {
    need_args(o, 1);
    r = drw::zp_F(form(0)).to_string();
  } else if (o.op == "V") {
    need_args(o, 1);
    r = drw::zp_V(form(0)).to_string();
  } else if (o.op == "R") {
    need_args(o, 1);
    r = drw::zp_restrict(form(0)).to_string();
  } else if (o.op == "teich") {
    need_args(o, 1);
    r = drw::teich_form(ZpLocal::parse(o.args[0], o.p), o.n).to_string();
  } else if (o.op == "dteich") {
    need_args(o, 1);
    r = drw::d_teich(ZpLocal::parse(o.args[0], o.p), o.n).to_string();
  } else if (o.op == "annihilation") {
    need_args(o, 0);
    auto rep = drw::check_p_annihilation(o.n, o.p);
    if (o.machine()) {
      out << "p=" << rep.p << "\nn=" << rep.n << "\n";
      for (const auto& e : rep.entries)
        out << "entry=" << e.j << "," << e.raw.to_string() << "," << e.residue.get_str() << "\n";
      out << "passed=" << boolean(rep.passed) << "\n";
    } else {
      for (const auto& e : rep.entries)
        out << "[p] * dV^" << e.j << "(1): coefficient " << e.raw.to_string() << " = " << e.residue.get_str()
            << " mod p^" << e.j << "\n";
      out << (rep.passed ? "pass" : "FAIL") << "\n";
    }
    return;
  } else if (o.op == "divisibility") {
    need_args(o, 1);
    r = boolean(drw::check_mod_p2_divisibility(o.n, o.p, ZpLocal::parse(o.args[0], o.p)));
  } else if (o.op == "eps-teich") {
    need_args(o, 1);
    r = drw::teich_eps_elem(parse_dual(o.args[0], o.p), o.n, model_of(o)).to_string();
  } else if (o.op == "eps-dteich") {
    need_args(o, 1);
    r = drw::d_teich_eps(parse_dual(o.args[0], o.p), o.n, model_of(o)).to_string();
  } else if (o.op == "eps-add") {
    need_args(o, 2);
    r = (eform(0) + eform(1)).to_string();
  } else if (o.op == "eps-mul") {
    need_args(o, 2);
    r = drw::eps_mul(eform(0), eform_any(1)).to_string();
  } else if (o.op == "eps-d") {
    need_args(o, 1);
    r = drw::eps_d(eform(0)).to_string();
  } else if (o.op == "eps-F") {
    need_args(o, 1);
    r = drw::eps_F(eform(0)).to_string();
  } else if (o.op == "eps-V") {
    need_args(o, 1);
    r = drw::eps_V(eform(0)).to_string();
  } else if (o.op == "eps-R") {
    need_args(o, 1);
    r = drw::eps_restrict(eform(0)).to_string();
  } else if (o.op == "project") {
    need_args(o, 1);
    r = drw::omega_project(eform(0)).to_string();
  } else {
    throw UsageError("unknown drw operation '" + o.op + "'");
  }
  emit(out, o, "result", r);
}

// ---- symbol and certify ----------------------------------------------------

void cmd_symbol(const Options& o, std::ostream& out) {
  if (o.op == "dlog") {
    need_args(o, 1);
    emit(out, o, "result", symbols::dlog_symbol(symbols::SteinbergSymbol::parse(o.args[0], o.p), o.n, model_of(o)).to_string());
  } else if (o.op == "dlog-unit") {
    need_args(o, 1);
    emit(out, o, "result", symbols::dlog(parse_dual(o.args[0], o.p), o.n, model_of(o)).to_string());
  } else if (o.op == "steinberg") {
    need_args(o, 1);
    EpsDrwForm prod = symbols::steinberg_product(parse_dual(o.args[0], o.p), o.n, model_of(o));
    if (o.machine()) {
      out << "product=" << prod.to_string() << "\nholds=" << boolean(prod.is_zero()) << "\n";
    } else {
      out << "dlog[a] dlog[1-a] = " << prod.to_string() << "\n" << (prod.is_zero() ? "holds" : "fails") << "\n";
    }
  } else if (o.op == "sweep") {
    need_args(o, 0);
    std::vector<std::size_t> ns;
    for (std::size_t k = 1; k <= o.n; ++k) ns.push_back(k);
    auto res = symbols::steinberg_sweep_parallel(symbols::steinberg_units(o.p), ns, model_of(o));
    if (o.machine()) {
      out << "p=" << o.p << "\nmax_n=" << o.n << "\nmodel=" << drw::name(model_of(o)) << "\nchecked=" << res.checked
          << "\nfailures=" << res.failures.size() << "\n";
      for (const auto& f : res.failures)
        out << "failure=" << to_string(f.a) << ";" << f.n << ";" << f.product.to_string() << "\n";
    } else {
      out << "checked " << res.checked << " pairs (a, 1-a), " << res.failures.size() << " nonzero products\n";
      for (const auto& f : res.failures)
        out << "  a = " << to_string(f.a) << ", n = " << f.n << ": " << f.product.to_string() << "\n";
    }
  } else {
    throw UsageError("unknown symbol operation '" + o.op + "'");
  }
}

void cmd_certify(const Options& o, std::ostream& out) {
  need_args(o, 0);
  drw::CertificationReport r;
  if (o.op == "drw")
    r = drw::certify_nonvanishing(o.p, o.n, model_of(o));
  else if (o.op == "symbol")
    r = symbols::certify_symbol_nonvanishing(o.p, o.n, model_of(o));
  else
    throw UsageError("unknown certify target '" + o.op + "'");
  out << (o.machine() ? drw::to_machine(r) : drw::to_text(r));
}

// ---- cartier ---------------------------------------------------------------

void cmd_cartier(const Options& o, std::ostream& out) {
  const cartier::Context ctx{o.p, o.vars};
  const int i = o.i < 0 ? 1 : o.i;
  const long D = o.max_degree.value_or(12);
  auto form = [&](std::size_t k) { return cartier::PolyForm::parse(o.args.at(k), o.p, o.vars, std::max(o.i, 0)); };
  if (o.op == "d" || o.op == "gamma" || o.op == "C" || o.op == "class") {
    need_args(o, 1);
    cartier::PolyForm w = form(0);
    cartier::PolyForm r = o.op == "d"       ? cartier::form_d(w)
                          : o.op == "gamma" ? cartier::gamma(w)
                          : o.op == "C"     ? cartier::cartier_C(w)
                                            : cartier::gamma_class(w);
    emit(out, o, "result", r.to_string());
  } else if (o.op == "wedge") {
    need_args(o, 2);
    emit(out, o, "result", cartier::form_wedge(form(0), form(1)).to_string());
  } else if (o.op == "slice") {
    need_args(o, 0);
    auto z = cartier::slice_Z(ctx, i, D), b = cartier::slice_B(ctx, i, D);
    const std::size_t dim = cartier::slice_basis(o.vars, i, D).size();
    if (o.machine())
      out << "degree=" << D << "\ndim=" << dim << "\ndim_Z=" << z.dim() << "\ndim_B=" << b.dim()
          << "\ndim_H=" << z.dim() - b.dim() << "\n";
    else
      out << "degree " << D << ": dim " << dim << ", Z " << z.dim() << ", B " << b.dim() << ", H "
          << z.dim() - b.dim() << "\n";
  } else if (o.op == "verify") {
    need_args(o, 0);
    auto rep = cartier::verify_cartier_iso_parallel(ctx, i, D);
    if (!o.machine()) {
      out << cartier::to_text(rep);
      return;
    }
    out << "p=" << o.p << "\nr=" << o.vars << "\ni=" << i << "\nmax_degree=" << D << "\n";
    for (const auto& s : rep.slices)
      out << "slice=" << s.degree << "," << s.dim_source << "," << s.dim_target << "," << s.rank << ","
          << boolean(s.pass) << "\n";
    out << "passed=" << boolean(rep.passed) << "\n";
  } else if (o.op == "tower") {
    need_args(o, 0);
    auto bad = cartier::check_tower(ctx, i, o.levels, D);
    if (o.machine()) {
      out << "levels=" << o.levels << "\nmax_degree=" << D << "\nviolations=" << bad.size() << "\n";
      for (const auto& v : bad) out << "violation=" << v.n << "," << v.degree << "," << v.inclusion << "\n";
    } else {
      for (const auto& v : bad) out << "n = " << v.n << ", degree " << v.degree << ": " << v.inclusion << " fails\n";
      out << (bad.empty() ? "all inclusions hold" : "some inclusions FAIL") << "\n";
    }
  } else if (o.op == "relative" || o.op == "rgamma") {
    if (o.relations.empty()) throw UsageError(o.op + " needs --relation");
    auto ext = cartier::ElementaryExt::parse(o.p, o.base_vars, o.relations);
    if (o.op == "rgamma") {
      if (o.args.size() != 1 && o.args.size() != 2) throw UsageError("rgamma takes [v] b");
      FpPoly v = o.args.size() == 2 ? FpPoly::parse(o.args[0], o.p, ext.base_names())
                                    : FpPoly::constant(o.p, o.base_vars, 1);
      auto b = cartier::rel_parse(ext, o.args.back(), o.i < 0 ? 0 : o.i);
      emit(out, o, "result", cartier::to_string(ext, cartier::relative_gamma(ext, v, b)));
      return;
    }
    need_args(o, 0);
    auto rep = cartier::verify_relative_cartier(ext, i, D);
    if (!o.machine()) {
      out << cartier::to_text(ext, rep);
      return;
    }
    out << "p=" << o.p << "\nrelation=" << ext.relation().to_string(ext.base_names()) << "\ni=" << i
        << "\nmax_degree=" << D << "\n";
    for (const auto& s : rep.slices)
      out << "slice=" << s.degree << "," << s.dim_source << "," << s.dim_target << "," << s.rank << "," << s.dim_B
          << "," << boolean(s.pass) << "\n";
    std::string basis;
    for (std::size_t a = 0; a < rep.B_vbasis.size(); ++a) basis += (a ? ";" : "") + cartier::to_string(ext, rep.B_vbasis[a]);
    if (i == 1) out << "B_vbasis=" << basis << "\n";
    out << "passed=" << boolean(rep.passed) << "\n";
  } else {
    throw UsageError("unknown cartier operation '" + o.op + "'");
  }
}

// ---- pdim ------------------------------------------------------------------

void cmd_pdim(const Options& o, std::ostream& out) {
  if (o.op == "tower") {
    need_args(o, 1);
    emit(out, o, "prank", std::to_string(pdim::prank(pdim::FieldTower::parse(o.args[0]))));
  } else if (o.op == "independent") {
    if (o.args.empty()) throw UsageError("independent needs at least one element");
    std::vector<std::string> names = split_names(o.names);
    if (names.empty())
      for (std::size_t k = 1; k <= o.vars; ++k) names.push_back("t" + std::to_string(k));
    std::vector<FpRational> ys;
    for (const auto& a : o.args) {
      ys.push_back(FpRational::parse(a, o.p, names));
      if (ys.back().is_zero()) fail(ErrorKind::InvalidArgument, "p-independence needs nonzero elements");
    }
    emit(out, o, "independent", boolean(pdim::p_independent(ys)));
  } else if (o.op == "algebra") {
    if (o.args.size() > 1) throw UsageError("algebra takes one ideal argument");
    auto a = pdim::MonomialAlgebra::parse(pdim::FieldTower::parse(o.tower), o.vars, o.args.empty() ? "" : o.args[0]);
    const std::size_t value = pdim::pdim_algebra(a);
    if (!o.machine()) {
      out << value << "\n";
      return;
    }
    out << "prank=" << pdim::prank(a.field) << "\nkrull_dimension=" << pdim::krull_dimension(a) << "\npdim=" << value
        << "\n";
    for (const auto& prime : pdim::minimal_primes(a)) {
      std::string s;
      for (std::size_t j : prime) s += (s.empty() ? "x" : ",x") + std::to_string(j + 1);
      out << "minimal_prime=(" << s << ")\n";
    }
  } else if (o.op == "pbasis") {
    if (o.args.empty()) throw UsageError("pbasis needs a family");
    std::vector<std::string> names = split_names(o.names);
    if (names.empty()) names = {"x"};
    std::vector<FpPoly> fam;
    for (const auto& a : o.args) fam.push_back(FpPoly::parse(a, o.p, names));
    const long D = o.max_degree.value_or(pdim::default_pbasis_degree(fam));
    auto rep = pdim::p_basis_report_parallel(fam, D);
    if (o.machine()) {
      out << "max_degree=" << D << "\npassed=" << boolean(rep.passed) << "\n";
      if (rep.failed_degree) out << "failed_degree=" << *rep.failed_degree << "\nreason=" << rep.reason << "\n";
    } else if (rep.passed) {
      out << "true\n";
    } else {
      out << "false (" << rep.reason << " at degree " << *rep.failed_degree << ")\n";
    }
  } else {
    throw UsageError("unknown pdim operation '" + o.op + "'");
  }
}

// ---- dispatch --------------------------------------------------------------

void add_positionals(CLI::App* sub, Options& o, const std::string& ops) {
  sub->add_option("op", o.op, ops)->required();
  // Operands are collected from the unmatched arguments, which keeps bracketed
  // literals such as "[1, 0]" and negative numbers intact.
  sub->allow_extras();
  sub->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt vectors, de Rham-Witt forms, Cartier operators and p-dimension"};
  app.name("drwkit");
  app.require_subcommand(1);
  Options o;

  auto* witt = app.add_subcommand("witt", "Witt vectors over Z_(p)");
  add_positionals(witt, o, "add sub mul neg scale ghost unghost teich F V R expand vbasis from-vbasis normal-form");
  witt->add_option("-p", o.p, "prime");
  witt->add_option("-n", o.n, "Witt length");

  auto* drw = app.add_subcommand("drw", "de Rham-Witt forms of Z_(p) and Z_(p)[eps]");
  add_positionals(drw, o,
                  "add mul scale d F V R teich dteich annihilation divisibility eps-teich eps-dteich eps-add "
                  "eps-mul eps-d eps-F eps-V eps-R project");
  drw->add_option("-p", o.p, "prime");
  drw->add_option("-n", o.n, "Witt length");
  drw->add_option("-i", o.i, "form degree (inferred when omitted)");
  drw->add_option("--model", o.model, "direct-sum or reduced");

  auto* cart = app.add_subcommand("cartier", "de Rham complex of F_p[x0..], inverse Cartier operator");
  add_positionals(cart, o, "d wedge gamma C class slice verify tower relative rgamma");
  cart->add_option("-p", o.p, "prime");
  cart->add_option("-r,--vars", o.vars, "number of variables x0, x1, ...");
  cart->add_option("-i", o.i, "form degree");
  cart->add_option("-d,--max-degree", o.max_degree, "slice bound (the slice itself for 'slice')");
  cart->add_option("--levels", o.levels, "tower levels n");
  cart->add_option("-m", o.base_vars, "base variables s1..sm for relative forms");
  cart->add_option("--relation", o.relations, "v in x^p = v (relative forms)");

  auto* pd = app.add_subcommand("pdim", "p-rank, p-independence, p-dimension, p-bases");
  add_positionals(pd, o, "tower independent algebra pbasis");
  pd->add_option("-p", o.p, "prime");
  pd->add_option("-m,--vars", o.vars, "number of variables");
  pd->add_option("--names", o.names, "comma separated variable names");
  pd->add_option("--tower", o.tower, "coefficient field tower");
  pd->add_option("-d,--max-degree", o.max_degree, "truncation degree");

  auto* sym = app.add_subcommand("symbol", "Steinberg symbols over Z_(p)[eps]");
  add_positionals(sym, o, "dlog dlog-unit steinberg sweep");
  sym->add_option("-p", o.p, "prime");
  sym->add_option("-n", o.n, "Witt length");
  sym->add_option("--model", o.model, "direct-sum or reduced");

  auto* cert = app.add_subcommand("certify", "non-vanishing certificates");
  add_positionals(cert, o, "drw symbol");
  cert->add_option("-p", o.p, "prime");
  cert->add_option("-n", o.n, "Witt length");
  cert->add_option("--model", o.model, "direct-sum or reduced");

  // Everything after "--" is an operand.
  auto dashes = std::find(args.begin(), args.end(), "--");
  std::vector<std::string> reversed(std::make_reverse_iterator(dashes), args.rend());
  const std::vector<std::string> tail(dashes == args.end() ? dashes : dashes + 1, args.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  }

  for (CLI::App* sub : app.get_subcommands()) o.args = sub->remaining();
  const std::size_t flagged = o.args.size();
  o.args.insert(o.args.end(), tail.begin(), tail.end());
  for (std::size_t k = 0; k < flagged; ++k)
    if (o.args[k].size() > 1 && o.args[k][0] == '-' && o.args[k][1] == '-') {
      err << "ParseError: unknown option " << o.args[k] << "\n";
      return 2;
    }

  try {
    std::ostringstream buf;
    if (witt->parsed()) cmd_witt(o, buf);
    else if (drw->parsed()) cmd_drw(o, buf);
    else if (cart->parsed()) cmd_cartier(o, buf);
    else if (pd->parsed()) cmd_pdim(o, buf);
    else if (sym->parsed()) cmd_symbol(o, buf);
    else if (cert->parsed()) cmd_certify(o, buf);
    out << buf.str();
    return 0;
  } catch (const UsageError& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    err << "Internal: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace drwkit::cli
