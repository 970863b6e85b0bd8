#include <random>

#include "doctest.h"
#include "drwkit/symbols.hpp"

using namespace drwkit;
using namespace drwkit::symbols;
using drw::EpsModel;

namespace {
Dual dual(int a, int b, unsigned p) { return {ZpLocal(a, p), ZpLocal(b, p)}; }
}  // namespace

TEST_CASE("symbol syntax") {
  auto s = SteinbergSymbol::parse("{1+p, 1+eps}", 3);
  CHECK(s.a == dual(4, 0, 3));
  CHECK(s.b == dual(1, 1, 3));
  CHECK(s.to_string() == "{4, 1+eps}");
  CHECK(SteinbergSymbol::parse(s.to_string(), 3).a == s.a);
  CHECK(SteinbergSymbol::parse("{2 - eps, 1/2}", 5).to_string() == "{2+-1*eps, 1/2}");
  CHECK_THROWS_AS(SteinbergSymbol::parse("{1+p}", 3), Error);
  CHECK_THROWS_AS(SteinbergSymbol::parse("1+p, 2", 3), Error);
  try {
    SteinbergSymbol::parse("{3, 2}", 3);
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
}

TEST_CASE("dlog basics") {
  const unsigned p = 3;
  CHECK(dlog(dual(1, 0, p), 3).is_zero());
  CHECK(dlog_symbol({dual(5, 1, p), dual(1, 0, p)}, 3).is_zero());
  CHECK(dlog_symbol({dual(2, 0, p), dual(-1, 0, p)}, 2).is_zero());
  for (int a : {2, 4, 5, 7}) {
    drw::EpsDrwForm f = dlog(dual(a, 0, p), 3);
    CHECK(f.eps.is_zero());
    CHECK(f.deps.is_zero());
  }
  auto w = drw::omega_project(dlog_symbol({dual(4, 0, p), dual(1, 1, p)}, 2)).deps;
  CHECK(w.to_string_mod_p() == "2*dV(1)");
}

TEST_CASE("bilinearity in the reduced model") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> base(1, 24), eps(0, 4);
  const EpsModel model = EpsModel::Reduced;
  for (int t = 0; t < 40; ++t) {
    const unsigned p = 5;
    auto unit = [&] {
      int b;
      do b = base(rng);
      while (b % p == 0);
      return dual(b, eps(rng), p);
    };
    Dual a = unit(), a2 = unit(), b = unit();
    std::size_t n = 2 + t % 2;
    CHECK(dlog(a * a2, n, model) == dlog(a, n, model) + dlog(a2, n, model));
    CHECK(dlog_symbol({a * a2, b}, n, model) ==
          dlog_symbol({a, b}, n, model) + dlog_symbol({a2, b}, n, model));
    CHECK(drw::teich_eps_elem(a * a2, n, model) ==
          drw::eps_mul(drw::teich_eps_elem(a, n, model), drw::teich_eps_elem(a2, n, model)));
  }
}

TEST_CASE("Steinberg relation") {
  const unsigned p = 3;
  CHECK(steinberg_check(dual(-1, 0, p), 2));
  try {
    steinberg_check(dual(1, 1, p), 2);
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
  // The reduced model satisfies it everywhere; the direct-sum model does not.
  auto units = steinberg_units(p);
  CHECK(units.size() == 9);
  auto reduced = steinberg_sweep_serial(units, {1, 2, 3}, EpsModel::Reduced);
  CHECK(reduced.checked == 27);
  CHECK(reduced.failures.empty());
  CHECK(steinberg_check(dual(2, 1, p), 3, EpsModel::Reduced));
  CHECK(!steinberg_check(dual(2, 1, p), 2, EpsModel::DirectSum));
}

TEST_CASE("parallel sweep agrees with serial") {
  auto units = steinberg_units(3);
  auto a = steinberg_sweep_serial(units, {2, 3});
  auto b = steinberg_sweep_parallel(units, {2, 3});
  CHECK(a.checked == b.checked);
  REQUIRE(a.failures.size() == b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) {
    CHECK(a.failures[i].a == b.failures[i].a);
    CHECK(a.failures[i].product == b.failures[i].product);
  }
}

TEST_CASE("symbol certification") {
  auto r = certify_symbol_nonvanishing(3, 2);
  CHECK(r.nonzero);
  CHECK(r.agrees_with_drw.value());
  CHECK(r.symbol.value() == "{4, 1+eps}");
  CHECK(certify_symbol_nonvanishing(5, 3).nonzero);
  // control: {1+p, 1}
  CHECK(drw::omega_project(dlog_symbol({dual(4, 0, 3), dual(1, 0, 3)}, 2)).deps.is_zero());
}
