#include <random>

#include "doctest.h"
#include "drwkit/cartier.hpp"
#include "drwkit/error.hpp"

using namespace drwkit;
using namespace drwkit::cartier;

namespace {
PolyForm form(const std::string& s, unsigned p, std::size_t r, int i = 0) { return PolyForm::parse(s, p, r, i); }

PolyForm random_form(std::mt19937& rng, unsigned p, std::size_t r, int i, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp), c(0, static_cast<int>(p) - 1), j(0, static_cast<int>(r) - 1);
  PolyForm w(p, r, i);
  for (int t = 0; t < 4; ++t) {
    Exponents ex(r);
    for (auto& x : ex) x = static_cast<unsigned>(e(rng));
    IndexSet dx;
    for (int a = 0; a < i; ++a) dx.push_back(static_cast<unsigned>(j(rng)));
    w.add_term(ex, dx, c(rng));
  }
  return w;
}
}  // namespace

TEST_CASE("print and parse") {
  CHECK(form("x0^2 dx0 + (x0 + 1) dx1", 3, 2).to_string() == "x0^2 dx0 + (x0 + 1) dx1");
  CHECK(form("x1 dx0^dx1 + dx0^dx1", 3, 2).to_string() == "(x1 + 1) dx0^dx1");
  CHECK(form("dx1^dx0", 3, 2).to_string() == "2 dx0^dx1");
  CHECK(form("x0 - x1", 5, 2).to_string() == "x0 + 4*x1");
  CHECK(form("0", 3, 1, 1).degree() == 1);
  CHECK(form("0", 3, 1, 1).to_string() == "0");
  CHECK(form("-dx0", 3, 1).to_string() == "2 dx0");
  CHECK_THROWS_AS(form("dx0 + x0", 3, 1), Error);
  CHECK_THROWS_AS(form("dx2", 3, 2), Error);
}

TEST_CASE("exterior derivative") {
  CHECK(form_d(form("x0^2", 3, 1)) == form("2*x0 dx0", 3, 1));
  CHECK(form_d(form("x0^3", 3, 1)).is_zero());
  CHECK(form_wedge(form("dx0", 3, 1), form("dx0", 3, 1)).is_zero());
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const unsigned p = t % 2 ? 3 : 2;
    for (int i = 0; i <= 1; ++i) {
      PolyForm a = random_form(rng, p, 3, i, 5), b = random_form(rng, p, 3, 1, 5);
      CHECK(form_d(form_d(a)).is_zero());
      PolyForm lhs = form_d(form_wedge(a, b));
      PolyForm rhs = form_wedge(form_d(a), b) + (i % 2 ? -form_wedge(a, form_d(b)) : form_wedge(a, form_d(b)));
      CHECK(lhs == rhs);
      PolyForm ab = form_wedge(a, b), ba = form_wedge(b, a);
      CHECK(ab == (i % 2 ? -ba : ba));
    }
  }
}

TEST_CASE("inverse Cartier operator") {
  CHECK(gamma(form("dx0", 3, 1)) == form("x0^2 dx0", 3, 1));
  CHECK(gamma(form("dx0", 5, 1)) == form("x0^4 dx0", 5, 1));
  CHECK(gamma(form("1", 3, 1)) == form("1", 3, 1));
  CHECK(gamma(form("x0 dx0", 3, 1)) == form("x0^5 dx0", 3, 1));
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    const unsigned p = t % 2 ? 3 : 2;
    PolyForm w = random_form(rng, p, 2, t % 3, 3);
    CHECK(form_d(gamma(w)).is_zero());
    FpPoly f = FpPoly::parse("x0 + x1^2 + 1", p, default_variable_names(2));
    CHECK(gamma(poly_times(f, w)) == poly_times(f.pow(p), gamma(w)));
    CHECK(gamma_class(cartier_C(gamma(w))) == gamma_class(w));
  }
}

TEST_CASE("cycles and boundaries") {
  const Context c3{3, 1};
  CHECK(slice_basis(1, 1, 3).size() == 1);
  CHECK(slice_Z(c3, 1, 3).dim() == 1);
  CHECK(slice_B(c3, 1, 3).dim() == 0);
  CHECK(slice_Z(c3, 1, 2).dim() == 1);
  CHECK(slice_B(c3, 1, 2).dim() == 1);
  for (long d = 1; d < 8; ++d) CHECK(slice_B(c3, 0, d).dim() == 0);
  CHECK(slice_Z(Context{3, 2}, 1, 4).contains(slice_B(Context{3, 2}, 1, 4)));
}

TEST_CASE("higher boundaries") {
  const Context c3{3, 1};
  auto basis = slice_basis(1, 1, 3);
  FpVector x2dx = to_coords(form("x0^2 dx0", 3, 1), basis);
  CHECK_FALSE(higher_B(c3, 1, 1, 3).contains(x2dx));
  CHECK(higher_B(c3, 2, 1, 3).contains(x2dx));
  for (long d = 0; d < 10; ++d) {
    CHECK(higher_B(c3, 0, 1, d).dim() == 0);
    CHECK(higher_Z(c3, 0, 1, d).dim() == slice_basis(1, 1, d).size());
  }
}

TEST_CASE("Cartier isomorphism") {
  for (auto [p, r, imax] : {std::tuple{2u, std::size_t{1}, 1}, {3u, 1, 1}, {3u, 2, 2}, {2u, 2, 1}}) {
    for (int i = 0; i <= imax; ++i) {
      CartierReport rep = verify_cartier_iso({p, r}, i, r == 2 && p == 3 ? 6 : 12);
      CHECK(rep.passed);
      CartierReport par = verify_cartier_iso_parallel({p, r}, i, r == 2 && p == 3 ? 6 : 12);
      CHECK(par.passed);
      CHECK(par.slices.size() == rep.slices.size());
    }
  }
  CartierReport rep = verify_cartier_iso({3, 1}, 1, 12);
  for (const auto& s : rep.slices) CHECK(s.dim_target == (s.degree == 0 ? 0u : 1u));
}

TEST_CASE("tower inclusions") {
  CHECK(check_tower({3, 1}, 1, 4, 12).empty());
  CHECK(check_tower({2, 1}, 0, 4, 12).empty());
  CHECK(check_tower({3, 2}, 1, 2, 9).empty());
}

TEST_CASE("d is an isomorphism from forms modulo cycles onto boundaries") {
  for (long d = 0; d < 10; ++d)
    for (int i = 0; i < 2; ++i) {
      const Context c{3, 2};
      CHECK(slice_basis(2, i, d).size() - slice_Z(c, i, d).dim() == slice_B(c, i + 1, d).dim());
    }
}

TEST_CASE("relative Cartier, monogenic case") {
  auto ext = ElementaryExt::parse(3, 1, {"s1"});
  RelativeReport r = verify_relative_cartier(ext, 1, 9);
  CHECK(r.passed);
  REQUIRE(r.B_vbasis.size() == 2);
  CHECK(to_string(ext, r.B_vbasis[0]) == "dx");
  CHECK(to_string(ext, r.B_vbasis[1]) == "x dx");
  CHECK(verify_relative_cartier(ext, 0, 9).passed);

  RelForm one = rel_parse(ext, "1", 1);
  CHECK(to_string(ext, relative_gamma(ext, FpPoly::constant(3, 1, 1), one)) == "x^2 dx");
  RelForm b = rel_parse(ext, "x + s1", 0);
  CHECK(to_string(ext, relative_gamma(ext, FpPoly::constant(3, 1, 1), b)) == "s1^3 + s1");
  CHECK(to_string(ext, rel_parse(ext, "x^4", 0)) == "s1*x");
  CHECK(to_string(ext, rel_d(ext, rel_parse(ext, "x^2 + s1*x", 0))) == "(s1 + 2*x) dx");

  CHECK_THROWS_AS(ElementaryExt::parse(3, 2, {"s1", "s2"}), Error);
  CHECK_THROWS_AS(ElementaryExt::parse(3, 1, {"s1^3"}), Error);
  CHECK(verify_relative_cartier(ElementaryExt::parse(5, 2, {"s1*s2"}), 1, 4).passed);
}
