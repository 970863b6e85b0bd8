#include <random>

#include "doctest.h"
#include "drwkit/drw_base.hpp"
#include "drwkit/witt.hpp"

using namespace drwkit;
using namespace drwkit::drw;

namespace {
ZpDrwForm random_form(std::mt19937& rng, unsigned p, std::size_t n, int q) {
  std::uniform_int_distribution<int> coord(-30, 30);
  std::vector<ZpLocal> c;
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(coord(rng), p);
  return ZpDrwForm(p, n, q, c);
}
}  // namespace

TEST_CASE("product rules") {
  const unsigned p = 3;
  auto V = [&](std::size_t n, std::size_t i) { return ZpDrwForm::v_basis(p, n, i); };
  auto dV = [&](std::size_t n, std::size_t i) { return ZpDrwForm::dv_basis(p, n, i); };
  CHECK(zp_mul(V(3, 1), dV(3, 2)) == zp_scalar(ZpLocal(3, p), dV(3, 2)));
  CHECK(zp_mul(V(3, 2), dV(3, 1)).is_zero());
  CHECK(zp_mul(V(2, 1), V(2, 1)) == zp_scalar(ZpLocal(3, p), V(2, 1)));
  CHECK(zp_mul(dV(3, 1), dV(3, 2)).degree() == 2);
  CHECK(zp_mul(dV(3, 1), dV(3, 2)).is_zero());
  CHECK(zp_scalar(ZpLocal(3, p), dV(3, 1)).is_zero());
  CHECK_THROWS_AS(zp_mul(V(2, 1), V(3, 1)), Error);
}

TEST_CASE("degree-0 product matches the Witt ring") {
  std::mt19937 rng(1);
  for (unsigned p : {3u, 5u})
    for (std::size_t n = 1; n <= 4; ++n)
      for (int t = 0; t < 20; ++t) {
        ZpDrwForm x = random_form(rng, p, n, 0), y = random_form(rng, p, n, 0);
        auto wx = witt::from_vbasis(x.coords()), wy = witt::from_vbasis(y.coords());
        CHECK(witt::to_vbasis(wx * wy) == zp_mul(x, y).coords());
        CHECK(witt::to_vbasis(wx + wy) == (x + y).coords());
      }
}

TEST_CASE("d, F, V, R") {
  const unsigned p = 3;
  CHECK(zp_d(ZpDrwForm::one(p, 3)).is_zero());
  ZpDrwForm t = teich_form(ZpLocal(4, p), 2);
  CHECK(t.coords() == std::vector<ZpLocal>{ZpLocal(4, p), ZpLocal(20, p)});
  CHECK(zp_d(t).to_string() == "2*dV(1)");
  CHECK(d_teich(ZpLocal(4, p), 2) == zp_d(t));
  CHECK(d_teich(ZpLocal(1, p), 4).is_zero());
  CHECK(d_teich(ZpLocal(6, 5), 2).coeff(1) == ZpLocal(4, 5));
  CHECK(zp_F(ZpDrwForm::dv_basis(p, 3, 2)) == ZpDrwForm::dv_basis(p, 2, 1));
  CHECK(zp_F(ZpDrwForm::dv_basis(p, 3, 1)).is_zero());
  CHECK_THROWS_AS(zp_F(ZpDrwForm::one(p, 1)), Error);
  CHECK_THROWS_AS(zp_restrict(ZpDrwForm::one(p, 1)), Error);
  CHECK(zp_restrict(ZpDrwForm::dv_basis(p, 3, 2)).is_zero());
}

TEST_CASE("printing") {
  const unsigned p = 3;
  ZpDrwForm x(p, 3, 0, {ZpLocal(1, p), ZpLocal(-2, p), ZpLocal(1, 2, p)});
  CHECK(x.to_string() == "1*1 + -2*V(1) + 1/2*V2(1)");
  CHECK(x.to_string_mod_p() == "1*1 + 1*V(1) + 2*V2(1)");
  ZpDrwForm y(p, 3, 1, {ZpLocal(5, p), ZpLocal(4, p), ZpLocal(29120, p)});
  CHECK(y.to_string() == "1*dV(1) + 5*dV2(1)");
  CHECK(y.to_string_mod_p() == "1*dV(1) + 2*dV2(1)");
  CHECK(ZpDrwForm(p, 3, 1).to_string() == "0");
}

TEST_CASE("operator identities on basis elements") {
  for (unsigned p : {3u, 5u})
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t i = 0; i < n; ++i) {
        ZpDrwForm v = ZpDrwForm::v_basis(p, n, i);
        CHECK(zp_F(zp_V(v)) == zp_scalar(ZpLocal(p, p), v));
        CHECK(zp_F(zp_d(zp_V(v))) == zp_d(v));
        CHECK(zp_d(zp_d(v)).is_zero());
        if (n >= 2) {
          CHECK(zp_restrict(zp_V(v)) == zp_V(zp_restrict(v)));
          CHECK(zp_restrict(zp_d(v)) == zp_d(zp_restrict(v)));
          CHECK(zp_restrict(zp_F(zp_V(v))) == zp_F(zp_restrict(zp_V(v))));
        }
        if (i >= 1) {
          ZpDrwForm w = ZpDrwForm::dv_basis(p, n, i);
          CHECK(zp_F(zp_V(w)) == zp_scalar(ZpLocal(p, p), w));
        }
      }
    }
}

TEST_CASE("Leibniz and linearity") {
  std::mt19937 rng(9);
  for (unsigned p : {3u, 5u})
    for (std::size_t n = 1; n <= 4; ++n)
      for (int t = 0; t < 25; ++t) {
        ZpDrwForm x = random_form(rng, p, n, 0), y = random_form(rng, p, n, 0);
        CHECK(zp_d(zp_mul(x, y)) == zp_mul(zp_d(x), y) + zp_mul(x, zp_d(y)));
        ZpLocal c(t - 12, 7, p);
        CHECK(zp_d(zp_scalar(c, x)) == zp_scalar(c, zp_d(x)));
        // c acts as c*1 in the ring
        ZpDrwForm c1 = zp_scalar(c, ZpDrwForm::one(p, n));
        CHECK(zp_mul(c1, x) == zp_scalar(c, x));
        ZpDrwForm w = random_form(rng, p, n, 1);
        CHECK(zp_mul(x, w) == zp_mul(w, x));
        CHECK(zp_mul(zp_mul(x, y), w) == zp_mul(x, zp_mul(y, w)));
        if (n >= 2) {
          CHECK(zp_F(zp_mul(x, y)) == zp_mul(zp_F(x), zp_F(y)));
          CHECK(zp_F(zp_mul(x, w)) == zp_mul(zp_F(x), zp_F(w)));
          // projection formula V(F(x) y) = x V(y) after restriction
          ZpDrwForm yr = zp_restrict(y);
          CHECK(zp_V(zp_mul(zp_F(x), yr)) == zp_mul(x, zp_V(yr)));
        }
      }
}

TEST_CASE("p-annihilation") {
  for (unsigned p : {3u, 5u, 7u})
    for (std::size_t n = 2; n <= 4; ++n) {
      auto r = check_p_annihilation(n, p);
      CHECK(r.passed);
      for (const auto& e : r.entries) CHECK(e.residue == 0);
    }
  auto r = check_p_annihilation(2, 3);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].raw == ZpLocal(3, 3));
}

TEST_CASE("mod p^2 divisibility") {
  CHECK(check_mod_p2_divisibility(3, 3, ZpLocal(1, 3)));
  CHECK(check_mod_p2_divisibility(2, 5, ZpLocal(7, 5)));
  CHECK(check_mod_p2_divisibility(2, 3, ZpLocal(1, 2, 3)));
}

TEST_CASE("parse round-trip") {
  std::mt19937 rng(21);
  for (unsigned p : {3u, 5u})
    for (std::size_t n = 1; n <= 4; ++n)
      for (int q = 0; q <= 2; ++q)
        for (int t = 0; t < 20; ++t) {
          ZpDrwForm x = q <= 1 ? random_form(rng, p, n, q) : ZpDrwForm(p, n, q);
          CHECK(ZpDrwForm::parse(x.to_string(), p, n, q) == x);
        }
  CHECK(ZpDrwForm::parse("V(1) + 1/2*V2(1) + -1*V(1)", 3, 3).to_string() == "1/2*V2(1)");
  CHECK(ZpDrwForm::parse("dV(1)", 3, 2).degree() == 1);
  CHECK_THROWS_AS(ZpDrwForm::parse("1*1 + dV(1)", 3, 2), Error);
  CHECK_THROWS_AS(ZpDrwForm::parse("V3(1)", 3, 2), Error);
  CHECK_THROWS_AS(ZpDrwForm::parse("d1", 3, 2), Error);
  CHECK_THROWS_AS(ZpDrwForm::parse("1*1", 3, 2, 1), Error);
}
