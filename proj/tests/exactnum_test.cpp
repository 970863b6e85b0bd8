#include <random>

#include "doctest.h"
#include "drwkit/exactnum.hpp"

using namespace drwkit;

TEST_CASE("ZpLocal basics") {
  ZpLocal half(1, 2, 3);
  CHECK(half + half == ZpLocal(1, 3));
  CHECK(ZpLocal(18, 5, 3).valuation() == 2u);
  CHECK(!ZpLocal(0, 3).valuation().has_value());
  CHECK(ZpLocal(-4, 6, 5).to_string() == "-2/3");
  CHECK_THROWS_AS(ZpLocal(1, 3, 3), Error);
  CHECK(ZpLocal::parse("1/2", 3) == half);
  CHECK(ZpLocal::parse("1+p", 5) == ZpLocal(6, 5));
  CHECK(ZpLocal::parse("-2/3", 5).to_string() == "-2/3");
  CHECK(ZpLocal(7, 2, 3).residue_mod_ppow(1) == 2);  // 7/2 = 7*2 = 14 = 2 mod 3
}

TEST_CASE("exact division") {
  CHECK(exact_div(60, 3) == 20);
  CHECK_THROWS_AS(exact_div(61, 3), Error);
  try {
    exact_div(1, 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  try {
    ZpLocal(1, 3).divide(ZpLocal(3, 3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InexactDivision);
  }
  CHECK(p_valuation(BigInt(20), 3) == 0u);
}

TEST_CASE("dual numbers") {
  DualElem<ZpLocal> a{ZpLocal(1, 3), ZpLocal(1, 3)};
  DualElem<ZpLocal> b{ZpLocal(1, 3), ZpLocal(-1, 3)};
  CHECK(a * b == DualElem<ZpLocal>{ZpLocal(1, 3), ZpLocal(0, 3)});
  CHECK(inverse(a) == b);
  CHECK(to_string(a) == "1 + 1*eps");
  CHECK(parse_dual("2 + 1*eps", 3) == DualElem<ZpLocal>{ZpLocal(2, 3), ZpLocal(1, 3)});
  CHECK(parse_dual("(1+eps)^3", 3) == DualElem<ZpLocal>{ZpLocal(1, 3), ZpLocal(3, 3)});
  CHECK_THROWS_AS(inverse(DualElem<ZpLocal>{ZpLocal(3, 3), ZpLocal(1, 3)}), Error);
}

TEST_CASE("dual p-th power has zero eps part in characteristic p") {
  // (a + b eps)^p = a^p + p a^{p-1} b eps; reduce mod p.
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        DualElem<BigInt> x{a, b};
        DualElem<BigInt> y = ring_pow(x, p, p);
        CHECK(mod_floor(y.eps, p) == 0);
      }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
  const unsigned p = 5;
  auto rand_zp = [&] {
    int d;
    do d = den(rng);
    while (d % p == 0);
    return ZpLocal(num(rng), d, p);
  };
  for (int t = 0; t < 200; ++t) {
    ZpLocal x = rand_zp(), y = rand_zp(), z = rand_zp();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * ZpLocal(1, p) == x);
    CHECK(x + ZpLocal(p) == x);
    CHECK(x - x == ZpLocal(p));
    // reduced with p-coprime denominator
    BigInt g;
    mpz_gcd(g.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    CHECK(g == 1);
    CHECK(!mpz_divisible_ui_p(x.den().get_mpz_t(), p));
    DualElem<ZpLocal> u{x, y}, v{y, z}, w{z, x};
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * (v + w) == u * v + u * w);
  }
}

TEST_CASE("residue ring") {
  ResidueInt a(7, 9), b(5, 9);
  CHECK((a + b).value() == 3);
  CHECK((a * b).value() == 8);
  CHECK((-a).value() == 2);
  CHECK_THROWS_AS(a + ResidueInt(1, 3), Error);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(ZpLocal::parse("1/0", 3), Error);
  CHECK_THROWS_AS(ZpLocal::parse("1+", 3), Error);
  CHECK_THROWS_AS(parse_bigint("x"), Error);
  CHECK(parse_bigint("-12") == -12);
}
