// The direct-sum model treats a[eps], b d[eps], V^s(a[eps]) and dV^s(b[eps]) as free
// summands. In W_n(Z_(p)[eps]) itself V(1)[eps] = 0, so the model is not a quotient of
// the Witt vectors and several expected properties hold only in the reduced model.
// These tests pin the exact behaviour of both.

#include "doctest.h"
#include "drwkit/symbols.hpp"
#include "drwkit/witt.hpp"

using namespace drwkit;
using drw::EpsDrwForm;
using drw::EpsModel;

namespace {
DualElem<ZpLocal> dual(int a, int b, unsigned p) { return {ZpLocal(a, p), ZpLocal(b, p)}; }
}  // namespace

TEST_CASE("V(1) [eps] vanishes in the Witt vectors but not in the direct-sum model") {
  for (unsigned p : {3u, 5u}) {
    using W = witt::WittVector<DualElem<ZpLocal>>;
    W v1({p, 2}, {dual(0, 0, p), dual(1, 0, p)});
    CHECK((v1 * W::teichmueller(dual(0, 1, p), {p, 2})).is_zero());

    EpsDrwForm e = EpsDrwForm::teich_eps(p, 2);
    drw::ZpDrwForm V1 = drw::ZpDrwForm::v_basis(p, 2, 1);
    CHECK(!drw::left_mul_head(V1, e).is_zero());
    CHECK(drw::left_mul_head(V1, EpsDrwForm::teich_eps(p, 2, EpsModel::Reduced)).is_zero());
  }
}

TEST_CASE("headline product: nonzero in the direct-sum model, zero in the reduced model") {
  for (auto [p, n] : {std::pair<unsigned, std::size_t>{3, 2}, {3, 3}, {5, 2}}) {
    auto direct = drw::certify_nonvanishing(p, n, EpsModel::DirectSum);
    auto reduced = drw::certify_nonvanishing(p, n, EpsModel::Reduced);
    CHECK(direct.nonzero);
    CHECK(!direct.reduced_nonzero);
    CHECK(!reduced.nonzero);
    // V(1) d[eps] = V([eps]^{p-1} d[eps]) = 0, hence dV(1) d[eps] = 0 as well.
    EpsDrwForm de = drw::eps_d(EpsDrwForm::teich_eps(p, n, EpsModel::Reduced));
    CHECK(drw::left_mul_head(drw::ZpDrwForm::dv_basis(p, n, 1), de).is_zero());
  }
}

TEST_CASE("Steinberg relation fails in the direct-sum model") {
  // dlog[a] dlog[1-a] for a = 2 + eps, p = 3: the d[eps]-coefficient is
  // -beta (q(alpha)/(1-alpha) + q(1-alpha)/alpha) dV(1) mod p with q the Fermat
  // quotient, here 1 * dV(1).
  const unsigned p = 3;
  EpsDrwForm prod = symbols::steinberg_product(dual(2, 1, p), 2, EpsModel::DirectSum);
  CHECK(prod.to_string() == "(1*dV(1))d[eps]");
  CHECK(symbols::steinberg_product(dual(2, 1, p), 2, EpsModel::Reduced).is_zero());

  auto sweep = symbols::steinberg_sweep_serial(symbols::steinberg_units(p), {1, 2, 3});
  CHECK(sweep.checked == 27);
  CHECK(sweep.failures.size() == 12);
  for (const auto& f : sweep.failures) {
    CHECK(f.n >= 2);
    CHECK(!f.a.eps.is_zero());
  }
}

TEST_CASE("Teichmueller lifts are not multiplicative in the direct-sum model") {
  const unsigned p = 5;
  auto a = dual(1, 1, p), b = dual(1, 2, p);
  auto lhs = drw::teich_eps_elem(a * b, 2);
  auto rhs = drw::eps_mul(drw::teich_eps_elem(a, 2), drw::teich_eps_elem(b, 2));
  CHECK(!(lhs == rhs));
  CHECK(drw::teich_eps_elem(a * b, 2, EpsModel::Reduced) ==
        drw::eps_mul(drw::teich_eps_elem(a, 2, EpsModel::Reduced), drw::teich_eps_elem(b, 2, EpsModel::Reduced)));
}
