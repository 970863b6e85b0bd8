#pragma once

#include <random>

#include "drwkit/drw_eps.hpp"

namespace testutil {

inline drwkit::drw::ZpDrwForm random_zp_form(std::mt19937& rng, unsigned p, std::size_t n, int q) {
  std::uniform_int_distribution<int> coord(-12, 12);
  std::vector<drwkit::ZpLocal> c;
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(coord(rng), p);
  if (q != 0 && q != 1) return drwkit::drw::ZpDrwForm(p, n, q);
  return drwkit::drw::ZpDrwForm(p, n, q, c);
}

inline drwkit::drw::EpsDrwForm random_eps_form(std::mt19937& rng, unsigned p, std::size_t n, int q,
                                               drwkit::drw::EpsModel model = drwkit::drw::EpsModel::DirectSum) {
  using drwkit::drw::EpsDrwForm;
  EpsDrwForm x = EpsDrwForm::zero(p, n, q, model);
  x.head = random_zp_form(rng, p, n, q);
  x.eps = random_zp_form(rng, p, n, q);
  x.deps = random_zp_form(rng, p, n, q - 1);
  for (std::size_t s = 1; s < n; ++s) {
    x.deep_v[s - 1] = random_zp_form(rng, p, n - s, q);
    x.deep_dv[s - 1] = random_zp_form(rng, p, n - s, q - 1);
  }
  x.canonicalize();
  return x;
}

}  // namespace testutil
