#pragma once

// Symbols {a, b} over Z_(p)[eps] and their dlog images in W_n Omega^2.

#include <string>
#include <vector>

#include "drwkit/drw_eps.hpp"

namespace drwkit::symbols {

using Dual = DualElem<ZpLocal>;

struct SteinbergSymbol {
  Dual a;
  Dual b;

  SteinbergSymbol(Dual a, Dual b);
  unsigned prime() const { return a.base.prime(); }
  std::string to_string() const;
  /// "{1+p, 1+eps}".
  static SteinbergSymbol parse(const std::string& text, unsigned p);
};

/// [u]_n^{-1} d[u]_n, using [u]^{-1} = [u^{-1}].
drw::EpsDrwForm dlog(const Dual& u, std::size_t n, drw::EpsModel model = drw::EpsModel::DirectSum);
drw::EpsDrwForm dlog_symbol(const SteinbergSymbol& sym, std::size_t n,
                            drw::EpsModel model = drw::EpsModel::DirectSum);

/// dlog[a] dlog[1-a]; both a and 1-a must be units.
drw::EpsDrwForm steinberg_product(const Dual& a, std::size_t n, drw::EpsModel model = drw::EpsModel::DirectSum);
bool steinberg_check(const Dual& a, std::size_t n, drw::EpsModel model = drw::EpsModel::DirectSum);

struct SweepFailure {
  Dual a;
  std::size_t n;
  drw::EpsDrwForm product;
};

struct SweepResult {
  std::size_t checked = 0;
  std::vector<SweepFailure> failures;  // ordered as the input
};

/// Steinberg check over every listed a and each n in ns.
SweepResult steinberg_sweep_serial(const std::vector<Dual>& as, const std::vector<std::size_t>& ns,
                                   drw::EpsModel model = drw::EpsModel::DirectSum);
SweepResult steinberg_sweep_parallel(const std::vector<Dual>& as, const std::vector<std::size_t>& ns,
                                     drw::EpsModel model = drw::EpsModel::DirectSum);

/// a = alpha + beta eps with alpha in 1..p^2-1, alpha and 1-alpha prime to p,
/// and beta in 0..p-1.
std::vector<Dual> steinberg_units(unsigned p);

/// The symbol {1+p, 1+eps} under dlog, projected; cross-checked against
/// drw::certify_nonvanishing.
drw::CertificationReport certify_symbol_nonvanishing(unsigned p, std::size_t n,
                                                     drw::EpsModel model = drw::EpsModel::DirectSum);

}  // namespace drwkit::symbols
