#include "drwkit/witt.hpp"

namespace drwkit::witt {

void check_context(const WittContext& ctx) {
  require_prime(ctx.p);
  if (ctx.n == 0) fail(ErrorKind::LengthUnderflow, "Witt length must be >= 1");
}

std::vector<ZpLocal> teich_expand(const ZpLocal& x, std::size_t n) {
  const unsigned p = x.prime();
  std::vector<ZpLocal> c{x};
  ZpLocal prev = x;  // x^{p^{i-1}}
  for (std::size_t i = 1; i < n; ++i) {
    ZpLocal cur = prev.pow(p);
    try {
      c.push_back((cur - prev).div_exact(ipow(p, i)));
    } catch (const Error& e) {
      fail(ErrorKind::Internal, std::string("teich_expand: ") + e.what());
    }
    prev = cur;
  }
  return c;
}

std::vector<ZpLocal> vbasis_ghost(const std::vector<ZpLocal>& coords) {
  std::vector<ZpLocal> g;
  if (coords.empty()) return g;
  const unsigned p = coords.front().prime();
  ZpLocal acc(p);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    acc = acc + ZpLocal(ipow(p, k), p) * coords[k];
    g.push_back(acc);
  }
  return g;
}

std::vector<ZpLocal> to_vbasis(const WittVector<ZpLocal>& w) {
  // Ghost of sum c_i V^i(1) is w_k = sum_{i<=k} p^i c_i, a triangular system.
  GhostVector<ZpLocal> g = ghost(w);
  const unsigned p = w.prime();
  std::vector<ZpLocal> c;
  ZpLocal prev(p);
  for (std::size_t k = 0; k < w.length(); ++k) {
    ZpLocal diff = g[k] - prev;
    c.push_back(diff.div_exact(ipow(p, k)));
    prev = g[k];
  }
  return c;
}

WittVector<ZpLocal> from_vbasis(const std::vector<ZpLocal>& coords) {
  if (coords.empty()) fail(ErrorKind::LengthUnderflow, "empty coordinate list");
  const unsigned p = coords.front().prime();
  return unghost(GhostVector<ZpLocal>({p, coords.size()}, vbasis_ghost(coords)));
}

}  // namespace drwkit::witt
