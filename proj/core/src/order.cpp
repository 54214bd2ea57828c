#include "sublat/order.hpp"

#include <algorithm>
#include <limits>

namespace sublat::order {

namespace {

std::vector<std::uint32_t> trace(std::uint32_t from, std::uint32_t bottom,
                                 const std::vector<std::uint32_t>& pred) {
  std::vector<std::uint32_t> chain{from};
  while (chain.back() != bottom) chain.push_back(pred[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

ChainCheck check_chain_condition(std::span<const std::vector<std::uint32_t>> lower_covers,
                                 std::uint32_t bottom, std::span<const std::uint32_t> topo) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = lower_covers.size();
  std::vector<std::uint32_t> lo(n, kUnset), hi(n, 0), lo_pred(n, kUnset), hi_pred(n, kUnset);
  lo[bottom] = 0;
  hi[bottom] = 0;

  ChainCheck out;
  for (std::uint32_t x : topo) {
    if (x == bottom) continue;
    for (std::uint32_t y : lower_covers[x]) {
      if (lo[y] == kUnset) continue;  // not above bottom
      if (lo[y] + 1 < lo[x]) {
        lo[x] = lo[y] + 1;
        lo_pred[x] = y;
      }
      if (hi_pred[x] == kUnset || hi[y] + 1 > hi[x]) {
        hi[x] = hi[y] + 1;
        hi_pred[x] = y;
      }
    }
  }

  // Report the smallest offending index so the witness does not depend on
  // the traversal order.
  for (std::uint32_t x = 0; x < n; ++x) {
    if (lo[x] != kUnset && lo[x] != hi[x]) {
      out.holds = false;
      out.element = x;
      out.shorter = trace(x, bottom, lo_pred);
      out.longer = trace(x, bottom, hi_pred);
      return out;
    }
  }
  out.height.resize(n);
  for (std::size_t x = 0; x < n; ++x) out.height[x] = lo[x] == kUnset ? 0 : lo[x];
  return out;
}

}  // namespace sublat::order
