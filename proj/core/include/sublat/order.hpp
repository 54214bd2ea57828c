#pragma once

// Order-theoretic helpers shared by the concrete subspace lattice and the
// abstract ortholattice tables.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sublat::order {

struct ChainCheck {
  bool holds = true;
  /// First element (in the supplied order) reached by maximal chains of
  /// different lengths.
  std::optional<std::uint32_t> element;
  std::vector<std::uint32_t> shorter;  // bottom .. element
  std::vector<std::uint32_t> longer;
  /// Chain length from bottom to each element, when the condition holds.
  std::vector<std::uint32_t> height;
};

/// Decides whether all maximal chains from `bottom` to each element have the
/// same length. `lower_covers[i]` lists the elements covered by i; `topo` is
/// a linear extension of the order. Maximal chains from bottom to x are
/// exactly the cover paths, so min/max path length per element settles it.
ChainCheck check_chain_condition(std::span<const std::vector<std::uint32_t>> lower_covers,
                                 std::uint32_t bottom, std::span<const std::uint32_t> topo);

}  // namespace sublat::order
