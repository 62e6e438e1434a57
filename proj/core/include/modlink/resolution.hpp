#ifndef MODLINK_RESOLUTION_HPP
#define MODLINK_RESOLUTION_HPP

#include "modlink/presented.hpp"

namespace modlink {

/// Chain F_len → … → F_1 → F_0 → M → 0 with d_1 the presentation matrix.
/// ranks(i) is the rank of F_i. Each step is pruned to minimal generators
/// when the module is graded over a homogeneous ring.
struct FreeResolution {
  PresentedModule module;             // minimalized input
  std::vector<ModuleMatrix> maps;     // d_1 … d_len
  std::vector<std::size_t> ranks;     // |F_0| … |F_len|
  std::vector<std::optional<Degrees>> free_degrees;  // degrees of F_0 … F_len
  bool minimal_exact = false;

  std::size_t length() const { return maps.size(); }
  std::size_t t1() const { return ranks[0]; }
  std::size_t t2() const { return ranks[1]; }
};

FreeResolution free_resolution(const PresentedModule& M, std::size_t length);

/// d_i · d_{i+1} = 0 for all i, and every syzygy of d_i lies in the span of
/// the columns of d_{i+1}.
bool resolution_is_exact(const FreeResolution& R);

}  // namespace modlink

#endif
