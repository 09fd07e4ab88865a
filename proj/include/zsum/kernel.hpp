#pragma once

#include "zsum/lattice.hpp"
#include "zsum/sequences.hpp"

namespace zsum {

// Lattice of integer multiplicity vectors m over the support with
// sum_i m_i * g_i = 0 in the group.  Coordinates follow the support order.
IntLattice kernel_lattice(const SupportContext& ctx);

// Same lattice, embedded into Z^n by placing the support coordinates at the
// positions given by `positions` (strictly increasing, size == support size)
// and zero elsewhere.
IntLattice embedded_kernel_lattice(const SupportContext& ctx,
                                   const std::vector<int>& positions, int n);

}  // namespace zsum
