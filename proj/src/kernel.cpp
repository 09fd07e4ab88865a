#include "zsum/kernel.hpp"

#include <stdexcept>

namespace zsum {

IntLattice kernel_lattice(const SupportContext& ctx) {
    const Group& g = ctx.group;
    const int k = ctx.size();
    const int r = g.rank();
    // m is in the kernel iff A m = 0 mod the invariant factors, i.e.
    // [A | diag(n)] (m, t) = 0 over Z for some t; project to the m part
    IntMat m(r, IntVec(k + r, 0));
    for (int j = 0; j < k; ++j) {
        Element e = g.element_of(ctx.support_ids[j]);
        for (int i = 0; i < r; ++i) m[i][j] = e[i];
    }
    for (int i = 0; i < r; ++i) m[i][k + i] = g.invariant_factors()[i];
    IntMat ker = integer_kernel(m, k + r);
    IntMat gens;
    for (auto& row : ker) gens.emplace_back(row.begin(), row.begin() + k);
    return lattice_from_generators(std::move(gens), k);
}

IntLattice embedded_kernel_lattice(const SupportContext& ctx,
                                   const std::vector<int>& positions, int n) {
    if (static_cast<int>(positions.size()) != ctx.size())
        throw std::invalid_argument("position count does not match support size");
    IntLattice small = kernel_lattice(ctx);
    IntMat gens;
    for (const auto& row : small.basis) {
        IntVec v(n, 0);
        for (int j = 0; j < ctx.size(); ++j) v[positions[j]] = row[j];
        gens.push_back(std::move(v));
    }
    return lattice_from_generators(std::move(gens), n);
}

}  // namespace zsum
