#pragma once

#include <vector>

#include "zsum/ints.hpp"

namespace zsum {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // list of row vectors

// A full-integer lattice in Z^dim, stored by its canonical Hermite normal
// form basis.  Each entry of `basis` is one basis vector; pivot columns are
// strictly increasing, pivots are positive, and entries above a pivot are
// reduced into [0, pivot).  Equal lattices have identical bases.
struct IntLattice {
    int dim = 0;
    IntMat basis;

    bool operator==(const IntLattice&) const = default;
    int rank() const { return static_cast<int>(basis.size()); }
};

// Row-style HNF of the span of `rows`; zero rows are dropped.
IntMat hermite_rows(IntMat rows);

IntLattice zero_lattice(int dim);
IntLattice lattice_from_generators(IntMat gens, int dim);

// true iff v is an integer combination of the basis vectors
bool member(const IntLattice& lat, IntVec v);

bool lattice_equal(const IntLattice& a, const IntLattice& b);
IntLattice lattice_sum(const IntLattice& a, const IntLattice& b);

// Index [Z^dim : L] when L has full rank (product of HNF pivots), 0 otherwise.
Int lattice_index(const IntLattice& lat);

// Basis of {x in Z^cols : M x = 0} for the rows x cols matrix M.
IntMat integer_kernel(const IntMat& m, int cols);

// Diagonal of the Smith normal form, normalized to a nonnegative
// divisibility chain d1 | d2 | ... (zeros last).
std::vector<Int> smith_diagonal(IntMat m);

}  // namespace zsum
