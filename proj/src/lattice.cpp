#include "zsum/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace zsum {

namespace {

void row_sub(IntVec& a, const IntVec& b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= q * b[i];
}

int pivot_col(const IntVec& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) return static_cast<int>(i);
    return -1;
}

}  // namespace

IntMat hermite_rows(IntMat a) {
    if (a.empty()) return a;
    const std::size_t cols = a[0].size();
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    const std::size_t n = a.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        // gcd-style elimination: shrink column entries below row r until one remains
        while (true) {
            std::size_t piv = n;
            for (std::size_t i = r; i < n; ++i)
                if (a[i][c] != 0 &&
                    (piv == n || abs(a[i][c]) < abs(a[piv][c])))
                    piv = i;
            if (piv == n) break;
            std::swap(a[r], a[piv]);
            bool pending = false;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (a[i][c] == 0) continue;
                row_sub(a[i], a[r], a[i][c] / a[r][c]);
                if (a[i][c] != 0) pending = true;
            }
            if (!pending) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (auto& x : a[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i)
            row_sub(a[i], a[r], floor_div(a[i][c], a[r][c]));
        ++r;
    }
    a.resize(r);
    return a;
}

IntLattice zero_lattice(int dim) { return IntLattice{dim, {}}; }

IntLattice lattice_from_generators(IntMat gens, int dim) {
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != dim)
            throw std::invalid_argument("generator dimension mismatch");
    return IntLattice{dim, hermite_rows(std::move(gens))};
}

bool member(const IntLattice& lat, IntVec v) {
    if (static_cast<int>(v.size()) != lat.dim)
        throw std::invalid_argument("vector dimension mismatch");
    for (const auto& row : lat.basis) {
        const int p = pivot_col(row);
        if (v[p] == 0) continue;
        if (v[p] % row[p] != 0) return false;
        row_sub(v, row, v[p] / row[p]);
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool lattice_equal(const IntLattice& a, const IntLattice& b) {
    return a.dim == b.dim && a.basis == b.basis;
}

IntLattice lattice_sum(const IntLattice& a, const IntLattice& b) {
    if (a.dim != b.dim) throw std::invalid_argument("lattice dimension mismatch");
    IntMat rows = a.basis;
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return IntLattice{a.dim, hermite_rows(std::move(rows))};
}

Int lattice_index(const IntLattice& lat) {
    if (lat.rank() != lat.dim) return 0;
    Int det = 1;
    for (const auto& row : lat.basis) det *= row[pivot_col(row)];
    return det;
}

IntMat integer_kernel(const IntMat& m, int cols) {
    const std::size_t rows = m.size();
    for (const auto& r : m)
        if (static_cast<int>(r.size()) != cols)
            throw std::invalid_argument("matrix dimension mismatch");
    // Augmented rows (M^T | I); after HNF the rows with zero left part carry
    // a kernel basis in their right part.
    IntMat aug(cols, IntVec(rows + cols, 0));
    for (int j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) aug[j][i] = m[i][j];
        aug[j][rows + j] = 1;
    }
    aug = hermite_rows(std::move(aug));
    IntMat kernel;
    for (const auto& row : aug) {
        bool left_zero = true;
        for (std::size_t i = 0; i < rows && left_zero; ++i)
            if (row[i] != 0) left_zero = false;
        if (!left_zero) continue;
        kernel.emplace_back(row.begin() + rows, row.end());
    }
    return kernel;
}

std::vector<Int> smith_diagonal(IntMat a) {
    std::vector<Int> diag;
    if (a.empty() || a[0].empty()) return diag;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (pi == rows || abs(a[i][j]) < abs(a[pi][pj])))
                    pi = i, pj = j;
        if (pi == rows) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                row_sub(a[i], a[t], q);
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i)
                        std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    // enforce the divisibility chain on the diagonal
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Int g = gcd(diag[i], diag[j]);
            if (g == diag[i]) continue;
            Int l = (g == 0) ? Int(0) : diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    std::sort(diag.begin(), diag.end());
    return diag;
}

}  // namespace zsum
