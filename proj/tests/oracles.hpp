// Independent brute-force oracles used only by the tests.  Everything here is
// deliberately dumb: full scans and power sets, no pruning, so that agreement
// with the library is meaningful.
#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "zsum/kernel.hpp"
#include "zsum/sequences.hpp"

namespace oracle {

using namespace zsum;

// expand a multiset into an explicit element list
inline std::vector<int> expand(const ZsSequence& s) {
    std::vector<int> items;
    for (std::size_t i = 0; i < s.mult.size(); ++i)
        for (long long k = 0; k < s.mult[i]; ++k)
            items.push_back(s.ctx->support_ids[i]);
    return items;
}

// all nonempty-subsequence sums via the power set (length <= ~20)
inline std::vector<int> powerset_sums(const ZsSequence& s) {
    const Group& g = s.ctx->group;
    auto items = expand(s);
    std::vector<char> seen(g.count(), 0);
    for (unsigned long mask = 1; mask < (1UL << items.size()); ++mask) {
        int sum = 0;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (mask & (1UL << i)) sum = g.add(sum, items[i]);
        seen[sum] = 1;
    }
    std::vector<int> out;
    for (int x = 0; x < g.count(); ++x)
        if (seen[x]) out.push_back(x);
    return out;
}

inline bool powerset_zero_sum_free(const ZsSequence& s) {
    const Group& g = s.ctx->group;
    auto items = expand(s);
    for (unsigned long mask = 1; mask < (1UL << items.size()); ++mask) {
        int sum = 0;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (mask & (1UL << i)) sum = g.add(sum, items[i]);
        if (sum == 0) return false;
    }
    return true;
}

inline bool powerset_is_atom(const ZsSequence& s) {
    const Group& g = s.ctx->group;
    auto items = expand(s);
    if (items.empty()) return false;
    int total = 0;
    for (int e : items) total = g.add(total, e);
    if (total != 0) return false;
    // no proper nonempty zero-sum sub-multiset
    for (unsigned long mask = 1; mask + 1 < (1UL << items.size()); ++mask) {
        int sum = 0;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (mask & (1UL << i)) sum = g.add(sum, items[i]);
        if (sum == 0) return false;
    }
    return true;
}

// every multiplicity vector with v_g <= ord(g), filtered through the power-set
// atom test; returns nullopt when the scan space exceeds the cap
inline std::optional<std::vector<std::vector<long long>>> scan_atoms(
    const SupportPtr& ctx, long long cap = 1'000'000) {
    const Group& g = ctx->group;
    long long space = 1;
    for (int id : ctx->support_ids) {
        space *= g.order_of(id) + 1;
        if (space > cap) return std::nullopt;
    }
    std::vector<std::vector<long long>> atoms;
    std::vector<long long> v(ctx->support_ids.size(), 0);
    for (;;) {
        ZsSequence s{ctx, v};
        if (powerset_is_atom(s)) atoms.push_back(v);
        std::size_t i = 0;
        while (i < v.size()) {
            if (++v[i] <= g.order_of(ctx->support_ids[i])) break;
            v[i++] = 0;
        }
        if (i == v.size()) break;
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const std::vector<long long>& a, const std::vector<long long>& b) {
                  long long la = std::accumulate(a.begin(), a.end(), 0LL);
                  long long lb = std::accumulate(b.begin(), b.end(), 0LL);
                  if (la != lb) return la < lb;
                  return a < b;
              });
    return atoms;
}

// kernel lattice by scanning the residue box [0, ord(g_i)) and adjoining the
// obvious period vectors ord(g_i) e_i
inline std::optional<IntLattice> scan_kernel(const SupportContext& ctx,
                                             long long cap = 1'000'000) {
    const Group& g = ctx.group;
    const int k = ctx.size();
    long long space = 1;
    for (int id : ctx.support_ids) {
        space *= g.order_of(id);
        if (space > cap) return std::nullopt;
    }
    IntMat gens;
    std::vector<long long> v(k, 0);
    for (;;) {
        int sum = 0;
        for (int i = 0; i < k; ++i) sum = g.add(sum, g.scale(v[i], ctx.support_ids[i]));
        if (sum == 0) gens.emplace_back(v.begin(), v.end());
        int i = 0;
        while (i < k) {
            if (++v[i] < g.order_of(ctx.support_ids[i])) break;
            v[i++] = 0;
        }
        if (i == k) break;
    }
    for (int i = 0; i < k; ++i) {
        IntVec e(k, 0);
        e[i] = g.order_of(ctx.support_ids[i]);
        gens.push_back(std::move(e));
    }
    return lattice_from_generators(std::move(gens), k);
}

// exhaustive unordered coprime divisor pairs d = d1 * d2, d1 <= d2
inline long long scan_coprime_splits(long long d) {
    long long count = 0;
    for (long long d1 = 1; d1 * d1 <= d; ++d1)
        if (d % d1 == 0 && std::gcd(d1, d / d1) == 1) ++count;
    return count;
}

}  // namespace oracle
