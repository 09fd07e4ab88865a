#include "zsum/separating.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace zsum {

namespace {

// All census subsets (nonempty, size <= rank+1) as sorted id tuples in
// canonical order, guarded by the budget.
std::vector<std::vector<int>> census_subsets(const Group& g, const CensusOptions& opt) {
    const int k = g.rank() + 1;
    Int total = count_subsets_up_to(g.order(), k);
    if (total > opt.budget)
        throw BudgetError("census needs " + total.str() + " subsets, budget is " +
                          opt.budget.str() + "; use a closed form or raise --budget");
    std::vector<std::vector<int>> out;
    for_each_subset_up_to(g.count(), k,
                          [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

// Deterministic parallel map: results land at the index of their input, so
// the merged output is independent of the worker count.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t n, int jobs, F&& f) {
    std::vector<R> results(n);
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) results[i] = f(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                results[i] = f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    int count = std::min<std::size_t>(jobs, n);
    for (int t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

IntVec to_int_vec(const std::vector<long long>& v) {
    return IntVec(v.begin(), v.end());
}

}  // namespace

IntLattice SepAtomTable::prefix(long long len) const {
    const IntLattice* best = nullptr;
    for (const auto& [l, lat] : lattice_prefix) {
        if (l > len) break;
        best = &lat;
    }
    return best ? *best : zero_lattice(ctx->size());
}

std::vector<ZsSequence> SepAtomTable::separating_atoms_list() const {
    std::vector<ZsSequence> out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (separating[i]) out.push_back(atoms[i]);
    return out;
}

long long SepAtomTable::max_separating_length() const {
    long long best = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (separating[i]) best = std::max(best, atoms[i].length());
    return best;
}

SepAtomTable separating_atoms(const SupportPtr& ctx) {
    SepAtomTable table;
    table.ctx = ctx;
    table.atoms = enumerate_atoms(ctx);
    table.separating.assign(table.atoms.size(), 0);
    IntLattice lat = zero_lattice(ctx->size());
    std::size_t i = 0;
    while (i < table.atoms.size()) {
        const long long len = table.atoms[i].length();
        std::size_t j = i;
        while (j < table.atoms.size() && table.atoms[j].length() == len) ++j;
        // atoms of this length tested against atoms of strictly smaller length
        for (std::size_t a = i; a < j; ++a)
            table.separating[a] = !member(lat, to_int_vec(table.atoms[a].mult));
        IntMat rows;
        for (std::size_t a = i; a < j; ++a) rows.push_back(to_int_vec(table.atoms[a].mult));
        lat = lattice_sum(lat, lattice_from_generators(std::move(rows), ctx->size()));
        table.lattice_prefix[len] = lat;
        i = j;
    }
    return table;
}

long long beta_sep_over(const SupportPtr& ctx) {
    return separating_atoms(ctx).max_separating_length();
}

BetaSepResult beta_sep(const Group& g, const CensusOptions& opt) {
    const auto subsets = census_subsets(g, opt);
    struct Local {
        long long max_len = 0;
        std::vector<Profile> maximal;  // separating atoms at max_len
    };
    auto locals = parallel_map<Local>(subsets.size(), opt.jobs, [&](std::size_t i) {
        Local loc;
        SepAtomTable table = separating_atoms(make_support(g, subsets[i]));
        loc.max_len = table.max_separating_length();
        for (std::size_t a = 0; a < table.atoms.size(); ++a)
            if (table.separating[a] && table.atoms[a].length() == loc.max_len)
                loc.maximal.push_back(table.atoms[a].profile());
        return loc;
    });
    BetaSepResult result;
    for (const auto& loc : locals) result.value = std::max(result.value, loc.max_len);
    // dedupe by atom, keeping the canonically first (hence smallest) subset
    std::set<Profile> seen;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        if (locals[i].max_len != result.value) continue;
        for (const auto& p : locals[i].maximal)
            if (seen.insert(p).second)
                result.witnesses.push_back(SepWitness{p, subsets[i]});
    }
    return result;
}

long long beta_sep_lower_bound(const Group& g) {
    const auto& n = g.invariant_factors();
    const int r = g.rank();
    const int s = (r + 1) / 2;  // 1-based index
    long long total = 0;
    for (int i = s + 1; i <= r; ++i) total += n[i - 1];
    if (r % 2 == 1)
        total += n[s - 1];
    else
        total += n[s - 1] / least_prime_divisor(n[0]);
    return total;
}

namespace {

// Whether the Davenport constant of the subgroup matches the classical
// 1 + sum(n_i - 1) value; verified by direct enumeration at desk scale.
bool davenport_matches_classical(const Subgroup& h) {
    if (h.invariant_factors.empty()) return true;  // trivial: both are 1
    Group sub(h.invariant_factors);
    if (sub.order() <= 32)
        return davenport_group(sub) == d_star(sub.invariant_factors());
    // enumeration out of reach; equality is a theorem for rank <= 2
    return sub.rank() <= 2;
}

}  // namespace

std::optional<ClosedForm> beta_sep_closed_form(const Group& g) {
    const auto& n = g.invariant_factors();
    const int r = g.rank();
    if (r == 1) return ClosedForm{n[0], "cyclic"};
    if (r == 4)
        return ClosedForm{n[1] / least_prime_divisor(n[0]) + n[2] + n[3], "rank-4"};
    if (n.front() == n.back()) return ClosedForm{beta_sep_lower_bound(g), "equal-factors"};
    const int s = (r + 1) / 2;
    if (r % 2 == 1) {
        if (davenport_matches_classical(scaled_subgroup(g, n[s - 1])))
            return ClosedForm{beta_sep_lower_bound(g), "odd-rank"};
    } else {
        bool all = true;
        for (int i = s; i <= r && all; ++i)
            all = davenport_matches_classical(scaled_subgroup(g, n[i - 1]));
        if (all) return ClosedForm{beta_sep_lower_bound(g), "even-rank"};
    }
    return std::nullopt;
}

PropertyPVerdict has_property_p(const std::vector<int>& subset_ids, const Group& g) {
    std::vector<int> subset = subset_ids;
    std::sort(subset.begin(), subset.end());
    const int k = static_cast<int>(subset.size());
    if (k == 0) throw std::invalid_argument("empty subset");
    if (k > g.rank() + 1)
        throw std::invalid_argument("subset larger than rank+1 never has the property");
    SupportContext ctx{g, subset};
    IntLattice kernel = kernel_lattice(ctx);
    // group generated by zero-sum sequences over proper subsets = sum of the
    // kernels of the maximal proper subsets, embedded with a zero coordinate
    IntLattice proper = zero_lattice(k);
    for (int drop = 0; drop < k; ++drop) {
        if (k == 1) break;  // no nonempty proper subsets
        std::vector<int> sub;
        std::vector<int> positions;
        for (int j = 0; j < k; ++j)
            if (j != drop) {
                sub.push_back(subset[j]);
                positions.push_back(j);
            }
        SupportContext sub_ctx{g, sub};
        proper = lattice_sum(proper, embedded_kernel_lattice(sub_ctx, positions, k));
    }
    PropertyPVerdict verdict;
    verdict.subset = subset;
    verdict.method = "direct-lattice";
    for (const auto& row : kernel.basis)
        if (!member(proper, row)) {
            verdict.holds = true;
            verdict.witness = row;
            break;
        }
    return verdict;
}

std::optional<PropertyPVerdict> property_p_fast_filter(const std::vector<int>& subset_ids,
                                                       const Group& g) {
    std::vector<int> subset = subset_ids;
    std::sort(subset.begin(), subset.end());
    const int k = static_cast<int>(subset.size());
    if (k == 0) throw std::invalid_argument("empty subset");
    if (k > g.rank() + 1)
        throw std::invalid_argument("subset larger than rank+1 never has the property");
    PropertyPVerdict verdict;
    verdict.subset = subset;
    if (k == 1) {
        verdict.holds = true;
        verdict.method = "filter-singleton";
        return verdict;
    }
    if (k == 2) {
        verdict.holds = !cyclic_intersection_trivial(subset[0], subset[1], g);
        verdict.method = "filter-pair-intersection";
        return verdict;
    }
    // a support element that is a proper multiple of another kills the property
    for (int id : subset)
        for (long long t = 2; t <= g.order_of(id); ++t)
            if (std::binary_search(subset.begin(), subset.end(), g.scale(t, id))) {
                verdict.holds = false;
                verdict.method = "filter-multiple-in-support";
                return verdict;
            }
    Subgroup span = subgroup_generated(subset, g);
    if (k >= span.rank() + 2) {
        verdict.holds = false;
        verdict.method = "filter-rank-excess";
        return verdict;
    }
    std::vector<int> removed_ranks(k);
    for (int drop = 0; drop < k; ++drop) {
        std::vector<int> sub;
        for (int j = 0; j < k; ++j)
            if (j != drop) sub.push_back(subset[j]);
        removed_ranks[drop] = subgroup_generated(sub, g).rank();
        if (k >= removed_ranks[drop] + 2) {
            verdict.holds = false;
            verdict.method = "filter-rank-drop";
            return verdict;
        }
    }
    // inside a p-group, rank preservation under every removal decides it
    if (is_prime_power(span.order()) && k == span.rank() + 1) {
        bool preserved = true;
        for (int drop = 0; drop < k && preserved; ++drop)
            preserved = removed_ranks[drop] == span.rank();
        verdict.holds = preserved;
        verdict.method = "filter-p-group-rank";
        return verdict;
    }
    return std::nullopt;
}

PropertyPVerdict decide_property_p(const std::vector<int>& subset_ids, const Group& g,
                                   bool use_filters) {
    if (use_filters)
        if (auto fast = property_p_fast_filter(subset_ids, g)) return *fast;
    return has_property_p(subset_ids, g);
}

PCensus min_sep_set_size(const Group& g, const CensusOptions& opt) {
    const auto subsets = census_subsets(g, opt);
    auto verdicts = parallel_map<char>(subsets.size(), opt.jobs, [&](std::size_t i) {
        return static_cast<char>(decide_property_p(subsets[i], g, opt.fast_filters).holds);
    });
    PCensus census;
    for (int size = 1; size <= g.rank() + 1 && size <= g.count(); ++size)
        census.per_size[size] = 0;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (verdicts[i]) {
            census.per_size[static_cast<int>(subsets[i].size())] += 1;
            census.total += 1;
        }
    return census;
}

std::vector<ZsSequence> build_min_sep_set(const Group& g, const CensusOptions& opt) {
    const auto subsets = census_subsets(g, opt);
    auto picks = parallel_map<std::optional<ZsSequence>>(
        subsets.size(), opt.jobs, [&](std::size_t i) -> std::optional<ZsSequence> {
            if (!decide_property_p(subsets[i], g, opt.fast_filters).holds)
                return std::nullopt;
            SupportPtr ctx = make_support(g, subsets[i]);
            const ZsSequence* best = nullptr;
            auto atoms = enumerate_atoms(ctx);
            for (const auto& a : atoms) {
                bool full = std::all_of(a.mult.begin(), a.mult.end(),
                                        [](long long m) { return m > 0; });
                if (!full) continue;
                // minimize the multiplicity of the smallest support element,
                // then take the lexicographically smallest vector
                if (!best || a.mult[0] < best->mult[0] ||
                    (a.mult[0] == best->mult[0] && a.mult < best->mult))
                    best = &a;
            }
            if (!best)
                throw std::logic_error(
                    "no full-support atom over a subset with the lattice property: " +
                    [&] {
                        std::string s;
                        for (int id : subsets[i]) s += g.render(id);
                        return s;
                    }());
            return *best;
        });
    std::vector<ZsSequence> out;
    for (auto& p : picks)
        if (p) out.push_back(std::move(*p));
    return out;
}

namespace {

std::vector<int> profile_ids(const Profile& p) {
    std::vector<int> ids;
    ids.reserve(p.size());
    for (const auto& [id, m] : p) ids.push_back(id);
    return ids;
}

// multiplicity vector of the profile laid out over the sorted id set `subset`
IntVec profile_vector(const Profile& p, const std::vector<int>& subset) {
    IntVec v(subset.size(), 0);
    for (const auto& [id, m] : p) {
        auto it = std::lower_bound(subset.begin(), subset.end(), id);
        v[it - subset.begin()] = m;
    }
    return v;
}

}  // namespace

bool is_separating_set(const std::vector<ZsSequence>& s, const Group& g,
                       const CensusOptions& opt) {
    std::vector<Profile> profiles;
    std::vector<std::vector<int>> supports;
    for (const auto& seq : s) {
        if (seq.ctx->group != g) throw std::invalid_argument("sequence over wrong group");
        if (sigma(seq) != 0) throw std::invalid_argument("sequence is not zero-sum");
        profiles.push_back(seq.profile());
        supports.push_back(profile_ids(profiles.back()));
    }
    const auto subsets = census_subsets(g, opt);
    auto ok = parallel_map<char>(subsets.size(), opt.jobs, [&](std::size_t i) {
        const auto& subset = subsets[i];
        IntMat gens;
        for (std::size_t j = 0; j < profiles.size(); ++j)
            if (std::includes(subset.begin(), subset.end(), supports[j].begin(),
                              supports[j].end()))
                gens.push_back(profile_vector(profiles[j], subset));
        SupportContext ctx{g, subset};
        return static_cast<char>(lattice_equal(
            lattice_from_generators(std::move(gens), static_cast<int>(subset.size())),
            kernel_lattice(ctx)));
    });
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool is_irredundant_separating_set(const std::vector<ZsSequence>& s, const Group& g,
                                   const CensusOptions& opt) {
    std::vector<Profile> profiles;
    std::vector<std::vector<int>> supports;
    for (const auto& seq : s) {
        profiles.push_back(seq.profile());
        supports.push_back(profile_ids(profiles.back()));
    }
    const auto subsets = census_subsets(g, opt);
    for (std::size_t removed = 0; removed < s.size(); ++removed) {
        // only subsets containing the removed support can change verdict
        bool still_separating = true;
        for (const auto& subset : subsets) {
            if (!std::includes(subset.begin(), subset.end(), supports[removed].begin(),
                               supports[removed].end()))
                continue;
            IntMat gens;
            for (std::size_t j = 0; j < profiles.size(); ++j)
                if (j != removed &&
                    std::includes(subset.begin(), subset.end(), supports[j].begin(),
                                  supports[j].end()))
                    gens.push_back(profile_vector(profiles[j], subset));
            SupportContext ctx{g, subset};
            if (!lattice_equal(
                    lattice_from_generators(std::move(gens),
                                            static_cast<int>(subset.size())),
                    kernel_lattice(ctx))) {
                still_separating = false;
                break;
            }
        }
        if (still_separating) return false;  // this element is removable
    }
    return true;
}

std::vector<ZsSequence> build_sreg(const Group& g, const CensusOptions& opt) {
    const auto subsets = census_subsets(g, opt);
    auto per_subset = parallel_map<std::vector<Profile>>(
        subsets.size(), opt.jobs, [&](std::size_t i) {
            std::vector<Profile> out;
            SepAtomTable table = separating_atoms(make_support(g, subsets[i]));
            for (std::size_t a = 0; a < table.atoms.size(); ++a)
                if (table.separating[a]) out.push_back(table.atoms[a].profile());
            return out;
        });
    std::set<Profile> seen;
    for (const auto& batch : per_subset)
        for (const auto& p : batch) seen.insert(p);
    std::vector<ZsSequence> out;
    for (const auto& p : seen)
        out.push_back(sequence_from_profile(make_support(g, profile_ids(p)), p));
    std::sort(out.begin(), out.end(), [](const ZsSequence& a, const ZsSequence& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.profile() < b.profile();
    });
    return out;
}

Int formula_cyclic_min(long long n) {
    if (n < 2) throw std::invalid_argument("cyclic formula needs n >= 2");
    Int total = Int(n) + binomial(n, 2);
    for (long long d = 2; d <= n; ++d)
        if (n % d == 0) total -= (Int(1) << (prime_omega(d) - 1)) * euler_phi(d);
    return total;
}

Int formula_lambda1(long long p, int r) {
    if (!is_prime_power(p) || least_prime_divisor(p) != p)
        throw std::invalid_argument("p must be prime");
    if (r < 2) throw std::invalid_argument("rank must be at least 2");
    Int pr = 1;
    for (int i = 0; i < r; ++i) pr *= p;
    Int total = pr + (pr - 1) * (p - 2) / 2;
    for (int i = 3; i <= r + 1; ++i) {
        Int num = 1;
        Int pj = 1;  // p^0 .. p^{i-2}
        for (int j = 0; j <= i - 2; ++j) {
            num *= pr - pj;
            pj *= p;
        }
        for (int j = 0; j < i - 1; ++j) num *= p - 1;
        Int fact = 1;
        for (int j = 2; j <= i; ++j) fact *= j;
        if (num % fact != 0) throw std::logic_error("count not divisible by i!");
        total += num / fact;
    }
    return total;
}

Int formula_lambda2(long long p, int k, int r) {
    if (!is_prime_power(p) || least_prime_divisor(p) != p)
        throw std::invalid_argument("p must be prime");
    if (k < 1 || r < 2) throw std::invalid_argument("need k >= 1 and r >= 2");
    auto pow_int = [&](long long b, long long e) {
        Int x = 1;
        for (long long i = 0; i < e; ++i) x *= b;
        return x;
    };
    Int pkr = pow_int(p, static_cast<long long>(k) * r);
    Int pr = pow_int(p, r);
    // per C_p subgroup, the number of elements whose cyclic group contains it
    Int through = (pkr - 1) * (p - 1) / (pr - 1);
    Int total = pkr + (pr - 1) / (p - 1) * (through * (through - 1) / 2);
    for (int i = 3; i <= r + 1; ++i) {
        Int a = 1, b = 1;
        for (int j = 0; j < i - 1; ++j) {
            a *= pow_int(p, k) - 1;
            b *= pow_int(p, k - 1) - 1;
        }
        Int num = a - b;
        for (int j = 1; j <= i - 1; ++j)
            num *= pkr - pow_int(p, static_cast<long long>(k - 1) * r) -
                   (pow_int(p, static_cast<long long>(k) * (j - 1)) -
                    pow_int(p, static_cast<long long>(k - 1) * (j - 1)));
        Int fact = 1;
        for (int j = 2; j <= i; ++j) fact *= j;
        if (num % fact != 0) throw std::logic_error("count not divisible by i!");
        total += num / fact;
    }
    return total;
}

Int formula_lambda3(long long p, int k1, int k2) {
    if (!is_prime_power(p) || least_prime_divisor(p) != p)
        throw std::invalid_argument("p must be prime");
    if (k1 < 1 || k1 >= k2) throw std::invalid_argument("need 1 <= k1 < k2");
    auto pow_int = [&](long long e) {
        Int x = 1;
        for (long long i = 0; i < e; ++i) x *= p;
        return x;
    };
    if (pow_int(k1) < 3) throw std::invalid_argument("need p^k1 >= 3");
    Int order = pow_int(k1 + k2);
    Int x = order - pow_int(k1 + k2 - 1);   // elements of maximal order
    Int y = pow_int(k2) - pow_int(k2 - 1);  // per cyclic subgroup of that order
    return order + x * (x - 1) / 2 + x * (x - y) * (x - 2 * y) / 6;
}

Int formula_mu(long long group_order, int r) {
    Int total = 0;
    for (int i = 1; i <= r + 1; ++i) total += binomial(group_order, i);
    return total;
}

std::vector<SepWitness> max_separating_atoms(const Group& g, const CensusOptions& opt) {
    return beta_sep(g, opt).witnesses;
}

InverseRank2Report check_inverse_rank2(const Group& g, const CensusOptions& opt) {
    if (g.rank() != 2) throw std::invalid_argument("structure check needs a rank-2 group");
    const long long n1 = g.invariant_factors()[0];
    const long long n2 = g.invariant_factors()[1];
    InverseRank2Report report;
    BetaSepResult bs = beta_sep(g, opt);
    report.beta = bs.value;
    for (const auto& w : bs.witnesses) {
        std::vector<int> supp = profile_ids(w.atom);
        if (supp.size() > 3) continue;  // only small-support witnesses are constrained
        ++report.witnesses_checked;
        auto describe = [&] {
            std::string s;
            for (int id : supp) s += g.render(id);
            return s;
        };
        if (supp.size() != 3) {
            report.violations.push_back("support size " + std::to_string(supp.size()) +
                                        " != 3 for " + describe());
            continue;
        }
        std::vector<long long> orders;
        for (int id : supp) orders.push_back(g.order_of(id));
        std::sort(orders.begin(), orders.end());
        if (orders != std::vector<long long>{n1, n2, n2})
            report.violations.push_back("order multiset mismatch for " + describe());
        for (int a : supp)
            for (int b : supp)
                if (a != b && subgroup_generated({b}, g).contains(a))
                    report.violations.push_back(g.render(a) + " lies in the cyclic group of " +
                                                g.render(b) + " in " + describe());
    }
    report.ok = report.violations.empty();
    return report;
}

SupportConjectureReport check_support_conjecture(const Group& g, const CensusOptions& opt) {
    SupportConjectureReport report;
    BetaSepResult bs = beta_sep(g, opt);
    report.beta = bs.value;
    for (const auto& w : bs.witnesses) {
        ++report.witnesses_checked;
        if (static_cast<int>(w.atom.size()) != g.rank() + 1)
            report.counterexamples.push_back(w);
    }
    report.holds = report.counterexamples.empty();
    return report;
}

}  // namespace zsum
