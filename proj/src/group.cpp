#include "zsum/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "zsum/lattice.hpp"

namespace zsum {

namespace {

// pairwise gcd/lcm passes turn any factor list into the invariant-factor
// chain guaranteed by the structure theorem
std::vector<long long> canonicalize_factors(std::vector<long long> f) {
    for (long long x : f)
        if (x < 1) throw ParseError("group factors must be positive");
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                long long g = std::gcd(f[i], f[j]);
                long long l = f[i] / g * f[j];
                if (f[i] != g || f[j] != l) {
                    f[i] = g;
                    f[j] = l;
                    changed = true;
                }
            }
    }
    std::erase(f, 1);
    std::sort(f.begin(), f.end());
    if (f.empty()) throw ParseError("trivial group");
    return f;
}

}  // namespace

Group::Group(std::vector<long long> factors)
    : factors_(canonicalize_factors(std::move(factors))) {
    stride_.assign(factors_.size(), 1);
    for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i)
        stride_[i] = stride_[i + 1] * factors_[i + 1];
    for (long long n : factors_) order_ *= n;
    if (order_ > 2'000'000)
        throw ParseError("group order too large for materialized arithmetic");
}

Group Group::parse(std::string_view spec) {
    std::vector<long long> factors;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i; };
    skip_ws();
    while (i < spec.size()) {
        if (spec[i] == 'C' || spec[i] == 'c') ++i;
        std::size_t start = i;
        while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
        if (start == i) throw ParseError("bad group spec: " + std::string(spec));
        factors.push_back(std::stoll(std::string(spec.substr(start, i - start))));
        skip_ws();
        if (i < spec.size()) {
            if (spec[i] != 'x' && spec[i] != 'X' && spec[i] != ',')
                throw ParseError("bad group spec: " + std::string(spec));
            ++i;
            skip_ws();
        }
    }
    if (factors.empty()) throw ParseError("empty group spec");
    return Group(std::move(factors));
}

Element Group::reduce(Element e) const {
    if (e.size() != factors_.size())
        throw ParseError("element rank mismatch");
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] %= factors_[i];
        if (e[i] < 0) e[i] += factors_[i];
    }
    return e;
}

int Group::id_of(const Element& e) const {
    Element r = reduce(e);
    long long id = 0;
    for (std::size_t i = 0; i < r.size(); ++i) id += r[i] * stride_[i];
    return static_cast<int>(id);
}

Element Group::element_of(int id) const {
    Element e(factors_.size());
    long long rest = id;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        e[i] = rest / stride_[i];
        rest %= stride_[i];
    }
    return e;
}

int Group::basis_id(int i) const { return static_cast<int>(stride_[i]); }

int Group::add(int a, int b) const {
    long long id = 0, ra = a, rb = b;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long long ca = ra / stride_[i], cb = rb / stride_[i];
        ra %= stride_[i];
        rb %= stride_[i];
        long long c = ca + cb;
        if (c >= factors_[i]) c -= factors_[i];
        id += c * stride_[i];
    }
    return static_cast<int>(id);
}

int Group::neg(int a) const {
    long long id = 0, ra = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long long c = ra / stride_[i];
        ra %= stride_[i];
        if (c != 0) c = factors_[i] - c;
        id += c * stride_[i];
    }
    return static_cast<int>(id);
}

int Group::scale(long long k, int a) const {
    long long id = 0, ra = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long long c = ra / stride_[i];
        ra %= stride_[i];
        c = (c % factors_[i]) * (k % factors_[i]) % factors_[i];
        if (c < 0) c += factors_[i];
        id += c * stride_[i];
    }
    return static_cast<int>(id);
}

long long Group::order_of(int id) const {
    long long ord = 1, rest = id;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long long c = rest / stride_[i];
        rest %= stride_[i];
        ord = std::lcm(ord, factors_[i] / std::gcd(factors_[i], c));
    }
    return ord;
}

std::string Group::spec_string() const {
    std::string s;
    for (long long n : factors_) {
        if (!s.empty()) s += 'x';
        s += 'C' + std::to_string(n);
    }
    return s;
}

std::string Group::render(int id) const {
    Element e = element_of(id);
    std::string s = "[";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s + "]";
}

long long order_of(const Element& e, const Group& g) {
    return g.order_of(g.id_of(e));
}

bool Subgroup::contains(int id) const {
    return std::binary_search(elements.begin(), elements.end(), id);
}

Subgroup subgroup_generated(const std::vector<int>& gen_ids, const Group& g) {
    Subgroup h;
    h.generators = gen_ids;
    std::vector<char> seen(g.count(), 0);
    std::vector<int> frontier{0};
    seen[0] = 1;
    while (!frontier.empty()) {
        int cur = frontier.back();
        frontier.pop_back();
        for (int gen : gen_ids) {
            int nxt = g.add(cur, gen);
            if (!seen[nxt]) {
                seen[nxt] = 1;
                frontier.push_back(nxt);
            }
        }
    }
    for (int id = 0; id < g.count(); ++id)
        if (seen[id]) h.elements.push_back(id);

    // invariant factors of M/L, M = <generators, n_i e_i>, L = diag(n)
    const int r = g.rank();
    IntMat rows;
    for (int gen : gen_ids) {
        Element e = g.element_of(gen);
        rows.emplace_back(e.begin(), e.end());
    }
    for (int i = 0; i < r; ++i) {
        IntVec row(r, 0);
        row[i] = g.invariant_factors()[i];
        rows.push_back(std::move(row));
    }
    IntMat basis = hermite_rows(std::move(rows));  // r x r, full rank
    // express n_i e_i in that basis (back substitution through the pivots)
    IntMat coeffs;
    for (int i = 0; i < r; ++i) {
        IntVec v(r, 0);
        v[i] = g.invariant_factors()[i];
        IntVec c(r, 0);
        for (int row = 0; row < r; ++row) {
            int p = 0;
            while (basis[row][p] == 0) ++p;
            Int q = v[p] / basis[row][p];
            c[row] = q;
            for (int j = 0; j < r; ++j) v[j] -= q * basis[row][j];
        }
        coeffs.push_back(std::move(c));
    }
    for (const Int& d : smith_diagonal(std::move(coeffs)))
        if (d > 1) h.invariant_factors.push_back(to_ll(d));
    return h;
}

Subgroup scaled_subgroup(const Group& g, long long n) {
    std::vector<int> gens;
    for (int i = 0; i < g.rank(); ++i)
        gens.push_back(g.scale(n, g.basis_id(i)));
    return subgroup_generated(gens, g);
}

bool cyclic_intersection_trivial(int g1, int g2, const Group& g) {
    Subgroup a = subgroup_generated({g1}, g);
    Subgroup b = subgroup_generated({g2}, g);
    for (int id : a.elements)
        if (id != 0 && b.contains(id)) return false;
    return true;
}

long long d_star(const std::vector<long long>& factors) {
    long long d = 1;
    for (long long n : factors) d += n - 1;
    return d;
}

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

int prime_omega(long long n) {
    int count = 0;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ++count;
            while (n % p == 0) n /= p;
        }
    if (n > 1) ++count;
    return count;
}

long long least_prime_divisor(long long n) {
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

bool is_prime_power(long long n) {
    return n >= 2 && prime_omega(n) == 1;
}

long long coprime_split_count(long long d) {
    if (d <= 1) throw std::invalid_argument("coprime_split_count requires d >= 2");
    return 1LL << (prime_omega(d) - 1);
}

Int binomial(long long n, int k) {
    if (k < 0 || k > n) return 0;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - i + 1;
        result /= i;
    }
    return result;
}

Int count_subsets_up_to(long long n, int k) {
    Int total = 0;
    for (int i = 1; i <= k && i <= n; ++i) total += binomial(n, i);
    return total;
}

namespace {

void subset_dfs(int n, int k, std::vector<int>& prefix, int next,
                const std::function<void(const std::vector<int>&)>& f) {
    for (int i = next; i < n; ++i) {
        prefix.push_back(i);
        f(prefix);
        if (static_cast<int>(prefix.size()) < k) subset_dfs(n, k, prefix, i + 1, f);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_subset_up_to(int n, int k,
                           const std::function<void(const std::vector<int>&)>& f) {
    if (k <= 0) return;
    std::vector<int> prefix;
    prefix.reserve(k);
    subset_dfs(n, std::min(k, n), prefix, 0, f);
}

std::vector<std::vector<int>> subsets_up_to(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_subset_up_to(n, k, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

namespace {

void chains_for(long long order, long long max_factor, std::vector<long long>& chain,
                std::vector<Group>& out) {
    if (order == 1) {
        if (!chain.empty()) {
            std::vector<long long> f(chain.rbegin(), chain.rend());
            out.emplace_back(std::move(f));
        }
        return;
    }
    // build the chain from the largest factor down; each next factor divides
    // the previous one
    for (long long n = 2; n <= max_factor; ++n) {
        if (order % n != 0) continue;
        if (!chain.empty() && chain.back() % n != 0) continue;
        chain.push_back(n);
        chains_for(order / n, n, chain, out);
        chain.pop_back();
    }
}

}  // namespace

std::vector<Group> all_groups_up_to(long long max_order) {
    std::vector<Group> out;
    for (long long order = 2; order <= max_order; ++order) {
        std::vector<long long> chain;
        chains_for(order, order, chain, out);
    }
    return out;
}

}  // namespace zsum
