#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "zsum/ints.hpp"

namespace zsum {

// A group element as a coordinate vector in the invariant-factor basis,
// coordinate i reduced into [0, n_i - 1].
using Element = std::vector<long long>;

// A finite abelian group C_{n1} + ... + C_{nr} with 1 < n1 | n2 | ... | nr.
// Elements are addressed either by coordinates or by a dense id in
// [0, order); ids are assigned in lexicographic coordinate order, so id 0
// is the neutral element and id order matches the canonical element order.
class Group {
public:
    explicit Group(std::vector<long long> factors);

    // "C2xC4", "C2x4", "2,4"; factors in any order (canonicalized)
    static Group parse(std::string_view spec);

    const std::vector<long long>& invariant_factors() const { return factors_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    long long order() const { return order_; }
    long long exponent() const { return factors_.back(); }
    int count() const { return static_cast<int>(order_); }

    Element reduce(Element e) const;
    int id_of(const Element& e) const;
    Element element_of(int id) const;
    int basis_id(int i) const;  // id of e_{i+1}

    int add(int a, int b) const;
    int neg(int a) const;
    int scale(long long k, int a) const;
    long long order_of(int id) const;

    std::string spec_string() const;          // "C2xC4"
    std::string render(int id) const;         // "[a,b]"

    bool operator==(const Group&) const = default;

private:
    std::vector<long long> factors_;
    std::vector<long long> stride_;
    long long order_ = 1;
};

long long order_of(const Element& e, const Group& g);

// A subgroup given by its materialized element set; invariant factors are
// obtained independently from a Smith-normal-form reduction of the relation
// matrix, so |elements| == product(invariant_factors) is a real cross-check.
struct Subgroup {
    std::vector<int> generators;
    std::vector<int> elements;                 // sorted ids, always contains 0
    std::vector<long long> invariant_factors;  // divisibility chain, no 1s

    int rank() const { return static_cast<int>(invariant_factors.size()); }
    long long order() const { return static_cast<long long>(elements.size()); }
    bool contains(int id) const;
};

Subgroup subgroup_generated(const std::vector<int>& gen_ids, const Group& g);
Subgroup scaled_subgroup(const Group& g, long long n);

// true iff <g1> and <g2> intersect trivially
bool cyclic_intersection_trivial(int g1, int g2, const Group& g);

// number-theoretic helpers
long long d_star(const std::vector<long long>& factors);
long long euler_phi(long long n);
int prime_omega(long long n);
long long least_prime_divisor(long long n);
bool is_prime_power(long long n);
// unordered coprime factorizations d = d1*d2 with d1 <= d2 (d >= 2)
long long coprime_split_count(long long d);

Int binomial(long long n, int k);
Int count_subsets_up_to(long long n, int k);  // sum of C(n, i), i = 1..k

// All nonempty subsets of {0, ..., n-1} of size <= k as sorted index
// tuples, in lexicographic tuple order.  Restartable and side-effect free.
void for_each_subset_up_to(int n, int k,
                           const std::function<void(const std::vector<int>&)>& f);
std::vector<std::vector<int>> subsets_up_to(int n, int k);

// every invariant-factor chain with order in [2, max_order]
std::vector<Group> all_groups_up_to(long long max_order);

}  // namespace zsum
