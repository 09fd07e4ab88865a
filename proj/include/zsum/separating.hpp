#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zsum/kernel.hpp"
#include "zsum/lattice.hpp"
#include "zsum/sequences.hpp"

namespace zsum {

// Atoms over one support, classified: an atom of length l is separating when
// its multiplicity vector lies outside the lattice generated by all atoms of
// length <= l - 1 over the same support.
struct SepAtomTable {
    SupportPtr ctx;
    std::vector<ZsSequence> atoms;   // sorted by (length, multiplicity vector)
    std::vector<char> separating;    // aligned with atoms
    std::map<long long, IntLattice> lattice_prefix;  // length -> lattice of atoms up to it

    // lattice generated by all atoms of length <= len
    IntLattice prefix(long long len) const;
    std::vector<ZsSequence> separating_atoms_list() const;
    long long max_separating_length() const;  // 0 when there are no atoms
};

SepAtomTable separating_atoms(const SupportPtr& ctx);
long long beta_sep_over(const SupportPtr& ctx);

struct CensusOptions {
    Int budget = 5'000'000;  // cap on the number of enumerated subsets
    int jobs = 1;
    bool fast_filters = true;
};

// a maximal separating atom together with the subset it was found over
struct SepWitness {
    Profile atom;
    std::vector<int> support_ids;  // the census subset (sorted ids)
};

struct BetaSepResult {
    long long value = 0;
    std::vector<SepWitness> witnesses;  // deduplicated by atom, smallest subset kept
};

// exact maximum of the separating-atom length over all subsets of size <= rank+1
BetaSepResult beta_sep(const Group& g, const CensusOptions& opt = {});

long long beta_sep_lower_bound(const Group& g);

struct ClosedForm {
    long long value = 0;
    std::string case_tag;  // cyclic | rank-4 | equal-factors | odd-rank | even-rank
};
std::optional<ClosedForm> beta_sep_closed_form(const Group& g);

// Property (P): the zero-sum lattice of the subset is not contained in the
// sum of the zero-sum lattices of its proper subsets.
struct PropertyPVerdict {
    std::vector<int> subset;  // sorted ids
    bool holds = false;
    std::string method;  // filter-* or direct-lattice
    std::optional<IntVec> witness;  // kernel basis vector outside the proper-subset lattice
};

PropertyPVerdict has_property_p(const std::vector<int>& subset_ids, const Group& g);
std::optional<PropertyPVerdict> property_p_fast_filter(const std::vector<int>& subset_ids,
                                                       const Group& g);
// fast filter with direct fallback (or direct only when use_filters is false)
PropertyPVerdict decide_property_p(const std::vector<int>& subset_ids, const Group& g,
                                   bool use_filters = true);

struct PCensus {
    Int total = 0;
    std::map<int, Int> per_size;  // subset size -> count of Property-(P) subsets
};
PCensus min_sep_set_size(const Group& g, const CensusOptions& opt = {});

// One full-support atom per Property-(P) subset: multiplicity of the smallest
// support element minimized, ties broken by lexicographically smallest vector.
std::vector<ZsSequence> build_min_sep_set(const Group& g, const CensusOptions& opt = {});

// S is separating iff for every subset G1 of size <= rank+1 the sequences of
// S supported inside G1 generate the full zero-sum lattice of G1.
bool is_separating_set(const std::vector<ZsSequence>& s, const Group& g,
                       const CensusOptions& opt = {});
bool is_irredundant_separating_set(const std::vector<ZsSequence>& s, const Group& g,
                                   const CensusOptions& opt = {});

// union of the separating atoms over every subset of size <= rank+1
std::vector<ZsSequence> build_sreg(const Group& g, const CensusOptions& opt = {});

// closed-form counts / bounds for the minimal separating-set size
Int formula_cyclic_min(long long n);
Int formula_lambda1(long long p, int r);
Int formula_lambda2(long long p, int k, int r);
Int formula_lambda3(long long p, int k1, int k2);
Int formula_mu(long long group_order, int r);

// all separating atoms of length exactly beta_sep(g), with their subsets
std::vector<SepWitness> max_separating_atoms(const Group& g, const CensusOptions& opt = {});

// Structure of maximal separating atoms for rank-2 groups: each witness with
// small support must have exactly three support elements, pairwise not
// contained in each other's cyclic group, with orders {n2, n2, n1}.
struct InverseRank2Report {
    bool ok = true;
    long long beta = 0;
    int witnesses_checked = 0;
    std::vector<std::string> violations;
};
InverseRank2Report check_inverse_rank2(const Group& g, const CensusOptions& opt = {});

// Empirical check: every maximal separating atom has support of size rank+1.
// Counterexamples are reported, never asserted away.
struct SupportConjectureReport {
    bool holds = true;
    long long beta = 0;
    int witnesses_checked = 0;
    std::vector<SepWitness> counterexamples;
};
SupportConjectureReport check_support_conjecture(const Group& g,
                                                 const CensusOptions& opt = {});

}  // namespace zsum
