#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "zsum/group.hpp"

namespace zsum {

// A fixed nonempty support G0 of distinct elements in canonical order; all
// multiplicity vectors of sequences over G0 are aligned with this order.
struct SupportContext {
    Group group;
    std::vector<int> support_ids;  // sorted ascending, distinct

    int size() const { return static_cast<int>(support_ids.size()); }
    std::vector<Element> support_elements() const;
};

using SupportPtr = std::shared_ptr<const SupportContext>;

SupportPtr make_support(const Group& g, std::vector<int> ids);
SupportPtr make_support(const Group& g, const std::vector<Element>& elems);
SupportPtr full_support(const Group& g);

// canonical multiset form of a sequence, independent of any support:
// sorted (element id, multiplicity) pairs
using Profile = std::vector<std::pair<int, long long>>;

// A multiset sequence over a support context.
struct ZsSequence {
    SupportPtr ctx;
    std::vector<long long> mult;

    long long length() const;
    std::vector<int> support_ids() const;  // ids with positive multiplicity
    Profile profile() const;
    std::string monomial() const;  // "x1^2 x3" style rendering
};

ZsSequence sequence_over(SupportPtr ctx, std::vector<long long> mult);
// re-root a profile onto a (super)support
ZsSequence sequence_from_profile(SupportPtr ctx, const Profile& p);

int sigma(const ZsSequence& s);                       // sum, as element id
std::vector<int> subsequence_sum_set(const ZsSequence& s);  // sorted ids
bool is_zero_sum_free(const ZsSequence& s);
bool is_atom(const ZsSequence& s);

// All atoms over the support (length <= max_length when given), sorted by
// (length, multiplicity vector).  Deterministic.
std::vector<ZsSequence> enumerate_atoms(const SupportPtr& ctx,
                                        std::optional<long long> max_length = {});

// streaming variant; atoms arrive in DFS order, not sorted
void for_each_atom(const SupportContext& ctx, std::optional<long long> max_length,
                   const std::function<void(const std::vector<long long>&)>& f);

long long davenport(const SupportPtr& ctx);  // max atom length over G0
long long davenport_group(const Group& g);
long long davenport_subgroup(const Subgroup& h, const Group& g);

}  // namespace zsum
