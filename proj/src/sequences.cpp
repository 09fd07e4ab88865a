#include "zsum/sequences.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace zsum {

std::vector<Element> SupportContext::support_elements() const {
    std::vector<Element> out;
    out.reserve(support_ids.size());
    for (int id : support_ids) out.push_back(group.element_of(id));
    return out;
}

SupportPtr make_support(const Group& g, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw ParseError("empty support");
    for (int id : ids)
        if (id < 0 || id >= g.count()) throw ParseError("support id out of range");
    return std::make_shared<const SupportContext>(SupportContext{g, std::move(ids)});
}

SupportPtr make_support(const Group& g, const std::vector<Element>& elems) {
    std::vector<int> ids;
    ids.reserve(elems.size());
    for (const Element& e : elems) ids.push_back(g.id_of(e));
    return make_support(g, std::move(ids));
}

SupportPtr full_support(const Group& g) {
    std::vector<int> ids(g.count());
    for (int i = 0; i < g.count(); ++i) ids[i] = i;
    return make_support(g, std::move(ids));
}

long long ZsSequence::length() const {
    long long total = 0;
    for (long long m : mult) total += m;
    return total;
}

std::vector<int> ZsSequence::support_ids() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] > 0) out.push_back(ctx->support_ids[i]);
    return out;
}

Profile ZsSequence::profile() const {
    Profile p;
    for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] > 0) p.emplace_back(ctx->support_ids[i], mult[i]);
    return p;
}

std::string ZsSequence::monomial() const {
    std::string s;
    for (std::size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] == 0) continue;
        if (!s.empty()) s += ' ';
        s += ctx->group.render(ctx->support_ids[i]);
        if (mult[i] > 1) s += '^' + std::to_string(mult[i]);
    }
    return s.empty() ? "1" : s;
}

ZsSequence sequence_over(SupportPtr ctx, std::vector<long long> mult) {
    if (static_cast<int>(mult.size()) != ctx->size())
        throw ParseError("multiplicity vector does not match support size");
    for (long long m : mult)
        if (m < 0) throw ParseError("negative multiplicity");
    return ZsSequence{std::move(ctx), std::move(mult)};
}

ZsSequence sequence_from_profile(SupportPtr ctx, const Profile& p) {
    std::vector<long long> mult(ctx->size(), 0);
    for (const auto& [id, m] : p) {
        auto it = std::lower_bound(ctx->support_ids.begin(), ctx->support_ids.end(), id);
        if (it == ctx->support_ids.end() || *it != id)
            throw ParseError("profile element not in support");
        mult[it - ctx->support_ids.begin()] += m;
    }
    return sequence_over(std::move(ctx), std::move(mult));
}

int sigma(const ZsSequence& s) {
    const Group& g = s.ctx->group;
    int sum = 0;
    for (std::size_t i = 0; i < s.mult.size(); ++i)
        if (s.mult[i] > 0)
            sum = g.add(sum, g.scale(s.mult[i], s.ctx->support_ids[i]));
    return sum;
}

std::vector<int> subsequence_sum_set(const ZsSequence& s) {
    const Group& g = s.ctx->group;
    // reachable[x] = x is the sum of some nonempty subsequence; bounded
    // knapsack over the group, one support element at a time
    std::vector<char> reachable(g.count(), 0);
    bool any = false;
    for (std::size_t i = 0; i < s.mult.size(); ++i) {
        if (s.mult[i] == 0) continue;
        const int e = s.ctx->support_ids[i];
        // multiplicities above the order of e add nothing new
        const long long reps = std::min(s.mult[i], g.order_of(e));
        std::vector<char> cur = reachable;
        int shift = 0;
        for (long long k = 1; k <= reps; ++k) {
            shift = g.add(shift, e);
            cur[shift] = 1;
            if (any)
                for (int x = 0; x < g.count(); ++x)
                    if (reachable[x]) cur[g.add(x, shift)] = 1;
        }
        reachable = std::move(cur);
        any = true;
    }
    std::vector<int> out;
    for (int x = 0; x < g.count(); ++x)
        if (reachable[x]) out.push_back(x);
    return out;
}

bool is_zero_sum_free(const ZsSequence& s) {
    const Group& g = s.ctx->group;
    std::vector<char> reachable(g.count(), 0);
    bool any = false;
    for (std::size_t i = 0; i < s.mult.size(); ++i) {
        if (s.mult[i] == 0) continue;
        const int e = s.ctx->support_ids[i];
        if (e == 0) return false;
        const long long reps = std::min(s.mult[i], g.order_of(e));
        if (reps == g.order_of(e)) return false;  // e repeated ord(e) times sums to 0
        std::vector<char> cur = reachable;
        int shift = 0;
        for (long long k = 1; k <= reps; ++k) {
            shift = g.add(shift, e);
            cur[shift] = 1;
            if (any)
                for (int x = 0; x < g.count(); ++x)
                    if (reachable[x]) cur[g.add(x, shift)] = 1;
        }
        if (cur[0]) return false;
        reachable = std::move(cur);
        any = true;
    }
    return true;
}

bool is_atom(const ZsSequence& s) {
    if (s.length() == 0) return false;
    if (sigma(s) != 0) return false;
    // minimal iff removing one copy of any element leaves a zero-sum-free
    // sequence; with total sum zero, one witness element suffices
    ZsSequence t = s;
    for (std::size_t i = 0; i < s.mult.size(); ++i) {
        if (s.mult[i] == 0) continue;
        t.mult[i] -= 1;
        bool free = is_zero_sum_free(t);
        t.mult[i] += 1;
        if (!free) return false;
    }
    return true;
}

namespace {

struct AtomDfs {
    const SupportContext& ctx;
    const Group& g;
    long long max_len;
    const std::function<void(const std::vector<long long>&)>& emit;
    std::vector<long long> mult;
    // reachable subsequence sums of the current (zero-sum-free) prefix
    std::vector<char> reachable;

    AtomDfs(const SupportContext& c, long long ml,
            const std::function<void(const std::vector<long long>&)>& f)
        : ctx(c), g(c.group), max_len(ml), emit(f),
          mult(c.support_ids.size(), 0), reachable(g.count(), 0) {}

    void run() {
        // the neutral element only appears in the length-1 atom 0
        for (std::size_t i = 0; i < ctx.support_ids.size(); ++i)
            if (ctx.support_ids[i] == 0) {
                mult[i] = 1;
                emit(mult);
                mult[i] = 0;
            }
        descend(0, 0);
    }

    // prefix is zero-sum-free; try appending copies of support[i] for i >= from
    void descend(std::size_t from, long long len) {
        if (len >= max_len) return;
        for (std::size_t i = from; i < ctx.support_ids.size(); ++i) {
            const int e = ctx.support_ids[i];
            if (e == 0) continue;
            // closing move: appending e makes the total zero.  The closure is
            // minimal: a zero-sum proper piece either avoids e (contradicts
            // the prefix being zero-sum-free) or its complement does.
            if (len >= 1 && e == g.neg(total)) {
                mult[i] += 1;
                emit(mult);
                mult[i] -= 1;
            }
            // extending move: the new prefix must stay zero-sum-free, i.e.
            // -e must not already be a subsequence sum
            if (!reachable[g.neg(e)]) push(i, e, len);
        }
    }

    int total = 0;

    void push(std::size_t i, int e, long long len) {
        // append one copy of e; prefix stays zero-sum-free because -e was
        // not reachable and e != 0
        std::vector<char> saved = reachable;
        int saved_total = total;
        std::vector<char> next = reachable;
        next[e] = 1;
        for (int x = 0; x < g.count(); ++x)
            if (reachable[x]) next[g.add(x, e)] = 1;
        reachable = std::move(next);
        total = g.add(total, e);
        mult[i] += 1;
        descend(i, len + 1);
        mult[i] -= 1;
        total = saved_total;
        reachable = std::move(saved);
    }
};

}  // namespace

void for_each_atom(const SupportContext& ctx, std::optional<long long> max_length,
                   const std::function<void(const std::vector<long long>&)>& f) {
    long long ml = max_length.value_or(std::numeric_limits<long long>::max());
    if (ml <= 0) return;
    AtomDfs dfs(ctx, ml, f);
    dfs.run();
}

std::vector<ZsSequence> enumerate_atoms(const SupportPtr& ctx,
                                        std::optional<long long> max_length) {
    std::vector<std::vector<long long>> mults;
    for_each_atom(*ctx, max_length,
                  [&](const std::vector<long long>& m) { mults.push_back(m); });
    std::sort(mults.begin(), mults.end(),
              [](const std::vector<long long>& a, const std::vector<long long>& b) {
                  long long la = 0, lb = 0;
                  for (long long x : a) la += x;
                  for (long long x : b) lb += x;
                  if (la != lb) return la < lb;
                  return a < b;
              });
    std::vector<ZsSequence> out;
    out.reserve(mults.size());
    for (auto& m : mults) out.push_back(ZsSequence{ctx, std::move(m)});
    return out;
}

long long davenport(const SupportPtr& ctx) {
    long long best = 0;
    for_each_atom(*ctx, std::nullopt, [&](const std::vector<long long>& m) {
        long long len = 0;
        for (long long x : m) len += x;
        best = std::max(best, len);
    });
    return best;
}

long long davenport_group(const Group& g) { return davenport(full_support(g)); }

long long davenport_subgroup(const Subgroup& h, const Group& g) {
    if (h.invariant_factors.empty()) return 1;  // trivial subgroup: atom 0
    return davenport_group(Group(h.invariant_factors));
}

}  // namespace zsum
