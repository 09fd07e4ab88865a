#include "zsum/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zsum/cache.hpp"
#include "zsum/separating.hpp"

namespace zsum {

namespace {

using nlohmann::json;

struct CliContext {
    std::string format = "table";
    ResultCache cache;
    CensusOptions census;
};

std::vector<Element> parse_elements(const std::string& text, const Group& g) {
    std::vector<Element> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                                   text[i] == ','))
            ++i;
        if (i >= text.size()) break;
        if (text[i] != '[') throw ParseError("expected '[' in element list: " + text);
        std::size_t close = text.find(']', i);
        if (close == std::string::npos) throw ParseError("unterminated element: " + text);
        std::string body = text.substr(i + 1, close - i - 1);
        Element e;
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, ',')) e.push_back(std::stoll(part));
        if (static_cast<int>(e.size()) != g.rank())
            throw ParseError("element has " + std::to_string(e.size()) +
                             " coordinates, group has rank " + std::to_string(g.rank()));
        out.push_back(g.reduce(std::move(e)));
        i = close + 1;
    }
    if (out.empty()) throw ParseError("empty element list");
    return out;
}

json element_json(const Group& g, int id) { return json(g.element_of(id)); }

json elements_json(const Group& g, const std::vector<int>& ids) {
    json arr = json::array();
    for (int id : ids) arr.push_back(element_json(g, id));
    return arr;
}

json sequence_json(const ZsSequence& s) {
    return json{{"support", elements_json(s.ctx->group, s.ctx->support_ids)},
                {"mult", s.mult}};
}

json profile_json(const Group& g, const Profile& p) {
    json support = json::array();
    json mult = json::array();
    for (const auto& [id, m] : p) {
        support.push_back(element_json(g, id));
        mult.push_back(m);
    }
    return json{{"support", support}, {"mult", mult}};
}

json int_json(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() &&
        x <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(x));
    return json(x.str());
}

void emit_kv_csv(const json& doc, std::ostream& out, const std::string& prefix = "") {
    for (const auto& [key, value] : doc.items()) {
        std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object())
            emit_kv_csv(value, out, name);
        else
            out << name << "," << value.dump() << "\n";
    }
}

std::string mult_string(const std::vector<long long>& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

std::string subset_string(const Group& g, const std::vector<int>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ", ";
        s += g.render(ids[i]);
    }
    return s + "}";
}

// ---- commands ----------------------------------------------------------

int cmd_atoms(CliContext& ctx, const Group& g, const std::string& support_text,
              std::ostream& out) {
    SupportPtr sp = support_text.empty() ? full_support(g)
                                         : make_support(g, parse_elements(support_text, g));
    auto atoms = enumerate_atoms(sp);
    json doc{{"group", g.spec_string()},
             {"support", elements_json(g, sp->support_ids)},
             {"count", atoms.size()}};
    json list = json::array();
    for (const auto& a : atoms)
        list.push_back(json{{"mult", a.mult}, {"length", a.length()}, {"monomial", a.monomial()}});
    doc["atoms"] = list;
    if (ctx.format == "json") {
        out << doc.dump(2) << "\n";
    } else if (ctx.format == "csv") {
        out << "length,mult,monomial\n";
        for (const auto& a : atoms)
            out << a.length() << "," << mult_string(a.mult) << "," << a.monomial() << "\n";
    } else {
        out << "atoms over " << subset_string(g, sp->support_ids) << " in " << g.spec_string()
            << " (" << atoms.size() << ")\n";
        for (const auto& a : atoms)
            out << "  |A| = " << a.length() << "   " << mult_string(a.mult) << "   "
                << a.monomial() << "\n";
    }
    return 0;
}

int cmd_davenport(CliContext& ctx, const Group& g, const std::string& support_text,
                  std::ostream& out) {
    json doc{{"group", g.spec_string()}};
    long long value;
    if (support_text.empty()) {
        value = davenport_group(g);
        doc["d_star"] = d_star(g.invariant_factors());
    } else {
        SupportPtr sp = make_support(g, parse_elements(support_text, g));
        doc["support"] = elements_json(g, sp->support_ids);
        value = davenport(sp);
    }
    doc["davenport"] = value;
    if (ctx.format == "json")
        out << doc.dump(2) << "\n";
    else if (ctx.format == "csv")
        emit_kv_csv(doc, out);
    else
        out << "D = " << value << "\n";
    return 0;
}

int cmd_sep_atoms(CliContext& ctx, const Group& g, const std::string& support_text,
                  std::ostream& out) {
    SupportPtr sp = support_text.empty() ? full_support(g)
                                         : make_support(g, parse_elements(support_text, g));
    SepAtomTable table = separating_atoms(sp);
    json doc{{"group", g.spec_string()},
             {"support", elements_json(g, sp->support_ids)},
             {"beta_sep_over", table.max_separating_length()}};
    json list = json::array();
    for (std::size_t i = 0; i < table.atoms.size(); ++i)
        list.push_back(json{{"mult", table.atoms[i].mult},
                            {"length", table.atoms[i].length()},
                            {"monomial", table.atoms[i].monomial()},
                            {"separating", static_cast<bool>(table.separating[i])}});
    doc["atoms"] = list;
    if (ctx.format == "json") {
        out << doc.dump(2) << "\n";
    } else if (ctx.format == "csv") {
        out << "length,mult,monomial,separating\n";
        for (std::size_t i = 0; i < table.atoms.size(); ++i)
            out << table.atoms[i].length() << "," << mult_string(table.atoms[i].mult) << ","
                << table.atoms[i].monomial() << ","
                << (table.separating[i] ? "true" : "false") << "\n";
    } else {
        out << "separating atoms over " << subset_string(g, sp->support_ids) << "\n";
        for (std::size_t i = 0; i < table.atoms.size(); ++i)
            out << "  |A| = " << table.atoms[i].length() << "   "
                << mult_string(table.atoms[i].mult)
                << (table.separating[i] ? "   separating" : "") << "\n";
        out << "max separating length = " << table.max_separating_length() << "\n";
    }
    return 0;
}

json beta_sep_doc(const Group& g, const CensusOptions& opt) {
    BetaSepResult r = beta_sep(g, opt);
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
        long long len = 0;
        for (const auto& [id, m] : w.atom) len += m;
        witnesses.push_back(json{{"atom", profile_json(g, w.atom)},
                                 {"length", len},
                                 {"subset", elements_json(g, w.support_ids)}});
    }
    return json{{"group", g.spec_string()}, {"beta_sep", r.value}, {"witnesses", witnesses}};
}

// runs `compute` through the cache; cache key carries command + group + version
json cached_doc(CliContext& ctx, const std::string& command, const Group& g,
                const std::function<json()>& compute, std::ostream& err) {
    std::string key = command + " " + g.spec_string();
    auto [hit, corrupt] = ctx.cache.get(key);
    if (hit) return *hit;
    if (corrupt) err << "warning: discarding corrupt cache entry for '" << key << "'\n";
    json doc = compute();
    ctx.cache.put(key, doc);
    return doc;
}

int cmd_beta_sep(CliContext& ctx, const Group& g, std::ostream& out, std::ostream& err) {
    json doc = cached_doc(ctx, "beta-sep", g, [&] { return beta_sep_doc(g, ctx.census); }, err);
    if (ctx.format == "json") {
        out << doc.dump(2) << "\n";
    } else if (ctx.format == "csv") {
        out << "group,beta_sep,witnesses\n"
            << doc["group"].get<std::string>() << "," << doc["beta_sep"] << ","
            << doc["witnesses"].size() << "\n";
    } else {
        out << "beta_sep(" << doc["group"].get<std::string>() << ") = " << doc["beta_sep"]
            << "\n";
        for (const auto& w : doc["witnesses"])
            out << "  witness |A| = " << w["length"] << "  atom " << w["atom"].dump()
                << "  over subset " << w["subset"].dump() << "\n";
    }
    return 0;
}

int cmd_beta_sep_formula(CliContext& ctx, const Group& g, std::ostream& out) {
    json doc{{"group", g.spec_string()}, {"lower_bound", beta_sep_lower_bound(g)}};
    auto cf = beta_sep_closed_form(g);
    doc["closed_form"] =
        cf ? json{{"value", cf->value}, {"case", cf->case_tag}} : json(nullptr);
    if (ctx.format == "json")
        out << doc.dump(2) << "\n";
    else if (ctx.format == "csv")
        emit_kv_csv(doc, out);
    else {
        out << "lower bound = " << doc["lower_bound"] << "\n";
        if (cf)
            out << "closed form = " << cf->value << " (" << cf->case_tag << ")\n";
        else
            out << "no closed form applies\n";
    }
    return 0;
}

int cmd_property_p(CliContext& ctx, const Group& g, const std::string& subset_text,
                   std::ostream& out) {
    std::vector<int> ids;
    for (const Element& e : parse_elements(subset_text, g)) ids.push_back(g.id_of(e));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    PropertyPVerdict v = decide_property_p(ids, g, ctx.census.fast_filters);
    json doc{{"group", g.spec_string()},
             {"subset", elements_json(g, v.subset)},
             {"holds", v.holds},
             {"method", v.method}};
    if (v.witness) {
        json w = json::array();
        for (const auto& x : *v.witness) w.push_back(int_json(x));
        doc["witness"] = w;
    } else {
        doc["witness"] = nullptr;
    }
    if (ctx.format == "json")
        out << doc.dump(2) << "\n";
    else if (ctx.format == "csv")
        emit_kv_csv(doc, out);
    else
        out << subset_string(g, v.subset) << (v.holds ? " has" : " does not have")
            << " the lattice property (" << v.method << ")\n";
    return 0;
}

json min_sep_doc(const Group& g, const CensusOptions& opt) {
    PCensus census = min_sep_set_size(g, opt);
    json per_size;
    for (const auto& [size, count] : census.per_size)
        per_size[std::to_string(size)] = int_json(count);
    return json{{"group", g.spec_string()},
                {"total", int_json(census.total)},
                {"per_size", per_size}};
}

int cmd_min_sep_size(CliContext& ctx, const Group& g, std::ostream& out, std::ostream& err) {
    json doc = cached_doc(ctx, "min-sep-size", g, [&] { return min_sep_doc(g, ctx.census); },
                          err);
    if (ctx.format == "json")
        out << doc.dump(2) << "\n";
    else if (ctx.format == "csv")
        emit_kv_csv(doc, out);
    else {
        out << "minimal separating set size for " << doc["group"].get<std::string>() << " = "
            << doc["total"] << "\n";
        for (const auto& [size, count] : doc["per_size"].items())
            out << "  subsets of size " << size << ": " << count << "\n";
    }
    return 0;
}

json omega_doc(const Group& g, const CensusOptions& opt) {
    auto omega = build_min_sep_set(g, opt);
    json list = json::array();
    for (const auto& s : omega) list.push_back(sequence_json(s));
    return json{{"group", g.spec_string()}, {"size", omega.size()}, {"sequences", list}};
}

int cmd_build_omega(CliContext& ctx, const Group& g, std::ostream& out, std::ostream& err) {
    json doc = cached_doc(ctx, "build-omega", g, [&] { return omega_doc(g, ctx.census); }, err);
    if (ctx.format == "json")
        out << doc.dump(2) << "\n";
    else if (ctx.format == "csv") {
        out << "support,mult\n";
        for (const auto& s : doc["sequences"])
            out << s["support"].dump() << "," << s["mult"].dump() << "\n";
    } else {
        out << "minimal separating set for " << doc["group"].get<std::string>() << " ("
            << doc["size"] << " sequences)\n";
        for (const auto& s : doc["sequences"])
            out << "  " << s["support"].dump() << " ^ " << s["mult"].dump() << "\n";
    }
    return 0;
}

json sreg_doc(const Group& g, const CensusOptions& opt) {
    auto sreg = build_sreg(g, opt);
    long long max_len = 0;
    json list = json::array();
    for (const auto& s : sreg) {
        max_len = std::max(max_len, s.length());
        list.push_back(sequence_json(s));
    }
    return json{{"group", g.spec_string()},
                {"size", sreg.size()},
                {"max_length", max_len},
                {"sequences", list}};
}

int cmd_sreg(CliContext& ctx, const Group& g, std::ostream& out, std::ostream& err) {
    json doc = cached_doc(ctx, "sreg", g, [&] { return sreg_doc(g, ctx.census); }, err);
    if (ctx.format == "json")
        out << doc.dump(2) << "\n";
    else if (ctx.format == "csv") {
        out << "support,mult\n";
        for (const auto& s : doc["sequences"])
            out << s["support"].dump() << "," << s["mult"].dump() << "\n";
    } else {
        out << "separating-atom union for " << doc["group"].get<std::string>() << ": "
            << doc["size"] << " sequences, max length " << doc["max_length"] << "\n";
    }
    return 0;
}

int cmd_verify_formulas(CliContext& ctx, const std::string& range, std::ostream& out,
                        std::ostream& err) {
    // cyclic sweep "C2..C12" (also plain "2..12")
    std::string text = range;
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw ParseError("expected a range like C2..C12, got: " + range);
    auto num = [](std::string s) {
        if (!s.empty() && (s[0] == 'C' || s[0] == 'c')) s.erase(0, 1);
        return std::stoll(s);
    };
    long long lo = num(text.substr(0, dots)), hi = num(text.substr(dots + 2));
    if (lo < 2 || hi < lo) throw ParseError("bad range: " + range);
    bool all_match = true;
    json rows = json::array();
    for (long long n = lo; n <= hi; ++n) {
        Group g({n});
        json doc = cached_doc(ctx, "min-sep-size", g,
                              [&] { return min_sep_doc(g, ctx.census); }, err);
        Int formula = formula_cyclic_min(n);
        bool match = int_json(formula) == doc["total"];
        all_match = all_match && match;
        rows.push_back(json{{"n", n},
                            {"formula", int_json(formula)},
                            {"census", doc["total"]},
                            {"match", match}});
    }
    json doc{{"rows", rows}, {"all_match", all_match}};
    if (ctx.format == "json")
        out << doc.dump(2) << "\n";
    else if (ctx.format == "csv") {
        out << "n,formula,census,match\n";
        for (const auto& r : rows)
            out << r["n"] << "," << r["formula"] << "," << r["census"] << ","
                << (r["match"].get<bool>() ? "true" : "false") << "\n";
    } else {
        out << "  n  formula  census  match\n";
        for (const auto& r : rows)
            out << "  " << r["n"] << "  " << r["formula"] << "  " << r["census"] << "  "
                << (r["match"].get<bool>() ? "yes" : "NO") << "\n";
    }
    return all_match ? 0 : 2;
}

int cmd_inverse_rank2(CliContext& ctx, const Group& g, std::ostream& out, std::ostream& err) {
    json doc = cached_doc(
        ctx, "inverse-rank2", g,
        [&] {
            InverseRank2Report r = check_inverse_rank2(g, ctx.census);
            return json{{"group", g.spec_string()},
                        {"beta_sep", r.beta},
                        {"witnesses_checked", r.witnesses_checked},
                        {"ok", r.ok},
                        {"violations", r.violations}};
        },
        err);
    if (ctx.format == "json")
        out << doc.dump(2) << "\n";
    else if (ctx.format == "csv")
        emit_kv_csv(doc, out);
    else {
        out << "checked " << doc["witnesses_checked"] << " maximal witnesses (beta_sep = "
            << doc["beta_sep"] << "): "
            << (doc["ok"].get<bool>() ? "structure confirmed" : "VIOLATIONS") << "\n";
        for (const auto& v : doc["violations"]) out << "  " << v.get<std::string>() << "\n";
    }
    return doc["ok"].get<bool>() ? 0 : 2;
}

int cmd_conjecture_supp(CliContext& ctx, const Group& g, std::ostream& out,
                        std::ostream& err) {
    json doc = cached_doc(
        ctx, "conjecture-supp", g,
        [&] {
            SupportConjectureReport r = check_support_conjecture(g, ctx.census);
            json counterexamples = json::array();
            for (const auto& w : r.counterexamples)
                counterexamples.push_back(json{{"atom", profile_json(g, w.atom)},
                                               {"subset", elements_json(g, w.support_ids)}});
            return json{{"group", g.spec_string()},
                        {"beta_sep", r.beta},
                        {"witnesses_checked", r.witnesses_checked},
                        {"holds", r.holds},
                        {"counterexamples", counterexamples}};
        },
        err);
    if (ctx.format == "json")
        out << doc.dump(2) << "\n";
    else if (ctx.format == "csv")
        emit_kv_csv(doc, out);
    else {
        out << "support-size prediction over " << doc["witnesses_checked"]
            << " maximal witnesses: " << (doc["holds"].get<bool>() ? "holds" : "FAILS")
            << "\n";
        for (const auto& c : doc["counterexamples"])
            out << "  counterexample: " << c.dump() << "\n";
    }
    // a counterexample is a reportable finding, not a failure
    return 0;
}

// the two worked fixtures shipped as an executable smoke test
int cmd_examples(CliContext& ctx, std::ostream& out) {
    bool ok = true;
    auto check = [&](bool cond, const std::string& what) {
        out << (cond ? "  ok   " : "  FAIL ") << what << "\n";
        ok = ok && cond;
    };

    out << "fixture: two-element support in C4xC8\n";
    {
        Group g({4, 8});
        auto sp = make_support(g, std::vector<Element>{{1, 1}, {3, 1}});
        auto atoms = enumerate_atoms(sp);
        std::vector<std::vector<long long>> mults;
        for (const auto& a : atoms) mults.push_back(a.mult);
        std::vector<std::vector<long long>> expected{{0, 8}, {2, 6}, {4, 4}, {6, 2}, {8, 0}};
        check(mults == expected, "atoms are exactly the five expected vectors");
        SepAtomTable table = separating_atoms(sp);
        check(std::all_of(table.separating.begin(), table.separating.end(),
                          [](char c) { return c != 0; }),
              "all five atoms are separating");
        IntMat four{{8, 0}, {0, 8}, {6, 2}, {4, 4}};
        IntLattice lat = lattice_from_generators(four, 2);
        check(member(lat, IntVec{2, 6}), "the first four vectors generate (2,6)");
        check(lattice_equal(lat, kernel_lattice(*sp)),
              "the first four vectors already generate the zero-sum lattice");
    }

    out << "fixture: three-element support in C3xC3\n";
    {
        Group g({3, 3});
        // support in the order (e1, e1+e2, e2); generators as vectors in Z^3
        std::vector<Element> support{{1, 0}, {1, 1}, {0, 1}};
        auto sp = make_support(g, support);
        IntMat gens{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 2, 1}};
        // canonical support order is (e2, e1, e1+e2); permute coordinates
        std::vector<int> pos;  // position of each listed element in sp
        for (const Element& e : support) {
            int id = g.id_of(e);
            pos.push_back(static_cast<int>(
                std::lower_bound(sp->support_ids.begin(), sp->support_ids.end(), id) -
                sp->support_ids.begin()));
        }
        IntMat canon;
        for (const auto& v : gens) {
            IntVec w(3, 0);
            for (int j = 0; j < 3; ++j) w[pos[j]] = v[j];
            canon.push_back(w);
        }
        check(lattice_equal(lattice_from_generators(canon, 3), kernel_lattice(*sp)),
              "the four generators span the zero-sum lattice of the support");

        auto decomposes = [&](const std::array<long long, 3>& t) {
            // d copies of (1,2,1), remainder must be a nonnegative multiple of 3
            for (long long d = 0; d * 2 <= t[1]; ++d) {
                long long a = t[0] - d, b = t[1] - 2 * d, c = t[2] - d;
                if (a >= 0 && b >= 0 && c >= 0 && a % 3 == 0 && b % 3 == 0 && c % 3 == 0)
                    return true;
            }
            return false;
        };
        check(decomposes({2, 4, 2}), "(2,4,2) has a nonnegative decomposition");
        check(!decomposes({2, 1, 2}), "(2,1,2) has no nonnegative decomposition");
        // both targets really are zero-sum over the support
        auto zero_sum = [&](std::array<long long, 3> t) {
            int sum = 0;
            for (int j = 0; j < 3; ++j)
                sum = g.add(sum, g.scale(t[j], g.id_of(support[j])));
            return sum == 0;
        };
        check(zero_sum({2, 4, 2}) && zero_sum({2, 1, 2}), "both targets are zero-sum");
    }

    out << (ok ? "all fixture checks passed\n" : "fixture checks FAILED\n");
    (void)ctx;
    return ok ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact zero-sum invariants of finite abelian groups"};
    app.require_subcommand(1);

    std::string format = "table";
    const char* env_cache = std::getenv("ZSUM_CACHE_DIR");
    std::string cache_dir = env_cache ? env_cache : "";
    long long budget = 5'000'000;
    int jobs = 1;
    bool no_fast_filters = false;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--cache-dir", cache_dir, "cache directory (env ZSUM_CACHE_DIR)");
    app.add_option("--budget", budget, "max number of census subsets");
    app.add_option("--jobs", jobs, "worker threads for the census");
    app.add_flag("--no-fast-filters", no_fast_filters,
                 "always use the direct lattice test for the subset property");

    struct Sub {
        CLI::App* cmd = nullptr;
        std::string group, support, subset, range;
    };
    std::map<std::string, Sub> subs;
    auto add = [&](const std::string& name, const std::string& desc, bool needs_group,
                   const char* extra = nullptr) {
        Sub s;
        s.cmd = app.add_subcommand(name, desc);
        s.cmd->fallthrough();
        subs[name] = std::move(s);
        Sub& ref = subs[name];
        if (needs_group)
            ref.cmd->add_option("group", ref.group, "group spec, e.g. C2xC4")->required();
        if (extra && std::string(extra) == "support")
            ref.cmd->add_option("--support", ref.support, "element list, e.g. [1,1],[3,1]");
        if (extra && std::string(extra) == "subset")
            ref.cmd->add_option("--subset", ref.subset, "element list")->required();
        if (extra && std::string(extra) == "range")
            ref.cmd->add_option("range", ref.range, "cyclic range, e.g. C2..C12")->required();
    };
    add("atoms", "enumerate atoms over a support", true, "support");
    add("davenport", "maximal atom length", true, "support");
    add("sep-atoms", "classify atoms as separating or not", true, "support");
    add("beta-sep", "exact separating degree bound by census", true);
    add("beta-sep-formula", "lower bound and closed form", true);
    add("property-p", "subset lattice-property verdict", true, "subset");
    add("min-sep-size", "count subsets with the lattice property", true);
    add("build-omega", "construct a minimal separating set", true);
    add("sreg", "union of all separating atoms", true);
    add("verify-formulas", "compare the cyclic count formula against the census", false,
        "range");
    add("inverse-rank2", "structure of maximal witnesses for rank-2 groups", true);
    add("conjecture-supp", "support sizes of maximal witnesses", true);
    add("examples", "run the built-in worked fixtures", false);

    std::vector<const char*> argv{"zsum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    CliContext ctx;
    ctx.format = format;
    ctx.census.budget = budget;
    ctx.census.jobs = jobs;
    ctx.census.fast_filters = !no_fast_filters;
    if (!cache_dir.empty()) ctx.cache = ResultCache(cache_dir);

    try {
        auto group_of = [&](const Sub& s) { return Group::parse(s.group); };
        if (subs["atoms"].cmd->parsed())
            return cmd_atoms(ctx, group_of(subs["atoms"]), subs["atoms"].support, out);
        if (subs["davenport"].cmd->parsed())
            return cmd_davenport(ctx, group_of(subs["davenport"]), subs["davenport"].support,
                                 out);
        if (subs["sep-atoms"].cmd->parsed())
            return cmd_sep_atoms(ctx, group_of(subs["sep-atoms"]), subs["sep-atoms"].support,
                                 out);
        if (subs["beta-sep"].cmd->parsed())
            return cmd_beta_sep(ctx, group_of(subs["beta-sep"]), out, err);
        if (subs["beta-sep-formula"].cmd->parsed())
            return cmd_beta_sep_formula(ctx, group_of(subs["beta-sep-formula"]), out);
        if (subs["property-p"].cmd->parsed())
            return cmd_property_p(ctx, group_of(subs["property-p"]),
                                  subs["property-p"].subset, out);
        if (subs["min-sep-size"].cmd->parsed())
            return cmd_min_sep_size(ctx, group_of(subs["min-sep-size"]), out, err);
        if (subs["build-omega"].cmd->parsed())
            return cmd_build_omega(ctx, group_of(subs["build-omega"]), out, err);
        if (subs["sreg"].cmd->parsed())
            return cmd_sreg(ctx, group_of(subs["sreg"]), out, err);
        if (subs["verify-formulas"].cmd->parsed())
            return cmd_verify_formulas(ctx, subs["verify-formulas"].range, out, err);
        if (subs["inverse-rank2"].cmd->parsed())
            return cmd_inverse_rank2(ctx, group_of(subs["inverse-rank2"]), out, err);
        if (subs["conjecture-supp"].cmd->parsed())
            return cmd_conjecture_supp(ctx, group_of(subs["conjecture-supp"]), out, err);
        if (subs["examples"].cmd->parsed()) return cmd_examples(ctx, out);
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 1;
}

}  // namespace zsum
