#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "zsum/cache.hpp"
#include "zsum/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = zsum::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// fresh scratch directory for cache tests
fs::path scratch_dir() {
    static std::mt19937_64 rng(std::random_device{}());
    fs::path p = fs::temp_directory_path() /
                 ("zsum-test-" + std::to_string(rng()));
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("degree bound command") {
    CliRun r = run({"--format", "json", "beta-sep", "C3xC3"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["group"] == "C3xC3");
    CHECK(doc["beta_sep"] == 4);
    CHECK(!doc["witnesses"].empty());
    for (const auto& w : doc["witnesses"]) CHECK(w["length"] == 4);

    CliRun table = run({"beta-sep", "C2xC2"});
    REQUIRE(table.code == 0);
    CHECK(table.out.find("beta_sep(C2xC2) = 3") != std::string::npos);
}

TEST_CASE("census command") {
    CliRun r = run({"--format", "json", "min-sep-size", "C6"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["total"] == 14);

    r = run({"--format", "json", "min-sep-size", "C2xC2"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["total"] == 5);
    CHECK(doc["per_size"]["1"] == 4);
    CHECK(doc["per_size"]["2"] == 0);
    CHECK(doc["per_size"]["3"] == 1);
}

TEST_CASE("atoms and davenport commands") {
    CliRun r = run({"--format", "json", "atoms", "C4xC8", "--support", "[1,1],[3,1]"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["count"] == 5);
    CHECK(doc["atoms"][0]["mult"] == json::array({0, 8}));

    r = run({"--format", "json", "davenport", "C2xC4"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["davenport"] == 5);
    CHECK(doc["d_star"] == 5);

    r = run({"--format", "json", "sep-atoms", "C4xC8", "--support", "[1,1],[3,1]"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["beta_sep_over"] == 8);
    for (const auto& a : doc["atoms"]) CHECK(a["separating"] == true);
}

TEST_CASE("subset verdict command") {
    CliRun r = run({"--format", "json", "property-p", "C2xC2", "--subset",
                    "[1,0],[0,1],[1,1]"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["holds"] == true);

    r = run({"--format", "json", "property-p", "C2xC2", "--subset", "[1,0],[0,1]"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["holds"] == false);
    CHECK(doc["method"] == "filter-pair-intersection");

    // the filter flag switches the decision method, never the verdict
    CliRun direct = run({"--format", "json", "--no-fast-filters", "property-p", "C2xC2",
                         "--subset", "[1,0],[0,1]"});
    REQUIRE(direct.code == 0);
    json ddoc = json::parse(direct.out);
    CHECK(ddoc["holds"] == false);
    CHECK(ddoc["method"] == "direct-lattice");
}

TEST_CASE("formula commands") {
    CliRun r = run({"--format", "json", "verify-formulas", "C2..C8"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["all_match"] == true);
    CHECK(doc["rows"].size() == 7);

    r = run({"--format", "json", "beta-sep-formula", "C2xC4"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["lower_bound"] == 5);
    CHECK(doc["closed_form"]["value"] == 5);
}

TEST_CASE("construction commands") {
    CliRun r = run({"--format", "json", "build-omega", "C2xC2"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["size"] == 5);

    r = run({"--format", "json", "sreg", "C2xC2"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["max_length"] == 3);
}

TEST_CASE("structure and evidence commands") {
    CliRun r = run({"--format", "json", "inverse-rank2", "C2xC4"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["beta_sep"] == 5);

    r = run({"--format", "json", "conjecture-supp", "C2xC4"});
    REQUIRE(r.code == 0);
    doc = json::parse(r.out);
    CHECK(doc["holds"] == true);

    CHECK(run({"examples"}).code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"no-such-command"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"beta-sep"}).code == 1);           // missing group
    CHECK(run({"beta-sep", "C1"}).code == 1);     // bad group spec
    CHECK(run({"verify-formulas", "C9..C2"}).code == 1);
    CliRun budget = run({"--budget", "3", "beta-sep", "C3xC3"});
    CHECK(budget.code == 1);
    CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    auto args = std::vector<std::string>{"--format", "json", "beta-sep", "C2xC2xC2"};
    CliRun a = run(args), b = run(args);
    CHECK(a.out == b.out);

    // parallel census produces byte-identical output
    CliRun par = run({"--format", "json", "--jobs", "4", "beta-sep", "C2xC2xC2"});
    CHECK(par.out == a.out);

    // and so does disabling the filters
    CliRun plain = run({"--format", "json", "min-sep-size", "C2xC4"});
    CliRun nf = run({"--format", "json", "--no-fast-filters", "min-sep-size", "C2xC4"});
    CHECK(plain.out == nf.out);
}

TEST_CASE("cache round trip through the command line") {
    fs::path dir = scratch_dir();
    auto args = std::vector<std::string>{"--format", "json", "--cache-dir", dir.string(),
                                         "min-sep-size", "C2xC4"};
    CliRun cold = run(args);
    REQUIRE(cold.code == 0);
    REQUIRE(!fs::is_empty(dir));
    CliRun warm = run(args);
    CHECK(warm.code == 0);
    CHECK(warm.out == cold.out);

    // a mangled cache file is reported, discarded and rewritten
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ofstream f(entry.path());
        f << "not json at all";
    }
    CliRun repaired = run(args);
    CHECK(repaired.code == 0);
    CHECK(repaired.out == cold.out);
    CHECK(repaired.err.find("corrupt") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("cache api details") {
    fs::path dir = scratch_dir();
    zsum::ResultCache cache(dir);
    CHECK(cache.enabled());
    CHECK(!zsum::ResultCache().enabled());

    json value{{"answer", 42}};
    cache.put("some key", value);
    auto [hit, corrupt] = cache.get("some key");
    REQUIRE(hit);
    CHECK(!corrupt);
    CHECK(*hit == value);
    CHECK(!cache.get("other key").first);
    CHECK(!cache.get("other key").second);

    // entries written by an older library version are treated as stale
    fs::path file;
    for (const auto& entry : fs::directory_iterator(dir)) file = entry.path();
    {
        std::ifstream in(file);
        json doc = json::parse(in);
        doc["version"] = "0.0.1";
        std::ofstream out(file);
        out << doc.dump(2);
    }
    auto [stale_hit, stale_flag] = cache.get("some key");
    CHECK(!stale_hit);
    CHECK(stale_flag);

    // put() repairs the entry
    cache.put("some key", value);
    CHECK(cache.get("some key").first == value);
    fs::remove_all(dir);
}
