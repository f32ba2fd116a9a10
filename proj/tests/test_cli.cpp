#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "finring/cli.hpp"
#include "json.hpp"

using namespace finring;
using nlohmann::json;

namespace {

cli::CliResult run(std::vector<std::string> args) { return cli::run_cli(args); }

json out_json(const cli::CliResult& res) {
    REQUIRE_FALSE(res.out.empty());
    return json::parse(res.out);
}

}  // namespace

TEST_CASE("analyze reports the structural summary as json") {
    auto res = run({"analyze", "Z/6"});
    CHECK(res.exit_code == cli::exit_ok);
    CHECK(res.err.empty());
    json o = out_json(res);
    CHECK(o["ring"] == "Z/6");
    CHECK(o["size"] == 6);
    CHECK(o["units_count"] == 2);
    CHECK(o["zero_divisors"]["count"] == 4);
    CHECK(o["zero_divisors"]["list"] == json({"0", "2", "3", "4"}));
    CHECK(o["ideals_count"] == 4);
    CHECK(o["is_local"] == false);
    CHECK(o["is_reduced"] == true);
    CHECK(o["is_A"]["verdict"] == true);
    CHECK(o["is_A"]["method"] == "fast");
    CHECK(o["is_strong_A"]["verdict"] == false);
    CHECK(o["convention_note"].get<std::string>().find("0") != std::string::npos);
    CHECK(o["caps"].contains("lattice_max"));
    CHECK(o["timing"]["total_ms"].get<double>() >= 0.0);
}

TEST_CASE("analyze pins the double field failure witness") {
    auto res = run({"analyze", "product(Z/2, Z/2)", "--method", "oracle"});
    CHECK(res.exit_code == cli::exit_ok);
    json o = out_json(res);
    CHECK(o["is_A"]["verdict"] == true);
    CHECK(o["is_A"]["method"] == "oracle");
    CHECK(o["is_strong_A"]["verdict"] == false);
    json w = o["is_strong_A"]["witness"];
    CHECK(w["failure_generators"] == json({"(0, 1)", "(1, 0)"}));
    CHECK(w["ideal_size"] == 4);
    // the positive side carries annihilated ideals instead
    json aw = o["is_A"]["witness"]["annihilated_ideals"];
    REQUIRE(aw.is_array());
    REQUIRE(aw.size() == 2);
    for (const auto& entry : aw) {
        CHECK(entry["ideal_size"] == 2);
        CHECK(entry["generators_are_preview"] == false);
        CHECK_FALSE(entry["annihilating_element"].get<std::string>().empty());
    }
}

TEST_CASE("analyze leaves the lattice count empty above the cap") {
    auto res = run({"analyze", "Z/4374"});
    CHECK(res.exit_code == cli::exit_ok);
    json o = out_json(res);
    CHECK(o["size"] == 4374);
    CHECK(o["ideals_count"].is_null());
    CHECK(o["zero_divisors"]["count"].get<std::size_t>() > 64);
    CHECK_FALSE(o["zero_divisors"].contains("list"));
    CHECK(o["is_A"]["verdict"] == true);
    CHECK(o["is_strong_A"]["verdict"] == false);
}

TEST_CASE("analyze renders text when asked") {
    auto res = run({"analyze", "Z/4", "--text"});
    CHECK(res.exit_code == cli::exit_ok);
    CHECK(res.out.find("Z/4") != std::string::npos);
    // key: value lines, not a JSON document
    CHECK(res.out.find("ring: ") != std::string::npos);
    CHECK(res.out.front() != '{');
    auto both = run({"analyze", "Z/4", "--text", "--json"});
    CHECK(both.exit_code == cli::exit_usage);
}

TEST_CASE("analyze batches expressions from a file") {
    const char* path = "cli_batch_input.txt";
    {
        std::ofstream f(path);
        f << "Z/4\n\nproduct(Z/2, Z/3)\n";
    }
    auto res = run({"analyze", "--file", path});
    std::remove(path);
    CHECK(res.exit_code == cli::exit_ok);
    json arr = out_json(res);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["ring"] == "Z/4");
    CHECK(arr[1]["ring"] == "product(Z/2, Z/3)");
}

TEST_CASE("exit codes separate the failure families") {
    CHECK(run({"analyze", "Z/x"}).exit_code == cli::exit_usage);
    CHECK(run({"analyze"}).exit_code == cli::exit_usage);
    CHECK(run({"analyze", "Z/1"}).exit_code == cli::exit_degenerate);
    CHECK(run({"analyze", "Z/2000000"}).exit_code == cli::exit_cap);
    CHECK(run({"bogus"}).exit_code == cli::exit_usage);
    CHECK(run({}).exit_code == cli::exit_usage);
    CHECK(run({"analyze", "Z/4", "--unknown-flag"}).exit_code == cli::exit_usage);
    auto missing = run({"analyze", "Z/1"});
    CHECK_FALSE(missing.err.empty());
}

TEST_CASE("help goes to stdout and succeeds") {
    auto res = run({"--help"});
    CHECK(res.exit_code == cli::exit_ok);
    CHECK(res.out.find("analyze") != std::string::npos);
    CHECK(res.out.find("verify") != std::string::npos);
}

TEST_CASE("check runs the axiom battery") {
    auto res = run({"check", "product(Z/4, Z/3)"});
    CHECK(res.exit_code == cli::exit_ok);
    json o = out_json(res);
    CHECK(o["ring"] == "product(Z/4, Z/3)");
    CHECK(o["mode"] == "full");
    CHECK(o["downgraded"] == false);
    CHECK(o["all_pass"] == true);
    REQUIRE(o["axioms"].is_array());
    CHECK(o["axioms"].size() == 9);
    for (const auto& ax : o["axioms"]) CHECK(ax["pass"] == true);
}

TEST_CASE("check downgrades over the axiom cap") {
    auto res = run({"check", "Z/600", "--seed", "5"});
    CHECK(res.exit_code == cli::exit_ok);
    json o = out_json(res);
    CHECK(o["mode"] == "sampled");
    CHECK(o["downgraded"] == true);
    CHECK(o["samples"].get<std::size_t>() > 0);
    CHECK(o["all_pass"] == true);
}

TEST_CASE("verify rejects unknown ids with the known list") {
    auto res = run({"verify", "thm7.7"});
    CHECK(res.exit_code == cli::exit_usage);
    CHECK(res.err.find("thm2.2") != std::string::npos);
    CHECK(res.err.find("coincidence") != std::string::npos);
}

TEST_CASE("verify replays one family over the corpus") {
    auto res = run({"verify", "coincidence", "--max-size", "32"});
    CHECK(res.exit_code == cli::exit_ok);
    json o = out_json(res);
    CHECK(o["check"] == "coincidence");
    CHECK(o["corpus"]["max_size"] == 32);
    REQUIRE(o["families"].size() == 1);
    const json& fam = o["families"][0];
    CHECK(fam["check_id"] == "coincidence");
    CHECK(fam["instances"].get<std::size_t>() > 0);
    CHECK(fam["failures"] == 0);
    for (const auto& r : fam["results"]) {
        CHECK(r["holds"] == true);
        CHECK_FALSE(r.contains("counterexample"));
    }
    CHECK(o["all_hold"] == true);
    REQUIRE(o["notes"].is_array());
    CHECK(o["notes"].size() >= 6);
}

TEST_CASE("verify all runs every family in a pinned order") {
    auto res = run({"verify", "all", "--max-size", "12"});
    CHECK(res.exit_code == cli::exit_ok);
    json o = out_json(res);
    REQUIRE(o["families"].size() == 6);
    const char* order[] = {"thm2.2", "lem2.6", "thm3.1", "ex2.1", "coincidence", "reduced"};
    for (std::size_t k = 0; k < 6; ++k) CHECK(o["families"][k]["check_id"] == order[k]);
    CHECK(o["all_hold"] == true);
}

TEST_CASE("verify output is deterministic once timing is stripped") {
    auto once = run({"verify", "ex2.1", "--max-size", "12", "--seed", "7"});
    auto twice = run({"verify", "ex2.1", "--max-size", "12", "--seed", "7"});
    REQUIRE(once.exit_code == cli::exit_ok);
    json a = json::parse(once.out);
    json b = json::parse(twice.out);
    a.erase("timing");
    b.erase("timing");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("verify can list the corpus instead of running") {
    auto res = run({"verify", "all", "--max-size", "8", "--list-corpus"});
    CHECK(res.exit_code == cli::exit_ok);
    json o = out_json(res);
    REQUIRE(o.contains("rings"));
    CHECK(o["rings"].size() > 0);
    CHECK(o["rings"][0].contains("ring"));
    CHECK(o["rings"][0].contains("size"));
    auto text = run({"verify", "all", "--max-size", "8", "--list-corpus", "--text"});
    CHECK(text.exit_code == cli::exit_ok);
    CHECK(text.out.find("Z/2") != std::string::npos);
}

TEST_CASE("search scans duplications and reports the empty outcome") {
    auto res = run({"search", "converse-3.1", "--max-size", "12"});
    CHECK(res.exit_code == cli::exit_ok);
    json o = out_json(res);
    CHECK(o["search"] == "converse-3.1");
    CHECK(o["outcome"] == "none found");
    CHECK(o["hits"].is_array());
    CHECK(o["hits"].empty());
    CHECK(o["instances_examined"].get<std::size_t>() > 0);
    CHECK(o["dup_size_cap"] == 12);
    CHECK(run({"search", "nonsense"}).exit_code == cli::exit_usage);
}
