#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qabtors/corpus.hpp"

using namespace qabtors;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cmd(const std::string& args) {
    std::string cmd = std::string(QABTORS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string corpus_path() { return std::string(QABTORS_DATA_DIR) + "/corpus.jsonl"; }

}  // namespace

TEST_CASE("the shipped corpus loads cleanly") {
    CorpusFile f = load_corpus_file(corpus_path());
    CHECK(f.version == 1);
    CHECK(f.entries.size() == 46);
    CHECK(f.issues.empty());
    std::set<std::string> labels;
    int coefficient_rows = 0;
    for (const auto& e : f.entries) {
        CHECK(labels.insert(e.label).second);
        CHECK((e.j.has_value() != e.a_invariants.has_value()));
        if (e.a_invariants) coefficient_rows++;
        // entries must build into genuine curves
        RationalCurve c = e.curve();
        CHECK(c.disc() != 0);
        if (e.j) {
            CHECK(c.j_invariant() == *e.j);
            CHECK(*e.j != 0);
            CHECK(*e.j != 1728);
        }
    }
    CHECK(coefficient_rows == 2);
}

TEST_CASE("loading tolerates bad lines and reports them") {
    std::istringstream in(R"({"version": 1}
{"label": "11a3", "j": "-2^12/11", "torsion": {"m": 1, "k": 25}}
this is not json
{"label": "rowless"}

{"label": "both", "j": "5", "a_invariants": ["0","0","0","1","1"], "torsion": {"m": 1, "k": 1}}
{"label": "special-j", "j": "0", "torsion": {"m": 3, "k": 9}}
{"label": "44a1", "j": "2^13/11", "torsion": {"m": 1, "k": 3}}
)");
    CorpusFile f = load_corpus(in);
    CHECK(f.version == 1);
    REQUIRE(f.entries.size() == 2);
    CHECK(f.entries[0].label == "11a3");
    CHECK(f.entries[1].label == "44a1");
    REQUIRE(f.issues.size() == 4);
    CHECK(f.issues[0].line == 3);
    CHECK(f.issues[1].line == 4);
    CHECK(f.issues[2].line == 6);
    CHECK(f.issues[3].line == 7);  // j = 0 rows are not twist rigid
}

TEST_CASE("a missing or wrong header is an error") {
    std::istringstream in(R"({"label": "11a3", "j": "-2^12/11", "torsion": {"m": 1, "k": 25}})");
    CorpusFile f = load_corpus(in);
    CHECK(f.entries.empty());
    CHECK_FALSE(f.issues.empty());
    CHECK_THROWS(load_corpus_file("/nonexistent/corpus.jsonl"));
}

TEST_CASE("an empty corpus yields an empty passing summary") {
    std::istringstream in("{\"version\": 1}\n");
    CorpusFile f = load_corpus(in);
    CHECK(f.entries.empty());
    CHECK(f.issues.empty());
    CorpusReport rep = run_corpus(f);
    CHECK(rep.rows.empty());
    CHECK(rep.matched == 0);
    CHECK(rep.all_match());
}

TEST_CASE("replay of a small slice matches expectations and is parallel safe") {
    std::istringstream in(R"({"version": 1}
{"label": "44a1", "j": "2^13/11", "torsion": {"m": 1, "k": 3}}
{"label": "37a1", "j": "2^12*3^3/37", "torsion": {"m": 1, "k": 1}}
{"label": "121c1", "j": "-11^2", "torsion": {"m": 1, "k": 11}}
{"label": "11a1", "j": "-2^12*31^3/11^5", "torsion": {"m": 5, "k": 5}}
{"label": "27a1", "a_invariants": ["0","0","1","0","-7"], "torsion": {"m": 3, "k": 9}}
)");
    CorpusFile f = load_corpus(in);
    REQUIRE(f.entries.size() == 5);
    CorpusReport serial = run_corpus(f, 1);
    CorpusReport parallel = run_corpus(f, 4);
    CHECK(serial.all_match());
    CHECK(serial.matched == 5);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (size_t i = 0; i < serial.rows.size(); i++) {
        CHECK(serial.rows[i].label == parallel.rows[i].label);
        CHECK(serial.rows[i].computed == parallel.rows[i].computed);
        CHECK(serial.rows[i].isogeny_degrees == parallel.rows[i].isogeny_degrees);
    }
    // label sorted
    for (size_t i = 1; i < serial.rows.size(); i++) {
        CHECK(serial.rows[i - 1].label < serial.rows[i].label);
    }
    CHECK(serial.group_counts.at("Z/3 x Z/9") == 1);
    CHECK(serial.group_counts.at("Z/5 x Z/5") == 1);
}

TEST_CASE("a wrong expectation is flagged as exactly one mismatch") {
    std::istringstream in(R"({"version": 1}
{"label": "44a1", "j": "2^13/11", "torsion": {"m": 1, "k": 5}}
{"label": "37a1", "j": "2^12*3^3/37", "torsion": {"m": 1, "k": 1}}
)");
    CorpusFile f = load_corpus(in);
    CorpusReport rep = run_corpus(f);
    CHECK_FALSE(rep.all_match());
    CHECK(rep.mismatched == 1);
    CHECK(rep.matched == 1);
    CHECK(rep.failed == 0);
    REQUIRE(rep.rows.size() == 2);
    CHECK_FALSE(rep.rows[0].match);
    CHECK(rep.rows[0].computed == TorsionGroup{1, 3});
    CHECK(rep.rows[0].expected == TorsionGroup{1, 5});
}

TEST_CASE("cli torsion json output round trips byte for byte") {
    RunResult r = run_cmd("torsion --j -2^12/11 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("torsion").at("m").get<long>() == 1);
    CHECK(doc.at("torsion").at("k").get<long>() == 25);
    CHECK(doc.at("isogeny_degrees") == nlohmann::json({1, 5, 25}));
    CHECK(doc.at("model").size() == 5);
    CHECK(doc.at("j").get<std::string>() == "-4096/11");
    // re-serializing the parsed document reproduces the output exactly
    CHECK(doc.dump(2) + "\n" == r.out);
    CHECK_FALSE(doc.contains("trace"));

    RunResult traced = run_cmd("torsion --j 0 --trace --format json");
    REQUIRE(traced.code == 0);
    nlohmann::json tdoc = nlohmann::json::parse(traced.out);
    CHECK(tdoc.at("torsion").at("m").get<long>() == 3);
    CHECK(tdoc.at("trace").size() > 0);
    CHECK(tdoc.dump(2) + "\n" == traced.out);
}

TEST_CASE("cli usage and failure exit codes") {
    CHECK(run_cmd("torsion").code == 2);                        // no curve given
    CHECK(run_cmd("torsion --j 1 --a 0,0,0,-1,0").code == 2);   // both forms
    CHECK(run_cmd("torsion --a 0,0,0,0,0").code == 2);          // singular
    CHECK(run_cmd("nonsense").code == 2);                       // unknown subcommand
    CHECK(run_cmd("torsion --j abc").code == 2);                // unparsable j
}

TEST_CASE("cli isogeny class output") {
    RunResult r = run_cmd("isogeny-class --j -11^2 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("curves").size() == 2);
    CHECK(doc.at("cyclic_degrees") == nlohmann::json({1, 11}));
    bool all_sporadic = true;
    for (const auto& e : doc.at("edges")) {
        if (e.at("degree").get<int>() != 11 || !e.at("sporadic").get<bool>()) all_sporadic = false;
    }
    CHECK(all_sporadic);
    CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("cli verification suite passes") {
    RunResult r = run_cmd("verify-paper --height-bound 500 --format json");
    REQUIRE(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("all_pass").get<bool>());
    CHECK(doc.at("reports").size() == 8);
    CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("cli corpus run flags mismatches with exit one") {
    std::string path = "/tmp/qabtors_cli_corpus_test.jsonl";
    {
        std::ofstream out(path);
        out << "{\"version\": 1}\n";
        out << R"({"label": "44a1", "j": "2^13/11", "torsion": {"m": 1, "k": 5}})" << "\n";
    }
    RunResult r = run_cmd("corpus " + path + " --format json");
    CHECK(r.code == 1);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("mismatched").get<long>() == 1);
    std::remove(path.c_str());
}
