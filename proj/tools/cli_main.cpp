#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qabtors/corpus.hpp"
#include "qabtors/curve.hpp"
#include "qabtors/galois.hpp"
#include "qabtors/isogeny.hpp"
#include "qabtors/torsion_qab.hpp"
#include "qabtors/verifier.hpp"

using nlohmann::json;
using namespace qabtors;

namespace {

// exit contract: 0 success, 1 verification failure, 2 bad curve or
// undecided within the degree cap, 3 internal invariant breach
constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitBreach = 3;

struct CurveInput {
    std::string j_text;
    std::string a_text;

    RationalCurve build() const {
        if (j_text.empty() == a_text.empty())
            throw CLI::ValidationError("supply exactly one of --j or --a-invariants");
        if (!j_text.empty()) return curve_from_j(parse_rational(j_text));
        std::vector<Rational> a;
        std::stringstream ss(a_text);
        std::string part;
        while (std::getline(ss, part, ',')) a.push_back(parse_rational(part));
        if (a.size() != 5)
            throw CLI::ValidationError("--a-invariants needs five values a1,a2,a3,a4,a6");
        return make_curve(a[0], a[1], a[2], a[3], a[4]);
    }
};

void add_curve_options(CLI::App* sub, CurveInput& in) {
    sub->add_option("--j", in.j_text, "j-invariant; plain p/q or factored like -2^12*31^3/11^5");
    sub->add_option("--a-invariants", in.a_text, "a1,a2,a3,a4,a6 of a long Weierstrass model");
}

json curve_json(const RationalCurve& e) {
    return json{to_string(e.a1), to_string(e.a2), to_string(e.a3), to_string(e.a4),
                to_string(e.a6)};
}

json group_json(const TorsionGroup& t) { return json{{"m", t.a}, {"k", t.b}}; }

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_torsion(const CurveInput& in, bool trace, long cap, const std::string& format) {
    RationalCurve e = in.build();
    QabTorsionResult r = torsion_over_Qab(e, cap);
    if (format == "json") {
        json doc{{"model", curve_json(e)},
                 {"j", to_string(e.j_invariant())},
                 {"torsion", group_json(r.group)},
                 {"isogeny_degrees", r.isogeny_degrees}};
        if (trace) {
            json steps = json::array();
            for (const TraceStep& s : r.trace)
                steps.push_back(json{{"condition", s.condition}, {"evidence", s.evidence}});
            doc["trace"] = steps;
        }
        emit(doc);
    } else {
        std::cout << "curve: " << e.str() << "\n";
        std::cout << "j: " << to_string(e.j_invariant()) << "\n";
        std::cout << "torsion over the maximal abelian extension: " << to_string(r.group)
                  << "\n";
        std::cout << "cyclic isogeny degrees:";
        for (long d : r.isogeny_degrees) std::cout << " " << d;
        std::cout << "\n";
        if (trace) {
            std::cout << "trace:\n";
            size_t i = 0;
            for (const TraceStep& s : r.trace)
                std::cout << "  " << ++i << ". " << s.condition << " -- " << s.evidence << "\n";
        }
    }
    return kExitOk;
}

int run_isogeny_class(const CurveInput& in, const std::string& format) {
    RationalCurve e = in.build();
    IsogenyClassGraph g = isogeny_class(e);
    std::vector<unsigned> degrees = cyclic_isogeny_degrees(g);
    if (format == "json") {
        json curves = json::array();
        for (const RationalCurve& c : g.curves)
            curves.push_back(json{{"model", curve_json(c)}, {"j", to_string(c.j_invariant())}});
        json edges = json::array();
        for (const IsogenyEdge& ed : g.edges)
            edges.push_back(json{{"from", ed.from},
                                 {"to", ed.to},
                                 {"degree", ed.degree},
                                 {"sporadic", ed.sporadic}});
        emit(json{{"curves", curves}, {"edges", edges}, {"cyclic_degrees", degrees}});
    } else {
        std::cout << "class size: " << g.curves.size() << "\n";
        for (size_t i = 0; i < g.curves.size(); ++i)
            std::cout << "  [" << i << "] j = " << to_string(g.curves[i].j_invariant()) << "  "
                      << g.curves[i].str() << "\n";
        for (const IsogenyEdge& ed : g.edges)
            std::cout << "  " << ed.from << " -> " << ed.to << "  degree " << ed.degree
                      << (ed.sporadic ? " (finite j list)" : "") << "\n";
        std::cout << "cyclic isogeny degrees:";
        for (unsigned d : degrees) std::cout << " " << d;
        std::cout << "\n";
    }
    return kExitOk;
}

int run_verify(long height_bound, const std::string& format) {
    long den_bound = std::max<long>(10, height_bound / 100);
    std::vector<EliminationReport> reports = elimination_reports(height_bound, den_bound);
    bool all = true;
    for (const EliminationReport& r : reports) all = all && r.pass;
    if (format == "json") {
        json arr = json::array();
        for (const EliminationReport& r : reports) {
            json certs = json::array();
            for (const auto& [name, detail] : r.certificates)
                certs.push_back(json{{"name", name}, {"detail", detail}});
            arr.push_back(json{
                {"id", r.id}, {"claim", r.claim}, {"pass", r.pass}, {"certificates", certs}});
        }
        emit(json{{"reports", arr}, {"all_pass", all}});
    } else {
        for (const EliminationReport& r : reports) {
            std::cout << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.claim << "\n";
            for (const auto& [name, detail] : r.certificates)
                std::cout << "    " << name << ": " << detail << "\n";
        }
        std::cout << (all ? "all eliminations verified" : "SOME ELIMINATIONS FAILED") << "\n";
    }
    return all ? kExitOk : kExitFail;
}

int run_corpus_cmd(const std::string& path, int jobs, long cap, const std::string& format) {
    CorpusFile file = load_corpus_file(path);
    for (const CorpusIssue& is : file.issues)
        std::cerr << path << ":" << is.line << ": " << is.message << "\n";
    CorpusReport r = run_corpus(file, jobs, cap);
    if (format == "json") {
        json rows = json::array();
        for (const CorpusRowResult& row : r.rows) {
            json o{{"label", row.label}, {"expected", group_json(row.expected)}};
            if (row.failed) {
                o["error"] = row.message;
            } else {
                o["computed"] = group_json(row.computed);
                o["match"] = row.match;
                o["isogeny_degrees"] = row.isogeny_degrees;
            }
            rows.push_back(o);
        }
        json issues = json::array();
        for (const CorpusIssue& is : r.issues)
            issues.push_back(json{{"line", is.line}, {"message", is.message}});
        emit(json{{"rows", rows},
                  {"issues", issues},
                  {"group_counts", r.group_counts},
                  {"matched", r.matched},
                  {"mismatched", r.mismatched},
                  {"failed", r.failed}});
    } else {
        for (const CorpusRowResult& row : r.rows) {
            if (row.failed) {
                std::cout << row.label << "  ERROR  " << row.message << "\n";
            } else {
                std::cout << row.label << "  expected " << to_string(row.expected)
                          << "  computed " << to_string(row.computed) << "  "
                          << (row.match ? "ok" : "MISMATCH") << "\n";
            }
        }
        std::cout << "groups:\n";
        for (const auto& [g, n] : r.group_counts) std::cout << "  " << g << ": " << n << "\n";
        std::cout << "matched " << r.matched << ", mismatched " << r.mismatched << ", failed "
                  << r.failed << "\n";
    }
    return r.all_match() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsion of rational elliptic curves over the maximal abelian extension of Q"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };
    add_format(&app);

    CurveInput tors_in;
    bool trace = false;
    long degree_cap = 0;
    CLI::App* tors = app.add_subcommand("torsion", "torsion group over the maximal abelian extension");
    add_curve_options(tors, tors_in);
    tors->add_flag("--trace", trace, "include the decision trace");
    tors->add_option("--degree-cap", degree_cap,
                     "largest number-field degree the abelianity tester may open (0 = defaults)");
    add_format(tors);

    CurveInput iso_in;
    CLI::App* iso = app.add_subcommand("isogeny-class", "rational isogeny class and cyclic degrees");
    add_curve_options(iso, iso_in);
    add_format(iso);

    long height_bound = 10000;
    CLI::App* ver = app.add_subcommand("verify-paper",
                                       "replay the desk checks behind the published eliminations");
    ver->add_option("--height-bound", height_bound,
                    "numerator bound for the rational point sweeps")
        ->capture_default_str();
    add_format(ver);

    std::string corpus_path;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    long corpus_cap = 0;
    CLI::App* cor = app.add_subcommand("corpus", "replay expected torsion groups from a corpus file");
    cor->add_option("path", corpus_path, "line-delimited JSON corpus")->required();
    cor->add_option("--jobs", jobs, "concurrent evaluations")->capture_default_str();
    cor->add_option("--degree-cap", corpus_cap, "abelianity degree cap (0 = defaults)");
    add_format(cor);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUndecided;
    }

    try {
        if (tors->parsed()) return run_torsion(tors_in, trace, degree_cap, format);
        if (iso->parsed()) return run_isogeny_class(iso_in, format);
        if (ver->parsed()) return run_verify(height_bound, format);
        if (cor->parsed()) return run_corpus_cmd(corpus_path, jobs, corpus_cap, format);
    } catch (const InvariantBreach& ex) {
        std::cerr << "invariant breach: " << ex.what() << "\n";
        return kExitBreach;
    } catch (const UndecidedError& ex) {
        std::cerr << "undecided within cap: " << ex.what() << "\n";
        return kExitUndecided;
    } catch (const CLI::ValidationError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUndecided;
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << "\n";
        return kExitUndecided;
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << "\n";
        return kExitFail;
    }
    return kExitOk;
}
