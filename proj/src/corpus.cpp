#include "qabtors/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace qabtors {

using nlohmann::json;

RationalCurve CorpusEntry::curve() const {
    if (a_invariants) {
        const auto& a = *a_invariants;
        return make_curve(a[0], a[1], a[2], a[3], a[4]);
    }
    if (j) return curve_from_j(*j);
    throw std::invalid_argument("corpus entry carries neither j nor coefficients");
}

namespace {

TorsionGroup parse_group(const json& g) {
    if (!g.is_object() || !g.contains("m") || !g.contains("k"))
        throw std::invalid_argument("expected group must be {\"m\": ..., \"k\": ...}");
    long m = g.at("m").get<long>();
    long k = g.at("k").get<long>();
    if (m < 1 || k < 1 || k % m != 0)
        throw std::invalid_argument("expected group must satisfy 1 <= m | k");
    return TorsionGroup{m, k};
}

CorpusEntry parse_entry(const json& row, size_t line) {
    CorpusEntry e;
    e.line = line;
    e.label = row.at("label").get<std::string>();
    if (e.label.empty()) throw std::invalid_argument("empty label");
    bool has_j = row.contains("j");
    bool has_a = row.contains("a_invariants");
    if (has_j == has_a)
        throw std::invalid_argument("need exactly one of \"j\" or \"a_invariants\"");
    if (has_j) {
        e.j = parse_rational(row.at("j").get<std::string>());
        if (*e.j == Rational(0) || *e.j == Rational(1728))
            throw std::invalid_argument(
                "j in {0, 1728} is not twist-rigid; use \"a_invariants\"");
    } else {
        const json& arr = row.at("a_invariants");
        if (!arr.is_array() || arr.size() != 5)
            throw std::invalid_argument("\"a_invariants\" must list a1,a2,a3,a4,a6");
        std::array<Rational, 5> a;
        for (size_t i = 0; i < 5; ++i) a[i] = parse_rational(arr[i].get<std::string>());
        e.a_invariants = a;
    }
    e.expected = parse_group(row.at("expected"));
    if (row.contains("note")) e.note = row.at("note").get<std::string>();
    return e;
}

}  // namespace

CorpusFile load_corpus(std::istream& in) {
    CorpusFile out;
    std::string text;
    size_t line = 0;
    bool seen_header = false;
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        json row;
        try {
            row = json::parse(text);
        } catch (const std::exception& ex) {
            out.issues.push_back({line, std::string("bad JSON: ") + ex.what()});
            continue;
        }
        try {
            if (!seen_header) {
                if (!row.is_object() || !row.contains("version"))
                    throw std::invalid_argument("first line must be {\"version\": ...}");
                out.version = row.at("version").get<long>();
                if (out.version != 1) throw std::invalid_argument("unsupported version");
                seen_header = true;
                continue;
            }
            out.entries.push_back(parse_entry(row, line));
        } catch (const std::exception& ex) {
            out.issues.push_back({line, ex.what()});
        }
    }
    return out;
}

CorpusFile load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    return load_corpus(in);
}

CorpusReport run_corpus(const CorpusFile& file, int jobs, long degree_cap) {
    CorpusReport report;
    report.issues = file.issues;
    const size_t n = file.entries.size();
    report.rows.resize(n);

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            const CorpusEntry& e = file.entries[i];
            CorpusRowResult& row = report.rows[i];
            row.label = e.label;
            row.expected = e.expected;
            try {
                QabTorsionResult r = torsion_over_Qab(e.curve(), degree_cap);
                row.computed = r.group;
                row.isogeny_degrees = r.isogeny_degrees;
                row.match = r.group == e.expected;
            } catch (const std::exception& ex) {
                row.failed = true;
                row.message = ex.what();
            }
        }
    };

    if (jobs < 1) jobs = 1;
    if (jobs == 1 || n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        size_t count = std::min<size_t>(static_cast<size_t>(jobs), n);
        pool.reserve(count);
        for (size_t t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::sort(report.rows.begin(), report.rows.end(),
              [](const CorpusRowResult& a, const CorpusRowResult& b) {
                  return a.label < b.label;
              });
    for (const CorpusRowResult& row : report.rows) {
        if (row.failed) {
            ++report.failed;
            continue;
        }
        ++report.group_counts[to_string(row.computed)];
        row.match ? ++report.matched : ++report.mismatched;
    }
    return report;
}

}  // namespace qabtors
