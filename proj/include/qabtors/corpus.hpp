#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qabtors/curve.hpp"
#include "qabtors/ratpoints.hpp"
#include "qabtors/torsion_qab.hpp"

namespace qabtors {

// One labeled curve with its expected torsion group over the maximal
// abelian extension.  Curves are usually pinned by j-invariant (the group
// is a twist invariant away from j = 0, 1728); rows where that fails or
// where the printed j is unreliable carry explicit coefficients instead.
struct CorpusEntry {
    std::string label;
    std::optional<Rational> j;
    std::optional<std::array<Rational, 5>> a_invariants;
    TorsionGroup expected{1, 1};
    std::string note;
    size_t line = 0;

    RationalCurve curve() const;
};

struct CorpusIssue {
    size_t line = 0;
    std::string message;
};

struct CorpusFile {
    long version = 0;
    std::vector<CorpusEntry> entries;
    std::vector<CorpusIssue> issues;  // malformed lines; parsing continues past them
};

// Line-delimited JSON: a header object {"version": 1} followed by one
// entry object per line.  Blank lines are skipped; bad lines become
// issues with their line number.
CorpusFile load_corpus(std::istream& in);
CorpusFile load_corpus_file(const std::string& path);  // throws if unreadable

struct CorpusRowResult {
    std::string label;
    TorsionGroup expected{1, 1};
    TorsionGroup computed{1, 1};
    bool match = false;
    bool failed = false;  // evaluation threw; message holds the reason
    std::string message;
    std::vector<long> isogeny_degrees;
};

struct CorpusReport {
    std::vector<CorpusRowResult> rows;  // sorted by label
    std::vector<CorpusIssue> issues;
    std::map<std::string, long> group_counts;  // computed group -> row count
    long matched = 0;
    long mismatched = 0;
    long failed = 0;

    bool all_match() const { return mismatched == 0 && failed == 0; }
};

// Evaluate every entry (concurrently when jobs > 1; results are
// deterministic and label-sorted either way).
CorpusReport run_corpus(const CorpusFile& file, int jobs = 1, long degree_cap = 0);

}  // namespace qabtors
