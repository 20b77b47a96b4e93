#pragma once

#include "polyrank/boolfact.hpp"
#include "polyrank/johnson.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace polyrank {

struct SearchLimits {
    uint64_t node_budget = 1'000'000'000;
    double time_budget_s = 0.0; // 0 = unlimited
    int jobs = 1;
};

enum class Verdict { Found, ExhaustedNone, Aborted };

struct SearchOutcome {
    unsigned k = 0;
    unsigned n = 0;
    Verdict verdict = Verdict::Aborted;
    std::optional<Cycle> cycle; // set iff verdict == Found
    uint64_t nodes = 0;
    double seconds = 0.0;
};

// Depth-first search for a length-n factorizing cycle in J(k, floor(k/2)).
// Symmetry reduced: the first edge is pinned to {1..m}, {1..m-1, m+1} and only
// the smallest never-seen label may enter on each extension. Exhaustion is a
// proof of nonexistence; running out of budget is reported as Aborted, never
// as exhaustion. With limits.jobs > 1 the search is partitioned at a fixed
// prefix depth into independent subtrees (verdicts OR-combined, node counts
// summed); verdict and any found cycle are independent of scheduling.
SearchOutcome find_cycle(unsigned k, unsigned n, const SearchLimits& limits = {});

// Plain single-threaded recursion, kept as the reference implementation for
// testing the partitioned driver against.
SearchOutcome find_cycle_serial(unsigned k, unsigned n, const SearchLimits& limits = {});

struct RankResult {
    unsigned n = 0;
    unsigned lower = 0;            // proven lower bound on the homogeneous rank
    unsigned upper = 0;            // smallest k with a certificate, 0 if none found
    bool exact = false;            // lower == upper with all smaller k exhausted
    std::optional<Cycle> certificate;
    std::vector<SearchOutcome> trace; // one outcome per k tried
};

// Homogeneous boolean rank of the n-gon: iterates k upward from
// max(3, S(n)) until a factorizing cycle of length n appears or k_max is
// passed. Aborted searches widen the reported interval, never narrow it.
RankResult hom_boolean_rank(unsigned n, unsigned k_max, const SearchLimits& limits = {});

struct SurveyEntry {
    unsigned n;
    Verdict verdict;
    uint64_t nodes;
};

// Achievable factorizing-cycle lengths in J(k, floor(k/2)) for
// n = 3 .. C(k, floor(k/2)), one targeted search per length.
std::vector<SurveyEntry> max_cycle_survey(unsigned k, const SearchLimits& limits = {});

// Unsymmetrized brute force over all start edges with no label pruning;
// reference oracle for the symmetry soundness of the reduced search.
std::set<unsigned> achievable_lengths_bruteforce(unsigned k, unsigned n_max);

} // namespace polyrank
