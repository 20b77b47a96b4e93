#include "polyrank/cyclesearch.hpp"

#include "polyrank/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polyrank {

namespace {

using Clock = std::chrono::steady_clock;

// The search keeps two tables indexed by bitmask, so the ground set is capped
// well below the 32 supported by Subset itself.
constexpr unsigned kMaxSearchGroundSet = 22;

struct Shared {
    std::atomic<uint64_t> nodes{0};
    std::atomic<int> found_idx{INT_MAX};
    std::atomic<bool> abort_flag{false};
    uint64_t node_budget = 0;
    bool has_deadline = false;
    Clock::time_point deadline;

    explicit Shared(const SearchLimits& limits) : node_budget(limits.node_budget) {
        if (limits.time_budget_s > 0) {
            has_deadline = true;
            deadline = Clock::now() +
                       std::chrono::milliseconds((long)(limits.time_budget_s * 1000));
        }
    }
};

enum StepResult { kNone = 0, kFound = 1, kStopped = 2 };

unsigned subset_count(unsigned k, unsigned m) {
    return (unsigned)binomial((unsigned long)k, (unsigned long)m).get_ui();
}

class Engine {
  public:
    Engine(unsigned k, unsigned n, bool symmetry, Shared& shared, int task_idx)
        : k_(k), n_(n), m_(k / 2), mask_(full_mask(k)), symmetry_(symmetry),
          shared_(shared), task_idx_(task_idx),
          used_(size_t(1) << k, 0), ban_(size_t(1) << k, 0) {
        free_count_ = (long)subset_count(k, m_);
        path_.reserve(n + 1);
        labels_stack_.reserve(n + 1);
    }

    void place(Subset v, bool count = true) {
        labels_stack_.push_back(labels_seen_);
        labels_seen_ |= v;
        if (ban_[v] == 0) --free_count_;
        used_[v] = 1;
        if (!path_.empty()) {
            Subset u = path_.back() | v;
            Subset rest = u;
            while (rest) {
                Subset bit = rest & (~rest + 1);
                rest ^= bit;
                Subset sub = u ^ bit;
                if (++ban_[sub] == 1 && !used_[sub]) --free_count_;
            }
        }
        path_.push_back(v);
        if (count) ++local_nodes_;
    }

    void unplace() {
        Subset v = path_.back();
        path_.pop_back();
        if (!path_.empty()) {
            Subset u = path_.back() | v;
            Subset rest = u;
            while (rest) {
                Subset bit = rest & (~rest + 1);
                rest ^= bit;
                Subset sub = u ^ bit;
                if (--ban_[sub] == 0 && !used_[sub]) ++free_count_;
            }
        }
        used_[v] = 0;
        if (ban_[v] == 0) ++free_count_;
        labels_seen_ = labels_stack_.back();
        labels_stack_.pop_back();
    }

    Subset anchor() const { return path_.empty() ? 0 : path_.front(); }

    // DFS from the current partial path. With prefix_limit > 0, paths of that
    // length are handed to the collector instead of being extended.
    StepResult dfs(unsigned prefix_limit = 0, std::vector<std::vector<Subset>>* prefixes = nullptr) {
        if (should_stop()) return kStopped;
        const size_t t = path_.size();
        if (t == n_) return try_close() ? kFound : kNone;
        if (prefix_limit && t == prefix_limit) {
            prefixes->push_back(path_);
            return kNone;
        }
        if (free_count_ < (long)(n_ - t)) return kNone;

        const Subset cur = path_.back();
        const Subset fresh = mask_ & ~labels_seen_;
        const Subset lowest_fresh = fresh & (~fresh + 1);
        const Subset anchor = path_.front();
        const unsigned slack = n_ - (unsigned)t; // max allowed distance of the new vertex

        Subset outs = cur;
        while (outs) {
            const Subset xbit = outs & (~outs + 1);
            outs ^= xbit;
            const Subset base = cur ^ xbit;
            Subset ins = mask_ & ~cur;
            while (ins) {
                const Subset ybit = ins & (~ins + 1);
                ins ^= ybit;
                if (symmetry_ && (ybit & labels_seen_) == 0 && ybit != lowest_fresh) continue;
                const Subset v = base | ybit;
                if (used_[v] || ban_[v]) continue;
                if (m_ - popcount(v & anchor) > slack) continue;
                if (!union_clean(cur, v)) continue;
                place(v);
                StepResult r = dfs(prefix_limit, prefixes);
                unplace();
                if (r != kNone) return r;
            }
        }
        return kNone;
    }

    bool replay(const std::vector<Subset>& prefix) {
        for (Subset v : prefix) place(v, false);
        return true;
    }

    uint64_t flush_nodes() {
        uint64_t delta = local_nodes_ - flushed_nodes_;
        flushed_nodes_ = local_nodes_;
        if (delta) shared_.nodes.fetch_add(delta, std::memory_order_relaxed);
        return delta;
    }

    const Cycle& found() const { return found_cycle_; }

  private:
    bool union_clean(Subset cur, Subset v) const {
        const Subset u = cur | v;
        Subset rest = u;
        while (rest) {
            const Subset bit = rest & (~rest + 1);
            rest ^= bit;
            const Subset sub = u ^ bit;
            if (used_[sub] && sub != cur) return false; // v itself is not used yet
        }
        return true;
    }

    bool try_close() {
        const Subset last = path_.back();
        const Subset first = path_.front();
        if (popcount(last & first) != m_ - 1) return false;
        const Subset u = last | first;
        Subset rest = u;
        while (rest) {
            const Subset bit = rest & (~rest + 1);
            rest ^= bit;
            const Subset sub = u ^ bit;
            if (used_[sub] && sub != last && sub != first) return false;
        }
        found_cycle_ = Cycle{k_, path_};
        return true;
    }

    bool should_stop() {
        if (local_nodes_ - flushed_nodes_ < 4096) return false;
        flush_nodes();
        if (shared_.node_budget && shared_.nodes.load(std::memory_order_relaxed) > shared_.node_budget) {
            shared_.abort_flag.store(true, std::memory_order_relaxed);
            return true;
        }
        if (shared_.has_deadline && Clock::now() > shared_.deadline) {
            shared_.abort_flag.store(true, std::memory_order_relaxed);
            return true;
        }
        if (shared_.abort_flag.load(std::memory_order_relaxed)) return true;
        if (shared_.found_idx.load(std::memory_order_relaxed) < task_idx_) return true;
        return false;
    }

    const unsigned k_, n_, m_;
    const Subset mask_;
    const bool symmetry_;
    Shared& shared_;
    const int task_idx_;

    std::vector<uint8_t> used_;
    std::vector<uint16_t> ban_;
    long free_count_ = 0;
    std::vector<Subset> path_;
    Subset labels_seen_ = 0;
    std::vector<Subset> labels_stack_;
    uint64_t local_nodes_ = 0;
    uint64_t flushed_nodes_ = 0;
    Cycle found_cycle_;
};

void validate_search_args(unsigned k, unsigned n) {
    if (n < 3) throw std::invalid_argument("find_cycle: need n >= 3");
    if (k < 3) throw std::invalid_argument("find_cycle: need k >= 3");
    if (k > kMaxSearchGroundSet)
        throw std::invalid_argument("find_cycle: search supports k <= " +
                                    std::to_string(kMaxSearchGroundSet));
}

std::pair<Subset, Subset> canonical_first_edge(unsigned k) {
    unsigned m = k / 2;
    Subset c1 = full_mask(m);
    Subset c2 = (c1 ^ (Subset(1) << (m - 1))) | (Subset(1) << m);
    return {c1, c2};
}

SearchOutcome finish(unsigned k, unsigned n, Shared& sh, std::optional<Cycle> cycle,
                     Clock::time_point t0) {
    SearchOutcome out;
    out.k = k;
    out.n = n;
    out.nodes = sh.nodes.load();
    out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (cycle) {
        out.verdict = Verdict::Found;
        out.cycle = canonicalize(*cycle);
    } else if (sh.abort_flag.load()) {
        out.verdict = Verdict::Aborted;
    } else {
        out.verdict = Verdict::ExhaustedNone;
    }
    return out;
}

} // namespace

SearchOutcome find_cycle_serial(unsigned k, unsigned n, const SearchLimits& limits) {
    validate_search_args(k, n);
    auto t0 = Clock::now();
    Shared sh(limits);
    Engine engine(k, n, true, sh, 0);
    auto [c1, c2] = canonical_first_edge(k);
    engine.place(c1);
    engine.place(c2);
    StepResult r = engine.dfs();
    engine.flush_nodes();
    std::optional<Cycle> cycle;
    if (r == kFound) cycle = engine.found();
    return finish(k, n, sh, cycle, t0);
}

SearchOutcome find_cycle(unsigned k, unsigned n, const SearchLimits& limits) {
    validate_search_args(k, n);
    const unsigned prefix_depth = 4;
    if (limits.jobs <= 1 || n <= prefix_depth + 1)
        return find_cycle_serial(k, n, limits);

    auto t0 = Clock::now();
    Shared sh(limits);
    auto [c1, c2] = canonical_first_edge(k);

    // Canonical prefixes of the fixed depth; their enumeration nodes count
    // toward the total so exhaustive node counts match the serial engine.
    std::vector<std::vector<Subset>> prefixes;
    {
        Engine enumerator(k, n, true, sh, 0);
        enumerator.place(c1);
        enumerator.place(c2);
        StepResult r = enumerator.dfs(prefix_depth, &prefixes);
        enumerator.flush_nodes();
        if (r == kFound) // n is small enough that closure happened above the split
            return finish(k, n, sh, enumerator.found(), t0);
        if (r == kStopped) return finish(k, n, sh, std::nullopt, t0);
    }

    std::vector<std::optional<Cycle>> found(prefixes.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, limits.jobs))
#endif
    for (long i = 0; i < (long)prefixes.size(); ++i) {
        if (sh.found_idx.load(std::memory_order_relaxed) < (int)i ||
            sh.abort_flag.load(std::memory_order_relaxed))
            continue;
        Engine engine(k, n, true, sh, (int)i);
        engine.replay(prefixes[i]);
        StepResult r = engine.dfs();
        engine.flush_nodes();
        if (r == kFound) {
            int expected = sh.found_idx.load();
            while ((int)i < expected &&
                   !sh.found_idx.compare_exchange_weak(expected, (int)i)) {
            }
            if (sh.found_idx.load() == (int)i) found[i] = engine.found();
        }
    }

    int idx = sh.found_idx.load();
    std::optional<Cycle> cycle;
    if (idx != INT_MAX) cycle = found[idx];
    return finish(k, n, sh, cycle, t0);
}

RankResult hom_boolean_rank(unsigned n, unsigned k_max, const SearchLimits& limits) {
    if (n < 3) throw std::invalid_argument("hom_boolean_rank: need n >= 3");
    RankResult r;
    r.n = n;
    unsigned start = std::max(3u, s_bound(Int(n)));
    r.lower = start;
    bool clean = true; // every k below the current one exhausted
    for (unsigned k = start; k <= k_max; ++k) {
        SearchOutcome o = find_cycle(k, n, limits);
        r.trace.push_back(o);
        if (o.verdict == Verdict::Found) {
            r.upper = k;
            r.certificate = o.cycle;
            r.exact = clean;
            return r;
        }
        if (o.verdict == Verdict::ExhaustedNone) {
            if (clean) r.lower = k + 1;
        } else {
            clean = false;
        }
    }
    r.upper = 0;
    r.exact = false;
    return r;
}

std::vector<SurveyEntry> max_cycle_survey(unsigned k, const SearchLimits& limits) {
    validate_search_args(k, 3);
    unsigned n_max = subset_count(k, k / 2);
    std::vector<SurveyEntry> out;
    for (unsigned n = 3; n <= n_max; ++n) {
        SearchOutcome o = find_cycle(k, n, limits);
        out.push_back({n, o.verdict, o.nodes});
    }
    return out;
}

std::set<unsigned> achievable_lengths_bruteforce(unsigned k, unsigned n_max) {
    validate_search_args(k, 3);
    unsigned m = k / 2;
    std::vector<Subset> vertices;
    for (Subset v = 0; v <= full_mask(k); ++v)
        if (popcount(v) == m) vertices.push_back(v);

    std::set<unsigned> achievable;
    for (unsigned n = 3; n <= n_max; ++n) {
        bool found = false;
        for (Subset c1 : vertices) {
            for (Subset c2 : vertices) {
                if (c2 == c1 || popcount(c1 & c2) != m - 1) continue;
                Shared sh{SearchLimits{}};
                Engine engine(k, n, false, sh, 0);
                engine.place(c1);
                engine.place(c2);
                if (engine.dfs() == kFound) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (found) achievable.insert(n);
    }
    return achievable;
}

} // namespace polyrank
