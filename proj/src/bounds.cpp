#include "polyrank/bounds.hpp"

#include <cassert>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace polyrank {

Int cyclic_facets(unsigned k, unsigned d) {
    if (d < 2 || d > k - 1)
        throw std::invalid_argument("cyclic_facets: need 2 <= d <= k-1");
    if (d % 2 == 0) {
        unsigned m = d / 2;
        Int num = Int(k) * binomial((unsigned long)(k - m), (unsigned long)m);
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), Int(k - m).get_mpz_t());
        if (r != 0)
            throw std::logic_error("cyclic_facets: k*C(k-m,m) not divisible by k-m");
        return q;
    }
    unsigned m = (d - 1) / 2;
    return 2 * binomial((unsigned long)(k - m - 1), (unsigned long)m);
}

unsigned m2(unsigned k) {
    if (k < 3) throw std::invalid_argument("m2: need k >= 3");
    Int a = Int(5) * k - 4;
    Int b = Int(5) * k * k - 4;
    Int t = ceil_div_after_sqrt(a, b, 10);
    Int lo = 1, hi = (k - 1) / 2;
    if (t < lo) t = lo;
    if (t > hi) t = hi;
    return (unsigned)t.get_ui();
}

unsigned m1(unsigned k) {
    if (k < 3) throw std::invalid_argument("m1: need k >= 3");
    // floor((k-1)(1 - sqrt(5)/5)/2) = floor((5(k-1) - sqrt(5(k-1)^2)) / 10)
    Int a = Int(5) * (k - 1);
    Int b = Int(5) * (k - 1) * (k - 1);
    Int cand = floor_div_after_sqrt(a, b, 10);
    long lo = 1, hi = (long)((k - 1) / 2);
    auto value = [&](long m) { return 2 * binomial((unsigned long)(k - 1 - m), (unsigned long)m); };
    long best = -1;
    Int best_v = -1;
    for (const Int& c : {cand, Int(cand + 1)}) {
        long m = c.get_si();
        if (m < lo) m = lo;
        if (m > hi) m = hi;
        Int v = value(m);
        if (v > best_v || (v == best_v && m < best)) {
            best_v = v;
            best = m;
        }
    }
    return (unsigned)best;
}

MaxFacets s_max_facets(unsigned k) {
    if (k < 3) throw std::invalid_argument("s_max_facets: need k >= 3");
    MaxFacets best{Int(0), 0};
    for (unsigned d = 2; d <= k - 1; ++d) {
        Int v = cyclic_facets(k, d);
        if (best.dim == 0 || v > best.count) best = {v, d};
    }
    // Corollary cross-check: for k != 5 the even case at m2(k) attains the max.
    if (k != 5) {
        Int even = cyclic_facets(k, 2 * m2(k));
        if (even != best.count)
            throw std::logic_error("s_max_facets: m2 cross-check failed");
    }
    return best;
}

namespace {

// Memoized s_k table, grown on demand; index i holds s_{i+3}.
std::vector<MaxFacets>& s_table() {
    static std::vector<MaxFacets> table;
    return table;
}
std::mutex s_table_mutex;

const MaxFacets& s_memo(unsigned k) {
    std::lock_guard<std::mutex> lock(s_table_mutex);
    auto& table = s_table();
    while (table.size() < k - 2) {
        unsigned next = (unsigned)table.size() + 3;
        MaxFacets mf = s_max_facets(next);
        if (!table.empty() && mf.count < table.back().count)
            throw std::logic_error("s_k unexpectedly decreased");
        table.push_back(std::move(mf));
    }
    return table[k - 3];
}

} // namespace

unsigned t_bound(const Int& n) {
    if (n < 3) throw std::invalid_argument("t_bound: need n >= 3");
    for (unsigned k = 3;; ++k)
        if (n <= s_memo(k).count) return k;
}

unsigned s_bound(const Int& n) {
    if (n < 3) throw std::invalid_argument("s_bound: need n >= 3");
    for (unsigned k = 2;; ++k)
        if (n <= binomial((unsigned long)k, (unsigned long)(k / 2))) return k;
}

unsigned s_plus_bound(const Int& n) {
    if (n < 3) throw std::invalid_argument("s_plus_bound: need n >= 3");
    for (unsigned k = 2;; ++k) {
        // n <= (k - floor(k/2))/(k-1) * C(k, floor(k/2)), cleared of denominators
        Int lhs = n * (k - 1);
        Int rhs = Int(k - k / 2) * binomial((unsigned long)k, (unsigned long)(k / 2));
        if (lhs <= rhs) return k;
    }
}

BoundReport bound_report(const Int& n) {
    BoundReport r;
    r.n = n;
    r.s_bound = s_bound(n);
    r.s_plus_bound = s_plus_bound(n);
    r.t_bound = t_bound(n);
    r.witness_k = r.t_bound;
    r.witness_dim = s_memo(r.t_bound).dim;
    return r;
}

std::vector<AsymptoticRow> asymptotic_report(const std::vector<Int>& ns) {
    std::vector<AsymptoticRow> rows;
    rows.reserve(ns.size());
    for (const Int& n : ns) {
        unsigned t = t_bound(n);
        double log2n = std::log2(n.get_d());
        rows.push_back({n, t, t / log2n});
    }
    return rows;
}

} // namespace polyrank
