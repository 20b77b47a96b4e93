#include "polyrank/bounds.hpp"

#include <doctest.h>

#include <cmath>

using namespace polyrank;

namespace {

// Facet count of the cyclic polytope by enumerating d-subsets against Gale's
// evenness condition: S is a facet iff for all i < j outside S the number of
// elements of S strictly between i and j is even.
unsigned gale_facets(unsigned k, unsigned d) {
    unsigned count = 0;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if ((unsigned)__builtin_popcount(mask) != d) continue;
        bool ok = true;
        for (unsigned i = 0; i < k && ok; ++i) {
            if (mask >> i & 1) continue;
            for (unsigned j = i + 1; j < k && ok; ++j) {
                if (mask >> j & 1) continue;
                unsigned between = 0;
                for (unsigned l = i + 1; l < j; ++l)
                    if (mask >> l & 1) ++between;
                if (between % 2) ok = false;
            }
        }
        if (ok) ++count;
    }
    return count;
}

// Test-local restatement of the two-case closed form, kept independent of
// cyclic_facets so library changes cannot hide a regression.
Int facets_direct(unsigned k, unsigned d) {
    if (d % 2 == 0) {
        unsigned m = d / 2;
        Int num = Int(k) * binomial((unsigned long)(k - m), (unsigned long)m);
        REQUIRE(num % (k - m) == 0);
        return num / (k - m);
    }
    unsigned m = (d - 1) / 2;
    return 2 * binomial((unsigned long)(k - m - 1), (unsigned long)m);
}

} // namespace

TEST_CASE("cyclic facet counts match Gale evenness enumeration") {
    CHECK(cyclic_facets(6, 2) == 6);
    CHECK(cyclic_facets(5, 3) == gale_facets(5, 3));
    CHECK(cyclic_facets(5, 3) == 6);
    CHECK(cyclic_facets(8, 4) == gale_facets(8, 4));
    CHECK(cyclic_facets(8, 4) == 20);
    for (unsigned k = 3; k <= 11; ++k)
        for (unsigned d = 2; d <= k - 1; ++d)
            CHECK(cyclic_facets(k, d) == gale_facets(k, d));
    CHECK_THROWS(cyclic_facets(6, 1));
    CHECK_THROWS(cyclic_facets(6, 6));
}

TEST_CASE("m2 is a maximizer of the even subsequence") {
    CHECK(m2(9) == 3);
    CHECK(m2(6) == 2);
    // k = 5 is a tie between m = 1 and m = 2 (both give 5); the closed form
    // lands on the smaller one, which the brute-force oracle confirms.
    CHECK(m2(5) == 1);
    CHECK_THROWS(m2(2));

    for (unsigned k = 3; k <= 60; ++k) {
        Int best = -1;
        unsigned best_m = 0;
        for (unsigned m = 1; m <= (k - 1) / 2; ++m) {
            Int v = facets_direct(k, 2 * m);
            if (v > best) {
                best = v;
                best_m = m;
            }
        }
        CHECK(facets_direct(k, 2 * m2(k)) == best); // attains the maximum
        CHECK(m2(k) == best_m);                     // and is the smallest argmax
    }
}

TEST_CASE("m1 is a maximizer of the odd subsequence") {
    CHECK(m1(5) == 1);
    CHECK(m1(9) == 2);
    CHECK(m1(3) == 1);
    for (unsigned k = 3; k <= 60; ++k) {
        Int best = -1;
        for (unsigned m = 1; m <= (k - 1) / 2; ++m) {
            Int v = 2 * binomial((unsigned long)(k - 1 - m), (unsigned long)m);
            if (v > best) best = v;
        }
        CHECK(2 * binomial((unsigned long)(k - 1 - m1(k)), (unsigned long)m1(k)) == best);
    }
}

TEST_CASE("s_max_facets brute force and the k=5 exception") {
    CHECK(s_max_facets(5).count == 6);
    CHECK(s_max_facets(5).dim == 3);
    CHECK(s_max_facets(6).count == 9);
    CHECK(s_max_facets(6).dim == 4);
    CHECK(s_max_facets(9).count == 30);
    CHECK(s_max_facets(9).dim == 6);

    for (unsigned k = 3; k <= 60; ++k) {
        Int best = -1;
        unsigned best_d = 0;
        for (unsigned d = 2; d <= k - 1; ++d) {
            Int v = facets_direct(k, d);
            if (v > best) {
                best = v;
                best_d = d;
            }
        }
        MaxFacets got = s_max_facets(k);
        CHECK(got.count == best);
        CHECK(got.dim == best_d);
        if (k != 5) CHECK(got.dim == 2 * m2(k));
    }
}

TEST_CASE("t_bound examples against a direct scan") {
    CHECK(t_bound(9) == 6);
    CHECK(t_bound(3) == 3);
    // direct scan oracle: s_7 = 14, s_8 = 20 < 22 <= s_9 = 30
    CHECK(s_max_facets(8).count == 20);
    CHECK(s_max_facets(9).count == 30);
    CHECK(t_bound(22) == 9);
    CHECK_THROWS(t_bound(2));
}

TEST_CASE("S and S+ examples") {
    CHECK(s_bound(9) == 5);
    CHECK(s_plus_bound(9) == 6);
    CHECK(s_plus_bound(3) == 3);
    CHECK(s_bound(3) == 3);
    CHECK_THROWS(s_bound(2));
    CHECK_THROWS(s_plus_bound(1));
}

TEST_CASE("T, S, S+ are nondecreasing and ordered on [3, 10^4]") {
    unsigned pt = 0, ps = 0, pp = 0;
    for (unsigned n = 3; n <= 10000; ++n) {
        unsigned t = t_bound(n), s = s_bound(n), p = s_plus_bound(n);
        CHECK(t >= pt);
        CHECK(s >= ps);
        CHECK(p >= pp);
        CHECK(s <= p);
        CHECK(t >= s);
        // BoundReport invariants
        CHECK((double)s >= std::log2((double)n) - 1e-9);
        CHECK(t >= (unsigned)std::ceil(std::log2((double)n)) + 1);
        pt = t;
        ps = s;
        pp = p;
    }
}

TEST_CASE("bound report packages the witness") {
    BoundReport r = bound_report(9);
    CHECK(r.t_bound == 6);
    CHECK(r.witness_k == 6);
    CHECK(r.witness_dim == 4);
    CHECK(r.s_bound == 5);
    CHECK(r.s_plus_bound == 6);
}

TEST_CASE("asymptotic ratio decreases toward log_phi(2)") {
    std::vector<Int> ns;
    for (unsigned p = 10; p <= 20; p += 2) {
        Int n = 1;
        n <<= p;
        ns.push_back(n);
    }
    auto rows = asymptotic_report(ns);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].t == 17); // T(2^10), oracle: s_16 = 672 < 1024 <= s_17 = 1122
    CHECK(rows[0].ratio == doctest::Approx(1.7));
    CHECK(rows[0].ratio > 1.6);
    CHECK(rows[0].ratio < 1.8);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].ratio > 1.4404);
        if (i) CHECK(rows[i].ratio < rows[i - 1].ratio);
    }
}
