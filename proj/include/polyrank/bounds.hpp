#pragma once

#include "polyrank/exactmath.hpp"

#include <utility>
#include <vector>

namespace polyrank {

// Facet count f_{d-1}(C(k,d)) of the cyclic polytope with k vertices in
// dimension d. Requires 2 <= d <= k-1.
Int cyclic_facets(unsigned k, unsigned d);

// Maximizer of the even-dimension facet subsequence (k/(k-m))*C(k-m,m)
// over 1 <= m <= (k-1)/2, computed via the exact ceiling formula.
unsigned m2(unsigned k);

// Maximizer of the odd-dimension subsequence 2*C(k-1-m, m), resolved from
// the two Tanny-Zuker candidates (ties toward smaller m). Requires k >= 3.
unsigned m1(unsigned k);

struct MaxFacets {
    Int count;
    unsigned dim; // argmax dimension, ties toward smaller d
};

// max over d in [2, k-1] of cyclic_facets(k, d). Requires k >= 3.
MaxFacets s_max_facets(unsigned k);

// T(n): smallest k whose cyclic-polytope facet maximum reaches n. n >= 3.
unsigned t_bound(const Int& n);

// S(n) = min{k : n <= C(k, floor(k/2))}. n >= 3.
unsigned s_bound(const Int& n);

// S+(n) = min{k : n <= (k - floor(k/2))/(k-1) * C(k, floor(k/2))},
// compared exactly with rationals. n >= 3.
unsigned s_plus_bound(const Int& n);

struct BoundReport {
    Int n;
    unsigned s_bound;
    unsigned s_plus_bound;
    unsigned t_bound;
    unsigned witness_k;   // the k achieving T(n)
    unsigned witness_dim; // dimension maximizing the facet count at that k
};

BoundReport bound_report(const Int& n);

struct AsymptoticRow {
    Int n;
    unsigned t;
    double ratio; // T(n) / log2(n)
};

std::vector<AsymptoticRow> asymptotic_report(const std::vector<Int>& ns);

} // namespace polyrank
