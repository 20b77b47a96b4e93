#pragma once

#include "polyrank/johnson.hpp"

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <vector>

namespace polyrank {

using RowBits = boost::dynamic_bitset<>;

// Boolean factorization candidate for the n-gon support: C and D are n x k
// zero-one matrices stored as row bitsets. Validity is established by
// verify_boolean, never assumed at construction. k is not capped at a machine
// word here: the trivial padding alone needs k = 2n-3.
struct BoolFact {
    unsigned n = 0;
    unsigned k = 0;
    std::vector<RowBits> c_rows;
    std::vector<RowBits> d_rows;
};

struct FactViolation {
    std::string kind; // "support", "weight", "duplicate", "dimension"
    int i = -1;
    int j = -1;
    std::string detail;
};

// Checks the factorization against the abstract n-gon support: entry (i,j)
// is zero iff i in {j, j+1 mod n} (1-based). With homogeneous set, also checks
// the row weights floor(k/2) for C and ceil(k/2)-1 for D, and that rows of C
// and of D are pairwise distinct.
std::vector<FactViolation> verify_boolean(const BoolFact& f, bool homogeneous);

// The padded trivial factorization of size 2n-3 (n >= 4); n = 3 degenerates
// to the identity-pattern factorization with k = 3.
BoolFact trivial_padding(unsigned n);

// A valid factorizing cycle read as a factorization: C rows are the cycle
// vertices, D rows the edge colors. Throws on an invalid cycle.
BoolFact cycle_to_factorization(const Cycle& c);

// Certificate JSON: {"n":., "k":., "C": [[1-based column indices]], "D": [[..]]}.
std::string to_json(const BoolFact& f);
BoolFact boolfact_from_json(const std::string& text);

} // namespace polyrank
