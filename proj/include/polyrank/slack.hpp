#pragma once

#include "polyrank/fields.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polyrank {

// All slack matrices are stored with the circulant support of section-3 style:
// column l has its two zeros at rows l and l+1 (mod n, 1-based). The matrices
// printed in the source material use the transposed orientation; display_layout()
// recovers it.
inline bool pattern_zero(unsigned n, unsigned i, unsigned j) { // 0-based
    return (i + n - j) % n < 2;
}

struct FloatSlack {
    unsigned n = 0;
    Matrix<double> entries; // pattern zeros constructed as exact 0.0
};

struct ExactSlack {
    unsigned n = 0;
    Matrix<Q5> entries; // rational for n in {3,4,6}; uses sqrt(5) for n = 5
};

// Regular n-gon slack matrix, n >= 3. Entries (up to row scaling)
// cos(pi/n) - cos((2(i-j)-1)pi/n).
FloatSlack regular_gon_slack_float(unsigned n);

// Exact normalized slack for n in {3,4,5,6}: circulant words
// (0,0,1), (0,0,1,1), (0,0,1,phi,1), (0,0,1,2,2,1).
ExactSlack regular_gon_slack_exact(unsigned n);

template <class T>
Matrix<T> display_layout(const Matrix<T>& m) { return m.transposed(); }

// Entry of a symbolic slack matrix: zero, the constant one, or a variable.
struct SymEntry {
    enum Kind : uint8_t { Zero, One, Var } kind = Zero;
    unsigned var = 0; // 1-based when kind == Var

    bool operator==(const SymEntry&) const = default;
};

struct SymbolicSlack {
    unsigned n = 0;
    unsigned var_count = 0;
    Matrix<SymEntry> entries;
};

// Symbolic slack matrix of an n-gon. Raw form has one variable per positive
// entry, numbered column-major. Normalized form scales a spanning set of
// entries to one (the two unit diagonals first), leaving var_count free
// variables numbered column-major over the remaining positions.
SymbolicSlack symbolic_slack(unsigned n, bool normalized);

// Substitute values for the variables (values[i] belongs to variable i+1).
Matrix<Q5> evaluate(const SymbolicSlack& s, const std::vector<Q5>& values);

std::string sym_entry_str(const SymEntry& e);

} // namespace polyrank
