#pragma once

#include "polyrank/fields.hpp"
#include "polyrank/polynomial.hpp"
#include "polyrank/slack.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyrank {

// Candidate witness for complex-psd-minimality: a matrix over Q(i, sqrt2)
// whose entrywise squared moduli should reproduce the slack matrix exactly.
struct GaussCert {
    unsigned n = 0;
    unsigned claimed_rank = 0;
    Matrix<GaussQ2> entries;
};

// The rank-3 Hadamard square root of the regular hexagon slack matrix,
// stored in the internal (column) orientation.
GaussCert builtin_hexagon_certificate();

struct CertViolation {
    std::string what;
    int i = -1, j = -1; // 1-based entry when applicable
};

// Checks |M_ij|^2 == S_ij entrywise over Q(sqrt2) and rank(M) == claimed_rank
// by exact elimination over Q(i, sqrt2); valid also requires claimed_rank == 3.
// Throws on dimension mismatch or when the slack needs sqrt(5).
std::vector<CertViolation> verify_hadamard_certificate(const GaussCert& cert,
                                                       const ExactSlack& slack);

std::string to_json(const GaussCert& cert);
GaussCert gausscert_from_json(const std::string& text);

// One size x size minor of a symbolic slack matrix. Row/column indices are
// 1-based in the display orientation, so ids line up with the printed
// matrices; the polynomial is sign-normalized (leading monomial positive).
struct SymbolicMinor {
    std::vector<unsigned> deleted_rows;
    std::vector<unsigned> deleted_cols;
    Poly polynomial;
};

// All size x size minors by exact cofactor expansion. Practical for n <= 8.
std::vector<SymbolicMinor> symbolic_minors(const SymbolicSlack& s, unsigned size);

// A trinomial minor x^a - x^b + x^c forces Re(zeta^c / zeta^a) = 0 at any
// Hadamard-root evaluation point.
struct TrinomialConstraint {
    size_t minor_index; // into the scanned minor list
    Mono plus_a, minus_b, plus_c;
};

struct Contradiction {
    size_t minor_index;
    std::string explanation;
};

struct ParityState {
    unsigned var_count = 0;
    std::vector<bool> pure_imaginary;      // 1-based; [0] unused
    std::vector<int> witness_minor;        // minor that forced the variable, -1 if none
    std::vector<TrinomialConstraint> constraints;
    std::vector<Contradiction> contradictions; // all found, in scan order
    std::optional<Contradiction> contradiction() const {
        if (contradictions.empty()) return std::nullopt;
        return contradictions.front();
    }
};

// Sound semi-decision procedure: can prove non-minimality, never minimality.
ParityState scan_trinomial_obstructions(const std::vector<SymbolicMinor>& minors,
                                        unsigned var_count);

struct MinimalityReport {
    unsigned n = 0;
    enum Verdict { Minimal, NotMinimal, Inconclusive } verdict = Inconclusive;
    std::vector<std::string> derivation; // witness chain / verification summary
    std::optional<GaussCert> certificate;
    std::vector<std::string> notes;
};

// Definitive verdicts for n in {3,4,5,6}; for larger n runs the obstruction
// scanner only (practical up to n = 8).
MinimalityReport psd_minimality_report(unsigned n);

Q5 eval_poly(const Poly& p, const std::vector<Q5>& values);

std::string minor_name(const SymbolicMinor& m);

} // namespace polyrank
