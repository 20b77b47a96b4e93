#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyrank {

// Vertices of the Johnson graph J(k, m) as bitmasks over ground set {1..k},
// bit i-1 standing for element i. k is capped at 32 so a subset is one word.
using Subset = uint32_t;

constexpr unsigned kMaxGroundSet = 32;

inline unsigned popcount(Subset s) { return (unsigned)__builtin_popcount(s); }
inline Subset full_mask(unsigned k) { return k == 32 ? ~Subset(0) : ((Subset(1) << k) - 1); }

// Adjacency in J(k, m): equal-size subsets sharing m-1 elements.
bool adjacent(Subset a, Subset b);

// Color of edge {a, b}: the complement of a union b in {1..k}.
Subset edge_color(Subset a, Subset b, unsigned k);

struct Cycle {
    unsigned k = 0;
    std::vector<Subset> vertices; // C_1 .. C_n in cyclic order
};

// Derived colors D_l = complement(C_l | C_{l+1 mod n}).
std::vector<Subset> cycle_colors(const Cycle& c);

struct CycleViolation {
    std::string what;
    int l = -1; // edge index (0-based) when applicable
    int i = -1; // offending vertex index when applicable
};

// Checks consecutive adjacency, rainbow colors, and the containment condition
// C_i not contained in C_l | C_{l+1} for i outside {l, l+1}. Returns the first
// violation found, or nullopt for a valid factorizing cycle.
std::optional<CycleViolation> check_factorizing_cycle(const Cycle& c);

inline bool is_factorizing_cycle(const Cycle& c) { return !check_factorizing_cycle(c); }

// Canonical form under rotation and reflection: lexicographically smallest
// vertex first, then the smaller of its two neighbors second.
Cycle canonicalize(const Cycle& c);

std::string subset_str(Subset s, unsigned k);

} // namespace polyrank
