#include "polyrank/johnson.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyrank {

bool adjacent(Subset a, Subset b) {
    unsigned m = popcount(a);
    if (popcount(b) != m)
        throw std::invalid_argument("adjacent: subsets of different cardinality");
    return popcount(a & b) == m - 1;
}

Subset edge_color(Subset a, Subset b, unsigned k) {
    if (k > kMaxGroundSet) throw std::invalid_argument("edge_color: k > 32");
    if (!adjacent(a, b)) throw std::invalid_argument("edge_color: vertices not adjacent");
    return ~(a | b) & full_mask(k);
}

std::vector<Subset> cycle_colors(const Cycle& c) {
    std::vector<Subset> colors(c.vertices.size());
    for (size_t l = 0; l < c.vertices.size(); ++l)
        colors[l] = edge_color(c.vertices[l], c.vertices[(l + 1) % c.vertices.size()], c.k);
    return colors;
}

std::optional<CycleViolation> check_factorizing_cycle(const Cycle& c) {
    const size_t n = c.vertices.size();
    if (n < 3) return CycleViolation{"cycle shorter than 3", -1, -1};
    if (c.k < 3 || c.k > kMaxGroundSet) return CycleViolation{"ground set out of range", -1, -1};
    const unsigned m = c.k / 2;
    for (size_t i = 0; i < n; ++i)
        if (popcount(c.vertices[i]) != m)
            return CycleViolation{"vertex has wrong cardinality", -1, (int)i};

    for (size_t l = 0; l < n; ++l) {
        Subset a = c.vertices[l], b = c.vertices[(l + 1) % n];
        if (popcount(a & b) != m - 1)
            return CycleViolation{"consecutive vertices not adjacent", (int)l, -1};
    }

    std::vector<Subset> unions(n);
    for (size_t l = 0; l < n; ++l)
        unions[l] = c.vertices[l] | c.vertices[(l + 1) % n];

    // Distinct colors <=> distinct unions.
    for (size_t l = 0; l < n; ++l)
        for (size_t j = l + 1; j < n; ++j)
            if (unions[l] == unions[j])
                return CycleViolation{"repeated edge color", (int)l, (int)j};

    for (size_t l = 0; l < n; ++l)
        for (size_t i = 0; i < n; ++i) {
            if (i == l || i == (l + 1) % n) continue;
            if ((c.vertices[i] & ~unions[l]) == 0)
                return CycleViolation{"vertex contained in edge union", (int)l, (int)i};
        }
    return std::nullopt;
}

Cycle canonicalize(const Cycle& c) {
    const size_t n = c.vertices.size();
    Cycle best = c;
    bool first = true;
    for (int dir : {+1, -1})
        for (size_t start = 0; start < n; ++start) {
            std::vector<Subset> cand(n);
            for (size_t i = 0; i < n; ++i) {
                long idx = ((long)start + dir * (long)i) % (long)n;
                if (idx < 0) idx += n;
                cand[i] = c.vertices[idx];
            }
            if (first || cand < best.vertices) {
                best.vertices = cand;
                first = false;
            }
        }
    return best;
}

std::string subset_str(Subset s, unsigned k) {
    std::string out = "{";
    bool sep = false;
    for (unsigned i = 0; i < k; ++i)
        if (s >> i & 1) {
            if (sep) out += ",";
            out += std::to_string(i + 1);
            sep = true;
        }
    out += "}";
    return out;
}

} // namespace polyrank
