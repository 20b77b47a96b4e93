#include "polyrank/slack.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace polyrank {

FloatSlack regular_gon_slack_float(unsigned n) {
    if (n < 3) throw std::invalid_argument("regular_gon_slack: need n >= 3");
    FloatSlack s;
    s.n = n;
    s.entries = Matrix<double>(n, n, 0.0);
    const double c = std::cos(M_PI / n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (pattern_zero(n, i, j)) continue; // constructed zero, not computed
            unsigned t = (i + n - j) % n;
            s.entries(i, j) = c - std::cos((2.0 * t - 1.0) * M_PI / n);
        }
    return s;
}

namespace {

std::vector<Q5> circulant_word(unsigned n) {
    switch (n) {
        case 3: return {Q5(0), Q5(0), Q5(1)};
        case 4: return {Q5(0), Q5(0), Q5(1), Q5(1)};
        case 5: return {Q5(0), Q5(0), Q5(1), golden_ratio(), Q5(1)};
        case 6: return {Q5(0), Q5(0), Q5(1), Q5(2), Q5(2), Q5(1)};
        default:
            throw std::invalid_argument("regular_gon_slack: exact mode only for n in {3,4,5,6}");
    }
}

// Union-find over the bipartite scaling graph: nodes 0..n-1 rows, n..2n-1 cols.
struct DisjointSets {
    std::vector<unsigned> parent;
    explicit DisjointSets(unsigned n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    unsigned find(unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(unsigned x, unsigned y) {
        unsigned rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

} // namespace

ExactSlack regular_gon_slack_exact(unsigned n) {
    if (n < 3) throw std::invalid_argument("regular_gon_slack: need n >= 3");
    auto word = circulant_word(n);
    ExactSlack s;
    s.n = n;
    s.entries = Matrix<Q5>(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            s.entries(i, j) = word[(i + n - j) % n];
    return s;
}

SymbolicSlack symbolic_slack(unsigned n, bool normalized) {
    if (n < 3) throw std::invalid_argument("symbolic_slack: need n >= 3");
    SymbolicSlack s;
    s.n = n;
    s.entries = Matrix<SymEntry>(n, n, SymEntry{SymEntry::Zero, 0});

    if (!normalized) {
        unsigned next = 1;
        for (unsigned j = 0; j < n; ++j)
            for (unsigned i = 0; i < n; ++i)
                if (!pattern_zero(n, i, j)) s.entries(i, j) = {SymEntry::Var, next++};
        s.var_count = next - 1;
        return s;
    }

    // Fix a spanning set of entries to one. Diagonal offsets are scanned as
    // u = 2 first, then u = n-1, then interior offsets; within a diagonal by
    // column. For n = 5 this reproduces the standard reduced pentagon matrix.
    DisjointSets ds(2 * n);
    std::vector<unsigned> offsets;
    offsets.push_back(2);
    if (n >= 4) offsets.push_back(n - 1);
    for (unsigned u = 3; u + 1 <= n - 1; ++u) offsets.push_back(u);

    for (unsigned u : offsets)
        for (unsigned j = 0; j < n; ++j) {
            unsigned i = (j + u) % n;
            if (ds.unite(i, n + j)) s.entries(i, j) = {SymEntry::One, 0};
        }

    unsigned next = 1;
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i)
            if (!pattern_zero(n, i, j) && s.entries(i, j).kind == SymEntry::Zero)
                s.entries(i, j) = {SymEntry::Var, next++};
    s.var_count = next - 1;
    return s;
}

Matrix<Q5> evaluate(const SymbolicSlack& s, const std::vector<Q5>& values) {
    if (values.size() != s.var_count)
        throw std::invalid_argument("evaluate: wrong number of values");
    Matrix<Q5> m(s.n, s.n, Q5(0));
    for (unsigned i = 0; i < s.n; ++i)
        for (unsigned j = 0; j < s.n; ++j) {
            const SymEntry& e = s.entries(i, j);
            if (e.kind == SymEntry::One) m(i, j) = Q5(1);
            else if (e.kind == SymEntry::Var) m(i, j) = values[e.var - 1];
        }
    return m;
}

std::string sym_entry_str(const SymEntry& e) {
    switch (e.kind) {
        case SymEntry::Zero: return "0";
        case SymEntry::One: return "1";
        default: return "x" + std::to_string(e.var);
    }
}

} // namespace polyrank
