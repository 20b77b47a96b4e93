#include "polyrank/boolfact.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace polyrank {

namespace {
using nlohmann::json;

bool support_zero(unsigned n, unsigned i, unsigned j) { // 0-based
    return i == j || i == (j + 1) % n;
}
} // namespace

std::vector<FactViolation> verify_boolean(const BoolFact& f, bool homogeneous) {
    std::vector<FactViolation> out;
    if (f.n < 3 || f.k < 1 || f.c_rows.size() != f.n || f.d_rows.size() != f.n) {
        out.push_back({"dimension", -1, -1, "inconsistent n/k/row counts"});
        return out;
    }
    for (unsigned i = 0; i < f.n; ++i)
        if (f.c_rows[i].size() != f.k || f.d_rows[i].size() != f.k) {
            out.push_back({"dimension", (int)i + 1, -1, "row width differs from k"});
            return out;
        }

    for (unsigned i = 0; i < f.n; ++i)
        for (unsigned j = 0; j < f.n; ++j) {
            bool meet = f.c_rows[i].intersects(f.d_rows[j]);
            bool zero = support_zero(f.n, i, j);
            if (meet == zero)
                out.push_back({"support", (int)i + 1, (int)j + 1,
                               zero ? "rows intersect on a pattern zero"
                                    : "rows miss a positive entry"});
        }

    if (homogeneous) {
        unsigned cw = f.k / 2, dw = (f.k + 1) / 2 - 1;
        for (unsigned i = 0; i < f.n; ++i) {
            if (f.c_rows[i].count() != cw)
                out.push_back({"weight", (int)i + 1, -1,
                               "C row has " + std::to_string(f.c_rows[i].count()) +
                                   " ones, expected " + std::to_string(cw)});
            if (f.d_rows[i].count() != dw)
                out.push_back({"weight", (int)i + 1, -1,
                               "D row has " + std::to_string(f.d_rows[i].count()) +
                                   " ones, expected " + std::to_string(dw)});
        }
    }

    // Distinctness is implied by a valid support for n >= 4 but checked
    // explicitly: equal rows would duplicate a zero column pattern.
    for (unsigned a = 0; a < f.n; ++a)
        for (unsigned b = a + 1; b < f.n; ++b) {
            if (f.c_rows[a] == f.c_rows[b])
                out.push_back({"duplicate", (int)a + 1, (int)b + 1, "equal C rows"});
            if (f.d_rows[a] == f.d_rows[b])
                out.push_back({"duplicate", (int)a + 1, (int)b + 1, "equal D rows"});
        }
    return out;
}

BoolFact trivial_padding(unsigned n) {
    if (n < 3) throw std::invalid_argument("trivial_padding: need n >= 3");
    BoolFact f;
    f.n = n;
    if (n == 3) {
        // Identity-pattern factorization: C_i = {i+1}, D_j = {j}.
        f.k = 3;
        for (unsigned i = 0; i < 3; ++i) {
            RowBits c(3), d(3);
            c.set((i + 1) % 3);
            d.set(i);
            f.c_rows.push_back(c);
            f.d_rows.push_back(d);
        }
        return f;
    }
    f.k = 2 * n - 3;
    const unsigned pad = n - 3;
    for (unsigned i = 0; i < n; ++i) {
        RowBits c(f.k), d(f.k);
        for (unsigned j = 0; j < n; ++j)
            if (!support_zero(n, i, j)) c.set(pad + j); // [0 | support(S_n)]
        for (unsigned j = 0; j < pad; ++j) d.set(j);    // [1 | I_n]
        d.set(pad + i);
        f.c_rows.push_back(c);
        f.d_rows.push_back(d);
    }
    return f;
}

BoolFact cycle_to_factorization(const Cycle& c) {
    if (auto v = check_factorizing_cycle(c))
        throw std::invalid_argument("cycle_to_factorization: invalid cycle: " + v->what);
    BoolFact f;
    f.n = (unsigned)c.vertices.size();
    f.k = c.k;
    auto widen = [&](Subset s) {
        RowBits row(c.k);
        for (unsigned b = 0; b < c.k; ++b)
            if (s >> b & 1) row.set(b);
        return row;
    };
    for (Subset v : c.vertices) f.c_rows.push_back(widen(v));
    for (Subset d : cycle_colors(c)) f.d_rows.push_back(widen(d));
    return f;
}

std::string to_json(const BoolFact& f) {
    json j;
    j["n"] = f.n;
    j["k"] = f.k;
    auto rows = [&](const std::vector<RowBits>& rs) {
        json out = json::array();
        for (const RowBits& r : rs) {
            json cols = json::array();
            for (unsigned b = 0; b < f.k; ++b)
                if (r.test(b)) cols.push_back(b + 1);
            out.push_back(cols);
        }
        return out;
    };
    j["C"] = rows(f.c_rows);
    j["D"] = rows(f.d_rows);
    return j.dump(2);
}

BoolFact boolfact_from_json(const std::string& text) {
    json j = json::parse(text);
    BoolFact f;
    f.n = j.at("n").get<unsigned>();
    f.k = j.at("k").get<unsigned>();
    if (f.k < 1 || f.k > 100000) throw std::invalid_argument("certificate: unreasonable k");
    auto rows = [&](const json& arr) {
        std::vector<RowBits> out;
        for (const auto& cols : arr) {
            RowBits r(f.k);
            for (unsigned c : cols.get<std::vector<unsigned>>()) {
                if (c < 1 || c > f.k)
                    throw std::invalid_argument("certificate: column index out of range");
                r.set(c - 1);
            }
            out.push_back(r);
        }
        return out;
    };
    f.c_rows = rows(j.at("C"));
    f.d_rows = rows(j.at("D"));
    return f;
}

} // namespace polyrank
