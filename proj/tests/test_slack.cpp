#include "polyrank/slack.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace polyrank;

namespace {

// One-sided Jacobi singular values, used as an oracle for numerical rank.
std::vector<double> singular_values(Matrix<double> a) {
    const size_t rows = a.rows(), cols = a.cols();
    auto dot = [&](size_t p, size_t q) {
        double s = 0;
        for (size_t i = 0; i < rows; ++i) s += a(i, p) * a(i, q);
        return s;
    };
    for (int sweep = 0; sweep < 100; ++sweep) {
        bool changed = false;
        for (size_t p = 0; p < cols; ++p)
            for (size_t q = p + 1; q < cols; ++q) {
                double alpha = dot(p, p), beta = dot(q, q), gamma = dot(p, q);
                if (std::abs(gamma) < 1e-300) continue;
                if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
                changed = true;
                double zeta = (beta - alpha) / (2 * gamma);
                double t = (zeta >= 0 ? 1.0 : -1.0) /
                           (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                double c = 1 / std::sqrt(1 + t * t), s = c * t;
                for (size_t i = 0; i < rows; ++i) {
                    double vp = a(i, p), vq = a(i, q);
                    a(i, p) = c * vp - s * vq;
                    a(i, q) = s * vp + c * vq;
                }
            }
        if (!changed) break;
    }
    std::vector<double> sv(cols);
    for (size_t p = 0; p < cols; ++p) sv[p] = std::sqrt(dot(p, p));
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

Q5 phi() { return golden_ratio(); }

} // namespace

TEST_CASE("float slack has constructed zeros and positive pattern entries") {
    for (unsigned n = 3; n <= 50; ++n) {
        FloatSlack s = regular_gon_slack_float(n);
        for (unsigned j = 0; j < n; ++j) {
            unsigned zeros = 0;
            for (unsigned i = 0; i < n; ++i) {
                if (pattern_zero(n, i, j)) {
                    CHECK(s.entries(i, j) == 0.0); // exact, not thresholded
                    ++zeros;
                    CHECK((i == j || i == (j + 1) % n));
                } else {
                    CHECK(s.entries(i, j) > 1e-6);
                }
            }
            CHECK(zeros == 2);
        }
    }
    CHECK_THROWS(regular_gon_slack_float(2));
}

TEST_CASE("float heptagon has numerical rank 3 with a large spectral gap") {
    FloatSlack s = regular_gon_slack_float(7);
    auto sv = singular_values(s.entries);
    REQUIRE(sv.size() == 7);
    CHECK(sv[2] > 1e-8);
    CHECK(sv[2] / (sv[3] + 1e-300) > 1e6);
}

TEST_CASE("exact slack matrices match the printed circulants") {
    ExactSlack p5 = regular_gon_slack_exact(5);
    Matrix<Q5> disp = display_layout(p5.entries);
    const Q5 row0[5] = {Q5(0), Q5(0), Q5(1), phi(), Q5(1)};
    for (unsigned j = 0; j < 5; ++j) CHECK(disp(0, j) == row0[j]);
    // circulant: every row is the previous one shifted right
    for (unsigned i = 1; i < 5; ++i)
        for (unsigned j = 0; j < 5; ++j) CHECK(disp(i, j) == disp(0, (j + 5 - i) % 5));

    ExactSlack h6 = regular_gon_slack_exact(6);
    Matrix<Q5> hd = display_layout(h6.entries);
    const long hex_row[6] = {0, 0, 1, 2, 2, 1};
    for (unsigned i = 0; i < 6; ++i)
        for (unsigned j = 0; j < 6; ++j)
            CHECK(hd(i, j) == Q5(hex_row[(j + 6 - i) % 6]));

    ExactSlack t3 = regular_gon_slack_exact(3);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            CHECK(t3.entries(i, j) == (pattern_zero(3, i, j) ? Q5(0) : Q5(1)));

    CHECK_THROWS(regular_gon_slack_exact(7));
}

TEST_CASE("exact slack matrices have rank 3") {
    for (unsigned n = 3; n <= 6; ++n)
        CHECK(exact_rank(regular_gon_slack_exact(n).entries) == 3);
}

TEST_CASE("float slack matches exact entries where both exist") {
    for (unsigned n = 3; n <= 6; ++n) {
        FloatSlack f = regular_gon_slack_float(n);
        ExactSlack e = regular_gon_slack_exact(n);
        // float entries equal the exact word up to one global row scale
        double scale = 0;
        for (unsigned i = 0; i < n && scale == 0; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (e.entries(i, j) == Q5(1)) {
                    scale = f.entries(i, j);
                    break;
                }
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                CHECK(f.entries(i, j) ==
                      doctest::Approx(scale * e.entries(i, j).to_double()).epsilon(1e-9));
    }
}

TEST_CASE("raw symbolic slack: one variable per positive entry, column-major") {
    for (unsigned n = 3; n <= 12; ++n) {
        SymbolicSlack s = symbolic_slack(n, false);
        CHECK(s.var_count == n * (n - 2));
        unsigned expect = 1;
        for (unsigned j = 0; j < n; ++j)
            for (unsigned i = 0; i < n; ++i) {
                if (pattern_zero(n, i, j)) {
                    CHECK(s.entries(i, j).kind == SymEntry::Zero);
                } else {
                    CHECK(s.entries(i, j).kind == SymEntry::Var);
                    CHECK(s.entries(i, j).var == expect++);
                }
            }
    }
}

TEST_CASE("normalized symbolic pentagon reproduces the reduced matrix") {
    SymbolicSlack s = symbolic_slack(5, true);
    CHECK(s.var_count == 6);
    Matrix<SymEntry> d = display_layout(s.entries);
    // rows of the reduced pentagon matrix; 0 = zero, -1 = one, v > 0 = x_v
    const int want[5][5] = {
        {0, 0, -1, 1, -1},
        {-1, 0, 0, -1, 2},
        {3, -1, 0, 0, -1},
        {-1, 4, -1, 0, 0},
        {0, -1, 5, 6, 0},
    };
    for (unsigned i = 0; i < 5; ++i)
        for (unsigned j = 0; j < 5; ++j) {
            const SymEntry& e = d(i, j);
            if (want[i][j] == 0) CHECK(e.kind == SymEntry::Zero);
            else if (want[i][j] == -1) CHECK(e.kind == SymEntry::One);
            else {
                CHECK(e.kind == SymEntry::Var);
                CHECK(e.var == (unsigned)want[i][j]);
            }
        }
}

TEST_CASE("normalized symbolic var counts") {
    CHECK(symbolic_slack(3, true).var_count == 0); // triangle fully fixable
    CHECK(symbolic_slack(4, true).var_count == 1);
    for (unsigned n = 5; n <= 12; ++n)
        CHECK(symbolic_slack(n, true).var_count == n * (n - 2) - (2 * n - 1));
}

TEST_CASE("normalized pentagon evaluated at the golden point has rank 3") {
    SymbolicSlack s = symbolic_slack(5, true);
    std::vector<Q5> values = {phi(), phi(), phi(), phi(), phi(), Q5(1)};
    Matrix<Q5> m = evaluate(s, values);
    CHECK(m == regular_gon_slack_exact(5).entries);
    CHECK(exact_rank(m) == 3);
    // a generic point off the pentagon variety has full rank
    std::vector<Q5> off = {Q5(2), phi(), phi(), phi(), phi(), Q5(1)};
    CHECK(exact_rank(evaluate(s, off)) > 3);
}
