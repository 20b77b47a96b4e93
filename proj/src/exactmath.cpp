#include "polyrank/exactmath.hpp"

namespace polyrank {

Int binomial(const Int& n, const Int& m) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("binomial: arguments must be nonnegative");
    if (m > n) return 0;
    if (!m.fits_ulong_p())
        throw std::invalid_argument("binomial: m too large");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), m.get_ui());
    return r;
}

Int binomial(unsigned long n, unsigned long m) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, m);
    return r;
}

Int isqrt(const Int& n) {
    if (n < 0)
        throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace {

// c*t >= a - sqrt(b), exactly.
bool at_least_ceil(const Int& a, const Int& b, const Int& c, const Int& t) {
    Int r = a - c * t;
    return r <= 0 || b >= r * r;
}

// c*t <= a - sqrt(b), exactly.
bool at_most_floor(const Int& a, const Int& b, const Int& c, const Int& t) {
    Int r = a - c * t;
    return r >= 0 && b <= r * r;
}

} // namespace

Int ceil_div_after_sqrt(const Int& a, const Int& b, const Int& c) {
    if (c <= 0)
        throw std::invalid_argument("ceil_div_after_sqrt: divisor must be positive");
    if (b < 0)
        throw std::invalid_argument("ceil_div_after_sqrt: radicand must be nonnegative");
    // a - sqrt(b) lies in (a - s - 1, a - s] for s = isqrt(b), so the answer is
    // within one step of ceil((a - s - 1) / c).
    Int s = isqrt(b);
    Int t;
    Int num = a - s - 1;
    mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
    while (!at_least_ceil(a, b, c, t)) ++t;
    return t;
}

Int floor_div_after_sqrt(const Int& a, const Int& b, const Int& c) {
    if (c <= 0)
        throw std::invalid_argument("floor_div_after_sqrt: divisor must be positive");
    if (b < 0)
        throw std::invalid_argument("floor_div_after_sqrt: radicand must be nonnegative");
    Int s = isqrt(b);
    Int t;
    Int num = a - s;
    mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), c.get_mpz_t());
    while (!at_most_floor(a, b, c, t)) --t;
    return t;
}

} // namespace polyrank
