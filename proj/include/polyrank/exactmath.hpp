#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace polyrank {

// Arbitrary-precision integers and rationals. mpq_class keeps rationals
// reduced with positive denominator, which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

// C(n, m); returns 0 when m > n. Requires n, m >= 0.
Int binomial(const Int& n, const Int& m);
Int binomial(unsigned long n, unsigned long m);

// floor(sqrt(n)); rejects n < 0.
Int isqrt(const Int& n);

// ceil((a - sqrt(b)) / c), decided with integer comparisons only:
// the smallest t with c*t >= a - sqrt(b), i.e. (a - c*t <= 0) or (b >= (a - c*t)^2).
// Requires b >= 0, c > 0.
Int ceil_div_after_sqrt(const Int& a, const Int& b, const Int& c);

// floor((a - sqrt(b)) / c), same exact-predicate style.
Int floor_div_after_sqrt(const Int& a, const Int& b, const Int& c);

inline double to_double(const Int& v) { return v.get_d(); }
inline double to_double(const Rat& v) { return v.get_d(); }

} // namespace polyrank
