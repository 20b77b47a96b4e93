#pragma once

#include "polyrank/exactmath.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polyrank {

// Exponent vector; index i is the exponent of variable i+1.
using Mono = std::vector<uint8_t>;

// Sparse multivariate polynomial with integer coefficients. Terms are kept in
// descending lexicographic order of exponent vectors, so begin() is the
// leading monomial used for sign normalization.
class Poly {
  public:
    Poly() = default;
    explicit Poly(unsigned nvars) : nvars_(nvars) {}

    static Poly zero(unsigned nvars) { return Poly(nvars); }
    static Poly constant(unsigned nvars, Int c);
    static Poly variable(unsigned nvars, unsigned var); // 1-based

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Int, std::greater<Mono>>& terms() const { return terms_; }

    void add_term(const Mono& m, const Int& c);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Flips the global sign if needed so the leading monomial has a positive
    // coefficient.
    Poly sign_normalized() const;

    std::string str() const; // e.g. "x1 - x3*x4 + 1"

  private:
    unsigned nvars_ = 0;
    std::map<Mono, Int, std::greater<Mono>> terms_;
};

} // namespace polyrank
