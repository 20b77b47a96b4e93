#include "polyrank/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace polyrank {

Poly Poly::constant(unsigned nvars, Int c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Mono(nvars, 0)] = std::move(c);
    return p;
}

Poly Poly::variable(unsigned nvars, unsigned var) {
    if (var < 1 || var > nvars) throw std::invalid_argument("Poly::variable: index out of range");
    Poly p(nvars);
    Mono m(nvars, 0);
    m[var - 1] = 1;
    p.terms_[m] = 1;
    return p;
}

void Poly::add_term(const Mono& m, const Int& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

Poly operator-(const Poly& a) {
    Poly out(a.nvars_);
    for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.nvars_);
    Mono prod(a.nvars_, 0);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (unsigned i = 0; i < a.nvars_; ++i) prod[i] = (uint8_t)(ma[i] + mb[i]);
            out.add_term(prod, ca * cb);
        }
    return out;
}

Poly Poly::sign_normalized() const {
    if (terms_.empty()) return *this;
    if (terms_.begin()->second > 0) return *this;
    return -*this;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = false;
        std::ostringstream vars;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (has_var) vars << "*";
            vars << "x" << (i + 1);
            if (m[i] > 1) vars << "^" << (int)m[i];
            has_var = true;
        }
        if (!has_var) {
            os << abs_c.get_str();
        } else {
            if (abs_c != 1) os << abs_c.get_str() << "*";
            os << vars.str();
        }
    }
    return os.str();
}

} // namespace polyrank
