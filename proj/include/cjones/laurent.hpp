#pragma once

/*
 * laurent.hpp
 * -----------
 * Exact Laurent-polynomial arithmetic in the variable A.
 *
 * Everything downstream works in A with integer exponents; the substitution
 * q = A^-4 turns every half-integer power of q into an integer power of A.
 * Coefficients are arbitrary-precision integers and no operation rounds.
 *
 * The representation is a sparse map from exponent to coefficient with the
 * invariant that no stored coefficient is zero.
 */

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "cjones/bigint.hpp"

namespace cjones {

class LaurentPolynomial {
  public:
    using TermMap = std::map<std::int64_t, BigInt>;

    LaurentPolynomial() = default;

    static LaurentPolynomial monomial(std::int64_t exponent, BigInt coefficient) {
        LaurentPolynomial p;
        if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
        return p;
    }

    static LaurentPolynomial one() { return monomial(0, BigInt(1)); }

    bool is_zero() const { return terms_.empty(); }

    std::int64_t min_degree() const {
        require_nonzero("min_degree");
        return terms_.begin()->first;
    }

    std::int64_t max_degree() const {
        require_nonzero("max_degree");
        return terms_.rbegin()->first;
    }

    BigInt coeff(std::int64_t exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    const TermMap& terms() const { return terms_; }

    std::size_t term_count() const { return terms_.size(); }

    void add_term(std::int64_t exponent, const BigInt& coefficient) {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
        LaurentPolynomial out;
        if (lhs.is_zero() || rhs.is_zero()) return out;
        // Iterate the smaller factor on the outside; factors in this library
        // are often two-term binomials like {n}.
        const LaurentPolynomial& small = lhs.term_count() <= rhs.term_count() ? lhs : rhs;
        const LaurentPolynomial& large = lhs.term_count() <= rhs.term_count() ? rhs : lhs;
        for (const auto& [es, cs] : small.terms_)
            for (const auto& [el, cl] : large.terms_) out.add_term(es + el, cs * cl);
        return out;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend bool operator==(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    friend bool operator!=(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
        return !(lhs == rhs);
    }

    // Multiplication by A^shift.
    LaurentPolynomial shifted(std::int64_t shift) const {
        LaurentPolynomial out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
        return out;
    }

    LaurentPolynomial scaled(const BigInt& factor) const {
        LaurentPolynomial out;
        if (factor == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
        return out;
    }

    // Value at A = 1; cheap classical-limit sanity check.
    BigInt evaluate_at_one() const {
        BigInt sum = 0;
        for (const auto& [e, c] : terms_) sum += c;
        return sum;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const BigInt& c = it->second;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (mag != 1 || it->first == 0) os << mag.str();
            if (it->first != 0) {
                if (mag != 1) os << "*";
                os << "A^" << it->first;
            }
        }
        return os.str();
    }

  private:
    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw std::domain_error(std::string(what) + " of the zero polynomial");
    }

    TermMap terms_;
};

// Exact quotient f / g. The divisor's lowest-degree coefficient must be +-1
// (every divisor arising from brace products is) and the remainder must
// vanish; anything else throws.
inline LaurentPolynomial exact_div(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    if (f.is_zero()) return LaurentPolynomial();
    const std::int64_t gmin = g.min_degree();
    const BigInt glow = g.coeff(gmin);
    if (glow != 1 && glow != -1)
        throw std::invalid_argument("exact_div: divisor lowest coefficient is not a unit");
    // A polynomial quotient cannot carry exponents above this bound.
    const std::int64_t qmax = f.max_degree() - g.max_degree();

    LaurentPolynomial remainder = f;
    LaurentPolynomial quotient;
    while (!remainder.is_zero()) {
        const std::int64_t e = remainder.min_degree() - gmin;
        if (e > qmax)
            throw std::domain_error("exact_div: nonzero remainder (quotient is not a Laurent polynomial)");
        const BigInt c = remainder.coeff(remainder.min_degree()) * glow;  // glow is +-1
        quotient.add_term(e, c);
        for (const auto& [ge, gc] : g.terms()) remainder.add_term(e + ge, -c * gc);
    }
    return quotient;
}

struct HatForm {
    LaurentPolynomial poly;  // anchor 0, leading (lowest-A) coefficient +1
    std::int64_t shift = 0;  // original = sign * A^shift * poly
    int sign = 1;
};

// Divides f by +-(its lowest-A monomial) so the result starts at A^0 with
// coefficient +1. Lowest coefficients here are always +-1; a non-unit leading
// coefficient means the caller is normalizing something it should not.
inline HatForm normalize_hat(const LaurentPolynomial& f) {
    if (f.is_zero()) throw std::domain_error("normalize_hat: zero polynomial");
    const std::int64_t low = f.min_degree();
    const BigInt c = f.coeff(low);
    if (c != 1 && c != -1)
        throw std::domain_error("normalize_hat: leading coefficient is not a unit");
    HatForm out;
    out.shift = low;
    out.sign = c < 0 ? -1 : 1;
    out.poly = f.shifted(-low);
    if (out.sign < 0) out.poly = -out.poly;
    return out;
}

}  // namespace cjones
