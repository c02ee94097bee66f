#pragma once

/*
 * skein.hpp
 * ---------
 * Skein-theoretic building blocks: quantum integers {n} and [n], quantum
 * factorials, the unknot values Delta_n, the trihedron coefficient theta,
 * the negative half-twist monomial gamma, and the three-circle evaluation
 * Gamma(x,y,z) as a Delta-factorial ratio.
 *
 * Ratios of factorials are kept symbolic in a QFactorialExpression and
 * cancelled at the exponent level before anything is expanded; expanding
 * {3N+1}! for large N and then dividing is the dominant cost otherwise.
 *
 * Conventions:
 *   {n}  = A^(2n) - A^(-2n)
 *   [n]  = {n} / {1}
 *   Delta_n  = (-1)^n [n+1]
 *   gamma(a,b,c) = (-1)^((a+b-c)/2) A^(a+b-c + (a^2+b^2-c^2)/2)
 */

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cjones/laurent.hpp"
#include "cjones/series.hpp"

namespace cjones {

inline LaurentPolynomial qbrace(std::int64_t n) {
    // {0} = 0; the formula handles negative n ({-n} = -{n}) by itself.
    LaurentPolynomial p;
    p.add_term(2 * n, BigInt(1));
    p.add_term(-2 * n, BigInt(-1));
    return p;
}

inline LaurentPolynomial qint(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("qint: negative argument");
    LaurentPolynomial p;
    for (std::int64_t t = 0; t < n; ++t) p.add_term(2 * (n - 1) - 4 * t, BigInt(1));
    return p;
}

inline LaurentPolynomial qbrace_fact(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("qbrace_fact: negative argument");
    LaurentPolynomial p = LaurentPolynomial::one();
    for (std::int64_t i = 1; i <= n; ++i) p *= qbrace(i);
    return p;
}

inline LaurentPolynomial delta(std::int64_t n) {
    if (n < -1) throw std::invalid_argument("delta: argument below -1");
    LaurentPolynomial p = qint(n + 1);
    return (n % 2 != 0) ? -p : p;  // Delta_-1 = [0] = 0 regardless of sign
}

struct AdmissibleTriple {
    int a = 0, b = 0, c = 0;
    int i = 0, j = 0, k = 0;  // internal colors

    AdmissibleTriple(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
        if (a < 0 || b < 0 || c < 0 || (a + b + c) % 2 != 0)
            throw std::invalid_argument("AdmissibleTriple: parities do not match");
        i = (b + c - a) / 2;
        j = (a + c - b) / 2;
        k = (a + b - c) / 2;
        if (i < 0 || j < 0 || k < 0)
            throw std::invalid_argument("AdmissibleTriple: triangle inequality violated");
    }

    static bool admissible(int a, int b, int c) {
        return a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && b + c >= a && a + c >= b &&
               a + b >= c;
    }
};

struct TwistMonomial {
    int sign = 1;
    std::int64_t a_exponent = 0;
};

// Negative half-twist coefficient, kept as a monomial: in every identity the
// paper proves it contributes only a degree shift, and keeping it symbolic
// lets tests assert the predicted shifts exactly.
inline TwistMonomial gamma_twist(int a, int b, int c) {
    AdmissibleTriple t(a, b, c);
    const std::int64_t lin = a + b - c;
    const std::int64_t quad = static_cast<std::int64_t>(a) * a + static_cast<std::int64_t>(b) * b -
                              static_cast<std::int64_t>(c) * c;
    if (quad % 2 != 0) throw std::logic_error("gamma_twist: odd quadratic part on admissible triple");
    TwistMonomial out;
    out.sign = (t.k % 2 != 0) ? -1 : 1;
    out.a_exponent = lin + quad / 2;
    return out;
}

/*
 * A formal product  sign * A^shift * prod {n}!^e * prod {n}^e  with integer
 * exponents of either sign. Multiplication is exponent bookkeeping only;
 * cancellation happens before any expansion.
 */
class QFactorialExpression {
  public:
    QFactorialExpression() = default;

    static QFactorialExpression one() { return QFactorialExpression(); }

    int sign() const { return sign_; }
    std::int64_t a_shift() const { return shift_; }
    const std::map<int, int>& factorial_exponents() const { return fact_; }
    const std::map<int, int>& single_exponents() const { return single_; }

    QFactorialExpression& mul_monomial(int sign, std::int64_t shift) {
        sign_ *= sign;
        shift_ += shift;
        return *this;
    }

    QFactorialExpression& mul_factorial(int n, int exponent) {
        if (n < 0) throw std::invalid_argument("mul_factorial: negative argument");
        if (n > 0 && exponent != 0) bump(fact_, n, exponent);
        return *this;  // {0}! = 1 contributes nothing
    }

    QFactorialExpression& mul_single(int n, int exponent) {
        if (n <= 0) throw std::invalid_argument("mul_single: argument must be positive");
        if (exponent != 0) bump(single_, n, exponent);
        return *this;
    }

    QFactorialExpression& operator*=(const QFactorialExpression& rhs) {
        sign_ *= rhs.sign_;
        shift_ += rhs.shift_;
        for (const auto& [n, e] : rhs.fact_) bump(fact_, n, e);
        for (const auto& [n, e] : rhs.single_) bump(single_, n, e);
        return *this;
    }

    friend QFactorialExpression operator*(QFactorialExpression lhs, const QFactorialExpression& rhs) {
        lhs *= rhs;
        return lhs;
    }

    QFactorialExpression pow(int e) const {
        QFactorialExpression out;
        out.sign_ = (e % 2 == 0) ? 1 : sign_;
        out.shift_ = shift_ * e;
        for (const auto& [n, x] : fact_)
            if (x * e != 0) out.fact_.emplace(n, x * e);
        for (const auto& [n, x] : single_)
            if (x * e != 0) out.single_.emplace(n, x * e);
        return out;
    }

    QFactorialExpression inverse() const { return pow(-1); }

    friend bool operator==(const QFactorialExpression& a, const QFactorialExpression& b) {
        return a.sign_ == b.sign_ && a.shift_ == b.shift_ && a.fact_ == b.fact_ &&
               a.single_ == b.single_;
    }

    // Net exponent of each {n} once factorials are unfolded
    // ({m}! contributes 1 to every {n} with n <= m).
    std::map<int, std::int64_t> net_single_exponents() const {
        std::map<int, std::int64_t> net;
        for (const auto& [n, e] : single_)
            if (e != 0) net[n] += e;
        // suffix-sum the factorial exponents from the largest argument down
        if (!fact_.empty()) {
            const int top = fact_.rbegin()->first;
            std::int64_t suffix = 0;
            auto it = fact_.rbegin();
            for (int n = top; n >= 1; --n) {
                while (it != fact_.rend() && it->first == n) {
                    suffix += it->second;
                    ++it;
                }
                if (suffix != 0) net[n] += suffix;
            }
        }
        for (auto it = net.begin(); it != net.end();) {
            if (it->second == 0) it = net.erase(it);
            else ++it;
        }
        return net;
    }

    // Exact minimum A-degree of the value. Every {n} has lowest coefficient
    // -1 at A^(-2n), so the leading terms of numerator and denominator never
    // cancel and the bound is attained.
    std::int64_t min_a_degree() const {
        std::int64_t d = shift_;
        for (const auto& [n, e] : net_single_exponents()) d += e * (-2) * n;
        return d;
    }

    bool is_monomial() const { return net_single_exponents().empty(); }

    // Low-A window of the value, `slots` consecutive A-exponents from
    // min_a_degree(). Numerator and denominator windows are built by
    // two-term multiplies; the ratio goes through series_div.
    TruncatedSeries expand_to_depth(std::int64_t slots) const {
        if (slots < 1) throw std::invalid_argument("expand_to_depth: slots must be positive");
        const auto net = net_single_exponents();
        std::vector<BigInt> num(static_cast<std::size_t>(slots), BigInt(0));
        std::vector<BigInt> den(static_cast<std::size_t>(slots), BigInt(0));
        num[0] = 1;
        den[0] = 1;
        std::int64_t num_anchor = 0, den_anchor = 0;
        bool have_den = false;
        for (const auto& [n, e] : net) {
            const int reps = static_cast<int>(e > 0 ? e : -e);
            for (int r = 0; r < reps; ++r) {
                // {n} = -A^(-2n) (1 - A^(4n))
                std::vector<BigInt>& v = (e > 0) ? num : den;
                for (std::int64_t i = slots - 1; i >= 0; --i) {
                    BigInt x = -v[static_cast<std::size_t>(i)];
                    if (i >= 4 * n) x += v[static_cast<std::size_t>(i - 4 * n)];
                    v[static_cast<std::size_t>(i)] = x;
                }
                if (e > 0) {
                    num_anchor += -2 * n;
                } else {
                    den_anchor += -2 * n;
                    have_den = true;
                }
            }
        }
        TruncatedSeries out;
        if (!have_den) {
            out = TruncatedSeries(num_anchor, std::move(num));
        } else {
            out = series_div(TruncatedSeries(num_anchor, std::move(num)),
                             TruncatedSeries(den_anchor, std::move(den)), slots);
        }
        out.anchor += shift_;
        if (sign_ < 0)
            for (BigInt& c : out.coeffs) c = -c;
        return out;
    }

    // Exact Laurent polynomial value. Throws if the denominator does not
    // divide the numerator -- many admissible skein evaluations are genuine
    // rational functions, so callers must expect this.
    LaurentPolynomial expand_exact() const {
        LaurentPolynomial num = LaurentPolynomial::one();
        LaurentPolynomial den = LaurentPolynomial::one();
        for (const auto& [n, e] : net_single_exponents()) {
            const LaurentPolynomial b = qbrace(n);
            const int reps = static_cast<int>(e > 0 ? e : -e);
            for (int r = 0; r < reps; ++r) {
                if (e > 0) num *= b;
                else den *= b;
            }
        }
        LaurentPolynomial out = exact_div(num, den).shifted(shift_);
        if (sign_ < 0) out = -out;
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << (sign_ < 0 ? "-" : "") << "A^" << shift_;
        for (const auto& [n, e] : fact_) os << " {" << n << "}!^" << e;
        for (const auto& [n, e] : single_) os << " {" << n << "}^" << e;
        return os.str();
    }

  private:
    static void bump(std::map<int, int>& m, int key, int delta) {
        auto [it, inserted] = m.try_emplace(key, delta);
        if (!inserted) {
            it->second += delta;
            if (it->second == 0) m.erase(it);
        }
    }

    int sign_ = 1;
    std::int64_t shift_ = 0;
    std::map<int, int> fact_;    // {n}!^e
    std::map<int, int> single_;  // {n}^e
};

// Delta_n! = (-1)^(n(n+1)/2) {n+1}! / {1}^(n+1); the n = -1 and n = 0 empty
// products come out as 1 from the same formula.
inline QFactorialExpression delta_fact(int n) {
    if (n < -1) throw std::invalid_argument("delta_fact: argument below -1");
    QFactorialExpression e;
    const std::int64_t tri = static_cast<std::int64_t>(n) * (n + 1) / 2;
    e.mul_monomial(tri % 2 != 0 ? -1 : 1, 0);
    e.mul_factorial(n + 1, 1);
    if (n + 1 > 0) e.mul_single(1, -(n + 1));
    return e;
}

// theta(a,b,c) as a symbolic factorial ratio:
//   (-1)^(i+j+k) {i+j+k+1}! {i}! {j}! {k}! / ({i+j}! {j+k}! {i+k}! {1})
inline QFactorialExpression theta_expression(int a, int b, int c) {
    AdmissibleTriple t(a, b, c);
    QFactorialExpression e;
    e.mul_monomial((t.i + t.j + t.k) % 2 != 0 ? -1 : 1, 0);
    e.mul_factorial(t.i + t.j + t.k + 1, 1);
    e.mul_factorial(t.i, 1);
    e.mul_factorial(t.j, 1);
    e.mul_factorial(t.k, 1);
    e.mul_factorial(t.i + t.j, -1);
    e.mul_factorial(t.j + t.k, -1);
    e.mul_factorial(t.i + t.k, -1);
    e.mul_single(1, -1);
    return e;
}

// Exact polynomial value of theta. Not every admissible triple has a
// polynomial theta (theta(2,2,2) already is not); those throw, and callers
// that only need the ratio work with theta_expression instead.
inline LaurentPolynomial theta(int a, int b, int c) { return theta_expression(a, b, c).expand_exact(); }

// Lickorish's three-circle evaluation as a Delta-factorial ratio.
inline QFactorialExpression gamma_xyz(int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0) throw std::invalid_argument("gamma_xyz: negative argument");
    QFactorialExpression e = delta_fact(x + y + z);
    e *= delta_fact(x - 1);
    e *= delta_fact(y - 1);
    e *= delta_fact(z - 1);
    e *= delta_fact(y + z - 1).inverse();
    e *= delta_fact(z + x - 1).inverse();
    e *= delta_fact(x + y - 1).inverse();
    return e;
}

// Delta_n as an expression: (-1)^n {n+1} / {1}.
inline QFactorialExpression delta_expression(std::int64_t n) {
    if (n < -1) throw std::invalid_argument("delta_expression: argument below -1");
    QFactorialExpression e;
    e.mul_monomial(n % 2 != 0 ? -1 : 1, 0);
    if (n == -1) {
        // Delta_-1 = 0 has no expression form; callers never divide by it.
        throw std::invalid_argument("delta_expression: Delta_-1 is zero");
    }
    e.mul_single(static_cast<int>(n) + 1, 1);
    e.mul_single(1, -1);
    return e;
}

}  // namespace cjones
