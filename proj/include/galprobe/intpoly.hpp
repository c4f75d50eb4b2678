/*
   Copyright 2026 the galois-probe authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Dense univariate polynomials with exact integer (IntPoly) and rational
// (RatPoly) coefficients, plus the resultant/discriminant/gcd kernel the rest
// of the library is built on.  Coefficients are stored lowest degree first;
// a non-zero polynomial never has a zero leading coefficient, and the zero
// polynomial is the empty coefficient vector (degree() refuses it rather than
// pretending it has degree 0).

#ifndef GALPROBE_INTPOLY_HPP
#define GALPROBE_INTPOLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <galprobe/bigint.hpp>

namespace galprobe {

inline mpz_class pow_mpz(const mpz_class& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("exact_div: division is not exact");
    return q;
}

class IntPoly {
  public:
    IntPoly() = default;  // the zero polynomial

    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly zero() { return IntPoly(); }

    static IntPoly constant(mpz_class v) {
        std::vector<mpz_class> c;
        if (v != 0) c.push_back(std::move(v));
        return IntPoly(std::move(c));
    }

    static IntPoly monomial(int k, mpz_class coeff = 1) {
        if (k < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
        if (coeff == 0) return IntPoly();
        std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1, mpz_class(0));
        c.back() = std::move(coeff);
        return IntPoly(std::move(c));
    }

    // Text format: comma separated coefficients, highest degree first.
    // "1,0,0,8,12" is X^4 + 8X + 12.
    static IntPoly from_text(const std::string& text) {
        std::vector<mpz_class> highest_first;
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            const auto a = token.find_first_not_of(" \t");
            if (a == std::string::npos) throw std::invalid_argument("IntPoly::from_text: empty coefficient");
            const auto b = token.find_last_not_of(" \t");
            try {
                highest_first.emplace_back(token.substr(a, b - a + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("IntPoly::from_text: bad coefficient '" + token + "'");
            }
        }
        if (highest_first.empty()) throw std::invalid_argument("IntPoly::from_text: empty input");
        std::reverse(highest_first.begin(), highest_first.end());
        return IntPoly(std::move(highest_first));
    }

    std::string to_text() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            out += coeff(k).get_str();
            if (k > 0) out += ',';
        }
        return out;
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const {
        if (is_zero()) throw std::invalid_argument("degree of the zero polynomial is undefined");
        return static_cast<int>(c_.size()) - 1;
    }

    const mpz_class& coeff(int k) const {
        static const mpz_class zero_coeff(0);
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return zero_coeff;
        return c_[static_cast<std::size_t>(k)];
    }

    const mpz_class& lc() const {
        if (is_zero()) throw std::invalid_argument("leading coefficient of the zero polynomial");
        return c_.back();
    }

    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool is_monic() const { return !is_zero() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] -= b.c_[i];
        }
        return IntPoly(std::move(c));
    }

    IntPoly operator-() const {
        std::vector<mpz_class> c(c_);
        for (auto& x : c) x = -x;
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const mpz_class& s) {
        if (s == 0) return IntPoly();
        std::vector<mpz_class> c(a.c_);
        for (auto& x : c) x *= s;
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const mpz_class& s, const IntPoly& a) { return a * s; }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<mpz_class> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return IntPoly(std::move(c));
    }

    mpz_class evaluate(const mpz_class& x) const {
        mpz_class r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    mpq_class evaluate(const mpq_class& x) const {
        mpq_class r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + mpq_class(*it);
        return r;
    }

    // f(g(X)) by Horner.
    IntPoly compose(const IntPoly& g) const {
        IntPoly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + IntPoly::constant(*it);
        return r;
    }

    IntPoly pow(unsigned e) const {
        IntPoly r = IntPoly::constant(1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    mpz_class height() const {
        mpz_class h = 0;
        for (const auto& x : c_)
            if (cmp(h, abs(x)) < 0) h = abs(x);
        return h;
    }

    // Nonnegative gcd of the coefficients; 0 for the zero polynomial.
    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& x : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    IntPoly divide_scalar_exact(const mpz_class& s) const {
        if (s == 0) throw std::invalid_argument("divide_scalar_exact: zero divisor");
        std::vector<mpz_class> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = exact_div(c_[i], s);
        return IntPoly(std::move(c));
    }

    // Content removed; keeps the sign of the leading coefficient.
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        return divide_scalar_exact(content());
    }

    // X |-> X + a
    IntPoly shift(const mpz_class& a) const {
        return compose(IntPoly({a, 1}));
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

// Pseudo-remainder: R with lc(B)^(deg A - deg B + 1) * A = Q*B + R.
// Requires deg A >= deg B, B nonzero.
inline IntPoly prem(const IntPoly& A, const IntPoly& B) {
    if (B.is_zero()) throw std::invalid_argument("prem: zero divisor");
    if (A.is_zero()) return IntPoly();
    int dA = A.degree(), dB = B.degree();
    if (dA < dB) throw std::invalid_argument("prem: deg A < deg B");
    const mpz_class d = B.lc();
    IntPoly R = A;
    int e = dA - dB + 1;
    while (!R.is_zero() && R.degree() >= dB) {
        const int k = R.degree() - dB;
        R = R * d - B * IntPoly::monomial(k, R.lc());
        --e;
    }
    if (e > 0) R = R * pow_mpz(d, static_cast<unsigned long>(e));
    return R;
}

// gcd over Z by the primitive polynomial remainder sequence.
// Result has positive leading coefficient (or is zero for gcd(0,0)).
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    auto positive = [](IntPoly p) {
        if (!p.is_zero() && p.lc() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return positive(b);
    if (b.is_zero()) return positive(a);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IntPoly A = a.primitive_part(), B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (true) {
        if (B.is_constant()) {
            // primitive constant: the polynomial part of the gcd is trivial
            return IntPoly::constant(c);
        }
        IntPoly R = prem(A, B);
        if (R.is_zero()) return positive(B.primitive_part() * c);
        A = B;
        B = R.primitive_part();
        if (A.degree() < B.degree()) std::swap(A, B);
    }
}

// Resultant by the subresultant polynomial remainder sequence
// (Cohen, Algorithm 3.3.7).  Exact for all nonzero integer inputs;
// the course of the computation never leaves Z.
inline mpz_class resultant(const IntPoly& P, const IntPoly& Q) {
    if (P.is_zero() || Q.is_zero())
        throw std::invalid_argument("resultant: undefined for the zero polynomial");
    const mpz_class ca = P.content(), cb = Q.content();
    IntPoly A = P.divide_scalar_exact(ca);
    IntPoly B = Q.divide_scalar_exact(cb);
    // Res(ca*A, cb*B) = ca^deg(B) * cb^deg(A) * Res(A, B)
    mpz_class t = pow_mpz(ca, static_cast<unsigned long>(Q.degree())) *
                  pow_mpz(cb, static_cast<unsigned long>(P.degree()));
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    mpz_class g = 1, h = 1;
    while (B.degree() > 0) {
        const int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = prem(A, B);
        if (R.is_zero()) return 0;  // common factor of positive degree
        A = B;
        B = R.divide_scalar_exact(g * pow_mpz(h, static_cast<unsigned long>(delta)));
        g = A.lc();
        if (delta > 0)
            h = exact_div(pow_mpz(g, static_cast<unsigned long>(delta)),
                          pow_mpz(h, static_cast<unsigned long>(delta - 1)));
    }
    const int dA = A.degree();
    mpz_class res = 1;
    if (dA > 0)
        res = exact_div(pow_mpz(B.lc(), static_cast<unsigned long>(dA)),
                        pow_mpz(h, static_cast<unsigned long>(dA - 1)));
    return s * t * res;
}

// disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f).  The division is always
// exact; degree 1 gives 1 by convention.
inline mpz_class discriminant(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("discriminant: degree must be at least 1");
    const int n = f.degree();
    if (n == 1) return 1;
    const mpz_class r = resultant(f, f.derivative());
    mpz_class d = exact_div(r, f.lc());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
    return d;
}

inline mpz_class height(const IntPoly& f) { return f.height(); }

// Long division test: quotient when g divides f exactly over Z.
inline std::optional<IntPoly> try_divide(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("try_divide: zero divisor");
    if (f.is_zero()) return IntPoly();
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<mpz_class> rem(f.coeffs());
    std::vector<mpz_class> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1, mpz_class(0));
    const int dg = g.degree();
    for (int k = f.degree(); k >= dg; --k) {
        mpz_class& top = rem[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), g.lc().get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[static_cast<std::size_t>(k - dg)] = q;
        for (int i = 0; i <= dg; ++i) rem[static_cast<std::size_t>(k - dg + i)] -= q * g.coeff(i);
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

// ---------------------------------------------------------------------------

class RatPoly {
  public:
    RatPoly() = default;

    explicit RatPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
        for (auto& x : c_) x.canonicalize();
        normalize();
    }

    explicit RatPoly(const IntPoly& p) {
        c_.reserve(p.coeffs().size());
        for (const auto& x : p.coeffs()) c_.emplace_back(x);
    }

    static RatPoly constant(mpq_class v) {
        std::vector<mpq_class> c;
        v.canonicalize();
        if (v != 0) c.push_back(std::move(v));
        return RatPoly(std::move(c));
    }

    static RatPoly monomial(int k, mpq_class coeff = 1) {
        if (coeff == 0) return RatPoly();
        std::vector<mpq_class> c(static_cast<std::size_t>(k) + 1, mpq_class(0));
        c.back() = std::move(coeff);
        return RatPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const {
        if (is_zero()) throw std::invalid_argument("degree of the zero polynomial is undefined");
        return static_cast<int>(c_.size()) - 1;
    }

    const mpq_class& coeff(int k) const {
        static const mpq_class zero_coeff(0);
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return zero_coeff;
        return c_[static_cast<std::size_t>(k)];
    }

    const mpq_class& lc() const {
        if (is_zero()) throw std::invalid_argument("leading coefficient of the zero polynomial");
        return c_.back();
    }

    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return RatPoly(std::move(c));
    }

    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] -= b.c_[i];
        }
        return RatPoly(std::move(c));
    }

    RatPoly operator-() const {
        std::vector<mpq_class> c(c_);
        for (auto& x : c) x = -x;
        return RatPoly(std::move(c));
    }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return RatPoly(std::move(c));
    }

    friend RatPoly operator*(const RatPoly& a, const mpq_class& s) {
        if (s == 0) return RatPoly();
        std::vector<mpq_class> c(a.c_);
        for (auto& x : c) x *= s;
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const mpq_class& s, const RatPoly& a) { return a * s; }

    RatPoly derivative() const {
        if (c_.size() <= 1) return RatPoly();
        std::vector<mpq_class> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * mpq_class(static_cast<unsigned long>(i));
        return RatPoly(std::move(c));
    }

    mpq_class evaluate(const mpq_class& x) const {
        mpq_class r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    RatPoly compose(const RatPoly& g) const {
        RatPoly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + RatPoly::constant(*it);
        return r;
    }

    RatPoly monic() const {
        if (is_zero()) throw std::invalid_argument("monic: zero polynomial");
        return *this * mpq_class(1 / lc());
    }

    bool is_integral() const {
        for (const auto& x : c_)
            if (x.get_den() != 1) return false;
        return true;
    }

    IntPoly to_intpoly() const {
        if (!is_integral()) throw std::domain_error("to_intpoly: polynomial has non-integer coefficients");
        std::vector<mpz_class> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(x.get_num());
        return IntPoly(std::move(c));
    }

    // Smallest positive d with d*f integral; returns (d*f, d).
    std::pair<IntPoly, mpz_class> scale_to_integer() const {
        mpz_class d = 1;
        for (const auto& x : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<mpz_class> c;
        c.reserve(c_.size());
        for (const auto& x : c_) {
            mpq_class y = x * mpq_class(d);
            y.canonicalize();
            c.push_back(y.get_num());
        }
        return {IntPoly(std::move(c)), d};
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpq_class> c_;
};

// Field long division: f = q*g + r with deg r < deg g.
inline std::pair<RatPoly, RatPoly> divrem(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("divrem: zero divisor");
    if (f.is_zero()) return {RatPoly(), RatPoly()};
    if (f.degree() < g.degree()) return {RatPoly(), f};
    std::vector<mpq_class> rem(f.coeffs());
    std::vector<mpq_class> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1, mpq_class(0));
    const int dg = g.degree();
    for (int k = f.degree(); k >= dg; --k) {
        mpq_class q = rem[static_cast<std::size_t>(k)] / g.lc();
        if (q == 0) continue;
        quot[static_cast<std::size_t>(k - dg)] = q;
        for (int i = 0; i <= dg; ++i) rem[static_cast<std::size_t>(k - dg + i)] -= q * g.coeff(i);
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

inline RatPoly gcd_monic(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

// f / gcd(f, f'), made monic.  For a power of an irreducible this is exactly
// the irreducible (used to extract minimal polynomials from characteristic
// polynomials).
inline RatPoly squarefree_part(const RatPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("squarefree_part: need degree >= 1");
    RatPoly g = gcd_monic(f, f.derivative());
    if (g.is_constant()) return f.monic();
    return divrem(f, g).first.monic();
}

// Resultant over Q by the Euclidean recursion
//   Res(A,B) = (-1)^(dA dB) lc(B)^(dA-dR) Res(B,R),  R = A rem B.
// Res(f, 0) is 0 for deg f >= 1 (every root of f is a root of 0).
inline mpq_class resultant_rat(RatPoly A, RatPoly B) {
    if (A.is_zero() && B.is_zero()) throw std::invalid_argument("resultant_rat: both arguments zero");
    if (B.is_zero()) return A.degree() >= 1 ? mpq_class(0) : mpq_class(1);
    if (A.is_zero()) return B.degree() >= 1 ? mpq_class(0) : mpq_class(1);
    mpq_class total = 1;
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        std::swap(A, B);
    }
    while (true) {
        const int dA = A.degree(), dB = B.degree();
        if (dB == 0) {
            mpq_class base = B.lc(), acc = 1;
            for (int i = 0; i < dA; ++i) acc *= base;
            return sign * total * acc;
        }
        RatPoly R = divrem(A, B).second;
        if ((dA & 1) && (dB & 1)) sign = -sign;
        const int dR = R.is_zero() ? -1 : R.degree();
        if (R.is_zero()) return 0;
        mpq_class base = B.lc(), acc = 1;
        for (int i = 0; i < dA - dR; ++i) acc *= base;
        total *= acc;
        A = std::move(B);
        B = std::move(R);
    }
}

// Discriminant of a rational polynomial through integer scaling:
// disc(d*f) = d^(2n-2) disc(f).
inline mpq_class discriminant(const RatPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("discriminant: degree must be at least 1");
    const int n = f.degree();
    auto [F, d] = f.scale_to_integer();
    mpq_class result(discriminant(F));
    result /= mpq_class(pow_mpz(d, static_cast<unsigned long>(2 * n - 2)));
    result.canonicalize();
    return result;
}

}  // namespace galprobe

#endif
