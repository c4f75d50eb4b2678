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

// Generators for polynomial families with square discriminant: the monic
// solutions of f' = nXh^2 (even degree) and f - Xf' = -(n-1)(X-1)h^2 (odd
// degree), the even subfamily f_1(X^2), and an exhaustive scan of the
// parameter box that counts alternating-group members.

#ifndef GALPROBE_FAMILIES_HPP
#define GALPROBE_FAMILIES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <galprobe/bigint.hpp>
#include <galprobe/galois.hpp>
#include <galprobe/intpoly.hpp>
#include <galprobe/util.hpp>

namespace galprobe {

// Parameters (a_1..a_r, t) for the derivative-driven constructions.
// r is pinned to floor((n-1)/2) so that the defining equation of either
// parity has degrees that match exactly.
struct Thm12Params {
    int n = 0;
    std::vector<mpz_class> a;
    mpz_class t;

    Thm12Params(int n_, std::vector<mpz_class> a_, mpz_class t_)
        : n(n_), a(std::move(a_)), t(std::move(t_)) {
        if (n < 3) throw std::invalid_argument("family params: degree must be at least 3");
        if (static_cast<int>(a.size()) != r())
            throw std::invalid_argument("family params: need exactly floor((n-1)/2) coefficients");
    }

    int r() const { return (n - 1) / 2; }

    // k = floor((n+1)/2) / 2, the exponent parameter attached to this family.
    mpq_class k() const {
        mpq_class v(mpz_class((n + 1) / 2), mpz_class(2));
        v.canonicalize();
        return v;
    }

    // h = X^r + a_1 X^{r-1} + ... + a_r
    IntPoly h() const {
        std::vector<mpz_class> c(static_cast<std::size_t>(r()) + 1);
        c[static_cast<std::size_t>(r())] = 1;
        for (int i = 1; i <= r(); ++i)
            c[static_cast<std::size_t>(r() - i)] = a[static_cast<std::size_t>(i - 1)];
        return IntPoly(c);
    }
};

// Parameters (B_0..B_{m-1}) for the even subfamily X^m + B_{m-1}X^{m-1} +
// ... + B_1 X + (-1)^m B_0^2 evaluated at X^2.
struct Prop31Params {
    int m = 0;
    std::vector<mpz_class> B;

    Prop31Params(int m_, std::vector<mpz_class> B_) : m(m_), B(std::move(B_)) {
        if (m < 2) throw std::invalid_argument("family params: m must be at least 2");
        if (static_cast<int>(B.size()) != m)
            throw std::invalid_argument("family params: need exactly m coefficients B_0..B_{m-1}");
    }
};

// The odd-degree linear system kills the X^1 coefficient of f - Xf', so it
// is solvable only when the right-hand side has no X^1 term.  The residual
// is that term's coefficient.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(mpz_class residual)
        : std::runtime_error("inconsistent parameters: the defining system has no solution "
                             "(residual " +
                             residual.get_str() + ")"),
          residual_(std::move(residual)) {}

    const mpz_class& residual() const { return residual_; }

private:
    mpz_class residual_;
};

// Unique monic f of even degree n with f' = nXh^2 and f(0) = (-1)^{n/2} t^2.
// The antiderivative is taken termwise; coefficients are integers whenever
// n! divides every a_i, rationals otherwise.
inline RatPoly thm12_even(const Thm12Params& p) {
    if (p.n % 2 != 0 || p.n < 4)
        throw std::invalid_argument("even construction: degree must be even and at least 4");
    const IntPoly fp = mpz_class(p.n) * IntPoly::monomial(1) * (p.h() * p.h());
    std::vector<mpq_class> c(static_cast<std::size_t>(p.n) + 1);
    mpz_class c0(p.t * p.t);
    if ((p.n / 2) % 2 != 0) c0 = -c0;
    c[0] = mpq_class(c0);
    for (int j = 0; j <= p.n - 1; ++j) {
        mpq_class q(fp.coeff(j), mpz_class(j + 1));
        q.canonicalize();
        c[static_cast<std::size_t>(j) + 1] = q;
    }
    return RatPoly(c);
}

// Unique monic f of odd degree n with f - Xf' = -(n-1)(X-1)h^2 and
// (-1)^{(n-1)/2} f'(1) = t^2.  Coefficient i of the left side is (1-i)c_i,
// which vanishes identically at i = 1; the X^1 slot solvability condition
// is (h^2)_0 = (h^2)_1, and c_1 is then pinned by the t equation.
inline RatPoly thm12_odd(const Thm12Params& p) {
    if (p.n % 2 != 1)
        throw std::invalid_argument("odd construction: degree must be odd and at least 3");
    const IntPoly h2 = p.h() * p.h();
    const IntPoly rhs = mpz_class(-(p.n - 1)) * ((IntPoly::monomial(1) - IntPoly::constant(1)) * h2);
    if (rhs.coeff(1) != 0) throw ConsistencyError(rhs.coeff(1));

    std::vector<mpq_class> c(static_cast<std::size_t>(p.n) + 1);
    mpq_class slope_rest;  // sum of i*c_i over i != 1, the known part of f'(1)
    for (int i = 0; i <= p.n; ++i) {
        if (i == 1) continue;
        mpq_class q(rhs.coeff(i), mpz_class(1 - i));
        q.canonicalize();
        c[static_cast<std::size_t>(i)] = q;
        slope_rest += i * q;
    }
    mpz_class target(p.t * p.t);
    if (((p.n - 1) / 2) % 2 != 0) target = -target;
    c[1] = mpq_class(target) - slope_rest;
    return RatPoly(c);
}

// f_1(X^2) where f_1 = X^m + B_{m-1}X^{m-1} + ... + B_1 X + (-1)^m B_0^2.
inline IntPoly prop31_inner(const Prop31Params& p) {
    std::vector<mpz_class> c(static_cast<std::size_t>(p.m) + 1);
    c[static_cast<std::size_t>(p.m)] = 1;
    for (int i = 1; i < p.m; ++i) c[static_cast<std::size_t>(i)] = p.B[static_cast<std::size_t>(i)];
    c[0] = p.B[0] * p.B[0] * (p.m % 2 == 0 ? 1 : -1);
    return IntPoly(c);
}

inline IntPoly prop31(const Prop31Params& p) {
    return prop31_inner(p).compose(IntPoly::monomial(2));
}

struct OmegaScanResult {
    long an_count = 0;           // separable, square disc, verdict A_n
    long square_disc_count = 0;  // separable with square discriminant
    long separable_count = 0;    // nonzero discriminant
    long total = 0;              // full tuple box, before the n! filter
};

namespace detail {

// X -> X/d rescaling that clears denominators while staying monic: the
// result d^n f(X/d) has the same splitting field, and its discriminant is
// d^{n(n-1)} disc(f), so squareness is preserved.
inline IntPoly monic_integral_rescale(const RatPoly& f) {
    if (f.is_integral()) return f.to_intpoly();
    const int n = f.degree();
    mpz_class d(1);
    for (int i = 0; i < n; ++i) {
        mpz_class den = f.coeff(i).get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
        d = d / g * den;
    }
    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    mpz_class scale(1);
    for (int i = n; i >= 0; --i) {
        const mpq_class q = f.coeff(i) * scale;
        c[static_cast<std::size_t>(i)] = q.get_num();
        scale *= d;
    }
    return IntPoly(c);
}

}  // namespace detail

// Exhaustive scan of the tuple box |a_i|, |t| <= floor(sqrt(L)) with the
// integrality filter n! | a_i.  Counts separable members, square-discriminant
// members, and those whose classification verdict is A_n.  Odd degrees
// contribute only on the branch where the defining system is consistent.
inline OmegaScanResult omega_scan(int n, long L, int classify_budget) {
    if (n < 3 || L < 0) throw std::invalid_argument("scan: need degree >= 3 and L >= 0");
    const int r = (n - 1) / 2;
    const mpz_class M = isqrt(mpz_class(L));
    const mpz_class side = 2 * M + 1;
    mpz_class box(1);
    for (int i = 0; i <= r; ++i) box *= side;
    if (box > 10000000)
        throw cap_error("enumeration cap: tuple box exceeds 10^7 points");

    mpz_class nfact(1);
    for (int i = 2; i <= n; ++i) nfact *= i;

    // admissible values for each a_i: multiples of n! in [-M, M]
    std::vector<mpz_class> avals;
    for (mpz_class v = -(M / nfact) * nfact; v <= M; v += nfact) avals.push_back(v);

    const std::string an_name = "A" + std::to_string(n);
    OmegaScanResult res;
    res.total = static_cast<long>(box.get_si());

    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    bool tuples_left = true;
    while (tuples_left) {
        std::vector<mpz_class> a(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)] = avals[idx[static_cast<std::size_t>(i)]];
        for (mpz_class t = -M; t <= M; ++t) {
            RatPoly f;
            try {
                const Thm12Params params(n, a, t);
                f = (n % 2 == 0) ? thm12_even(params) : thm12_odd(params);
            } catch (const ConsistencyError&) {
                continue;
            }
            const mpq_class disc = discriminant(f);
            if (disc == 0) continue;
            res.separable_count += 1;
            if (!is_square_rational(disc)) continue;
            res.square_disc_count += 1;
            const GaloisVerdict v =
                classify(detail::monic_integral_rescale(f), classify_budget, 0);
            if (v.group == an_name) res.an_count += 1;
        }
        tuples_left = false;
        for (int i = 0; i < r; ++i) {
            std::size_t& k = idx[static_cast<std::size_t>(i)];
            if (++k < avals.size()) {
                tuples_left = true;
                break;
            }
            k = 0;
        }
    }
    return res;
}

}  // namespace galprobe

#endif
