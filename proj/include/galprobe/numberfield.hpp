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

// Number-field arithmetic in Q[alpha]/p, exact minimal polynomials and norm
// products via resultants, Weil heights (the one numeric quantity in the
// repo, with precision doubling until stable), generator search over the
// pigeonhole scan g(0), g(1), ..., bounded-height enumeration of algebraic
// integers, and the exponent formulas consumed by the lab.

#ifndef GALPROBE_NUMBERFIELD_HPP
#define GALPROBE_NUMBERFIELD_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <galprobe/bigint.hpp>
#include <galprobe/factorize.hpp>
#include <galprobe/intpoly.hpp>
#include <galprobe/util.hpp>

namespace galprobe {

// An algebraic number presented by its monic integer minimal polynomial.
struct AlgebraicNumber {
    IntPoly minpoly;

    explicit AlgebraicNumber(IntPoly m) : minpoly(std::move(m)) {
        if (minpoly.is_zero() || minpoly.degree() < 1 || !minpoly.is_monic())
            throw std::invalid_argument("algebraic number: need a monic polynomial of degree >= 1");
        if (!is_irreducible_over_Q(minpoly))
            throw std::invalid_argument("algebraic number: polynomial is not irreducible");
    }

    int degree() const { return minpoly.degree(); }
};

// An element q(alpha) of E = Q[alpha]/p, stored as the reduced residue
// q mod p.  The defining polynomial is validated once on the public
// constructors; arithmetic reuses the already validated field.
class FieldElement {
public:
    FieldElement(IntPoly field_minpoly, RatPoly coords) : p_(std::move(field_minpoly)) {
        if (p_.is_zero() || p_.degree() < 1 || !p_.is_monic())
            throw std::invalid_argument("field element: defining polynomial must be monic of degree >= 1");
        if (!is_irreducible_over_Q(p_))
            throw std::invalid_argument("field element: defining polynomial is not irreducible");
        coords_ = reduce(std::move(coords));
    }

    static FieldElement from_rational(IntPoly field_minpoly, const mpq_class& c) {
        return FieldElement(std::move(field_minpoly), RatPoly::constant(c));
    }

    // The class alpha of X itself (a rational number when deg p = 1).
    static FieldElement generator(IntPoly field_minpoly) {
        return FieldElement(std::move(field_minpoly), RatPoly::monomial(1));
    }

    const IntPoly& field() const { return p_; }
    const RatPoly& coords() const { return coords_; }
    bool is_zero() const { return coords_.is_zero(); }
    bool is_rational() const { return coords_.is_constant(); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.require_same_field(b);
        return FieldElement(a.p_, a.coords_ + b.coords_, reduced_tag{});
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.require_same_field(b);
        return FieldElement(a.p_, a.coords_ - b.coords_, reduced_tag{});
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.require_same_field(b);
        return FieldElement(a.p_, a.reduce(a.coords_ * b.coords_), reduced_tag{});
    }
    friend FieldElement operator*(const mpq_class& c, const FieldElement& a) {
        return FieldElement(a.p_, a.coords_ * c, reduced_tag{});
    }
    friend FieldElement operator*(const FieldElement& a, const mpq_class& c) { return c * a; }
    FieldElement operator-() const { return FieldElement(p_, -coords_, reduced_tag{}); }

    FieldElement pow(unsigned long e) const {
        FieldElement acc(p_, RatPoly::constant(1), reduced_tag{});
        FieldElement base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // Elements of differently presented fields are simply unequal.
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.p_ == b.p_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    struct reduced_tag {};
    FieldElement(IntPoly p, RatPoly reduced, reduced_tag) : p_(std::move(p)), coords_(std::move(reduced)) {}

    RatPoly reduce(RatPoly q) const {
        if (q.is_zero() || q.degree() < p_.degree()) return q;
        return divrem(q, RatPoly(p_)).second;
    }
    void require_same_field(const FieldElement& other) const {
        if (p_ != other.p_) throw std::invalid_argument("field element: mixed defining polynomials");
    }

    IntPoly p_;
    RatPoly coords_;
};

namespace detail {

inline mpq_class frac_ll(long num, long den) {
    mpq_class v{mpz_class(num), mpz_class(den)};
    v.canonicalize();
    return v;
}

inline mpq_class max3(const mpq_class& a, const mpq_class& b, const mpq_class& c) {
    return std::max(a, std::max(b, c));
}

// Exact Newton interpolation through (xs[i], ys[i]); the xs must be distinct.
inline RatPoly interpolate_points(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
    const std::size_t m = xs.size();
    std::vector<mpq_class> dd(ys);
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    RatPoly acc = RatPoly::constant(dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;)
        acc = acc * (RatPoly::monomial(1) - RatPoly::constant(xs[i])) + RatPoly::constant(dd[i]);
    return acc;
}

// prod over the roots beta of p of sum_i g[i](beta) x^i, as a polynomial in
// x.  The product has degree at most deg p * (g.size()-1), so interpolating
// the resultant Res_Y(p, G(x_j, Y)) at that many points plus one is exact.
inline RatPoly conjugate_product(const IntPoly& p, const std::vector<RatPoly>& g) {
    const int points = p.degree() * static_cast<int>(g.size() - 1) + 1;
    const RatPoly P(p);
    std::vector<mpq_class> xs, ys;
    xs.reserve(static_cast<std::size_t>(points));
    ys.reserve(static_cast<std::size_t>(points));
    for (int j = 0; j < points; ++j) {
        const mpq_class x(j);
        RatPoly G;
        mpq_class xpow(1);
        for (const RatPoly& gi : g) {
            G = G + gi * xpow;
            xpow *= x;
        }
        xs.push_back(x);
        ys.push_back(G.is_zero() ? mpq_class(0) : resultant_rat(P, G));
    }
    return interpolate_points(xs, ys);
}

}  // namespace detail

// Minimal polynomial of e over Q as a primitive integer polynomial with
// positive leading coefficient; monic exactly when e is an algebraic
// integer.  Computed exactly: the characteristic polynomial
// Res_Y(p(Y), X - q(Y)) is minpoly^(deg p / deg minpoly), so its monic
// squarefree part is the minimal polynomial.
inline IntPoly minimal_polynomial(const FieldElement& e) {
    const std::vector<RatPoly> g{-e.coords(), RatPoly::constant(1)};
    const RatPoly chi = detail::conjugate_product(e.field(), g);
    const RatPoly m = squarefree_part(chi);
    return m.scale_to_integer().first.primitive_part();
}

namespace detail {

// Complex arithmetic on mpf pairs.  gmp propagates the larger operand
// precision through expressions, so seeding every leaf at prec suffices.
struct Cf {
    mpf_class re, im;
};

inline mpf_class cf_abs(const Cf& z) { return sqrt(z.re * z.re + z.im * z.im); }

inline Cf cf_mul(const Cf& a, const Cf& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

inline Cf cf_div(const Cf& a, const Cf& b) {
    const mpf_class d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// One Durand-Kerner run at fixed precision on a monic separable polynomial;
// returns prod max(1, |root|) and reports whether the sweep converged.
inline double unit_root_product(const std::vector<mpq_class>& monic, unsigned long prec, bool& converged) {
    const int deg = static_cast<int>(monic.size()) - 1;
    std::vector<Cf> coeff;
    coeff.reserve(monic.size());
    for (const mpq_class& q : monic) coeff.push_back({mpf_class(q, prec), mpf_class(0, prec)});

    mpf_class radius(1, prec);
    for (int i = 0; i < deg; ++i) {
        const mpf_class a = 1 + abs(coeff[static_cast<std::size_t>(i)].re);
        if (a > radius) radius = a;
    }

    std::vector<Cf> w(static_cast<std::size_t>(deg));
    std::complex<double> seed(1.0, 0.0);
    for (auto& wi : w) {
        seed *= std::complex<double>(0.4, 0.9);
        wi = {radius * mpf_class(seed.real(), prec), radius * mpf_class(seed.imag(), prec)};
    }

    mpf_class eps(1, prec);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec / 2 + 8);

    converged = false;
    for (int sweep = 0; sweep < 64 + 16 * deg && !converged; ++sweep) {
        mpf_class worst(0, prec);
        for (std::size_t i = 0; i < w.size(); ++i) {
            Cf num = coeff.back();
            for (int k = deg - 1; k >= 0; --k) {
                num = cf_mul(num, w[i]);
                num.re += coeff[static_cast<std::size_t>(k)].re;
            }
            Cf den{mpf_class(1, prec), mpf_class(0, prec)};
            bool collided = false;
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (j == i) continue;
                const Cf diff{w[i].re - w[j].re, w[i].im - w[j].im};
                if (diff.re == 0 && diff.im == 0) {
                    collided = true;
                    break;
                }
                den = cf_mul(den, diff);
            }
            if (collided) {
                w[i].re += eps + 1;
                worst = 1;
                continue;
            }
            const Cf delta = cf_div(num, den);
            w[i].re -= delta.re;
            w[i].im -= delta.im;
            mpf_class scale = cf_abs(w[i]);
            if (scale < 1) scale = 1;
            const mpf_class rel = cf_abs(delta) / scale;
            if (rel > worst) worst = rel;
        }
        if (worst < eps) converged = true;
    }

    mpf_class prod(1, prec);
    for (const auto& wi : w) {
        const mpf_class a = cf_abs(wi);
        if (a > 1) prod *= a;
    }
    return prod.get_d();
}

// Mahler measure |lc| * prod max(1, |root|).  Degrees 0 and 1 are exact;
// beyond that the root product is iterated at doubling precision until two
// successive answers agree to rel_tol.
inline double mahler_measure(const IntPoly& f, double rel_tol = 1e-10) {
    if (f.is_zero()) throw std::invalid_argument("mahler measure: zero polynomial");
    const int deg = f.degree();
    if (deg == 0) return std::abs(f.coeff(0).get_d());
    if (deg == 1) {
        const mpz_class a0 = abs(f.coeff(0)), a1 = abs(f.coeff(1));
        return (a0 > a1 ? a0 : a1).get_d();
    }
    if (discriminant(f) == 0) throw std::invalid_argument("mahler measure: repeated roots");

    std::vector<mpq_class> monic(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) monic[static_cast<std::size_t>(k)] = mpq_class(f.coeff(k)) / mpq_class(f.lc());

    const mpz_class lead_abs(abs(f.lc()));
    const double lead = lead_abs.get_d();
    double prev = 0;
    bool have_prev = false;
    for (unsigned long prec = 128; prec <= 16384; prec *= 2) {
        bool ok = false;
        const double prod = unit_root_product(monic, prec, ok);
        if (!ok) continue;
        if (have_prev && std::abs(prod - prev) <= rel_tol * std::max(std::abs(prod), 1.0)) return lead * prod;
        prev = prod;
        have_prev = true;
    }
    throw std::runtime_error("mahler measure: root product did not stabilize");
}

}  // namespace detail

// Absolute Weil height H(b) = M(minpoly)^(1/deg b), relative error rel_tol.
inline double weil_height(const AlgebraicNumber& b, double rel_tol = 1e-10) {
    return std::pow(detail::mahler_measure(b.minpoly, rel_tol), 1.0 / b.degree());
}

inline double weil_height(const FieldElement& e, double rel_tol = 1e-10) {
    const IntPoly m = minimal_polynomial(e);
    return std::pow(detail::mahler_measure(m, rel_tol), 1.0 / m.degree());
}

namespace detail {

// Fully reduced row basis over Q keyed by pivot column.
struct QSpan {
    std::map<std::size_t, std::vector<mpq_class>> rows;

    std::size_t dim() const { return rows.size(); }

    bool insert(std::vector<mpq_class> v) {
        for (const auto& [pc, r] : rows) {
            if (v[pc] == 0) continue;
            const mpq_class f = v[pc];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * r[k];
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot] == 0) ++pivot;
        if (pivot == v.size()) return false;
        const mpq_class inv = v[pivot];
        for (auto& x : v) x /= inv;
        for (auto& [pc, r] : rows) {
            if (r[pivot] == 0) continue;
            const mpq_class f = r[pivot];
            for (std::size_t k = 0; k < v.size(); ++k) r[k] -= f * v[k];
        }
        rows.emplace(pivot, std::move(v));
        return true;
    }
};

// Degree over Q of the subfield generated by the given elements: dimension
// of the smallest unital Q-span closed under multiplication.
inline int generated_subfield_degree(const IntPoly& p, const std::vector<FieldElement>& b) {
    const int n1 = p.degree();
    QSpan span;
    std::vector<FieldElement> basis;
    auto push = [&](const FieldElement& e) {
        std::vector<mpq_class> v(static_cast<std::size_t>(n1));
        for (int k = 0; k < n1; ++k) v[static_cast<std::size_t>(k)] = e.coords().coeff(k);
        if (!span.insert(std::move(v))) return false;
        basis.push_back(e);
        return true;
    };
    push(FieldElement::from_rational(p, 1));
    for (const FieldElement& e : b) push(e);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t sz = basis.size();
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (push(basis[i] * basis[j])) grew = true;
    }
    return static_cast<int>(span.dim());
}

}  // namespace detail

struct GeneratorSearch {
    long a;
    FieldElement gen;
};

// Scan g(0), g(1), ... for g = X^n2 + sum b_i X^i until the value generates
// the whole field.  The subfield count bound caps the scan at n2*cap + 1
// candidates; the pigeonhole argument says a generator appears within the
// cap whenever the b_i jointly generate, so the cap error never fires then.
inline GeneratorSearch find_generator(const std::vector<FieldElement>& b, long subfield_cap = 0) {
    if (b.empty()) throw std::invalid_argument("generator search: no coefficients");
    const IntPoly& p = b.front().field();
    for (const FieldElement& e : b)
        if (e.field() != p) throw std::invalid_argument("generator search: mixed defining polynomials");
    const int n1 = p.degree();
    if (detail::generated_subfield_degree(p, b) != n1)
        throw std::runtime_error("not generating: the coefficients span a proper subfield");
    if (subfield_cap <= 0) subfield_cap = 1L << std::min(n1, 30);
    const long limit = static_cast<long>(b.size()) * subfield_cap;
    for (long a = 0; a <= limit; ++a) {
        mpq_class power(1);
        FieldElement val = FieldElement::from_rational(p, 0);
        for (const FieldElement& e : b) {
            val = val + power * e;
            power *= a;
        }
        val = val + FieldElement::from_rational(p, power);
        if (minimal_polynomial(val).degree() == n1) return {a, val};
    }
    throw cap_error("cap exceeded: no generator within the subfield bound");
}

// prod over the embeddings sigma of E of sigma(g), for monic g over E given
// by its coefficient list (ascending, last entry 1).  Exact via resultants;
// the result has integer coefficients whenever the g_i are field elements
// with integral coordinates.
inline IntPoly norm_product(const IntPoly& p, const std::vector<FieldElement>& g) {
    if (p.is_zero() || p.degree() < 1 || !p.is_monic() || !is_irreducible_over_Q(p))
        throw std::invalid_argument("norm product: defining polynomial must be monic irreducible");
    if (g.size() < 2) throw std::invalid_argument("norm product: need degree >= 1");
    std::vector<RatPoly> coeffs;
    coeffs.reserve(g.size());
    for (const FieldElement& e : g) {
        if (e.field() != p) throw std::invalid_argument("norm product: coefficient from a different field");
        coeffs.push_back(e.coords());
    }
    if (coeffs.back() != RatPoly::constant(1)) throw std::invalid_argument("norm product: g must be monic");
    return detail::conjugate_product(p, coeffs).to_intpoly();
}

struct SQEnumeration {
    long count = 0;
    std::vector<IntPoly> minimal_polynomials;
};

// Exact count of algebraic integers of degree exactly n over Q with Weil
// height at most Y.  Candidate minimal polynomials range over the box
// |c_k| <= C(n,k) Y^n, which contains every qualifying polynomial because
// c_k is an elementary symmetric function of conjugates whose product of
// large moduli is at most Y^n; correctness only needs the superset.  An
// irreducibility filter and the Mahler filter M <= Y^n do the rest, and
// each surviving polynomial contributes its n conjugate roots.
inline SQEnumeration enumerate_SQ(int n, const mpq_class& Y) {
    if (n < 1 || n > 3) throw std::invalid_argument("height enumeration: degree must be 1, 2 or 3");
    SQEnumeration out;
    if (Y < 1) return out;

    mpq_class Yn(1);
    for (int i = 0; i < n; ++i) Yn *= Y;
    const long binom3[3] = {3, 3, 1};
    std::vector<mpz_class> bound(static_cast<std::size_t>(n));
    mpz_class box(1);
    for (int k = 1; k <= n; ++k) {
        const long c = n == 1 ? 1 : (n == 2 ? (k == 1 ? 2 : 1) : binom3[k - 1]);
        const mpq_class cap = c * Yn;
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), cap.get_num().get_mpz_t(), cap.get_den().get_mpz_t());
        bound[static_cast<std::size_t>(k - 1)] = fl;
        box *= 2 * fl + 1;
    }
    if (box > 10000000) throw cap_error("enumeration cap: coefficient box exceeds 10^7 points");

    const double cutoff = Yn.get_d() * (1.0 + 1e-9);
    std::vector<mpz_class> c(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = -bound[static_cast<std::size_t>(k)];
    while (true) {
        std::vector<mpz_class> coeffs(static_cast<std::size_t>(n) + 1);
        coeffs[static_cast<std::size_t>(n)] = 1;
        for (int k = 1; k <= n; ++k) coeffs[static_cast<std::size_t>(n - k)] = c[static_cast<std::size_t>(k - 1)];
        // M(g) >= |g(0)| for monic g, so an oversized constant term can skip
        // the root solve outright.
        const IntPoly g(coeffs);
        const mpz_class a0(abs(g.coeff(0)));
        if (mpq_class(a0) <= Yn && is_irreducible_over_Q(g) && detail::mahler_measure(g) <= cutoff) {
            out.count += n;
            out.minimal_polynomials.push_back(g);
        }
        int pos = n - 1;
        while (pos >= 0) {
            if (c[static_cast<std::size_t>(pos)] < bound[static_cast<std::size_t>(pos)]) {
                ++c[static_cast<std::size_t>(pos)];
                break;
            }
            c[static_cast<std::size_t>(pos)] = -bound[static_cast<std::size_t>(pos)];
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

namespace detail {

// Sign of c*sqrt(d) - w for rationals c, w and a positive nonsquare d.
inline int cmp_c_sqrtd(const mpq_class& c, long d, const mpq_class& w) {
    const int sc = sgn(c), sw = sgn(w);
    if (sc >= 0 && sw <= 0) return (sc == 0 && sw == 0) ? 0 : 1;
    if (sc <= 0 && sw >= 0) return (sc == 0 && sw == 0) ? 0 : -1;
    const int cm = cmp(mpq_class(c * c * d), mpq_class(w * w));
    return sc > 0 ? cm : -cm;
}

}  // namespace detail

// Exact count of algebraic integers b of E = Q(sqrt(d)) with H(b) <= Y,
// i.e. max(1,|sigma1 b|) * max(1,|sigma2 b|) <= Y^2.  Elements are written
// (u + v sqrt(d))/s with s = 2 and u = v (mod 2) when d = 1 (mod 4), s = 1
// otherwise; every size test is exact (integer norms for imaginary d,
// squaring comparisons against sqrt(d) for real d).
inline long enumerate_quadratic_SE(long d, const mpq_class& Y) {
    if (d == 0 || d == 1) throw std::invalid_argument("quadratic field: d must be a squarefree integer, not 0 or 1");
    for (long q = 2; q * q <= std::labs(d); ++q)
        if (d % (q * q) == 0) throw std::invalid_argument("quadratic field: d must be squarefree");
    if (Y < 1) return 0;

    const bool half = ((d % 4) + 4) % 4 == 1;
    const long s = half ? 2 : 1;
    const mpq_class Y2 = Y * Y;
    const mpq_class Y4 = Y2 * Y2;
    const mpz_class ad(std::labs(d));

    auto floor_q = [](const mpq_class& q) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
        return fl;
    };

    mpz_class umax, vmax;
    if (d < 0) {
        // |b|^2 = (u^2 + |d| v^2) / s^2 is a rational integer.
        umax = isqrt(floor_q(s * s * Y2));
        vmax = isqrt(floor_q(s * s * Y2 / mpq_class(ad)));
    } else {
        // Both conjugates must satisfy |sigma b| <= Y^2 individually.
        umax = floor_q(s * Y2);
        vmax = isqrt(floor_q(s * s * Y4 / mpq_class(static_cast<long>(d))));
    }
    if ((2 * umax + 1) * (2 * vmax + 1) > 10000000)
        throw cap_error("enumeration cap: lattice box exceeds 10^7 points");

    long count = 0;
    for (mpz_class v = -vmax; v <= vmax; ++v) {
        for (mpz_class u = -umax; u <= umax; ++u) {
            if (half && mpz_odd_p(mpz_class(u - v).get_mpz_t())) continue;
            if (d < 0) {
                const mpz_class norm = u * u + ad * v * v;
                mpq_class nq(norm, mpz_class(s * s));
                nq.canonicalize();
                if (nq <= Y2) ++count;
                continue;
            }
            const mpq_class uv2(mpz_class(2 * u * v));
            const mpq_class square_part(mpz_class(u * u + d * v * v));
            const mpq_class s2(s * s);
            const bool big1 = detail::cmp_c_sqrtd(uv2, d, s2 - square_part) > 0;
            const bool big2 = detail::cmp_c_sqrtd(-uv2, d, s2 - square_part) > 0;
            if (!big1 && !big2) {
                ++count;
            } else if (big1 && big2) {
                const mpz_class nn(abs(mpz_class(u * u - d * v * v)));
                mpq_class nq(nn, mpz_class(s * s));
                nq.canonicalize();
                if (nq <= Y2) ++count;
            } else {
                const mpq_class rhs = s2 * Y4 - square_part;
                if (detail::cmp_c_sqrtd(big1 ? uv2 : -uv2, d, rhs) <= 0) ++count;
            }
        }
    }
    return count;
}

// Shape parameters (n1, n2, t, k) for the composite-degree regime n = n1*n2.
struct ExponentParams {
    int n1;
    int n2;
    mpq_class t;
    long k;

    ExponentParams(int n1_, int n2_, mpq_class t_, long k_) : n1(n1_), n2(n2_), t(std::move(t_)), k(k_) {
        if (n1 < 2 || n2 < 2) throw std::invalid_argument("exponent parameters: n1 and n2 must exceed 1");
    }

    int n() const { return n1 * n2; }
};

struct ExponentRecord {
    mpq_class nu_t;
    mpq_class thm14_m;
    mpq_class prop410_nu;
    mpq_class conj_exponent;
    mpq_class thm12_lower;
    mpq_class thm13_lower;
};

// The displayed exponents, evaluated exactly.
inline ExponentRecord exponents(const ExponentParams& params) {
    if (params.t < detail::frac_ll(params.k, params.n1))
        throw std::invalid_argument("exponent parameters: nu_t needs t >= k/n1");
    const mpq_class half = detail::frac_ll(1, 2);
    const mpq_class inv1 = detail::frac_ll(1, params.n1);
    const mpq_class n1q(params.n1), n2q(params.n2);
    const int n = params.n();
    const mpq_class slack = n1q + (1 - inv1) * (n2q - 1);

    ExponentRecord rec;
    rec.nu_t = detail::max3(mpq_class(half + inv1 + n2q), mpq_class(n1q + params.t * n2q), slack);
    rec.prop410_nu = detail::max3(mpq_class(half + inv1 + n2q), mpq_class(n1q + n2q * inv1), slack);
    if (params.n2 == 2 && n >= 10)
        rec.thm14_m = mpq_class(n) * half - detail::frac_ll(2, n) + 1;
    else
        rec.thm14_m = detail::max3(mpq_class(n2q + half + inv1), slack, mpq_class(n1q + n2q * half));
    rec.conj_exponent = -(mpq_class(n) * half);
    rec.thm12_lower = detail::frac_ll((n + 1) / 2, 2) - n;
    rec.thm13_lower = -detail::frac_ll(n + 1, 2);
    return rec;
}

}  // namespace galprobe

#endif  // GALPROBE_NUMBERFIELD_HPP
