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

// Polynomials over prime fields F_p (p < 2^31) and the Hensel-lifting
// machinery over Z/p^K used by the integer factorizer.  The factoring
// stack here is classical: squarefree decomposition in characteristic p,
// distinct-degree splitting, Cantor-Zassenhaus equal-degree splitting
// (trace maps for p = 2), then quadratic Hensel lifting of monic factor
// pairs.

#ifndef GALPROBE_MODPOLY_HPP
#define GALPROBE_MODPOLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include <galprobe/intpoly.hpp>
#include <galprobe/util.hpp>

namespace galprobe {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("invmod_u64: zero is not invertible");
    return powmod_u64(a, p - 2, p);  // p prime
}

// Dense polynomial over F_p, lowest degree first, no trailing zeros.
class FpPoly {
  public:
    explicit FpPoly(std::uint64_t p) : p_(p) { check_prime_size(p); }

    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        check_prime_size(p);
        for (auto& x : c_) x %= p_;
        trim();
    }

    static FpPoly from_int(const IntPoly& f, std::uint64_t p) {
        check_prime_size(p);
        if (f.is_zero()) return FpPoly(p);
        std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()) + 1);
        for (int i = 0; i <= f.degree(); ++i) {
            mpz_class r = f.coeff(i) % static_cast<unsigned long>(p);
            if (r < 0) r += static_cast<unsigned long>(p);
            c[static_cast<std::size_t>(i)] = r.get_ui();
        }
        return FpPoly(p, std::move(c));
    }

    IntPoly to_int() const {
        std::vector<mpz_class> c;
        c.reserve(c_.size());
        for (auto x : c_) c.emplace_back(static_cast<unsigned long>(x));
        return IntPoly(std::move(c));
    }

    static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }
    static FpPoly one(std::uint64_t p) { return FpPoly(p, {1}); }

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    int degree() const {
        if (is_zero()) throw std::invalid_argument("degree of the zero polynomial is undefined");
        return static_cast<int>(c_.size()) - 1;
    }

    std::uint64_t coeff(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return 0;
        return c_[static_cast<std::size_t>(k)];
    }

    std::uint64_t lc() const {
        if (is_zero()) throw std::invalid_argument("leading coefficient of the zero polynomial");
        return c_.back();
    }

    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        a.same_field(b);
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::uint64_t s = (i < a.c_.size() ? a.c_[i] : 0) + (i < b.c_.size() ? b.c_[i] : 0);
            c[i] = s >= a.p_ ? s - a.p_ : s;
        }
        return FpPoly(a.p_, std::move(c));
    }

    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        a.same_field(b);
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
            std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
            c[i] = x >= y ? x - y : x + a.p_ - y;
        }
        return FpPoly(a.p_, std::move(c));
    }

    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        a.same_field(b);
        if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
        std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] = (c[i + j] + static_cast<unsigned __int128>(a.c_[i]) * b.c_[j]) % a.p_;
            }
        }
        return FpPoly(a.p_, std::move(c));
    }

    FpPoly scaled(std::uint64_t s) const {
        std::vector<std::uint64_t> c(c_);
        for (auto& x : c) x = mulmod_u64(x, s, p_);
        return FpPoly(p_, std::move(c));
    }

    FpPoly monic() const {
        if (is_zero()) throw std::invalid_argument("monic: zero polynomial");
        if (is_monic()) return *this;
        return scaled(invmod_u64(lc(), p_));
    }

    FpPoly derivative() const {
        if (c_.size() <= 1) return FpPoly(p_);
        std::vector<std::uint64_t> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = mulmod_u64(c_[i], i % p_, p_);
        return FpPoly(p_, std::move(c));
    }

    // Lexicographic on (degree, coefficients highest first); total order used
    // to make factor lists deterministic.
    friend bool operator<(const FpPoly& a, const FpPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

  private:
    static void check_prime_size(std::uint64_t p) {
        if (p < 2 || p > (1ULL << 31)) throw std::invalid_argument("FpPoly: modulus out of range");
    }
    void same_field(const FpPoly& o) const {
        if (p_ != o.p_) throw std::invalid_argument("FpPoly: mixed moduli");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

inline std::pair<FpPoly, FpPoly> divrem(const FpPoly& f, const FpPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("FpPoly divrem: zero divisor");
    const std::uint64_t p = f.modulus();
    if (f.is_zero() || f.degree() < g.degree()) return {FpPoly(p), f};
    const std::uint64_t inv = invmod_u64(g.lc(), p);
    std::vector<std::uint64_t> rem(f.coeffs());
    std::vector<std::uint64_t> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1, 0);
    const int dg = g.degree();
    for (int k = f.degree(); k >= dg; --k) {
        std::uint64_t q = mulmod_u64(rem[static_cast<std::size_t>(k)], inv, p);
        if (q == 0) continue;
        quot[static_cast<std::size_t>(k - dg)] = q;
        for (int i = 0; i <= dg; ++i) {
            auto& slot = rem[static_cast<std::size_t>(k - dg + i)];
            std::uint64_t sub = mulmod_u64(q, g.coeff(i), p);
            slot = slot >= sub ? slot - sub : slot + p - sub;
        }
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

inline FpPoly rem(const FpPoly& f, const FpPoly& g) { return divrem(f, g).second; }

inline FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

inline FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return rem(a * b, m); }

inline FpPoly powmod(FpPoly base, const mpz_class& e, const FpPoly& m) {
    if (e < 0) throw std::invalid_argument("FpPoly powmod: negative exponent");
    FpPoly r = FpPoly::one(m.modulus());
    base = rem(base, m);
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mulmod(r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m);
    }
    return r;
}

// Squarefree decomposition in characteristic p: returns (g, multiplicity)
// pairs with input = prod g^mult, each g monic squarefree, multiplicities
// distinct.  Handles the f' = 0 case via p-th roots (Frobenius is the
// identity on F_p coefficients).
inline std::vector<std::pair<FpPoly, int>> squarefree_decomposition(const FpPoly& f) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("squarefree_decomposition: input must be monic");
    const std::uint64_t p = f.modulus();
    std::map<int, FpPoly> out;
    auto absorb = [&out](const FpPoly& g, int mult) {
        if (g.is_one()) return;
        auto it = out.find(mult);
        if (it == out.end())
            out.emplace(mult, g);
        else
            it->second = it->second * g;
    };

    struct Frame {
        FpPoly f;
        int scale;
    };
    std::vector<Frame> stack{{f, 1}};
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if (fr.f.is_one()) continue;
        FpPoly fp = fr.f.derivative();
        if (fp.is_zero()) {
            // f = v(X^p) = v(X)^p over F_p
            std::vector<std::uint64_t> v(static_cast<std::size_t>(fr.f.degree()) / p + 1, 0);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = fr.f.coeff(static_cast<int>(i * p));
            stack.push_back({FpPoly(p, std::move(v)), fr.scale * static_cast<int>(p)});
            continue;
        }
        FpPoly c = gcd(fr.f, fp);
        FpPoly w = divrem(fr.f, c).first;
        int i = 1;
        while (!w.is_one()) {
            FpPoly y = gcd(w, c);
            FpPoly z = divrem(w, y).first;
            absorb(z.is_zero() ? z : z.monic(), i * fr.scale);
            w = std::move(y);
            c = divrem(c, w).first;
            ++i;
        }
        if (!c.is_one()) stack.push_back({c, fr.scale});
    }

    std::vector<std::pair<FpPoly, int>> result;
    result.reserve(out.size());
    for (auto& [mult, g] : out) result.emplace_back(std::move(g), mult);
    return result;
}

// Distinct-degree splitting of a monic squarefree polynomial: (product of
// all irreducible factors of degree d, d) pairs, d increasing.
inline std::vector<std::pair<FpPoly, int>> distinct_degree_split(const FpPoly& f) {
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("distinct_degree_split: input must be monic");
    const std::uint64_t p = f.modulus();
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly v = f;
    if (v.degree() == 0) return out;
    FpPoly h = FpPoly::x(p);
    int d = 0;
    while (v.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, mpz_class(static_cast<unsigned long>(p)), v);
        FpPoly g = gcd(h - FpPoly::x(p), v);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            v = divrem(v, g).first;
            h = rem(h, v);
        }
    }
    if (v.degree() > 0) out.emplace_back(v, v.degree());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace maps for p = 2) of a
// monic product of distinct irreducibles all of degree d.  Randomness is
// drawn from a stream seeded only by (p, d, degree), so results are
// reproducible.
inline void equal_degree_split(const FpPoly& f, int d, std::vector<FpPoly>& out) {
    const std::uint64_t p = f.modulus();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    Rng rng(child_seed(0xED5EEDULL ^ p, static_cast<std::uint64_t>(d) << 32 |
                                            static_cast<std::uint64_t>(f.degree())));
    const mpz_class half_order = (pow_mpz(mpz_class(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
    for (;;) {
        std::vector<std::uint64_t> ac(static_cast<std::size_t>(f.degree()), 0);
        for (auto& x : ac) x = rng.next_below(p);
        FpPoly a(p, std::move(ac));
        if (a.is_zero()) continue;
        FpPoly g = gcd(a, f);
        if (g.is_one()) {
            if (p == 2) {
                // trace map a + a^2 + ... + a^(2^(d-1))
                FpPoly t(p), b = rem(a, f);
                for (int i = 0; i < d; ++i) {
                    t = t + b;
                    b = mulmod(b, b, f);
                }
                g = gcd(t, f);
            } else {
                FpPoly b = powmod(a, half_order, f);
                g = gcd(b - FpPoly::one(p), f);
            }
        }
        if (g.is_one() || g.degree() == f.degree()) continue;
        equal_degree_split(g, d, out);
        equal_degree_split(divrem(f, g).first, d, out);
        return;
    }
}

// Monic irreducible factors of a monic squarefree polynomial, sorted.
inline std::vector<FpPoly> factor_squarefree_modp(const FpPoly& f) {
    std::vector<FpPoly> out;
    for (const auto& [g, d] : distinct_degree_split(f)) equal_degree_split(g, d, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic on integer polynomials with coefficients reduced mod m (m = p^K),
// plus the quadratic Hensel step.  Coefficients are kept in [0, m).

inline IntPoly zred(const IntPoly& f, const mpz_class& m) {
    if (f.is_zero()) return f;
    std::vector<mpz_class> c(static_cast<std::size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), f.coeff(i).get_mpz_t(), m.get_mpz_t());
        c[static_cast<std::size_t>(i)] = r;
    }
    return IntPoly(std::move(c));
}

// Representative with coefficients in (-m/2, m/2].
inline IntPoly zsym(const IntPoly& f, const mpz_class& m) {
    if (f.is_zero()) return f;
    std::vector<mpz_class> c(static_cast<std::size_t>(f.degree()) + 1);
    const mpz_class half = m / 2;
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), f.coeff(i).get_mpz_t(), m.get_mpz_t());
        if (r > half) r -= m;
        c[static_cast<std::size_t>(i)] = r;
    }
    return IntPoly(std::move(c));
}

// Division with remainder mod m by a monic divisor.
inline std::pair<IntPoly, IntPoly> zdivrem_monic(const IntPoly& f, const IntPoly& g, const mpz_class& m) {
    if (g.is_zero() || !g.is_monic()) throw std::invalid_argument("zdivrem_monic: divisor must be monic");
    IntPoly F = zred(f, m);
    if (F.is_zero() || F.degree() < g.degree()) return {IntPoly(), F};
    std::vector<mpz_class> rem(F.coeffs());
    std::vector<mpz_class> quot(static_cast<std::size_t>(F.degree() - g.degree()) + 1, mpz_class(0));
    const int dg = g.degree();
    for (int k = F.degree(); k >= dg; --k) {
        mpz_class q = rem[static_cast<std::size_t>(k)];
        if (q == 0) continue;
        quot[static_cast<std::size_t>(k - dg)] = q;
        for (int i = 0; i <= dg; ++i) {
            auto& slot = rem[static_cast<std::size_t>(k - dg + i)];
            mpz_class v = slot - q * g.coeff(i);
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
            slot = v;
        }
    }
    return {zred(IntPoly(std::move(quot)), m), IntPoly(std::move(rem))};
}

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m),
// h monic, to the same data mod m^2.  Degrees are preserved.
struct HenselPair {
    IntPoly g, h, s, t;
};

inline HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const mpz_class& m) {
    const mpz_class m2 = m * m;
    const IntPoly& g = in.g;
    const IntPoly& h = in.h;
    const IntPoly& s = in.s;
    const IntPoly& t = in.t;
    IntPoly e = zred(f - g * h, m2);
    auto [q, r] = zdivrem_monic(s * e, h, m2);
    IntPoly g1 = zred(g + t * e + q * g, m2);
    IntPoly h1 = zred(h + r, m2);
    IntPoly b = zred(s * g1 + t * h1 - IntPoly::constant(1), m2);
    auto [c, d] = zdivrem_monic(s * b, h1, m2);
    IntPoly s1 = zred(s - d, m2);
    IntPoly t1 = zred(t - t * b - c * g1, m2);
    return {g1, h1, s1, t1};
}

// Extended Euclid over F_p: returns monic gcd and s, t with s a + t b = gcd.
inline std::tuple<FpPoly, FpPoly, FpPoly> xgcd(const FpPoly& a, const FpPoly& b) {
    const std::uint64_t p = a.modulus();
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = FpPoly::one(p), s1 = FpPoly(p);
    FpPoly t0 = FpPoly(p), t1 = FpPoly::one(p);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FpPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const std::uint64_t inv = invmod_u64(r0.lc(), p);
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Lift a pairwise-coprime monic factorization of a monic f from mod p to
// mod p^K.  Returned factors are monic with coefficients in [0, p^K).
inline std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<FpPoly>& factors,
                                        std::uint64_t p, unsigned long K) {
    if (!f.is_monic()) throw std::invalid_argument("hensel_lift: f must be monic");
    if (factors.empty()) throw std::invalid_argument("hensel_lift: no factors");
    const mpz_class target = pow_mpz(mpz_class(static_cast<unsigned long>(p)), K);
    std::vector<IntPoly> out;
    out.reserve(factors.size());

    IntPoly current = zred(f, target);  // monic since f is monic and deg f < target bound
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        // split current = factors[i] * (product of the rest) and lift the pair
        FpPoly g0 = factors[i];
        FpPoly h0 = FpPoly::one(p);
        for (std::size_t j = i + 1; j < factors.size(); ++j) h0 = h0 * factors[j];
        auto [d, s0, t0] = xgcd(g0, h0);
        if (!d.is_one()) throw std::logic_error("hensel_lift: factors not coprime mod p");
        HenselPair pair{g0.to_int(), h0.to_int(), s0.to_int(), t0.to_int()};
        mpz_class m(static_cast<unsigned long>(p));
        while (m < target) {
            pair = hensel_step(current, pair, m);
            m = m * m;
        }
        out.push_back(zred(pair.g, target));
        current = zred(pair.h, target);
    }
    out.push_back(current);
    return out;
}

}  // namespace galprobe

#endif
