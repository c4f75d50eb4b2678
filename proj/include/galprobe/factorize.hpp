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

// Exact factorization of integer polynomials (Zassenhaus: Yun squarefree
// split, mod-p factorization, Hensel lifting to the Landau-Mignotte bound,
// subset recombination) and Frobenius cycle types via factor degrees mod p.

#ifndef GALPROBE_FACTORIZE_HPP
#define GALPROBE_FACTORIZE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <galprobe/bigint.hpp>
#include <galprobe/cycletype.hpp>
#include <galprobe/intpoly.hpp>
#include <galprobe/modpoly.hpp>

namespace galprobe {

// unit * content * prod(factors[i] ^ mult[i]) reproduces the input exactly.
// Factors are primitive with positive leading coefficient, irreducible over
// Q, sorted; the integer content is kept separate because constants are not
// irreducible polynomials.
struct Factorization {
    int unit = 1;
    mpz_class content = 1;
    std::vector<std::pair<IntPoly, int>> factors;

    IntPoly product() const {
        IntPoly r = IntPoly::constant(unit * content);
        for (const auto& [g, m] : factors) r = r * g.pow(static_cast<unsigned>(m));
        return r;
    }
};

inline std::uint64_t next_prime_u64(std::uint64_t p) {
    mpz_class x(static_cast<unsigned long>(p));
    mpz_nextprime(x.get_mpz_t(), x.get_mpz_t());
    return x.get_ui();
}

// Yun's squarefree decomposition of a primitive polynomial with positive
// leading coefficient: returns (g, multiplicity) with input = prod g^mult,
// each g primitive squarefree with positive leading coefficient.
inline std::vector<std::pair<IntPoly, int>> yun_squarefree(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("yun_squarefree: need degree >= 1");
    std::vector<std::pair<IntPoly, int>> out;
    const IntPoly fp = f.derivative();
    IntPoly a = gcd(f, fp);
    if (a.is_constant()) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly b = *try_divide(f, a);
    IntPoly c = *try_divide(fp, a);
    IntPoly d = c - b.derivative();
    int i = 1;
    while (!b.is_constant()) {
        IntPoly g = gcd(b, d);
        if (!g.is_constant()) out.emplace_back(g, i);
        b = *try_divide(b, g);
        c = *try_divide(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace detail {

// Smallest primes of good reduction (p does not divide lc, reduction stays
// squarefree); among the first few such primes, the one with the fewest
// modular factors is kept to shrink the recombination search.
struct ModpChoice {
    std::uint64_t p;
    std::vector<FpPoly> factors;  // monic irreducible, sorted
};

inline ModpChoice choose_factoring_prime(const IntPoly& S) {
    constexpr int kCandidates = 5;
    std::optional<ModpChoice> best;
    std::uint64_t p = 2;
    int seen = 0;
    while (seen < kCandidates) {
        if (mpz_class(S.lc() % static_cast<unsigned long>(p)) != 0) {
            FpPoly sbar = FpPoly::from_int(S, p).monic();
            if (gcd(sbar, sbar.derivative()).is_one()) {
                ++seen;
                std::vector<FpPoly> facs = factor_squarefree_modp(sbar);
                if (facs.size() == 1) return {p, std::move(facs)};
                if (!best || facs.size() < best->factors.size()) best = ModpChoice{p, std::move(facs)};
            }
        }
        p = next_prime_u64(p);
        if (p > 1000000) throw std::logic_error("choose_factoring_prime: no good prime found");
    }
    return *best;
}

// Coefficient bound for lc(S) times any monic-normalized divisor of S
// (Landau-Mignotte): 2^n sqrt(n+1) H(S) |lc(S)|, rounded up.
inline mpz_class mignotte_bound(const IntPoly& S) {
    const int n = S.degree();
    return (isqrt(mpz_class(n + 1)) + 1) * pow_mpz(mpz_class(2), static_cast<unsigned long>(n)) *
           S.height() * abs(S.lc());
}

// Factor a primitive squarefree polynomial with positive leading coefficient.
inline std::vector<IntPoly> factor_squarefree_z(const IntPoly& S) {
    if (S.degree() == 1) return {S};
    ModpChoice mc = choose_factoring_prime(S);
    if (mc.factors.size() == 1) return {S};

    const mpz_class bound = 2 * mignotte_bound(S) + 1;
    unsigned long K = 1;
    mpz_class pk(static_cast<unsigned long>(mc.p));
    while (pk < bound) {
        pk *= static_cast<unsigned long>(mc.p);
        ++K;
    }

    // lift the monic factorization of S/lc to mod p^K
    mpz_class lcinv;
    if (!mpz_invert(lcinv.get_mpz_t(), S.lc().get_mpz_t(), pk.get_mpz_t()))
        throw std::logic_error("factor_squarefree_z: leading coefficient not invertible");
    IntPoly s_monic = zred(S * lcinv, pk);
    std::vector<IntPoly> lifted = hensel_lift(s_monic, mc.factors, mc.p, K);

    std::vector<IntPoly> result;
    IntPoly cur = S;
    std::size_t subset_size = 1;
    while (2 * subset_size <= lifted.size()) {
        // lexicographic combinations of the current modular factor list
        std::vector<std::size_t> idx(subset_size);
        for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
        bool extracted = false;
        for (;;) {
            int degsum = 0;
            for (std::size_t i : idx) degsum += lifted[i].degree();
            if (degsum < cur.degree()) {
                IntPoly cand = IntPoly::constant(cur.lc());
                for (std::size_t i : idx) cand = zred(cand * lifted[i], pk);
                IntPoly h = zsym(cand, pk).primitive_part();
                if (h.lc() < 0) h = -h;
                if (auto q = try_divide(cur, h)) {
                    result.push_back(h);
                    cur = *q;
                    std::vector<IntPoly> keep;
                    for (std::size_t i = 0; i < lifted.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end())
                            keep.push_back(lifted[i]);
                    lifted = std::move(keep);
                    extracted = true;
                    break;
                }
            }
            // next combination
            std::size_t j = subset_size;
            while (j-- > 0) {
                if (idx[j] != j + lifted.size() - subset_size) {
                    ++idx[j];
                    for (std::size_t k = j + 1; k < subset_size; ++k) idx[k] = idx[k - 1] + 1;
                    break;
                }
                if (j == 0) goto combinations_done;
            }
        }
    combinations_done:
        if (!extracted) ++subset_size;
    }
    if (cur.degree() >= 1) result.push_back(cur);
    return result;
}

}  // namespace detail

inline Factorization factor_over_Z(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_over_Z: zero polynomial");
    Factorization out;
    out.unit = f.lc() < 0 ? -1 : 1;
    out.content = f.content();
    if (f.is_constant()) return out;
    IntPoly F = f.divide_scalar_exact(out.unit * out.content);
    for (const auto& [s, mult] : yun_squarefree(F))
        for (IntPoly& g : detail::factor_squarefree_z(s)) out.factors.emplace_back(std::move(g), mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const std::pair<IntPoly, int>& a, const std::pair<IntPoly, int>& b) {
                  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
                  for (int k = a.first.degree(); k >= 0; --k) {
                      int c = cmp(a.first.coeff(k), b.first.coeff(k));
                      if (c != 0) return c < 0;
                  }
                  return a.second < b.second;
              });
    return out;
}

inline bool is_irreducible_over_Q(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1) return false;
    Factorization fac = factor_over_Z(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

// Complete factorization mod p as (monic irreducible, multiplicity) pairs.
// The leading unit lc(f) mod p is implicit: the product of the factor powers
// is the monic normalization of f mod p.
inline std::vector<std::pair<FpPoly, int>> factor_mod_p(const IntPoly& f, std::uint64_t p) {
    if (f.is_zero()) throw std::invalid_argument("factor_mod_p: zero polynomial");
    if (mpz_class(f.lc() % static_cast<unsigned long>(p)) == 0)
        throw std::invalid_argument("factor_mod_p: bad reduction, p divides the leading coefficient");
    FpPoly fbar = FpPoly::from_int(f, p).monic();
    std::vector<std::pair<FpPoly, int>> out;
    if (fbar.degree() == 0) return out;
    for (const auto& [g, mult] : squarefree_decomposition(fbar))
        for (FpPoly& irr : factor_squarefree_modp(g)) out.emplace_back(std::move(irr), mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

// Dedekind: for monic f and unramified p (f squarefree mod p), the multiset
// of irreducible factor degrees of f mod p is the cycle type of a Frobenius
// element of the Galois group.  Ramified p yields nullopt, a value samplers
// skip rather than abort on.  Only the distinct-degree split is needed.
inline std::optional<CycleType> cycle_type_mod_p(const IntPoly& f, std::uint64_t p) {
    if (!f.is_monic()) throw std::invalid_argument("cycle_type_mod_p: f must be monic");
    FpPoly fbar = FpPoly::from_int(f, p);
    if (fbar.degree() < 1) throw std::invalid_argument("cycle_type_mod_p: degree must be at least 1");
    if (!gcd(fbar, fbar.derivative()).is_one()) return std::nullopt;
    std::vector<int> parts;
    for (const auto& [g, d] : distinct_degree_split(fbar)) {
        const int copies = g.degree() / d;
        for (int i = 0; i < copies; ++i) parts.push_back(d);
    }
    return CycleType(std::move(parts));
}

}  // namespace galprobe

#endif
