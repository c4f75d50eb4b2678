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

// The hyperoctahedral group C2 wr S_m acting imprimitively on 2m points, its
// intersection with the alternating group, and exact cycle-type
// distributions of the candidate groups used for statistical matching.

#ifndef GALPROBE_WREATH_HPP
#define GALPROBE_WREATH_HPP

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <galprobe/cycletype.hpp>
#include <galprobe/util.hpp>

namespace galprobe {

// Permutation of {1..n} in one-line notation, 1-indexed: img[i-1] = sigma(i).
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> images) : img(std::move(images)) {
        std::vector<bool> seen(img.size(), false);
        for (int v : img) {
            if (v < 1 || static_cast<std::size_t>(v) > img.size() || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("Perm: not a bijection");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static Perm identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Perm(std::move(v));
    }

    int n() const { return static_cast<int>(img.size()); }
    int apply(int i) const { return img[static_cast<std::size_t>(i - 1)]; }

    Perm inverse() const {
        std::vector<int> v(img.size());
        for (int i = 1; i <= n(); ++i) v[static_cast<std::size_t>(apply(i) - 1)] = i;
        return Perm(std::move(v));
    }

    // (a o b)(i) = a(b(i))
    friend Perm compose(const Perm& a, const Perm& b) {
        if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
        std::vector<int> v(a.img.size());
        for (int i = 1; i <= a.n(); ++i) v[static_cast<std::size_t>(i - 1)] = a.apply(b.apply(i));
        return Perm(std::move(v));
    }

    CycleType cycle_type() const {
        std::vector<bool> seen(img.size(), false);
        std::vector<int> parts;
        for (int i = 1; i <= n(); ++i) {
            if (seen[static_cast<std::size_t>(i - 1)]) continue;
            int len = 0, j = i;
            do {
                seen[static_cast<std::size_t>(j - 1)] = true;
                j = apply(j);
                ++len;
            } while (j != i);
            parts.push_back(len);
        }
        return CycleType(std::move(parts));
    }

    bool is_even() const { return cycle_type().is_even(); }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

// Element xi * sigma of C2 wr S_m: xi is a sign vector on {1..m}, sigma a
// permutation of the m blocks.
struct WreathElement {
    std::vector<int> xi;  // entries +1 or -1, xi[i-1] = xi(i)
    Perm sigma;

    WreathElement(std::vector<int> signs, Perm s) : xi(std::move(signs)), sigma(std::move(s)) {
        if (static_cast<int>(xi.size()) != sigma.n())
            throw std::invalid_argument("WreathElement: xi and sigma size mismatch");
        for (int v : xi)
            if (v != 1 && v != -1) throw std::invalid_argument("WreathElement: xi entries must be +-1");
    }

    static WreathElement identity(int m) {
        return WreathElement(std::vector<int>(static_cast<std::size_t>(m), 1), Perm::identity(m));
    }

    int m() const { return sigma.n(); }

    friend bool operator==(const WreathElement& a, const WreathElement& b) {
        return a.xi == b.xi && a.sigma == b.sigma;
    }
};

// Group product from the defining relation sigma xi = xi^(sigma^-1) sigma:
// (xi1 s1)(xi2 s2) = xi1 xi2^(s1^-1) s1 s2.
inline WreathElement multiply(const WreathElement& a, const WreathElement& b) {
    if (a.m() != b.m()) throw std::invalid_argument("multiply: mismatched m");
    const Perm ainv = a.sigma.inverse();
    std::vector<int> xi(a.xi.size());
    for (int i = 1; i <= a.m(); ++i)
        xi[static_cast<std::size_t>(i - 1)] =
            a.xi[static_cast<std::size_t>(i - 1)] * b.xi[static_cast<std::size_t>(ainv.apply(i) - 1)];
    return WreathElement(std::move(xi), compose(a.sigma, b.sigma));
}

inline WreathElement inverse(const WreathElement& g) {
    std::vector<int> xi(g.xi.size());
    for (int i = 1; i <= g.m(); ++i)
        xi[static_cast<std::size_t>(i - 1)] = g.xi[static_cast<std::size_t>(g.sigma.apply(i) - 1)];
    return WreathElement(std::move(xi), g.sigma.inverse());
}

// Imprimitive action: xi sigma . (eps, i) = (xi(sigma i) eps, sigma i).
inline std::pair<int, int> act(const WreathElement& g, int eps, int i) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("act: eps must be +-1");
    if (i < 1 || i > g.m()) throw std::invalid_argument("act: block index out of range");
    const int si = g.sigma.apply(i);
    return {g.xi[static_cast<std::size_t>(si - 1)] * eps, si};
}

inline int sign(const WreathElement& g) {
    int s = 1;
    for (int v : g.xi) s *= v;
    return s;
}

// Repo-standard serialization of the 2m points: (eps,i) -> 2(i-1) + (1 if
// eps=+1 else 2).
inline int point_index(int eps, int i) { return 2 * (i - 1) + (eps == 1 ? 1 : 2); }
inline std::pair<int, int> point_decode(int k) { return {k % 2 == 1 ? 1 : -1, (k + 1) / 2}; }

inline Perm induced_perm(const WreathElement& g) {
    std::vector<int> img(static_cast<std::size_t>(2 * g.m()));
    for (int k = 1; k <= 2 * g.m(); ++k) {
        auto [eps, i] = point_decode(k);
        auto [eps2, i2] = act(g, eps, i);
        img[static_cast<std::size_t>(k - 1)] = point_index(eps2, i2);
    }
    return Perm(std::move(img));
}

// ---------------------------------------------------------------------------

struct GroupSpec {
    enum class Tag { Sn, An, WreathC2, WreathC2CapAn, Explicit };

    Tag tag;
    int n;  // ambient degree (2m for the wreath tags)
    std::vector<Perm> elements;  // Explicit only

    static GroupSpec symmetric(int n) { return {Tag::Sn, n, {}}; }
    static GroupSpec alternating(int n) { return {Tag::An, n, {}}; }
    static GroupSpec wreath(int m) { return {Tag::WreathC2, 2 * m, {}}; }
    static GroupSpec wreath_cap_an(int m) { return {Tag::WreathC2CapAn, 2 * m, {}}; }
    static GroupSpec explicit_group(std::vector<Perm> els) {
        if (els.empty()) throw std::invalid_argument("explicit_group: empty");
        int n = els[0].n();
        return {Tag::Explicit, n, std::move(els)};
    }

    std::string name() const {
        switch (tag) {
            case Tag::Sn: return "S" + std::to_string(n);
            case Tag::An: return "A" + std::to_string(n);
            case Tag::WreathC2: return "C2wrS" + std::to_string(n / 2);
            case Tag::WreathC2CapAn:
                return "C2wrS" + std::to_string(n / 2) + "_cap_A" + std::to_string(n);
            case Tag::Explicit: return "explicit[" + std::to_string(elements.size()) + "]";
        }
        return "?";
    }
};

namespace detail {

inline void all_perms(int n, std::vector<Perm>& out) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

inline void all_wreath(int m, std::vector<WreathElement>& out) {
    std::vector<Perm> sigmas;
    all_perms(m, sigmas);
    for (const Perm& s : sigmas) {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> xi(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) xi[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
            out.emplace_back(WreathElement(std::move(xi), s));
        }
    }
}

}  // namespace detail

// All elements as permutations of {1..n}; wreath tags use the imprimitive
// embedding.  Degree is capped: enumeration is a desk-scale tool.
inline std::vector<Perm> enumerate(const GroupSpec& spec) {
    if (spec.tag == GroupSpec::Tag::Explicit) return spec.elements;
    if (spec.n > 12) throw cap_error("enumeration cap: degree above 12");
    std::vector<Perm> out;
    switch (spec.tag) {
        case GroupSpec::Tag::Sn:
            detail::all_perms(spec.n, out);
            break;
        case GroupSpec::Tag::An: {
            std::vector<Perm> all;
            detail::all_perms(spec.n, all);
            for (auto& p : all)
                if (p.is_even()) out.push_back(std::move(p));
            break;
        }
        case GroupSpec::Tag::WreathC2:
        case GroupSpec::Tag::WreathC2CapAn: {
            if (spec.n % 2 != 0) throw std::invalid_argument("enumerate: wreath degree must be even");
            std::vector<WreathElement> els;
            detail::all_wreath(spec.n / 2, els);
            for (const auto& g : els) {
                if (spec.tag == GroupSpec::Tag::WreathC2CapAn && sign(g) != 1) continue;
                out.push_back(induced_perm(g));
            }
            break;
        }
        case GroupSpec::Tag::Explicit:
            break;  // handled above
    }
    return out;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

inline mpz_class mpz_power(const mpz_class& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Fraction in lowest terms; GMP's two-argument constructor does not reduce.
inline mpq_class make_frac(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// z_lambda = prod over distinct part sizes j: j^(m_j) * m_j!; the number of
// permutations in S_n with cycle type lambda is n!/z_lambda.
inline mpz_class z_of_partition(const std::vector<int>& lambda) {
    std::map<int, int> mult;
    for (int p : lambda) ++mult[p];
    mpz_class z = 1;
    for (auto [j, mj] : mult) {
        z *= mpz_power(mpz_class(j), static_cast<unsigned long>(mj));
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mj));
        z *= f;
    }
    return z;
}

// Cycle structure of the induced 2m-point permutation of (xi, sigma): a
// sigma-cycle of length l becomes two l-cycles when the product of xi over
// the cycle is +1 and one 2l-cycle when it is -1; both sign products occur
// in exactly 2^(l-1) of the 2^l assignments.
inline std::map<CycleType, mpq_class> wreath_distribution(int m, bool cap_an) {
    std::map<CycleType, mpq_class> out;
    for (const auto& mu : partitions(m)) {
        const mpq_class p_mu = make_frac(1, z_of_partition(mu));
        std::map<int, int> mult;
        for (int p : mu) ++mult[p];
        std::vector<std::pair<int, int>> distinct(mult.begin(), mult.end());

        // choose how many cycles of each length carry sign product -1
        std::vector<int> k(distinct.size(), 0);
        for (;;) {
            int total_minus = 0;
            mpq_class weight = p_mu;
            std::vector<int> parts;
            for (std::size_t j = 0; j < distinct.size(); ++j) {
                auto [len, count] = distinct[j];
                const int minus = k[j];
                total_minus += minus;
                mpz_class binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(count),
                             static_cast<unsigned long>(minus));
                weight *= make_frac(binom, mpz_power(mpz_class(2), static_cast<unsigned long>(count)));
                for (int i = 0; i < count - minus; ++i) {
                    parts.push_back(len);
                    parts.push_back(len);
                }
                for (int i = 0; i < minus; ++i) parts.push_back(2 * len);
            }
            const bool keep = !cap_an || total_minus % 2 == 0;
            if (keep) {
                if (cap_an) weight *= 2;  // conditioning on the index-2 kernel
                out[CycleType(parts)] += weight;
            }
            // advance the mixed-radix counter
            std::size_t j = 0;
            while (j < k.size()) {
                if (k[j] < distinct[j].second) {
                    ++k[j];
                    break;
                }
                k[j] = 0;
                ++j;
            }
            if (j == k.size()) break;
        }
    }
    return out;
}

}  // namespace detail

// Exact cycle-type probabilities.  S_n and A_n use the 1/z_lambda partition
// formula (n <= 16); the wreath groups use the block-cycle sign analysis;
// explicit groups are counted directly.
inline std::map<CycleType, mpq_class> cycle_type_distribution(const GroupSpec& spec) {
    std::map<CycleType, mpq_class> out;
    switch (spec.tag) {
        case GroupSpec::Tag::Sn:
        case GroupSpec::Tag::An: {
            if (spec.n > 16) throw cap_error("enumeration cap: partition formula limited to n <= 16");
            const bool an = spec.tag == GroupSpec::Tag::An;
            for (const auto& lambda : detail::partitions(spec.n)) {
                CycleType t(lambda);
                if (an && !t.is_even()) continue;
                out[t] += detail::make_frac(an ? 2 : 1, detail::z_of_partition(lambda));
            }
            break;
        }
        case GroupSpec::Tag::WreathC2:
        case GroupSpec::Tag::WreathC2CapAn:
            if (spec.n / 2 > 16) throw cap_error("enumeration cap: wreath blocks limited to m <= 16");
            out = detail::wreath_distribution(spec.n / 2, spec.tag == GroupSpec::Tag::WreathC2CapAn);
            break;
        case GroupSpec::Tag::Explicit: {
            const mpq_class each =
                detail::make_frac(1, mpz_class(static_cast<unsigned long>(spec.elements.size())));
            for (const Perm& p : spec.elements) out[p.cycle_type()] += each;
            break;
        }
    }
    return out;
}

}  // namespace galprobe

#endif
