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

// Galois-group classification of integer polynomials.  Degrees 3 and 4 are
// settled exactly by the cubic resolvent; higher degrees get sound
// certificates from Frobenius cycle types (Dedekind reduction plus the
// classical Jordan criteria) and otherwise a statistical match of the
// empirical cycle-type distribution against candidate groups.

#ifndef GALPROBE_GALOIS_HPP
#define GALPROBE_GALOIS_HPP

#include <gmpxx.h>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <galprobe/bigint.hpp>
#include <galprobe/cycletype.hpp>
#include <galprobe/factorize.hpp>
#include <galprobe/intpoly.hpp>
#include <galprobe/util.hpp>
#include <galprobe/wreath.hpp>

namespace galprobe {

struct GaloisVerdict {
    enum class Certainty { certified, probable, consistent_with };

    std::string group;  // S5, A6, C4, V4, D4, ..., imprimitive(n1,n2), reducible, inconclusive
    Certainty certainty = Certainty::consistent_with;
    std::vector<std::string> evidence;

    static const char* certainty_name(Certainty c) {
        switch (c) {
            case Certainty::certified: return "certified";
            case Certainty::probable: return "probable";
            case Certainty::consistent_with: return "consistent-with";
        }
        return "?";
    }
};

inline nlohmann::json to_json(const GaloisVerdict& v) {
    return nlohmann::json{{"group", v.group},
                          {"certainty", GaloisVerdict::certainty_name(v.certainty)},
                          {"evidence", v.evidence}};
}

// f = outer(inner) with inner monic, inner(0) = 0, 1 < deg inner < deg f.
struct Decomposition {
    IntPoly outer;
    IntPoly inner;
};

inline bool is_subset_An(const IntPoly& f) {
    const mpz_class d = discriminant(f);
    if (d == 0) throw std::domain_error("inseparable: discriminant is zero");
    return is_perfect_square(d).is_square;
}

namespace detail {

inline bool single_factor(const Factorization& fac) {
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

inline std::string factor_summary(const Factorization& fac) {
    std::string out = "factors:";
    for (const auto& [g, mult] : fac.factors) {
        out += " deg " + std::to_string(g.degree());
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

inline std::string disc_evidence(const mpz_class& d) {
    const SquareWitness w = is_perfect_square(d);
    if (w.is_square) return "disc=" + d.get_str() + " square (" + w.root.get_str() + "^2)";
    return "disc=" + d.get_str() + " nonsquare";
}

inline bool is_prime_int(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline RatPoly rat_pow(const RatPoly& base, int e) {
    RatPoly r = RatPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace detail

inline GaloisVerdict classify_cubic(const IntPoly& f) {
    if (f.is_zero() || f.degree() != 3) throw std::invalid_argument("classify_cubic: need degree 3");
    GaloisVerdict v;
    const Factorization fac = factor_over_Z(f);
    if (!detail::single_factor(fac)) {
        v.group = "reducible";
        v.certainty = GaloisVerdict::Certainty::certified;
        v.evidence.push_back(detail::factor_summary(fac));
        return v;
    }
    const mpz_class d = discriminant(f);
    v.evidence.push_back("irreducible");
    v.evidence.push_back(detail::disc_evidence(d));
    v.group = is_perfect_square(d).is_square ? "C3" : "S3";
    v.certainty = GaloisVerdict::Certainty::certified;
    return v;
}

inline GaloisVerdict classify_quartic(const IntPoly& f) {
    if (f.is_zero() || f.degree() != 4) throw std::invalid_argument("classify_quartic: need degree 4");
    GaloisVerdict v;
    const Factorization fac = factor_over_Z(f);
    if (!detail::single_factor(fac)) {
        v.group = "reducible";
        v.certainty = GaloisVerdict::Certainty::certified;
        v.evidence.push_back(detail::factor_summary(fac));
        return v;
    }
    v.certainty = GaloisVerdict::Certainty::certified;
    v.evidence.push_back("irreducible");

    // monic normalization X^4 + aX^3 + bX^2 + cX + d over Q
    const RatPoly fm = RatPoly(f).monic();
    const mpq_class a = fm.coeff(3), b = fm.coeff(2), c = fm.coeff(1), d = fm.coeff(0);

    // cubic resolvent R(y) = y^3 - b y^2 + (ac-4d) y - (a^2 d - 4bd + c^2)
    const RatPoly resolvent({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, mpq_class(1)});
    const auto [r_int, r_den] = resolvent.scale_to_integer();
    const Factorization rfac = factor_over_Z(r_int);

    std::vector<mpq_class> roots;
    for (const auto& [g, mult] : rfac.factors) {
        if (g.degree() != 1) continue;
        for (int i = 0; i < mult; ++i) {
            mpq_class r(mpz_class(-g.coeff(0)), g.coeff(1));
            r.canonicalize();
            roots.push_back(r);
        }
    }

    const mpz_class disc = discriminant(f);
    v.evidence.push_back("resolvent=" + r_int.to_text());
    v.evidence.push_back(detail::disc_evidence(disc));

    if (roots.empty()) {
        v.evidence.push_back("resolvent irreducible");
        v.group = is_perfect_square(disc).is_square ? "A4" : "S4";
        return v;
    }
    if (roots.size() == 3) {
        v.evidence.push_back("resolvent splits completely");
        v.group = "V4";
        return v;
    }

    // one rational root: cyclic versus dihedral
    const mpq_class beta = roots[0];
    const mpq_class disc_q(disc);
    const auto square_or_disc_square = [&](const mpq_class& t) {
        if (t == 0 || is_square_rational(t)) return std::string("square");
        mpq_class scaled = t / disc_q;
        scaled.canonicalize();
        if (is_square_rational(scaled)) return std::string("square times disc");
        return std::string("neither");
    };
    const mpq_class t1 = beta * beta - 4 * d;
    const mpq_class t2 = a * a - 4 * (b - beta);
    const std::string k1 = square_or_disc_square(t1);
    const std::string k2 = square_or_disc_square(t2);
    v.evidence.push_back("resolvent root beta=" + beta.get_str());
    v.evidence.push_back("beta^2-4d=" + t1.get_str() + ": " + k1);
    v.evidence.push_back("a^2-4(b-beta)=" + t2.get_str() + ": " + k2);
    v.group = (k1 != "neither" && k2 != "neither") ? "C4" : "D4";
    return v;
}

// Unique decomposition f = g(h(X)) with monic h of the requested degree and
// h(0) = 0, when it exists.  h is solved degreewise from the top coefficients
// of f, then f is expanded in base h; the decomposition exists exactly when
// all the digits are constants.
inline std::optional<Decomposition> decompose(const IntPoly& f, int n2) {
    if (f.is_zero() || !f.is_monic()) throw std::invalid_argument("decompose: f must be monic");
    const int n = f.degree();
    if (n2 <= 1 || n2 >= n || n % n2 != 0)
        throw std::invalid_argument("decompose: inner degree must be a proper divisor of deg f");
    const int n1 = n / n2;

    const RatPoly F(f);
    std::vector<mpq_class> hc(static_cast<std::size_t>(n2) + 1, mpq_class(0));
    hc[static_cast<std::size_t>(n2)] = 1;
    for (int k = 1; k <= n2 - 1; ++k) {
        const RatPoly pw = detail::rat_pow(RatPoly(hc), n1);
        mpq_class delta = (F.coeff(n - k) - pw.coeff(n - k)) / n1;
        delta.canonicalize();
        hc[static_cast<std::size_t>(n2 - k)] = delta;
    }
    const RatPoly h(hc);

    std::vector<mpq_class> gc;
    RatPoly rest = F;
    while (!rest.is_zero()) {
        auto [quot, rem] = divrem(rest, h);
        if (!rem.is_zero() && rem.degree() > 0) return std::nullopt;
        gc.push_back(rem.is_zero() ? mpq_class(0) : rem.coeff(0));
        rest = quot;
    }
    const RatPoly g(gc);

    // a monic integral f that decomposes over Q decomposes over Z
    if (!h.is_integral() || !g.is_integral()) return std::nullopt;
    Decomposition result{g.to_intpoly(), h.to_intpoly()};
    if (result.outer.compose(result.inner) != f) return std::nullopt;
    return result;
}

struct CycleTypeSample {
    std::map<CycleType, long> counts;
    long total = 0;
    long ramified_skipped = 0;
};

// Frobenius cycle types of f at the first `prime_budget` unramified primes
// in increasing order; ramified primes are skipped without consuming budget.
inline CycleTypeSample sample_cycle_types(const IntPoly& f, int prime_budget) {
    if (f.is_zero() || !f.is_monic()) throw std::invalid_argument("sample_cycle_types: f must be monic");
    CycleTypeSample s;
    unsigned long p = 2;
    while (s.total < prime_budget) {
        if (const auto t = cycle_type_mod_p(f, p)) {
            ++s.counts[*t];
            ++s.total;
        } else {
            ++s.ramified_skipped;
        }
        p = next_prime_u64(p);
    }
    return s;
}

inline std::string sample_summary(const CycleTypeSample& s) {
    std::string out = "types:";
    for (const auto& [t, c] : s.counts) out += " " + t.to_string() + "x" + std::to_string(c);
    return out;
}

// Exact total-variation distance between a theoretical cycle-type
// distribution and empirical counts.
inline mpq_class total_variation(const std::map<CycleType, mpq_class>& theory,
                                 const std::map<CycleType, long>& counts, long total) {
    if (total <= 0) throw std::invalid_argument("total_variation: need a positive sample count");
    mpq_class sum = 0;
    for (const auto& [t, p] : theory) {
        const auto it = counts.find(t);
        const mpq_class hat = it == counts.end() ? mpq_class(0)
                                                 : detail::make_frac(it->second, total);
        sum += abs(p - hat);
    }
    for (const auto& [t, c] : counts)
        if (!theory.count(t)) sum += detail::make_frac(c, total);
    sum /= 2;
    return sum;
}

struct TvEntry {
    std::string name;
    mpq_class distance;
};

struct TvMatch {
    std::vector<TvEntry> entries;  // candidate order: S_n, A_n, wreath, wreath cap A_n
    std::string best;
    bool tie = false;
};

// Candidate groups for degree n: the full and alternating groups, plus the
// two block-imprimitive candidates when n is even.  Degree 4 uses the
// classical names D4 and V4 for the latter.
inline TvMatch best_tv_match(int n, const std::map<CycleType, long>& counts, long total) {
    std::vector<std::pair<std::string, GroupSpec>> cands;
    cands.emplace_back(GroupSpec::symmetric(n).name(), GroupSpec::symmetric(n));
    cands.emplace_back(GroupSpec::alternating(n).name(), GroupSpec::alternating(n));
    if (n % 2 == 0 && n >= 4) {
        const int m = n / 2;
        cands.emplace_back(n == 4 ? "D4" : GroupSpec::wreath(m).name(), GroupSpec::wreath(m));
        cands.emplace_back(n == 4 ? "V4" : GroupSpec::wreath_cap_an(m).name(),
                           GroupSpec::wreath_cap_an(m));
    }
    TvMatch match;
    for (const auto& [name, spec] : cands)
        match.entries.push_back({name, total_variation(cycle_type_distribution(spec), counts, total)});
    std::size_t best = 0;
    int at_min = 1;
    for (std::size_t i = 1; i < match.entries.size(); ++i) {
        if (match.entries[i].distance < match.entries[best].distance) {
            best = i;
            at_min = 1;
        } else if (match.entries[i].distance == match.entries[best].distance) {
            ++at_min;
        }
    }
    match.best = match.entries[best].name;
    match.tie = at_min > 1;
    return match;
}

// Full classification pipeline.  The prime sampling plan is deterministic
// (first unramified primes in order), so the seed does not influence the
// result; it is part of the stable call signature.
inline GaloisVerdict classify(const IntPoly& f, int prime_budget, std::uint64_t seed) {
    (void)seed;
    if (f.is_zero() || !f.is_monic() || f.degree() < 3)
        throw std::invalid_argument("classify: need a monic polynomial of degree at least 3");
    const int n = f.degree();
    if (n == 3) return classify_cubic(f);
    if (n == 4) return classify_quartic(f);

    GaloisVerdict v;
    const Factorization fac = factor_over_Z(f);
    if (!detail::single_factor(fac)) {
        v.group = "reducible";
        v.certainty = GaloisVerdict::Certainty::certified;
        v.evidence.push_back(detail::factor_summary(fac));
        return v;
    }

    const mpz_class disc = discriminant(f);
    const bool inside_an = is_perfect_square(disc).is_square;
    v.evidence.push_back(detail::disc_evidence(disc));

    const CycleTypeSample sample = sample_cycle_types(f, prime_budget);
    v.evidence.push_back("sampled " + std::to_string(sample.total) + " unramified primes (" +
                         std::to_string(sample.ramified_skipped) + " ramified skipped)");
    if (sample.total > 0) v.evidence.push_back(sample_summary(sample));

    // A power of an element with exactly one part equal to the prime p and
    // no other part divisible by p is a pure p-cycle.
    std::map<int, CycleType> pure_cycles;
    for (const auto& [t, c] : sample.counts) {
        for (int p : t.parts) {
            if (p < 2 || !detail::is_prime_int(p) || t.count(p) != 1) continue;
            bool clean = true;
            for (int q : t.parts)
                if (q != p && q % p == 0) clean = false;
            if (clean && !pure_cycles.count(p)) pure_cycles.emplace(p, t);
        }
    }
    for (const auto& [p, t] : pure_cycles)
        v.evidence.push_back("pure " + std::to_string(p) + "-cycle from " + t.to_string());

    const bool prime_degree = detail::is_prime_int(n);
    const bool seen_n11 = sample.counts.count(CycleType({n - 1, 1})) > 0;
    if (prime_degree) v.evidence.push_back("primitive: degree " + std::to_string(n) + " is prime");
    else if (seen_n11) v.evidence.push_back("primitive: observed " + CycleType({n - 1, 1}).to_string());

    // Jordan: a primitive group with a pure p-cycle contains A_n when p = 3
    // or p <= n-3, and equals S_n when p = 2.
    bool contains_an = pure_cycles.count(3) > 0;
    for (const auto& [p, t] : pure_cycles)
        if (p >= 5 && p <= n - 3) contains_an = true;

    if (!inside_an && (prime_degree || seen_n11) && (pure_cycles.count(2) || contains_an)) {
        v.group = "S" + std::to_string(n);
        v.certainty = GaloisVerdict::Certainty::certified;
        v.evidence.push_back(pure_cycles.count(2)
                                 ? "certified: primitive with a transposition"
                                 : "certified: contains A_n, disc nonsquare");
        return v;
    }
    if (inside_an && (prime_degree || (seen_n11 && n % 2 == 0)) && contains_an) {
        v.group = "A" + std::to_string(n);
        v.certainty = GaloisVerdict::Certainty::certified;
        v.evidence.push_back("certified: contains A_n, disc square");
        return v;
    }

    for (int n2 = 2; n2 < n; ++n2) {
        if (n % n2 != 0) continue;
        if (const auto dec = decompose(f, n2)) {
            v.group = "imprimitive(" + std::to_string(n / n2) + "," + std::to_string(n2) + ")";
            v.certainty = GaloisVerdict::Certainty::certified;
            v.evidence.push_back("decomposition: g=" + dec->outer.to_text() +
                                 " h=" + dec->inner.to_text());
            return v;
        }
    }

    if (sample.total == 0) {
        v.group = "inconclusive";
        v.certainty = GaloisVerdict::Certainty::consistent_with;
        v.evidence.push_back("no unramified samples requested");
        return v;
    }
    try {
        const TvMatch match = best_tv_match(n, sample.counts, sample.total);
        for (const auto& e : match.entries)
            v.evidence.push_back("TV(" + e.name + ")=" + e.distance.get_str());
        if (match.tie) {
            v.group = "inconclusive";
            v.evidence.push_back("tied total-variation distances");
        } else {
            v.group = match.best;
        }
        v.certainty = GaloisVerdict::Certainty::consistent_with;
    } catch (const cap_error& e) {
        v.group = "inconclusive";
        v.certainty = GaloisVerdict::Certainty::consistent_with;
        v.evidence.push_back(std::string("candidate distributions unavailable: ") + e.what());
    }
    return v;
}

}  // namespace galprobe

#endif
