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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <galprobe/bigint.hpp>
#include <galprobe/factorize.hpp>
#include <galprobe/families.hpp>
#include <galprobe/galois.hpp>
#include <galprobe/lab.hpp>
#include <galprobe/util.hpp>

using galprobe::BoundsRow;
using galprobe::BoxMode;
using galprobe::BoxSpec;
using galprobe::EstimateRecord;
using galprobe::EventSpec;
using galprobe::EventTag;
using galprobe::IntPoly;
using galprobe::Rng;
using galprobe::SampleStream;

namespace {

IntPoly P(const std::string& text) { return IntPoly::from_text(text); }

std::vector<IntPoly> collect(SampleStream s) {
    std::vector<IntPoly> out;
    while (auto f = s.next()) out.push_back(*f);
    return out;
}

std::vector<std::string> texts(const std::vector<IntPoly>& polys) {
    std::vector<std::string> out;
    out.reserve(polys.size());
    for (const auto& f : polys) out.push_back(f.to_text());
    return out;
}

mpz_class mpz_from_i128(__int128 v) {
    const bool neg = v < 0;
    auto u = static_cast<unsigned __int128>(neg ? -v : v);
    mpz_class m(static_cast<unsigned long>(u >> 64));
    m <<= 64;
    m += static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
    return neg ? mpz_class(-m) : m;
}

IntPoly monic_with_lower(const std::vector<long>& a) {
    std::vector<mpz_class> c(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    c[a.size()] = 1;
    return IntPoly(std::move(c));
}

// Counts an event by walking the stream one polynomial at a time through the
// generic predicate, bypassing both the chunked workers and the fast paths.
std::uint64_t stream_count(const BoxSpec& box, const EventSpec& event) {
    SampleStream s(box);
    std::uint64_t hits = 0;
    while (auto f = s.next())
        if (event.holds(*f)) ++hits;
    return hits;
}

const BoundsRow& row_named(const std::vector<BoundsRow>& rows, const std::string& name) {
    for (const auto& r : rows)
        if (r.name == name) return r;
    FAIL("missing bounds row " + name);
    return rows.front();
}

bool has_row(const std::vector<BoundsRow>& rows, const std::string& name) {
    for (const auto& r : rows)
        if (r.name == name) return true;
    return false;
}

}  // namespace

TEST_CASE("exhaustive streams cover the coefficient box exactly once") {
    const auto small = collect(galprobe::sample(BoxSpec::exhaustive(2, 1)));
    REQUIRE(small.size() == 9);
    std::set<std::string> seen;
    for (const auto& f : small) {
        REQUIRE(f.degree() == 2);
        REQUIRE(f.is_monic());
        seen.insert(f.to_text());
    }
    std::set<std::string> expected;
    for (long b = -1; b <= 1; ++b)
        for (long c = -1; c <= 1; ++c) expected.insert(monic_with_lower({c, b}).to_text());
    REQUIRE(seen == expected);

    const BoxSpec cubic = BoxSpec::exhaustive(3, 2);
    REQUIRE(cubic.total() == 125);
    const auto polys = collect(galprobe::sample(cubic));
    REQUIRE(polys.size() == 125);
    std::set<std::string> distinct;
    for (const auto& f : polys) {
        for (int i = 0; i < 3; ++i) {
            REQUIRE(f.coeff(i) >= -2);
            REQUIRE(f.coeff(i) <= 2);
        }
        distinct.insert(f.to_text());
    }
    REQUIRE(distinct.size() == 125);

    REQUIRE(BoxSpec::exhaustive(4, 7).total() == 50625);
}

TEST_CASE("box caps and argument checks") {
    REQUIRE_THROWS_AS(BoxSpec::exhaustive(5, 40), galprobe::cap_error);
    REQUIRE_THROWS_WITH(BoxSpec::exhaustive(5, 40),
                        Catch::Matchers::ContainsSubstring("exhaustive cap"));
    // 101^4 just crosses 10^8, 99^4 stays under
    REQUIRE_THROWS_AS(BoxSpec::exhaustive(4, 50), galprobe::cap_error);
    REQUIRE_NOTHROW(BoxSpec::exhaustive(4, 49));

    REQUIRE_THROWS_AS(BoxSpec::exhaustive(0, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(BoxSpec::monte_carlo(3, -1, 10, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(BoxSpec::monte_carlo(3, 5, 0, 0), std::invalid_argument);
}

TEST_CASE("monte carlo streams are reproducible and chunk-stable") {
    const BoxSpec box = BoxSpec::monte_carlo(4, 10, 300, 7);
    const auto first = texts(collect(galprobe::sample(box)));
    const auto second = texts(collect(galprobe::sample(box)));
    REQUIRE(first == second);

    const auto other = texts(collect(galprobe::sample(BoxSpec::monte_carlo(4, 10, 300, 8))));
    REQUIRE(first != other);

    // a stream crossing the chunk boundary stays reproducible
    const BoxSpec long_box = BoxSpec::monte_carlo(2, 3, 70000, 5);
    const auto a = texts(collect(galprobe::sample(long_box)));
    const auto b = texts(collect(galprobe::sample(long_box)));
    REQUIRE(a.size() == 70000);
    REQUIRE(a == b);

    SampleStream s(box);
    while (auto f = s.next()) {
        for (int i = 0; i < 4; ++i) {
            REQUIRE(f->coeff(i) >= -10);
            REQUIRE(f->coeff(i) <= 10);
        }
        REQUIRE(f->is_monic());
    }
}

TEST_CASE("monte carlo coefficients are uniform on the box") {
    // mean of the constant coefficient; Var a_0 = L(L+1)/3 for uniform {-L..L}
    const long L = 10;
    const std::uint64_t samples = 100000;
    SampleStream s(BoxSpec::monte_carlo(4, L, samples, 42));
    double sum = 0;
    while (auto f = s.next()) sum += f->coeff(0).get_d();
    const double mean = sum / static_cast<double>(samples);
    const double sigma = std::sqrt(static_cast<double>(L * (L + 1)) / 3.0 /
                                   static_cast<double>(samples));
    REQUIRE(std::abs(mean) <= 3.0 * sigma);
}

TEST_CASE("the smallest quadratic box pins the square-discriminant count") {
    const EstimateRecord rec =
        galprobe::estimate(BoxSpec::exhaustive(2, 1), EventSpec::disc_square_nonzero());
    REQUIRE(rec.total == 9);

    // by hand: disc = b^2 - 4c over b, c in {-1,0,1} splits into three
    // square-nonzero values (b,c) = (0,-1), (1,0), (-1,0), one zero at
    // (0,0), and five nonsquares
    std::uint64_t oracle = 0;
    std::set<std::pair<long, long>> hits;
    for (long b = -1; b <= 1; ++b)
        for (long c = -1; c <= 1; ++c) {
            const mpz_class d = b * b - 4 * c;
            if (d != 0 && galprobe::is_perfect_square(d).is_square) {
                ++oracle;
                hits.insert({b, c});
            }
        }
    REQUIRE(oracle == 3);
    REQUIRE(hits == std::set<std::pair<long, long>>{{0, -1}, {1, 0}, {-1, 0}});
    REQUIRE(rec.count == oracle);
    REQUIRE(rec.p_hat == mpq_class(1, 3));
}

TEST_CASE("estimates match brute-force oracles on small boxes") {
    SECTION("cubic rational roots against a direct integer scan") {
        const EstimateRecord rec =
            galprobe::estimate(BoxSpec::exhaustive(3, 10), EventSpec::has_rational_root());
        REQUIRE(rec.total == 9261);
        std::uint64_t oracle = 0;
        for (long b = -10; b <= 10; ++b)
            for (long c = -10; c <= 10; ++c)
                for (long d = -10; d <= 10; ++d) {
                    bool root = false;
                    // integer roots of monic cubics here lie within the Cauchy bound 11
                    for (long x = -11; x <= 11 && !root; ++x)
                        root = x * x * x + b * x * x + c * x + d == 0;
                    if (root) ++oracle;
                }
        REQUIRE(rec.count == oracle);
        mpq_class expected{mpz_class(oracle), mpz_class(9261)};
        expected.canonicalize();
        REQUIRE(rec.p_hat == expected);
    }

    SECTION("quadratic reducibility three ways") {
        const EstimateRecord rec =
            galprobe::estimate(BoxSpec::exhaustive(2, 5), EventSpec::reducible());
        std::uint64_t by_factorization = 0;
        std::uint64_t by_disc = 0;
        for (long b = -5; b <= 5; ++b)
            for (long c = -5; c <= 5; ++c) {
                if (!galprobe::is_irreducible_over_Q(monic_with_lower({c, b}))) ++by_factorization;
                const mpz_class d = b * b - 4 * c;
                if (d >= 0 && galprobe::is_perfect_square(d).is_square) ++by_disc;
            }
        REQUIRE(rec.total == 121);
        REQUIRE(rec.count == by_factorization);
        REQUIRE(rec.count == by_disc);
    }

    SECTION("verdict events stay well-defined at budget zero") {
        const EstimateRecord rec = galprobe::estimate(BoxSpec::exhaustive(3, 2),
                                                      EventSpec::verdict_equals("S3", 0));
        REQUIRE(rec.total == 125);
        std::uint64_t oracle = 0;
        SampleStream s(BoxSpec::exhaustive(3, 2));
        while (auto f = s.next())
            if (galprobe::classify_cubic(*f).group == "S3") ++oracle;
        REQUIRE(rec.count == oracle);
        REQUIRE(rec.count > 0);
        REQUIRE(rec.p_hat.get_den() != 0);
        REQUIRE(rec.ci_low <= rec.p_hat.get_d());
        REQUIRE(rec.p_hat.get_d() <= rec.ci_high);
    }
}

TEST_CASE("wilson intervals bracket the estimate") {
    const double z = 1.959963984540054;
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> cases = {
        {0, 10}, {10, 10}, {1, 10}, {5, 10}, {0, 1}, {7, 8}, {50, 100}, {999, 1000}};
    for (const auto& [count, total] : cases) {
        const auto [lo, hi] = galprobe::wilson95(count, total);
        const double p = static_cast<double>(count) / static_cast<double>(total);
        REQUIRE(lo >= 0.0);
        REQUIRE(hi <= 1.0);
        REQUIRE(lo <= p);
        REQUIRE(p <= hi);
        REQUIRE(lo < hi);
    }

    // zero counts keep a positive upper limit z^2/(n+z^2)
    const auto [lo0, hi0] = galprobe::wilson95(0, 20);
    REQUIRE(lo0 == 0.0);
    REQUIRE(hi0 == Catch::Approx(z * z / (20.0 + z * z)).epsilon(1e-12));
    const auto [lof, hif] = galprobe::wilson95(20, 20);
    REQUIRE(hif == 1.0);

    // textbook value for 5 successes out of 10
    const auto [lo5, hi5] = galprobe::wilson95(5, 10);
    REQUIRE(lo5 == Catch::Approx(0.23659).margin(2e-4));
    REQUIRE(hi5 == Catch::Approx(0.76341).margin(2e-4));

    // tenfold sample at the same rate tightens the interval
    const auto [lo50, hi50] = galprobe::wilson95(50, 100);
    REQUIRE(hi50 - lo50 < hi5 - lo5);

    REQUIRE_THROWS_AS(galprobe::wilson95(0, 0), std::invalid_argument);
}

TEST_CASE("estimate records are invariant under worker count") {
    const BoxSpec box = BoxSpec::monte_carlo(4, 50, 100000, 42);
    const EventSpec event = EventSpec::disc_square_nonzero();
    const EstimateRecord r1 = galprobe::estimate(box, event, 1);
    const EstimateRecord r3 = galprobe::estimate(box, event, 3);
    const EstimateRecord r4 = galprobe::estimate(box, event, 4);
    REQUIRE(r1 == r3);
    REQUIRE(r1 == r4);
    REQUIRE(galprobe::to_csv({r1}) == galprobe::to_csv({r4}));

    const BoxSpec cubic = BoxSpec::exhaustive(3, 10);
    const EstimateRecord e1 = galprobe::estimate(cubic, EventSpec::has_rational_root(), 1);
    const EstimateRecord e5 = galprobe::estimate(cubic, EventSpec::has_rational_root(), 5);
    REQUIRE(e1 == e5);

    // the sequential stream and the chunked workers count the same multiset
    const BoxSpec mc = BoxSpec::monte_carlo(3, 20, 3000, 9);
    REQUIRE(stream_count(mc, event) == galprobe::estimate(mc, event, 2).count);
}

TEST_CASE("fast event paths agree with the generic predicates") {
    SECTION("closed-form discriminants match the resultant") {
        REQUIRE(galprobe::detail::disc_quartic(0, 0, 0, 1) == 256);
        REQUIRE(galprobe::detail::disc_quartic(0, 0, 8, 12) == 331776);  // 576^2
        Rng rng(0xAB12);
        for (int trial = 0; trial < 200; ++trial) {
            const long L = trial < 100 ? 4 : 9999;
            const long b = rng.next_symmetric(L), c = rng.next_symmetric(L);
            const long d = rng.next_symmetric(L), e = rng.next_symmetric(L);
            REQUIRE(mpz_from_i128(galprobe::detail::disc_quadratic(b, c)) ==
                    galprobe::discriminant(monic_with_lower({c, b})));
            REQUIRE(mpz_from_i128(galprobe::detail::disc_cubic(b, c, d)) ==
                    galprobe::discriminant(monic_with_lower({d, c, b})));
            REQUIRE(mpz_from_i128(galprobe::detail::disc_quartic(b, c, d, e)) ==
                    galprobe::discriminant(monic_with_lower({e, d, c, b})));
        }
    }

    SECTION("wide integer square testing") {
        const __int128 k = 12345678901234567LL;
        REQUIRE(galprobe::detail::is_square_i128(k * k));
        REQUIRE_FALSE(galprobe::detail::is_square_i128(k * k + 1));
        REQUIRE_FALSE(galprobe::detail::is_square_i128(k * k - 1));
        REQUIRE(galprobe::detail::is_square_i128(0));
        REQUIRE_FALSE(galprobe::detail::is_square_i128(-4));
        Rng rng(0x5157);
        for (int trial = 0; trial < 500; ++trial) {
            const auto v = static_cast<__int128>(rng.next_u64() >> 8) *
                           static_cast<__int128>(rng.next_u64() >> 8);
            REQUIRE(galprobe::detail::is_square_i128(v) ==
                    galprobe::is_perfect_square(mpz_from_i128(v)).is_square);
        }
    }

    SECTION("dispatched evaluators equal the polynomial predicates") {
        Rng rng(0xFA57);
        const std::vector<EventSpec> events = {
            EventSpec::disc_square_nonzero(), EventSpec::has_rational_root(),
            EventSpec::reducible(), EventSpec::in_An()};
        for (int n = 2; n <= 4; ++n) {
            for (const long L : {4L, 9999L}) {
                std::vector<galprobe::detail::EventEvaluator> evals;
                for (const auto& e : events) evals.emplace_back(e, n, L);
                std::vector<long> a(static_cast<std::size_t>(n));
                for (int trial = 0; trial < 60; ++trial) {
                    for (auto& v : a) v = rng.next_symmetric(L);
                    const IntPoly f = monic_with_lower(a);
                    for (std::size_t k = 0; k < events.size(); ++k)
                        REQUIRE(evals[k](a) == events[k].holds(f));
                }
            }
        }
    }
}

TEST_CASE("log fits recover planted power laws") {
    SECTION("exact line in, exact line out") {
        std::vector<std::pair<double, double>> xy;
        for (const double x : {1.0, 2.0, 3.0, 4.0})
            xy.emplace_back(x, -2.0 * x + std::log(4.0));
        const auto fit = galprobe::detail::fit_line(xy);
        REQUIRE(fit.slope == Catch::Approx(-2.0).epsilon(1e-12));
        REQUIRE(fit.intercept == Catch::Approx(std::log(4.0)).epsilon(1e-12));
        REQUIRE(fit.r_squared == Catch::Approx(1.0).epsilon(1e-12));

        std::vector<std::pair<double, double>> noisy;
        const double bumps[4] = {0.01, -0.008, 0.006, -0.01};
        for (int i = 0; i < 4; ++i)
            noisy.emplace_back(1.0 + i, -1.5 * (1.0 + i) + 0.3 + bumps[i]);
        const auto nf = galprobe::detail::fit_line(noisy);
        REQUIRE(nf.slope == Catch::Approx(-1.5).margin(0.05));
        REQUIRE(nf.r_squared > 0.99);

        REQUIRE_THROWS_AS(
            galprobe::detail::fit_line({{1.0, 2.0}, {1.0, 3.0}, {1.0, 4.0}}),
            std::invalid_argument);
    }

    SECTION("quadratic reducibility decays like 1/L up to its log factor") {
        const auto fit = galprobe::scan_fit(2, {10, 20, 40, 80}, EventSpec::reducible(),
                                            BoxMode::exhaustive);
        REQUIRE(fit.records.size() == 4);
        REQUIRE(fit.points.size() == 4);
        REQUIRE(fit.excluded.empty());
        REQUIRE(fit.slope >= -1.25);
        REQUIRE(fit.slope <= -0.75);
        REQUIRE(fit.r_squared > 0.9);
    }

    SECTION("grid validation and starved grids") {
        REQUIRE_THROWS_AS(galprobe::scan_fit(2, {10, 20}, EventSpec::reducible(),
                                             BoxMode::exhaustive),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(galprobe::scan_fit(2, {0, 1, 2}, EventSpec::reducible(),
                                             BoxMode::exhaustive),
                          std::invalid_argument);
        // a quadratic with square nonzero disc splits, so in_An never fires
        REQUIRE_THROWS_WITH(galprobe::scan_fit(2, {2, 3, 4}, EventSpec::in_An(),
                                               BoxMode::exhaustive),
                            Catch::Matchers::ContainsSubstring("insufficient counts"));
    }
}

TEST_CASE("square-discriminant decay is monotone at cubic degree") {
    const EventSpec event = EventSpec::disc_square_nonzero();
    const EstimateRecord p10 = galprobe::estimate(BoxSpec::exhaustive(3, 10), event, 2);
    const EstimateRecord p20 = galprobe::estimate(BoxSpec::exhaustive(3, 20), event, 2);
    const EstimateRecord p40 = galprobe::estimate(BoxSpec::exhaustive(3, 40), event, 2);
    REQUIRE(p10.p_hat >= p20.p_hat);
    REQUIRE(p20.p_hat >= p40.p_hat);
    REQUIRE(p40.count > 0);
}

TEST_CASE("irreducible square-discriminant polynomials are a strict subset") {
    for (const long L : {5L, 10L}) {
        const auto square = galprobe::estimate(BoxSpec::exhaustive(3, L),
                                               EventSpec::disc_square_nonzero(), 2);
        const auto inside = galprobe::estimate(BoxSpec::exhaustive(3, L),
                                               EventSpec::in_An(), 2);
        // reducible square-disc members such as X^3 - X make it strict
        REQUIRE(inside.count < square.count);
    }
    const auto square4 =
        galprobe::estimate(BoxSpec::exhaustive(4, 3), EventSpec::disc_square_nonzero());
    const auto inside4 = galprobe::estimate(BoxSpec::exhaustive(4, 3), EventSpec::in_An());
    REQUIRE(inside4.count <= square4.count);
}

TEST_CASE("planted compositions match the decomposable event") {
    // a monic quartic is a quadratic in a quadratic exactly when b is even
    // and, with u = b/2, the odd part matches: d = u(c - u^2); writing
    // f = (X^2+uX)^2 + p(X^2+uX) + q forces p = c - u^2 and q = e
    const EventSpec event = EventSpec::decomposable(2);
    std::uint64_t oracle = 0;
    SampleStream s(BoxSpec::exhaustive(4, 2));
    while (auto f = s.next()) {
        const long b = f->coeff(3).get_si(), c = f->coeff(2).get_si();
        const long d = f->coeff(1).get_si();
        bool expected = false;
        if (b % 2 == 0) {
            const long u = b / 2;
            expected = d == u * (c - u * u);
        }
        REQUIRE(event.holds(*f) == expected);
        if (expected) ++oracle;
    }
    const EstimateRecord rec = galprobe::estimate(BoxSpec::exhaustive(4, 2), event, 2);
    REQUIRE(rec.total == 625);
    REQUIRE(rec.count == oracle);
    REQUIRE(oracle > 0);

    Rng rng(0xDEC0);
    for (int trial = 0; trial < 30; ++trial) {
        const long u = rng.next_symmetric(6), p = rng.next_symmetric(6);
        const long q = rng.next_symmetric(6);
        const IntPoly h = monic_with_lower({0, u});
        const IntPoly g = monic_with_lower({q, p});
        REQUIRE(event.holds(g.compose(h)));
    }

    REQUIRE(EventSpec::decomposable(2).holds(P("1,0,0,0,0,0,0")));  // X^6 = (X^2)^3
    REQUIRE(EventSpec::decomposable(3).holds(P("1,0,0,0,0,0,0")));

    REQUIRE_THROWS_AS(
        galprobe::estimate(BoxSpec::exhaustive(4, 1), EventSpec::decomposable(3)),
        std::invalid_argument);
    REQUIRE_THROWS_AS(
        galprobe::estimate(BoxSpec::exhaustive(4, 1), EventSpec::decomposable(4)),
        std::invalid_argument);
    REQUIRE_THROWS_AS(
        galprobe::estimate(BoxSpec::exhaustive(4, 1), EventSpec::decomposable(1)),
        std::invalid_argument);
}

TEST_CASE("family members keep square discriminants") {
    Rng rng(0x9A31);
    const EventSpec event = EventSpec::disc_square_nonzero();
    int separable = 0;
    for (int m = 2; m <= 3; ++m) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<mpz_class> B;
            for (int i = 0; i < m; ++i) B.emplace_back(rng.next_symmetric(15));
            const IntPoly f = galprobe::prop31(galprobe::Prop31Params(m, B));
            if (galprobe::discriminant(f) == 0) continue;
            ++separable;
            REQUIRE(event.holds(f));
        }
    }
    REQUIRE(separable >= 40);
}

TEST_CASE("bounds table pins the named exponents") {
    const auto t4 = galprobe::bounds_table(4);
    REQUIRE(t4.front().name == "conjecture_upper");
    REQUIRE(row_named(t4, "conjecture_lower").exponent == -2);
    REQUIRE(row_named(t4, "conjecture_upper").exponent == -2);
    REQUIRE(row_named(t4, "bhargava").exponent == -1);
    REQUIRE(row_named(t4, "thm12_lower").exponent == -3);
    REQUIRE(row_named(t4, "thm13_lower").exponent == mpq_class(-5, 2));
    REQUIRE(row_named(t4, "thm14_m(2x2)").exponent == 3);
    REQUIRE_FALSE(has_row(t4, "thm13_upper"));  // needs even n >= 6

    const auto t6 = galprobe::bounds_table(6);
    REQUIRE(row_named(t6, "thm13_upper").exponent == mpq_class(-7, 3));
    REQUIRE(row_named(t6, "thm12_lower").exponent == mpq_class(-9, 2));
    REQUIRE(has_row(t6, "thm14_m(3x2)"));
    REQUIRE(has_row(t6, "thm14_m(2x3)"));

    const auto t10 = galprobe::bounds_table(10);
    REQUIRE(row_named(t10, "thm14_m(5x2)").exponent == mpq_class(29, 5));  // 5.8
    REQUIRE(row_named(t10, "thm14_m(2x5)").exponent == 6);
    REQUIRE(row_named(t10, "conjecture_lower").exponent == -5);

    const auto t5 = galprobe::bounds_table(5);
    for (const auto& r : t5) REQUIRE(r.name.rfind("thm14_m", 0) != 0);  // 5 is prime

    REQUIRE_THROWS_AS(galprobe::bounds_table(3), std::invalid_argument);
}

TEST_CASE("reports hold their schema and round-trip") {
    const std::string header = "n,L,event,mode,count,total,p_hat,ci_low,ci_high,seed\n";
    REQUIRE(galprobe::to_csv({}) == header);

    std::vector<EstimateRecord> records;
    records.push_back(
        galprobe::estimate(BoxSpec::exhaustive(2, 1), EventSpec::disc_square_nonzero()));
    records.push_back(galprobe::estimate(BoxSpec::monte_carlo(3, 10, 500, 11),
                                         EventSpec::has_rational_root()));

    const std::string csv = galprobe::to_csv(records);
    REQUIRE(csv.rfind(header, 0) == 0);
    std::vector<std::string> lines;
    for (std::size_t pos = 0; pos < csv.size();) {
        const std::size_t nl = csv.find('\n', pos);
        lines.push_back(csv.substr(pos, nl - pos));
        pos = nl + 1;
    }
    REQUIRE(lines.size() == 3);
    std::vector<std::string> fields;
    for (std::size_t pos = 0; pos <= lines[1].size();) {
        const std::size_t comma = lines[1].find(',', pos);
        fields.push_back(lines[1].substr(pos, comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    REQUIRE(fields.size() == 10);
    REQUIRE(fields[0] == "2");
    REQUIRE(fields[1] == "1");
    REQUIRE(fields[2] == "disc-square");
    REQUIRE(fields[3] == "exhaustive");
    REQUIRE(fields[4] == "3");
    REQUIRE(fields[5] == "9");
    REQUIRE(std::stod(fields[6]) == Catch::Approx(1.0 / 3.0).epsilon(1e-15));
    REQUIRE(fields[9] == "0");

    const auto json = galprobe::to_json(records);
    REQUIRE(json.size() == 2);
    const auto round = galprobe::records_from_json(json);
    REQUIRE(round == records);

    // insertion order survives serialization
    const std::string dumped = galprobe::to_json(records[0]).dump();
    REQUIRE(dumped.find("\"n\"") < dumped.find("\"L\""));
    REQUIRE(dumped.find("\"count\"") < dumped.find("\"total\""));
    REQUIRE(dumped.find("\"p_hat\"") < dumped.find("\"seed\""));

    // label fields with commas are quoted
    EstimateRecord odd = records[0];
    odd.event = "verdict:imprimitive(2,3)";
    REQUIRE(galprobe::to_csv({odd}).find("\"verdict:imprimitive(2,3)\"") != std::string::npos);

    auto broken = galprobe::to_json(records);
    broken[0]["total"] = 0;
    REQUIRE_THROWS_AS(galprobe::records_from_json(broken), std::invalid_argument);
}

TEST_CASE("event labels parse and round-trip") {
    const std::vector<EventSpec> all = {
        EventSpec::disc_square_nonzero(), EventSpec::has_rational_root(),
        EventSpec::reducible(),           EventSpec::in_An(),
        EventSpec::An_certified(25),      EventSpec::decomposable(2),
        EventSpec::verdict_equals("S4", 25)};
    for (const auto& e : all) {
        const EventSpec back = EventSpec::parse(e.name(), 25);
        REQUIRE(back.tag == e.tag);
        REQUIRE(back.name() == e.name());
    }
    REQUIRE(EventSpec::parse("verdict:V4", 7).prime_budget == 7);
    REQUIRE(EventSpec::parse("verdict:V4", 7).group == "V4");
    REQUIRE(EventSpec::parse("an-certified", 9).prime_budget == 9);
    REQUIRE(EventSpec::parse("decomposable:3").inner_degree == 3);
    REQUIRE_THROWS_WITH(EventSpec::parse("nope"),
                        Catch::Matchers::ContainsSubstring("unknown event: nope"));
}

TEST_CASE("verdict and certification events compose the classifier") {
    // X^4+8X+12 has group A4; X^4+1 is the elementary abelian quartic
    REQUIRE(EventSpec::An_certified(20).holds(P("1,0,0,8,12")));
    REQUIRE_FALSE(EventSpec::An_certified(20).holds(P("1,0,0,0,1")));
    REQUIRE(EventSpec::verdict_equals("V4", 20).holds(P("1,0,0,0,1")));
    REQUIRE(EventSpec::verdict_equals("S4", 20).holds(P("1,0,0,1,1")));
    // the cyclic cubic with square disc 81 counts as certified alternating
    REQUIRE(EventSpec::An_certified(20).holds(P("1,0,-3,1")));
    REQUIRE_FALSE(EventSpec::An_certified(20).holds(P("1,0,-2")));

    // degree 2 shim: split iff the disc is a square
    REQUIRE(EventSpec::verdict_equals("reducible", 0).holds(P("1,0,-1")));
    REQUIRE(EventSpec::verdict_equals("S2", 0).holds(P("1,0,-2")));
    REQUIRE_FALSE(EventSpec::An_certified(0).holds(P("1,0,-1")));
}
