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

#ifndef GALPROBE_LAB_HPP
#define GALPROBE_LAB_HPP

// Experiment harness over the large box model: deterministic streams of
// monic degree-n polynomials with lower coefficients uniform on {-L..L},
// event counters with Wilson intervals, log-log slope fits, the named
// exponent table, and CSV/JSON reports.
//
// Determinism contract: every record is a pure function of (box, event).
// Monte Carlo streams are produced in fixed-length chunks whose generators
// are seeded by child_seed(root seed, chunk index), and exhaustive runs
// index the coefficient box directly, so the multiset of sampled
// polynomials never depends on the worker count.  Counts reduce by
// addition, which is order-free.

#include <gmpxx.h>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <galprobe/bigint.hpp>
#include <galprobe/factorize.hpp>
#include <galprobe/galois.hpp>
#include <galprobe/intpoly.hpp>
#include <galprobe/numberfield.hpp>
#include <galprobe/util.hpp>

namespace galprobe {

enum class BoxMode { monte_carlo, exhaustive };

inline const char* mode_name(BoxMode m) {
    return m == BoxMode::exhaustive ? "exhaustive" : "monte-carlo";
}

// Monic degree-n box; the n lower coefficients range over {-L..L}.
struct BoxSpec {
    int n = 0;
    long L = 0;
    BoxMode mode = BoxMode::monte_carlo;
    std::uint64_t samples = 0;  // Monte Carlo draws; unused when exhaustive
    std::uint64_t seed = 0;

    BoxSpec(int n_, long L_, BoxMode mode_, std::uint64_t samples_, std::uint64_t seed_)
        : n(n_), L(L_), mode(mode_), samples(samples_), seed(seed_) {
        if (n < 1) throw std::invalid_argument("box: degree must be at least 1");
        if (L < 0) throw std::invalid_argument("box: radius must be nonnegative");
        if (mode == BoxMode::monte_carlo && samples == 0)
            throw std::invalid_argument("box: need at least one sample");
        if (mode == BoxMode::exhaustive) {
            mpz_class points;
            mpz_ui_pow_ui(points.get_mpz_t(), 2 * static_cast<unsigned long>(L) + 1,
                          static_cast<unsigned long>(n));
            if (points > 100000000)
                throw cap_error("exhaustive cap: box holds more than 10^8 polynomials");
        }
    }

    static BoxSpec monte_carlo(int n, long L, std::uint64_t samples, std::uint64_t seed) {
        return BoxSpec(n, L, BoxMode::monte_carlo, samples, seed);
    }

    static BoxSpec exhaustive(int n, long L, std::uint64_t seed = 0) {
        return BoxSpec(n, L, BoxMode::exhaustive, 0, seed);
    }

    // Number of polynomials a full stream emits.
    std::uint64_t total() const {
        if (mode == BoxMode::monte_carlo) return samples;
        std::uint64_t points = 1;
        const std::uint64_t base = 2 * static_cast<std::uint64_t>(L) + 1;
        for (int j = 0; j < n; ++j) points *= base;  // fits: the ctor capped it at 10^8
        return points;
    }
};

enum class EventTag {
    disc_square_nonzero,
    has_rational_root,
    reducible,
    in_An,
    An_certified,
    decomposable,
    verdict_equals,
};

// A decidable predicate on box polynomials, evaluated through the exact
// classification stack.  `prime_budget` feeds the Frobenius sampler of the
// verdict events; the others ignore it.
struct EventSpec {
    EventTag tag = EventTag::disc_square_nonzero;
    int inner_degree = 0;     // decomposable
    std::string group;        // verdict_equals
    int prime_budget = 0;     // An_certified, verdict_equals

    static EventSpec disc_square_nonzero() { return {}; }
    static EventSpec has_rational_root() { return with_tag(EventTag::has_rational_root); }
    static EventSpec reducible() { return with_tag(EventTag::reducible); }
    static EventSpec in_An() { return with_tag(EventTag::in_An); }
    static EventSpec An_certified(int prime_budget) {
        EventSpec e = with_tag(EventTag::An_certified);
        e.prime_budget = prime_budget;
        return e;
    }
    static EventSpec decomposable(int inner_degree) {
        EventSpec e = with_tag(EventTag::decomposable);
        e.inner_degree = inner_degree;
        return e;
    }
    static EventSpec verdict_equals(std::string group, int prime_budget) {
        EventSpec e = with_tag(EventTag::verdict_equals);
        e.group = std::move(group);
        e.prime_budget = prime_budget;
        return e;
    }

    // Stable report label; also the CLI spelling.
    std::string name() const {
        switch (tag) {
            case EventTag::disc_square_nonzero: return "disc-square";
            case EventTag::has_rational_root: return "rational-root";
            case EventTag::reducible: return "reducible";
            case EventTag::in_An: return "in-an";
            case EventTag::An_certified: return "an-certified";
            case EventTag::decomposable: return "decomposable:" + std::to_string(inner_degree);
            case EventTag::verdict_equals: return "verdict:" + group;
        }
        return "?";
    }

    static EventSpec parse(const std::string& text, int prime_budget = 40) {
        if (text == "disc-square") return disc_square_nonzero();
        if (text == "rational-root") return has_rational_root();
        if (text == "reducible") return reducible();
        if (text == "in-an") return in_An();
        if (text == "an-certified") return An_certified(prime_budget);
        if (text.rfind("decomposable:", 0) == 0)
            return decomposable(std::stoi(text.substr(13)));
        if (text.rfind("verdict:", 0) == 0)
            return verdict_equals(text.substr(8), prime_budget);
        throw std::invalid_argument("unknown event: " + text);
    }

    bool holds(const IntPoly& f) const {
        switch (tag) {
            case EventTag::disc_square_nonzero: {
                const mpz_class d = discriminant(f);
                return d != 0 && is_perfect_square(d).is_square;
            }
            case EventTag::has_rational_root: {
                // rational roots of a monic integer polynomial are integers
                if (f.coeff(0) == 0) return true;
                for (const auto& [g, mult] : factor_over_Z(f).factors)
                    if (g.degree() == 1) return true;
                return false;
            }
            case EventTag::reducible:
                return !is_irreducible_over_Q(f);
            case EventTag::in_An: {
                const mpz_class d = discriminant(f);
                return d != 0 && is_perfect_square(d).is_square && is_irreducible_over_Q(f);
            }
            case EventTag::An_certified: {
                const int deg = f.degree();
                if (deg < 3) return false;  // the degree 1, 2 verdicts are S1, S2, reducible
                const GaloisVerdict v = classify(f, prime_budget, 0);
                if (v.certainty != GaloisVerdict::Certainty::certified) return false;
                // the cubic classifier reports A3 under its cyclic name
                return v.group == (deg == 3 ? "C3" : "A" + std::to_string(deg));
            }
            case EventTag::decomposable:
                return decompose(f, inner_degree).has_value();
            case EventTag::verdict_equals: {
                if (f.degree() >= 3) return classify(f, prime_budget, 0).group == group;
                if (f.degree() == 1) return group == "S1";
                const bool split = is_perfect_square(discriminant(f)).is_square;
                return group == (split ? "reducible" : "S2");
            }
        }
        return false;
    }

  private:
    static EventSpec with_tag(EventTag t) {
        EventSpec e;
        e.tag = t;
        return e;
    }
};

namespace detail {

// Chunk length of Monte Carlo streams and of the parallel work queue.
constexpr std::uint64_t kChunkLen = 65536;

inline void box_point(int n, long L, std::uint64_t index, std::vector<long>& a) {
    const std::uint64_t base = 2 * static_cast<std::uint64_t>(L) + 1;
    for (int j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(j)] = static_cast<long>(index % base) - L;
        index /= base;
    }
}

inline void random_point(Rng& rng, long L, std::vector<long>& a) {
    for (auto& v : a) v = rng.next_symmetric(L);
}

inline IntPoly monic_from_lower(const std::vector<long>& a) {
    std::vector<mpz_class> c(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    c[a.size()] = 1;
    return IntPoly(std::move(c));
}

inline bool is_square_i128(__int128 v) {
    if (v < 0) return false;
    const auto u = static_cast<unsigned __int128>(v);
    auto r = static_cast<unsigned long long>(
        std::sqrt(static_cast<long double>(u)));
    // sqrtl carries 64 mantissa bits, so r is off by at most a few ulps
    while (r > 0 && static_cast<unsigned __int128>(r) * r > u) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= u) ++r;
    return static_cast<unsigned __int128>(r) * r == u;
}

inline __int128 disc_quadratic(long b0, long c0) {
    const __int128 b = b0, c = c0;
    return b * b - 4 * c;
}

inline __int128 disc_cubic(long b0, long c0, long d0) {
    const __int128 b = b0, c = c0, d = d0;
    return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

inline __int128 disc_quartic(long b0, long c0, long d0, long e0) {
    const __int128 b = b0, c = c0, d = d0, e = e0;
    return 256 * e * e * e - 192 * b * d * e * e - 128 * c * c * e * e + 144 * c * d * d * e -
           27 * d * d * d * d + 144 * b * b * c * e * e - 6 * b * b * d * d * e -
           80 * b * c * c * d * e + 18 * b * c * d * d * d + 16 * c * c * c * c * e -
           4 * c * c * c * d * d - 27 * b * b * b * b * e * e + 18 * b * b * b * c * d * e -
           4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e + b * b * c * c * d * d;
}

// Integer root test for a monic polynomial given by its lower coefficients.
// Candidate roots divide a[0]; the caller keeps |a[i]| and the degree small
// enough that the Horner accumulator fits in 128 bits.
inline bool int_root_small(const std::vector<long>& a) {
    if (a[0] == 0) return true;
    const long A = std::labs(a[0]);
    const auto eval = [&](long x) {
        __int128 acc = 1;
        for (std::size_t j = a.size(); j-- > 0;) acc = acc * x + a[j];
        return acc == 0;
    };
    for (long d = 1; d * d <= A; ++d) {
        if (A % d != 0) continue;
        if (eval(d) || eval(-d) || eval(A / d) || eval(-(A / d))) return true;
    }
    return false;
}

// Per-run event evaluator over raw coefficient vectors.  Degrees 2..4 with
// small L take closed-form discriminant or divisor-scan paths; everything
// else routes through EventSpec::holds on the assembled polynomial.  The
// fast paths are cross-checked against the generic ones in the test suite.
class EventEvaluator {
  public:
    EventEvaluator(EventSpec event, int n, long L) : event_(std::move(event)), n_(n) {
        const bool small = L <= 10000;
        switch (event_.tag) {
            case EventTag::disc_square_nonzero:
                if (n >= 2 && n <= 4 && L <= 100000) path_ = Path::disc_closed;
                break;
            case EventTag::has_rational_root:
                if (n <= 8 && small) path_ = Path::root_scan;
                break;
            case EventTag::reducible:
                if (n == 2) path_ = Path::reducible_quadratic;
                else if (n == 3 && small) path_ = Path::reducible_cubic;
                break;
            case EventTag::in_An:
                if (n == 3 && small) path_ = Path::in_an_cubic;
                break;
            default:
                break;
        }
    }

    bool operator()(const std::vector<long>& a) const {
        switch (path_) {
            case Path::disc_closed: {
                const __int128 d = n_ == 2 ? disc_quadratic(a[1], a[0])
                                 : n_ == 3 ? disc_cubic(a[2], a[1], a[0])
                                           : disc_quartic(a[3], a[2], a[1], a[0]);
                return d != 0 && is_square_i128(d);
            }
            case Path::root_scan:
                return int_root_small(a);
            case Path::reducible_quadratic:
                // a monic integer quadratic splits iff its disc is a square >= 0
                return is_square_i128(disc_quadratic(a[1], a[0]));
            case Path::reducible_cubic:
                return int_root_small(a);
            case Path::in_an_cubic: {
                const __int128 d = disc_cubic(a[2], a[1], a[0]);
                return d != 0 && is_square_i128(d) && !int_root_small(a);
            }
            case Path::generic:
                break;
        }
        return event_.holds(monic_from_lower(a));
    }

  private:
    enum class Path { generic, disc_closed, root_scan, reducible_quadratic, reducible_cubic, in_an_cubic };

    EventSpec event_;
    int n_;
    Path path_ = Path::generic;
};

}  // namespace detail

// Deterministic stream over the box, in the same chunk order the parallel
// counter uses.
class SampleStream {
  public:
    explicit SampleStream(const BoxSpec& box)
        : box_(box), total_(box.total()), a_(static_cast<std::size_t>(box.n)), rng_(0) {}

    std::uint64_t total() const { return total_; }

    std::optional<IntPoly> next() {
        if (emitted_ == total_) return std::nullopt;
        if (box_.mode == BoxMode::exhaustive) {
            detail::box_point(box_.n, box_.L, emitted_, a_);
        } else {
            if (emitted_ % detail::kChunkLen == 0)
                rng_ = Rng(child_seed(box_.seed, emitted_ / detail::kChunkLen));
            detail::random_point(rng_, box_.L, a_);
        }
        ++emitted_;
        return detail::monic_from_lower(a_);
    }

  private:
    BoxSpec box_;
    std::uint64_t total_ = 0;
    std::uint64_t emitted_ = 0;
    std::vector<long> a_;
    Rng rng_;
};

inline SampleStream sample(const BoxSpec& box) { return SampleStream(box); }

struct EstimateRecord {
    int n = 0;
    long L = 0;
    std::string event;
    std::string mode;
    std::uint64_t count = 0;
    std::uint64_t total = 0;
    mpq_class p_hat;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t seed = 0;

    bool operator==(const EstimateRecord&) const = default;
};

// 95% Wilson score interval.  Behaves at zero and full counts, where the
// Wald interval collapses.
inline std::pair<double, double> wilson95(std::uint64_t count, std::uint64_t total) {
    if (total == 0) throw std::invalid_argument("wilson interval: empty sample");
    const double z = 1.959963984540054;
    const double nn = static_cast<double>(total);
    const double p = static_cast<double>(count) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    double lo = center - half;
    double hi = center + half;
    lo = std::max(0.0, std::min(lo, p));
    hi = std::min(1.0, std::max(hi, p));
    return {lo, hi};
}

// Counts the event over the box.  The result is independent of `threads`:
// workers drain a queue of fixed chunks whose contents are determined by
// (box, chunk index) alone.
inline EstimateRecord estimate(const BoxSpec& box, const EventSpec& event, int threads = 1) {
    if (event.tag == EventTag::decomposable &&
        (event.inner_degree <= 1 || event.inner_degree >= box.n || box.n % event.inner_degree != 0))
        throw std::invalid_argument("estimate: inner degree must be a proper divisor of the box degree");

    const std::uint64_t total = box.total();
    const std::uint64_t chunks = (total + detail::kChunkLen - 1) / detail::kChunkLen;
    const detail::EventEvaluator eval(event, box.n, box.L);

    int workers = std::max(threads, 1);
    if (static_cast<std::uint64_t>(workers) > chunks) workers = static_cast<int>(chunks);

    std::atomic<std::uint64_t> next_chunk{0};
    std::vector<std::uint64_t> hits(static_cast<std::size_t>(workers), 0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const auto work = [&](int w) {
        try {
            std::vector<long> a(static_cast<std::size_t>(box.n));
            std::uint64_t local = 0;
            for (;;) {
                const std::uint64_t c = next_chunk.fetch_add(1);
                if (c >= chunks) break;
                const std::uint64_t lo = c * detail::kChunkLen;
                const std::uint64_t hi = std::min(total, lo + detail::kChunkLen);
                if (box.mode == BoxMode::exhaustive) {
                    for (std::uint64_t i = lo; i < hi; ++i) {
                        detail::box_point(box.n, box.L, i, a);
                        if (eval(a)) ++local;
                    }
                } else {
                    Rng rng(child_seed(box.seed, c));
                    for (std::uint64_t i = lo; i < hi; ++i) {
                        detail::random_point(rng, box.L, a);
                        if (eval(a)) ++local;
                    }
                }
            }
            hits[static_cast<std::size_t>(w)] = local;
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::uint64_t count = 0;
    for (std::uint64_t h : hits) count += h;

    EstimateRecord rec;
    rec.n = box.n;
    rec.L = box.L;
    rec.event = event.name();
    rec.mode = mode_name(box.mode);
    rec.count = count;
    rec.total = total;
    rec.p_hat = mpq_class{mpz_class(count), mpz_class(total)};
    rec.p_hat.canonicalize();
    const auto [lo, hi] = wilson95(count, total);
    rec.ci_low = lo;
    rec.ci_high = hi;
    rec.seed = box.seed;
    return rec;
}

struct FitPoint {
    long L = 0;
    double p_hat = 0;
};

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    std::vector<FitPoint> points;         // grid points the fit used (count >= 5)
    std::vector<long> excluded;           // radii dropped for low counts
    std::vector<EstimateRecord> records;  // every grid estimate, in grid order
};

namespace detail {

struct LineFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
};

inline LineFit fit_line(const std::vector<std::pair<double, double>>& xy) {
    const auto m = static_cast<double>(xy.size());
    double mx = 0, my = 0;
    for (const auto& [x, y] : xy) {
        mx += x;
        my += y;
    }
    mx /= m;
    my /= m;
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : xy) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0) throw std::invalid_argument("fit: needs two distinct abscissae");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0, ss_tot = 0;
    for (const auto& [x, y] : xy) {
        const double e = y - (fit.intercept + fit.slope * x);
        ss_res += e * e;
        ss_tot += (y - my) * (y - my);
    }
    fit.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

}  // namespace detail

// Least-squares slope of log p_hat against log L over the grid.  Grid points
// with fewer than 5 hits are excluded and reported, not fitted; Poisson
// noise at such counts destroys the log fit.
inline FitResult scan_fit(int n, const std::vector<long>& grid, const EventSpec& event,
                          BoxMode mode, std::uint64_t samples = 0, std::uint64_t seed = 0,
                          int threads = 1) {
    if (grid.size() < 3) throw std::invalid_argument("scan: need at least 3 box radii");
    for (long L : grid)
        if (L < 1) throw std::invalid_argument("scan: box radii must be positive");

    FitResult out;
    std::vector<std::pair<double, double>> xy;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const BoxSpec box = mode == BoxMode::exhaustive
                                ? BoxSpec::exhaustive(n, grid[j])
                                : BoxSpec::monte_carlo(n, grid[j], samples, child_seed(seed, j));
        EstimateRecord rec = estimate(box, event, threads);
        if (rec.count >= 5) {
            out.points.push_back({grid[j], rec.p_hat.get_d()});
            xy.emplace_back(std::log(static_cast<double>(grid[j])), std::log(rec.p_hat.get_d()));
        } else {
            out.excluded.push_back(grid[j]);
        }
        out.records.push_back(std::move(rec));
    }
    if (xy.size() < 2)
        throw std::runtime_error("insufficient counts: fewer than two grid points reached 5 hits");
    const detail::LineFit fit = detail::fit_line(xy);
    out.slope = fit.slope;
    out.intercept = fit.intercept;
    out.r_squared = fit.r_squared;
    return out;
}

struct BoundsRow {
    std::string name;
    mpq_class exponent;
};

// Named L-exponents for Prob(G_f = A_n) at degree n.  The thm14_m rows list
// the block-imprimitivity exponent of each factorization n = n1*n2; the
// upper rows hold up to an L^epsilon factor.
inline std::vector<BoundsRow> bounds_table(int n) {
    if (n < 4) throw std::invalid_argument("bounds table: n must be at least 4");
    std::vector<BoundsRow> rows;
    mpq_class conj(n);
    conj /= -2;
    rows.push_back({"conjecture_upper", conj});
    rows.push_back({"conjecture_lower", conj});
    rows.push_back({"bhargava", mpq_class(-1)});
    mpq_class k((n + 1) / 2);
    k /= 2;
    rows.push_back({"thm12_lower", mpq_class(k - n)});
    mpq_class t13(n + 1);
    t13 /= -2;
    rows.push_back({"thm13_lower", t13});
    if (n % 2 == 0 && n >= 6) {
        mpq_class up(n);
        up /= -2;
        up -= mpq_class(2) / n;
        up += 1;
        rows.push_back({"thm13_upper", up});
    }
    for (int n2 = 2; n2 <= n / 2; ++n2) {
        if (n % n2 != 0) continue;
        const int n1 = n / n2;
        if (n1 < 2) continue;
        const ExponentRecord rec = exponents(ExponentParams(n1, n2, mpq_class(1), 1));
        rows.push_back({"thm14_m(" + std::to_string(n1) + "x" + std::to_string(n2) + ")",
                        rec.thm14_m});
    }
    return rows;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

inline std::string to_csv(const std::vector<EstimateRecord>& records) {
    std::string out = "n,L,event,mode,count,total,p_hat,ci_low,ci_high,seed\n";
    for (const auto& r : records) {
        out += std::to_string(r.n) + ',' + std::to_string(r.L) + ',';
        out += detail::csv_field(r.event) + ',' + r.mode + ',';
        out += std::to_string(r.count) + ',' + std::to_string(r.total) + ',';
        out += detail::g17(r.p_hat.get_d()) + ',';
        out += detail::g17(r.ci_low) + ',' + detail::g17(r.ci_high) + ',';
        out += std::to_string(r.seed) + '\n';
    }
    return out;
}

inline nlohmann::ordered_json to_json(const EstimateRecord& r) {
    return nlohmann::ordered_json{{"n", r.n},         {"L", r.L},
                                  {"event", r.event}, {"mode", r.mode},
                                  {"count", r.count}, {"total", r.total},
                                  {"p_hat", r.p_hat.get_d()},
                                  {"ci_low", r.ci_low}, {"ci_high", r.ci_high},
                                  {"seed", r.seed}};
}

inline nlohmann::ordered_json to_json(const std::vector<EstimateRecord>& records) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    return arr;
}

// Inverse of to_json.  p_hat is rebuilt from count/total, which carry the
// exact ratio; the serialized p_hat is their decimal shadow.
inline std::vector<EstimateRecord> records_from_json(const nlohmann::ordered_json& arr) {
    std::vector<EstimateRecord> out;
    for (const auto& j : arr) {
        EstimateRecord r;
        r.n = j.at("n").get<int>();
        r.L = j.at("L").get<long>();
        r.event = j.at("event").get<std::string>();
        r.mode = j.at("mode").get<std::string>();
        r.count = j.at("count").get<std::uint64_t>();
        r.total = j.at("total").get<std::uint64_t>();
        if (r.total == 0) throw std::invalid_argument("records: total must be positive");
        r.p_hat = mpq_class{mpz_class(r.count), mpz_class(r.total)};
        r.p_hat.canonicalize();
        r.ci_low = j.at("ci_low").get<double>();
        r.ci_high = j.at("ci_high").get<double>();
        r.seed = j.at("seed").get<std::uint64_t>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace galprobe

#endif
