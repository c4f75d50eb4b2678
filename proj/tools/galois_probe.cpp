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

// Command line front end.  Subcommands wrap the library one-to-one:
// classify, construct, estimate, scan, bounds, lemma41, omega-scan.
// Output goes to stdout as CSV (default) or JSON; exit code 0 on
// success, 2 when a size cap trips, 1 on any other error.

#include <CLI11.hpp>

#include <gmpxx.h>

#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <galprobe/covers.hpp>
#include <galprobe/families.hpp>
#include <galprobe/galois.hpp>
#include <galprobe/intpoly.hpp>
#include <galprobe/lab.hpp>
#include <galprobe/util.hpp>

namespace {

using galprobe::BoxMode;
using galprobe::BoxSpec;
using galprobe::EventSpec;
using galprobe::IntPoly;
using galprobe::RatPoly;
using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<mpz_class> parse_ints(const std::string& text) {
    std::vector<mpz_class> out;
    for (const auto& piece : split(text, ',')) {
        if (piece.empty()) throw std::invalid_argument("params: empty integer in '" + text + "'");
        out.emplace_back(piece);
    }
    return out;
}

std::vector<long> parse_grid(const std::string& text) {
    std::vector<long> out;
    for (const auto& v : parse_ints(text)) out.push_back(static_cast<long>(v.get_si()));
    return out;
}

// leading coefficient first, matching IntPoly::to_text
std::string rat_text(const RatPoly& f) {
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        out += f.coeff(k).get_str();
        if (k > 0) out += ',';
    }
    return out;
}

void emit(const std::string& format, const std::string& csv, const ordered_json& json) {
    if (format == "json")
        std::cout << json.dump(2) << '\n';
    else
        std::cout << csv;
}

void run_classify(const std::string& poly, int budget, const std::string& format) {
    const galprobe::GaloisVerdict v = galprobe::classify(IntPoly::from_text(poly), budget, 0);
    std::string evidence;
    for (std::size_t i = 0; i < v.evidence.size(); ++i) {
        if (i) evidence += "; ";
        evidence += v.evidence[i];
    }
    std::string csv = "group,certainty,evidence\n";
    csv += galprobe::detail::csv_field(v.group);
    csv += ',';
    csv += galprobe::GaloisVerdict::certainty_name(v.certainty);
    csv += ',';
    csv += galprobe::detail::csv_field(evidence);
    csv += '\n';
    emit(format, csv, galprobe::to_json(v));
}

void run_construct(const std::string& family, const std::string& params,
                   const std::string& format) {
    const std::vector<mpz_class> ints = parse_ints(params);
    std::string poly_text, disc_text;
    bool square = false;

    if (family == "prop31") {
        if (ints.size() < 2) throw std::invalid_argument("params: prop31 needs m,B_0..B_{m-1}");
        const int m = static_cast<int>(ints[0].get_si());
        const std::vector<mpz_class> B(ints.begin() + 1, ints.end());
        const IntPoly f = galprobe::prop31(galprobe::Prop31Params(m, B));
        const mpz_class disc = galprobe::discriminant(f);
        poly_text = f.to_text();
        disc_text = disc.get_str();
        square = galprobe::is_perfect_square(disc).is_square;
    } else {
        // n first, the floor((n-1)/2) shape coefficients, then t
        if (ints.size() < 2) throw std::invalid_argument("params: need n,a_1..a_r,t");
        const int n = static_cast<int>(ints[0].get_si());
        const std::vector<mpz_class> a(ints.begin() + 1, ints.end() - 1);
        const galprobe::Thm12Params p(n, a, ints.back());
        const RatPoly f = family == "thm12-even" ? galprobe::thm12_even(p)
                                                 : galprobe::thm12_odd(p);
        const mpq_class disc = galprobe::discriminant(f);
        poly_text = f.is_integral() ? f.to_intpoly().to_text() : rat_text(f);
        disc_text = disc.get_str();
        square = galprobe::is_square_rational(disc);
    }

    std::string csv = "family,poly,disc,disc_square\n";
    csv += family + ',' + galprobe::detail::csv_field(poly_text) + ',' +
           galprobe::detail::csv_field(disc_text) + ',' + (square ? "true" : "false") + '\n';
    emit(format, csv,
         ordered_json{{"family", family},
                      {"poly", poly_text},
                      {"disc", disc_text},
                      {"disc_square", square}});
}

void run_estimate(const BoxSpec& box, const EventSpec& event, int threads,
                  const std::string& format) {
    const std::vector<galprobe::EstimateRecord> records = {galprobe::estimate(box, event, threads)};
    emit(format, galprobe::to_csv(records), galprobe::to_json(records));
}

void run_scan(int n, const std::vector<long>& grid, const EventSpec& event, BoxMode mode,
              std::uint64_t samples, std::uint64_t seed, int threads, const std::string& format) {
    const galprobe::FitResult fit =
        galprobe::scan_fit(n, grid, event, mode, samples, seed, threads);
    std::string csv = galprobe::to_csv(fit.records);
    csv += "\nslope,intercept,r_squared,excluded\n";
    std::string excluded;
    for (std::size_t i = 0; i < fit.excluded.size(); ++i) {
        if (i) excluded += ';';
        excluded += std::to_string(fit.excluded[i]);
    }
    csv += galprobe::detail::g17(fit.slope) + ',' + galprobe::detail::g17(fit.intercept) + ',' +
           galprobe::detail::g17(fit.r_squared) + ',' + excluded + '\n';

    auto points = ordered_json::array();
    for (const auto& pt : fit.points) points.push_back({{"L", pt.L}, {"p_hat", pt.p_hat}});
    emit(format, csv,
         ordered_json{{"records", galprobe::to_json(fit.records)},
                      {"slope", fit.slope},
                      {"intercept", fit.intercept},
                      {"r_squared", fit.r_squared},
                      {"points", points},
                      {"excluded", fit.excluded}});
}

void run_bounds(int n, const std::string& format) {
    const auto rows = galprobe::bounds_table(n);
    std::string csv = "name,exponent\n";
    auto arr = ordered_json::array();
    for (const auto& row : rows) {
        csv += row.name + ',' + row.exponent.get_str() + '\n';
        arr.push_back({{"name", row.name}, {"exponent", row.exponent.get_str()}});
    }
    emit(format, csv, arr);
}

void run_lemma41(int xmax, const std::string& format) {
    std::string csv = "n,X,Y,greedy,brute,agree\n";
    auto arr = ordered_json::array();
    bool all_agree = true;
    for (int n = 2; n <= 3; ++n) {
        for (int x = 1; x <= xmax; ++x) {
            for (int y = 1; y <= x; ++y) {
                const mpz_class greedy =
                    galprobe::m_value(galprobe::greedy_max_partition(x, y), n);
                const mpz_class brute = galprobe::brute_max(x, y, n).value;
                const bool agree = greedy == brute;
                all_agree = all_agree && agree;
                csv += std::to_string(n) + ',' + std::to_string(x) + ',' + std::to_string(y) +
                       ',' + greedy.get_str() + ',' + brute.get_str() + ',' +
                       (agree ? "true" : "false") + '\n';
                arr.push_back({{"n", n},
                               {"X", x},
                               {"Y", y},
                               {"greedy", greedy.get_str()},
                               {"brute", brute.get_str()},
                               {"agree", agree}});
            }
        }
    }
    emit(format, csv, ordered_json{{"rows", arr}, {"all_agree", all_agree}});
}

void run_omega_scan(int n, long L, int budget, const std::string& format) {
    const galprobe::OmegaScanResult res = galprobe::omega_scan(n, L, budget);
    std::string csv = "n,L,total,separable,square_disc,an_count\n";
    csv += std::to_string(n) + ',' + std::to_string(L) + ',' + std::to_string(res.total) + ',' +
           std::to_string(res.separable_count) + ',' + std::to_string(res.square_disc_count) +
           ',' + std::to_string(res.an_count) + '\n';
    emit(format, csv,
         ordered_json{{"n", n},
                      {"L", L},
                      {"total", res.total},
                      {"separable", res.separable_count},
                      {"square_disc", res.square_disc_count},
                      {"an_count", res.an_count}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"galois-probe: Galois statistics of monic integer polynomials drawn from coefficient boxes"};
    app.require_subcommand(1);

    std::string format = "csv";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string poly;
    int classify_budget = 40;
    auto* cls = app.add_subcommand("classify", "Galois group of one polynomial");
    cls->add_option("--poly", poly, "coefficients, leading first")->required();
    cls->add_option("--budget", classify_budget, "Frobenius sampling budget");

    std::string family, params;
    auto* con = app.add_subcommand("construct", "square-discriminant family member");
    con->add_option("family", family, "family name")
        ->required()
        ->check(CLI::IsMember({"thm12-even", "thm12-odd", "prop31"}));
    con->add_option("--params", params, "comma-separated integer parameters")->required();

    int n = 0;
    long L = 0;
    std::string event_text;
    std::uint64_t samples = 0, seed = 0;
    bool exhaustive = false;
    int threads = 1, event_budget = 40;
    auto* est = app.add_subcommand("estimate", "event probability over one box");
    est->add_option("--n", n, "degree")->required();
    est->add_option("--L", L, "coefficient box radius")->required();
    est->add_option("--event", event_text, "event label")->required();
    auto* est_samples = est->add_option("--samples", samples, "Monte Carlo sample count");
    auto* est_exh = est->add_flag("--exhaustive", exhaustive, "walk the whole box");
    est_samples->excludes(est_exh);
    est_exh->excludes(est_samples);
    est->add_option("--seed", seed, "root seed")->envname("GALOIS_PROBE_SEED");
    est->add_option("--threads", threads, "worker count (never changes the result)");
    est->add_option("--budget", event_budget, "Frobenius budget for verdict events");

    std::string grid_text;
    auto* scn = app.add_subcommand("scan", "log-log slope over a radius grid");
    scn->add_option("--n", n, "degree")->required();
    scn->add_option("--grid", grid_text, "comma-separated radii")->required();
    scn->add_option("--event", event_text, "event label")->required();
    scn->add_option("--samples", samples, "Monte Carlo sample count per radius (omit for exhaustive)");
    scn->add_option("--seed", seed, "root seed")->envname("GALOIS_PROBE_SEED");
    scn->add_option("--threads", threads, "worker count");
    scn->add_option("--budget", event_budget, "Frobenius budget for verdict events");

    auto* bnd = app.add_subcommand("bounds", "named exponent table");
    bnd->add_option("--n", n, "degree")->required();

    int xmax = 14;
    auto* lem = app.add_subcommand("lemma41", "greedy versus brute partition maxima");
    lem->add_option("--Xmax", xmax, "largest ground set size");

    int omega_budget = 40;
    auto* omg = app.add_subcommand("omega-scan", "square-discriminant family census");
    omg->add_option("--n", n, "degree")->required();
    omg->add_option("--L", L, "height bound")->required();
    omg->add_option("--budget", omega_budget, "Frobenius budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cls->parsed()) {
            run_classify(poly, classify_budget, format);
        } else if (con->parsed()) {
            run_construct(family, params, format);
        } else if (est->parsed()) {
            if (!exhaustive && samples == 0)
                throw std::invalid_argument("estimate: choose --samples or --exhaustive");
            const BoxSpec box = exhaustive ? BoxSpec::exhaustive(n, L, seed)
                                           : BoxSpec::monte_carlo(n, L, samples, seed);
            run_estimate(box, EventSpec::parse(event_text, event_budget), threads, format);
        } else if (scn->parsed()) {
            const BoxMode mode = samples > 0 ? BoxMode::monte_carlo : BoxMode::exhaustive;
            run_scan(n, parse_grid(grid_text), EventSpec::parse(event_text, event_budget), mode,
                     samples, seed, threads, format);
        } else if (bnd->parsed()) {
            run_bounds(n, format);
        } else if (lem->parsed()) {
            run_lemma41(xmax, format);
        } else if (omg->parsed()) {
            run_omega_scan(n, L, omega_budget, format);
        }
    } catch (const galprobe::cap_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
