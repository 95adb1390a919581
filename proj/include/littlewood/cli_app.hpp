#ifndef LITTLEWOOD_CLI_APP_HPP
#define LITTLEWOOD_CLI_APP_HPP

#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "littlewood/json_io.hpp"
#include "littlewood/oddcase.hpp"

namespace littlewood::cli {

constexpr const char* kVersion = "littlewood 0.1.0";

struct Ctx {
    std::string out_dir = "results";
    std::uint64_t seed = 0;
    int jobs = 1;
    double tol = 1e-10;
    std::string format = "json";

    std::string subcommand;
    json parameters = json::object();
    std::vector<std::filesystem::path> outputs;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

inline void emit(Ctx& ctx, const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::path(ctx.out_dir) / name;
    atomic_write(path, contents);
    ctx.outputs.push_back(path);
}

inline void write_manifest(Ctx& ctx) {
    json m;
    m["subcommand"] = ctx.subcommand;
    m["parameters"] = ctx.parameters;
    m["seed"] = ctx.seed;
    m["version"] = kVersion;
    m["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.t0).count();
    json outs = json::array();
    for (const auto& p : ctx.outputs) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        char hex[32];
        std::snprintf(hex, sizeof(hex), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(buf.str())));
        outs.push_back({{"path", p.string()}, {"fnv1a64", std::string(hex)}});
    }
    m["outputs"] = outs;
    atomic_write(std::filesystem::path(ctx.out_dir) / (ctx.subcommand + "_manifest.json"), m.dump(2) + "\n");
}

inline std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

inline std::vector<std::pair<long long, long long>> parse_term_list(const std::string& s) {
    std::vector<std::pair<long long, long long>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw error("terms must be m:p pairs");
        out.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
    }
    return out;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

struct SelftestResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

inline std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
    std::vector<SelftestResult> results;
    auto check = [&](const std::string& name, auto&& fn) {
        SelftestResult r;
        r.name = name;
        try {
            fn(r);
            if (r.detail.empty()) r.ok = true;
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    };
    auto random_reciprocal = [](int degree, std::mt19937_64& rng) {
        std::vector<int> c(static_cast<std::size_t>(degree) + 1, 1);
        for (int j = (degree + 1) / 2; j <= degree; ++j) {
            const int v = (rng() & 1) ? 1 : -1;
            c[static_cast<std::size_t>(j)] = v;
            c[static_cast<std::size_t>(degree - j)] = v;
        }
        return LittlewoodPoly(std::move(c));
    };
    auto uniform = [](std::mt19937_64& rng, double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };

    check("polycore: Q-identity round trip", [&](SelftestResult& r) {
        std::mt19937_64 rng(seed + 1);
        for (int trial = 0; trial < 100; ++trial) {
            const int N = 1 + static_cast<int>(rng() % 48);
            auto P = random_reciprocal(N, rng);
            auto Q = build_Q(P);
            for (int k = 0; k < 8; ++k) {
                const double theta = uniform(rng, 0.0, 6.283185307179586);
                std::complex<double> lhs, rhs;
                if (N % 2 == 0) {
                    lhs = eval_circle(P, theta);
                    rhs = std::polar(1.0, theta * N / 2.0) *
                          (2.0 * Q.eval_circle(theta).real() - P.coeffs[static_cast<std::size_t>(N / 2)]);
                } else {
                    lhs = eval_circle(P, 2.0 * theta);
                    rhs = 2.0 * std::polar(1.0, theta * N) * Q.eval_circle(theta).real();
                }
                if (std::abs(lhs - rhs) > 1e-10) {
                    r.detail = "round trip error at degree " + std::to_string(N);
                    return;
                }
            }
        }
    });

    check("rootcount: Sturm census equals grid oracle", [&](SelftestResult& r) {
        std::mt19937_64 rng(seed + 2);
        for (int trial = 0; trial < 100; ++trial) {
            const int N = 1 + static_cast<int>(rng() % 30);
            auto P = random_reciprocal(N, rng);
            auto f = to_cosine(P);
            if (cosine_root_census(f).odd_multiplicity_count != grid_sign_change_oracle(f, 1 << 13)) {
                r.detail = "mismatch on " + to_sign_string(P);
                return;
            }
        }
    });

    check("enumsearch: small-degree minima and histogram mass", [&](SelftestResult& r) {
        const long long expect[] = {0, 1, 2, 3, 2, 3, 2};
        for (int N = 1; N <= 6; ++N) {
            auto dual = scan_reciprocal(N);
            long long mass = 0;
            for (const auto& [k, v] : dual.mult.histogram) mass += v;
            if (dual.mult.minimum != expect[N] || mass != static_cast<long long>(dual.enumerated)) {
                r.detail = "unexpected result at N=" + std::to_string(N);
                return;
            }
        }
    });

    check("structure: greedy matches DP oracle", [&](SelftestResult& r) {
        std::mt19937_64 rng(seed + 3);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t len = 1 + rng() % 128;
            const std::size_t D = 1 + rng() % 6;
            std::vector<long long> s(len);
            for (std::size_t n = 0; n < len; ++n)
                s[n] = (n >= D && rng() % 10 < 8) ? s[n - D] : static_cast<long long>(rng() % 3) - 1;
            const bool aligned = trial % 2 == 0;
            if (decompose(s, D, aligned).block_count() != min_blocks_dp(s, D, aligned)) {
                r.detail = "greedy != dp";
                return;
            }
        }
    });

    check("structure: exact reconstruction identities", [&](SelftestResult&) {
        std::mt19937_64 rng(seed + 4);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t len = 8 + rng() % 64;
            const std::size_t D = 1 + rng() % 4;
            std::vector<long long> s(len);
            for (std::size_t n = 0; n < len; ++n)
                s[n] = (n >= D && rng() % 10 < 8) ? s[n - D] : static_cast<long long>(rng() % 3) - 1;
            to_geometric(decompose(s, D, true), s); // throws on identity failure
            std::vector<long long> eps(D);
            for (std::size_t m = 0; m < D; ++m) eps[m] = static_cast<long long>(rng() % 3) - 1;
            to_corollary_form(s, D, eps);
        }
    });

    check("spectral: factorization round trip", [&](SelftestResult& r) {
        std::mt19937_64 rng(seed + 5);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Complex> d(2 + rng() % 15);
            for (auto& v : d) v = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
            if (std::abs(d.back()) < 1e-3) d.back() += 1.0;
            auto f = fejer_riesz_factor(autocorrelation(d), 1e-8);
            if (f.residual > 1e-8) {
                r.detail = "residual " + std::to_string(f.residual);
                return;
            }
        }
    });

    check("spectral: sign-change positives are certified", [&](SelftestResult& r) {
        std::mt19937_64 rng(seed + 6);
        for (int trial = 0; trial < 100; ++trial) {
            const int N = 1 + static_cast<int>(rng() % 24);
            std::vector<double> half(static_cast<std::size_t>(N) + 1);
            for (auto& v : half) v = static_cast<double>(static_cast<long long>(rng() % 7) - 3);
            if (half.back() == 0.0) half.back() = 1.0;
            TrigPoly w = TrigPoly::from_real_half(half);
            if (coefficient_sign_change_test(w) == SignChangeVerdict::HasSignChange &&
                !find_sign_change(w, 1 << 12).has_value()) {
                r.detail = "positive without certificate";
                return;
            }
        }
    });

    check("asymptotics: criterion implies growing counts", [&](SelftestResult& r) {
        std::mt19937_64 rng(seed + 7);
        for (int trial = 0; trial < 5; ++trial) {
            GeneralizedTrigSum H;
            H.form = TrigForm::symmetric_form;
            const double mid = std::fmod(0.1 + uniform(rng, 0.0, 0.8) * std::sqrt(2.0), 1.0);
            H.terms.push_back({Complex(uniform(rng, 0.3, 1.0), 0.0), Frequency::of_irrational(mid)});
            H.terms.push_back({Complex(1.0, 0.0), Frequency::of_rational(1, 1)});
            std::sort(H.terms.begin(), H.terms.end(),
                      [](const TrigTerm& a, const TrigTerm& b) { return a.freq.value < b.freq.value; });
            H.a0 = uniform(rng, 0.0, 1.5);
            if (signchange_criterion(H) != SignChangeOutcome::InfinitelyMany) continue;
            const long long c1 = count_changes(H, 0.0, 25.0, 4000);
            const long long c2 = count_changes(H, 0.0, 50.0, 8000);
            if (c2 <= c1) {
                r.detail = "no growth";
                return;
            }
        }
    });

    check("asymptotics: Parseval pattern identities exact", [&](SelftestResult& r) {
        std::mt19937_64 rng(seed + 8);
        for (int trial = 0; trial < 100; ++trial) {
            const int D = 2 * (1 + static_cast<int>(rng() % 12));
            std::vector<long long> even(static_cast<std::size_t>(D)), odd(static_cast<std::size_t>(D), 0);
            for (int m = 0; m < D; ++m) {
                even[static_cast<std::size_t>(m)] = (rng() & 1) ? 1 : -1;
                if (m % 2 == 1) odd[static_cast<std::size_t>(m)] = (rng() & 1) ? 1 : -1;
            }
            if (!parseval_pattern_checks(even, PatternCase::even_case).sum_ok() ||
                !parseval_pattern_checks(odd, PatternCase::odd_case).sum_ok()) {
                r.detail = "identity failed";
                return;
            }
        }
    });

    check("oddcase: derivative Parseval identity exact", [&](SelftestResult& r) {
        std::mt19937_64 rng(seed + 9);
        for (int trial = 0; trial < 30; ++trial) {
            const int D = 4 * (1 + static_cast<int>(rng() % 3));
            std::vector<int> eps(static_cast<std::size_t>(D), 0);
            for (int m = 1; m < D / 2; m += 2) {
                const int v = (rng() & 1) ? 1 : -1;
                eps[static_cast<std::size_t>(m)] = v;
                eps[static_cast<std::size_t>(D - m)] = -v;
            }
            if (eps[1] == 0) {
                eps[1] = 1;
                eps[static_cast<std::size_t>(D - 1)] = -1;
            }
            OddPattern pat(D, eps);
            std::vector<std::pair<long long, long long>> mp;
            for (int i = 0, n = 1 + static_cast<int>(rng() % 5); i < n; ++i) {
                const long long p = 1 + static_cast<long long>(rng() % 10);
                mp.emplace_back((p * D + 1) / 2 + static_cast<long long>(rng() % 120), p);
            }
            auto s = make_difference(pat, mp);
            long long p = 1;
            for (const auto& tm : s.terms) p = std::max(p, tm.p);
            for (const auto& g : group_and_decompose(s, p).groups) {
                auto [lhs, rhs] = derivative_parseval(pat, g);
                if (lhs != rhs) {
                    r.detail = "identity violated";
                    return;
                }
            }
        }
    });

    check("oddcase: difference polynomials vanish at gamma_r", [&](SelftestResult& r) {
        OddPattern pat(8, {0, 1, 0, -1, 0, 1, 0, -1});
        auto s = make_difference(pat, {{9, 2}, {13, 1}, {21, 3}});
        for (int rr = 0; rr < 8; ++rr) {
            if (std::abs(s.eval(2.0 * 3.14159265358979323846 * rr / 8)) > 1e-9) {
                r.detail = "nonzero at gamma_r";
                return;
            }
        }
    });

    return results;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout) {
    CLI::App app{"Exploration toolkit for reciprocal Littlewood polynomials and their unimodular zeros"};
    app.fallthrough();

    Ctx ctx;
    app.add_option("--out", ctx.out_dir, "results directory")->capture_default_str();
    app.add_option("--seed", ctx.seed, "random seed")->capture_default_str();
    app.add_option("--jobs", ctx.jobs, "parallel shards")->capture_default_str();
    app.add_option("--tol", ctx.tol, "evaluation tolerance")->capture_default_str();
    app.add_option("--format", ctx.format, "stdout format: json|csv")->capture_default_str();
    app.require_subcommand(1);

    // count
    std::string count_signs;
    auto* sc_count = app.add_subcommand("count", "exact unimodular root census of a reciprocal sign pattern");
    sc_count->add_option("signs", count_signs, "sign string, e.g. +--+")->required();

    // search
    int search_degree = 0, search_to = 0;
    std::string search_conv = "mult";
    auto* sc_search = app.add_subcommand("search", "exhaustive minimum root count at fixed degree");
    sc_search->add_option("--degree", search_degree, "degree N")->required();
    sc_search->add_option("--to", search_to, "scan degrees N..N_max");
    sc_search->add_option("--convention", search_conv, "mult|distinct")->capture_default_str();

    // avg
    int avg_degree = 0;
    long long avg_sample = 0;
    auto* sc_avg = app.add_subcommand("avg", "average root count over canonical representatives");
    sc_avg->add_option("--degree", avg_degree, "degree N")->required();
    sc_avg->add_option("--sample", avg_sample, "sample size (0 = exhaustive)");

    // table
    int table_to = 0;
    auto* sc_table = app.add_subcommand("table", "persisted Z_L table under both conventions");
    sc_table->add_option("--to", table_to, "largest degree")->required();

    // structure
    std::string struct_signs;
    std::size_t struct_period = 0, struct_scan = 0;
    bool struct_aligned = false;
    auto* sc_struct = app.add_subcommand("structure", "periodic block decomposition of a sign pattern");
    sc_struct->add_option("signs", struct_signs, "sign string")->required();
    sc_struct->add_option("--period", struct_period, "block period D");
    sc_struct->add_option("--scan", struct_scan, "profile periods 1..D_max");
    sc_struct->add_flag("--aligned", struct_aligned, "force block starts onto multiples of D");

    // factor
    std::string factor_file;
    auto* sc_factor = app.add_subcommand("factor", "Fejer-Riesz spectral factorization");
    sc_factor->add_option("--coeffs", factor_file, "JSON coefficient file")->required();

    // oscillate
    std::string osc_file;
    long long osc_N = 4096;
    double osc_c = 0.05, osc_window = 20.0;
    std::size_t osc_res = 1 << 16;
    auto* sc_osc = app.add_subcommand("oscillate", "oscillation count of the geometric-kernel function");
    sc_osc->add_option("--spec", osc_file, "JSON block spec")->required();
    sc_osc->add_option("--N", osc_N, "degree parameter")->capture_default_str();
    sc_osc->add_option("--c", osc_c, "level c (crossings of +-cN)")->capture_default_str();
    sc_osc->add_option("--window", osc_window, "window half-width in u units")->capture_default_str();
    sc_osc->add_option("--resolution", osc_res, "grid points")->capture_default_str();

    // weyl
    std::string weyl_file;
    double weyl_theta = 0.0;
    long long weyl_n = 100000;
    auto* sc_weyl = app.add_subcommand("weyl", "integer-shift moments of a generalized trig sum");
    sc_weyl->add_option("--spec", weyl_file, "JSON trig-sum spec")->required();
    sc_weyl->add_option("--theta", weyl_theta, "base point")->capture_default_str();
    sc_weyl->add_option("--n", weyl_n, "number of shifts")->capture_default_str();

    // oddcase
    auto* sc_odd = app.add_subcommand("oddcase", "odd-degree machinery");
    sc_odd->require_subcommand(1);
    int odd_D = 4;
    std::string odd_eps = "0,1,0,-1", odd_terms = "5:1";
    auto* sc_odd_id = sc_odd->add_subcommand("identity", "exact second-derivative Parseval identity");
    sc_odd_id->add_option("--D", odd_D, "period")->capture_default_str();
    sc_odd_id->add_option("--eps", odd_eps, "pattern, comma separated")->capture_default_str();
    sc_odd_id->add_option("--terms", odd_terms, "m:p list")->capture_default_str();
    std::string kappa_file;
    auto* sc_odd_kappa = sc_odd->add_subcommand("kappa", "kappa-gap search");
    sc_odd_kappa->add_option("--spec", kappa_file, "JSON spec")->required();

    // probe-kappa
    int probe_k = 2, probe_M = 8;
    std::size_t probe_res = 4096;
    auto* sc_probe = app.add_subcommand("probe-kappa", "brute-force kappa(k) probe over sine-polynomial pairs");
    sc_probe->add_option("--k", probe_k, "max terms per polynomial")->capture_default_str();
    sc_probe->add_option("--M", probe_M, "max frequency")->capture_default_str();
    sc_probe->add_option("--res", probe_res, "grid resolution")->capture_default_str();

    // families
    std::string fam_kind;
    int fam_index = 0;
    bool fam_count = false;
    std::size_t fam_grid = 0;
    auto* sc_fam = app.add_subcommand("families", "explicit low-root cosine families");
    sc_fam->add_option("kind", fam_kind, "g or h")->required();
    sc_fam->add_option("--index", fam_index, "family index")->capture_default_str();
    sc_fam->add_flag("--count-roots", fam_count, "exact root census");
    sc_fam->add_option("--grid-signs", fam_grid, "grid sign-change count at this resolution");

    auto* sc_self = app.add_subcommand("selftest", "run the reduced invariant suite");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << std::endl;
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "usage error: " << e.what() << std::endl;
        return 2;
    }

    try {
        json result;
        if (app.got_subcommand(sc_count)) {
            ctx.subcommand = "count";
            ctx.parameters = {{"signs", count_signs}};
            auto P = parse_signs(count_signs);
            result = census_record(P.degree(), count_signs, count_unimodular(P));
            emit(ctx, "count.json", result.dump(2) + "\n");
        } else if (app.got_subcommand(sc_search)) {
            ctx.subcommand = "search";
            const Convention conv =
                search_conv == "distinct" ? Convention::distinct : Convention::with_multiplicity;
            const int hi = std::max(search_degree, search_to);
            ctx.parameters = {{"degree", search_degree}, {"to", hi}, {"convention", convention_name(conv)}};
            result = json::array();
            std::ostringstream csv;
            csv << "N,convention,min,enumerated,witness,histogram_json\r\n";
            for (int N = search_degree; N <= hi; ++N) {
                SearchResult r = min_roots(N, conv, ctx.jobs);
                result.push_back(to_json(r));
                json hist = json::object();
                for (const auto& [k, v] : r.histogram) hist[std::to_string(k)] = v;
                csv << N << ',' << convention_name(conv) << ',' << r.minimum << ',' << r.enumerated << ','
                    << csv_field(r.witnesses.empty() ? "" : r.witnesses.front()) << ',' << csv_field(hist.dump())
                    << "\r\n";
            }
            emit(ctx, "search.json", result.dump(2) + "\n");
            emit(ctx, "search.csv", csv.str());
            if (ctx.format == "csv") {
                write_manifest(ctx);
                out << csv.str();
                return 0;
            }
        } else if (app.got_subcommand(sc_avg)) {
            ctx.subcommand = "avg";
            ctx.parameters = {{"degree", avg_degree}, {"sample", avg_sample}};
            if (avg_sample > 0) {
                auto s = average_roots_sampled(avg_degree, static_cast<unsigned long long>(avg_sample), ctx.seed);
                result = {{"degree", avg_degree},
                          {"mode", "sampled"},
                          {"mean", s.mean},
                          {"std_error", s.std_error},
                          {"samples", s.samples}};
            } else {
                BigRat avg = average_roots_exhaustive(avg_degree, ctx.jobs);
                result = {{"degree", avg_degree},
                          {"mode", "exhaustive"},
                          {"mean", rational_to_json(avg)},
                          {"at_least_quarter_degree", avg >= BigRat(avg_degree, 4)}};
            }
            emit(ctx, "avg.json", result.dump(2) + "\n");
        } else if (app.got_subcommand(sc_table)) {
            ctx.subcommand = "table";
            ctx.parameters = {{"to", table_to}};
            auto rows = compute_zl_table(table_to, ctx.jobs);
            const bool verified = persist_zl_table(rows, ctx.out_dir);
            ctx.outputs.push_back(std::filesystem::path(ctx.out_dir) / "zl_table.json");
            ctx.outputs.push_back(std::filesystem::path(ctx.out_dir) / "zl_table.csv");
            result = json::array();
            for (const auto& row : rows)
                result.push_back({{"N", row.degree},
                                  {"min_mult", row.mult.minimum},
                                  {"min_distinct", row.distinct.minimum}});
            result = json{{"rows", result}, {"verified_against_stored", verified}};
            if (ctx.format == "csv") {
                write_manifest(ctx);
                out << zl_rows_to_csv(rows);
                return 0;
            }
        } else if (app.got_subcommand(sc_struct)) {
            ctx.subcommand = "structure";
            auto P = parse_signs(struct_signs);
            std::vector<long long> seq(P.coeffs.begin(), P.coeffs.end());
            ctx.parameters = {{"signs", struct_signs},
                              {"period", struct_period},
                              {"scan", struct_scan},
                              {"aligned", struct_aligned}};
            if (struct_scan > 0) {
                result["profile"] = json::array();
                for (const auto& [D, L] : period_profile(seq, struct_scan))
                    result["profile"].push_back({{"D", D}, {"L", L}});
            } else {
                if (struct_period == 0) throw error("need --period D or --scan D_max");
                auto dec = decompose(seq, struct_period, struct_aligned);
                result["period"] = struct_period;
                result["aligned"] = struct_aligned;
                result["L"] = dec.block_count();
                result["blocks"] = json::array();
                for (const auto& b : dec.blocks)
                    result["blocks"].push_back({{"begin", b.begin}, {"end", b.end}, {"pattern", b.pattern}});
                if (struct_aligned) {
                    auto form = to_geometric(dec, seq); // exactness verified on construction
                    json g;
                    g["breakpoints"] = form.breakpoints;
                    g["residual_terms"] = form.residual_terms;
                    g["exact"] = true;
                    result["geometric"] = g;
                }
            }
            emit(ctx, "structure.json", result.dump(2) + "\n");
        } else if (app.got_subcommand(sc_factor)) {
            ctx.subcommand = "factor";
            // default factorization tolerance is 1e-8 unless --tol was given
            const double tol = app.count("--tol") ? ctx.tol : 1e-8;
            ctx.parameters = {{"coeffs", factor_file}, {"tol", tol}};
            TrigPoly c = trig_poly_from_json(load_json_file(factor_file));
            SpectralFactor f = fejer_riesz_factor(c, tol);
            result["residual"] = f.residual;
            result["d"] = json::array();
            for (const auto& v : f.d) result["d"].push_back(complex_to_json(v));
            emit(ctx, "factor.json", result.dump(2) + "\n");
        } else if (app.got_subcommand(sc_osc)) {
            ctx.subcommand = "oscillate";
            ctx.parameters = {{"spec", osc_file}, {"N", osc_N}, {"c", osc_c}, {"window", osc_window}};
            const json spec = load_json_file(osc_file);
            std::vector<ExpPoly> B;
            for (const auto& blk : spec.at("B")) {
                ExpPoly p;
                for (const auto& t : blk)
                    p.terms.emplace_back(Complex(t.value("re", 0.0), t.value("im", 0.0)),
                                         t.at("k").get<long long>());
                B.push_back(std::move(p));
            }
            std::vector<double> rho = spec.at("rho").get<std::vector<double>>();
            auto rep = prop1_oscillation(B, rho, spec.at("D").get<long long>(), osc_N, osc_c, osc_window, osc_res);
            result = {{"oscillations", rep.oscillations},
                      {"m", rep.m_used},
                      {"window", {rep.window_lo, rep.window_hi}},
                      {"level", rep.level}};
            emit(ctx, "oscillate.json", result.dump(2) + "\n");
        } else if (app.got_subcommand(sc_weyl)) {
            ctx.subcommand = "weyl";
            ctx.parameters = {{"spec", weyl_file}, {"theta", weyl_theta}, {"n", weyl_n}};
            auto H = trig_sum_from_json(load_json_file(weyl_file));
            auto w = weyl_moments(H, weyl_theta, weyl_n);
            result = {{"mean1", w.mean1}, {"mean2", w.mean2}, {"predicted_limit", w.predicted_limit}};
            emit(ctx, "weyl.json", result.dump(2) + "\n");
        } else if (app.got_subcommand(sc_odd)) {
            if (sc_odd->got_subcommand(sc_odd_id)) {
                ctx.subcommand = "oddcase-identity";
                ctx.parameters = {{"D", odd_D}, {"eps", odd_eps}, {"terms", odd_terms}};
                std::vector<int> eps;
                for (long long v : parse_int_list(odd_eps)) eps.push_back(static_cast<int>(v));
                OddPattern pat(odd_D, eps);
                auto s = make_difference(pat, parse_term_list(odd_terms));
                long long p = 1;
                for (const auto& tm : s.terms) p = std::max(p, tm.p);
                result["groups"] = json::array();
                for (const auto& g : group_and_decompose(s, p).groups) {
                    auto [lhs, rhs] = derivative_parseval(pat, g);
                    result["groups"].push_back({{"anchor", g.anchor},
                                                {"lhs", lhs.str()},
                                                {"rhs", rhs.str()},
                                                {"equal", lhs == rhs}});
                }
                emit(ctx, "oddcase_identity.json", result.dump(2) + "\n");
            } else {
                ctx.subcommand = "oddcase-kappa";
                ctx.parameters = {{"spec", kappa_file}};
                const json spec = load_json_file(kappa_file);
                std::vector<int> eps;
                for (const auto& v : spec.at("eps")) eps.push_back(v.get<int>());
                OddPattern pat(spec.at("D").get<int>(), eps);
                auto read_terms = [&](const char* key) {
                    std::vector<std::pair<long long, long long>> mp;
                    for (const auto& t : spec.value(key, json::array()))
                        mp.emplace_back(t[0].get<long long>(), t[1].get<long long>());
                    return make_difference(pat, mp);
                };
                auto s1 = read_terms("s1");
                auto s2 = read_terms("s2");
                const KappaRegion region =
                    spec.value("region", "full") == std::string("best") ? KappaRegion::around_best_r
                                                                        : KappaRegion::full_period;
                auto rep = kappa_gap_search(build_a(pat), s1, s2, region,
                                            spec.value("resolution", std::size_t(1) << 14),
                                            spec.value("c", 0.5));
                result = {{"gamma_star", rep.gamma_star}, {"gap", rep.gap}, {"best_r", rep.best_r}};
                result["diagnostics"] = json::array();
                for (const auto& d : rep.diagnostics)
                    result["diagnostics"].push_back({{"r", d.r},
                                                     {"a", d.a_value},
                                                     {"im_c1_second", d.c1_second_derivative},
                                                     {"sign_match", d.sign_match}});
                emit(ctx, "oddcase_kappa.json", result.dump(2) + "\n");
            }
        } else if (app.got_subcommand(sc_probe)) {
            ctx.subcommand = "probe-kappa";
            ctx.parameters = {{"k", probe_k}, {"M", probe_M}, {"res", probe_res}};
            auto r = problem2_probe(probe_k, probe_M, probe_res, ctx.jobs);
            auto desc = [](const ProbeSine& s) {
                json arr = json::array();
                for (const auto& [n, sg] : s.terms) arr.push_back({{"n", n}, {"sign", sg}});
                return arr;
            };
            result = {{"kappa", r.kappa}, {"s1", desc(r.s1)}, {"s2", desc(r.s2)}, {"gamma", r.gamma}};
            emit(ctx, "probe_kappa.json", result.dump(2) + "\n");
        } else if (app.got_subcommand(sc_fam)) {
            ctx.subcommand = "families";
            ctx.parameters = {{"kind", fam_kind}, {"index", fam_index}};
            CosinePoly f;
            if (fam_kind == "g") f = family_g(fam_index);
            else if (fam_kind == "h") f = family_h(fam_index);
            else throw error("family kind must be g or h");
            result["family"] = to_json(f);
            if (fam_count) {
                auto z = cosine_root_census(f);
                result["census"] = {{"distinct", z.distinct},
                                    {"mult", z.with_multiplicity},
                                    {"odd", z.odd_multiplicity_count}};
            }
            if (fam_grid > 0) result["grid_sign_changes"] = grid_sign_change_oracle(f, fam_grid);
            emit(ctx, "families.json", result.dump(2) + "\n");
        } else if (app.got_subcommand(sc_self)) {
            ctx.subcommand = "selftest";
            ctx.parameters = json::object();
            auto results = run_selftest(ctx.seed);
            bool all_ok = true;
            result["checks"] = json::array();
            for (const auto& r : results) {
                all_ok = all_ok && r.ok;
                out << (r.ok ? "[ok]   " : "[FAIL] ") << r.name;
                if (!r.ok) out << ": " << r.detail;
                out << "\n";
                result["checks"].push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
            }
            result["all_ok"] = all_ok;
            emit(ctx, "selftest.json", result.dump(2) + "\n");
            write_manifest(ctx);
            out << result.dump(2) << std::endl;
            return all_ok ? 0 : 1;
        }
        write_manifest(ctx);
        out << result.dump(2) << std::endl;
        return 0;
    } catch (const error& e) {
        json err = {{"error", e.what()}};
        out << err.dump(2) << std::endl;
        return 1;
    } catch (const std::exception& e) {
        json err = {{"error", e.what()}};
        out << err.dump(2) << std::endl;
        return 1;
    }
}

} // namespace littlewood::cli

#endif
