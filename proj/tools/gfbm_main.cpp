// Command-line front end: simulate paths, tabulate closed-form quantities,
// run the Monte Carlo verification suite, analyze stored path files.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 numerical failure (factorization / embedding).

#include <CLI11.hpp>
#include <json.hpp>

#include <gfbm/ensemble.hpp>
#include <gfbm/errors.hpp>
#include <gfbm/estimators.hpp>
#include <gfbm/grid.hpp>
#include <gfbm/io.hpp>
#include <gfbm/kernel.hpp>
#include <gfbm/params.hpp>
#include <gfbm/report.hpp>
#include <gfbm/sample_cholesky.hpp>
#include <gfbm/sample_circulant.hpp>
#include <gfbm/verify_suite.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct SimulateConfig {
    double a = 0.0;
    double b = 0.0;
    double hurst = 0.0;
    double t_max = 1.0;
    std::uint64_t points = 256;
    std::uint64_t paths = 1;
    std::uint64_t seed = 0;
    std::string method = "circulant";
    std::string output;
};

struct TableConfig {
    double a = 0.0;
    double b = 0.0;
    double hurst = 0.0;
    std::string what;
    std::vector<double> t_values{1.0};
    std::vector<double> s_values{0.0};
    std::uint64_t p = 1;
    std::uint64_t n_max = 10;
    std::string output;
};

struct VerifyConfig {
    double a = 0.0;
    double b = 0.0;
    double hurst = 0.0;
    std::uint64_t seed = 0;
    std::string checks;
    bool checks_given = false;
    bool inject_mismatch = false;
    std::uint64_t paths = 20000;
    std::uint64_t pairs = 10000;
    std::uint64_t triples = 200;
    std::uint64_t lrd_n_max = 1000000;
    std::uint64_t hurst_paths = 50;
    std::uint64_t hurst_points = 8192;
    std::string output;
};

struct AnalyzeConfig {
    std::string input;
    std::uint64_t bins = 128;
    std::optional<double> t0;
    std::string output;
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        // trim surrounding whitespace
        auto begin = item.find_first_not_of(" \t");
        auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) continue;
        out.push_back(item.substr(begin, end - begin + 1));
    }
    return out;
}

int run_simulate(const SimulateConfig& cfg) {
    gfbm::GfbmParams params(cfg.a, cfg.b, cfg.hurst);
    auto grid = gfbm::TimeGrid::uniform(cfg.t_max, static_cast<std::size_t>(cfg.points));
    gfbm::SampleSpec spec;
    spec.n_paths = static_cast<std::size_t>(cfg.paths);
    spec.seed = cfg.seed;
    spec.method = gfbm::sample_method_from_string(cfg.method);

    gfbm::PathEnsemble ensemble = spec.method == gfbm::SampleMethod::Cholesky
                                      ? gfbm::sample_cholesky(params, grid, spec)
                                      : gfbm::sample_circulant(params, grid, spec);

    std::ofstream file;
    std::ostream& out = open_output(cfg.output, file);
    gfbm::write_ensemble_csv(ensemble, out);
    out.flush();
    if (!out) throw std::invalid_argument("write failed: " + cfg.output);

    const auto& prov = ensemble.provenance();
    std::cerr << "gfbm simulate: method=" << gfbm::to_string(prov.method)
              << " seed=" << prov.seed << " paths=" << ensemble.n_paths()
              << " rows=" << ensemble.n_points();
    if (prov.method == gfbm::SampleMethod::Cholesky) {
        std::cerr << " jitter=" << gfbm::format_double(prov.jitter);
    } else {
        std::cerr << " embedding_size=" << prov.embedding_size
                  << " embedding_doublings=" << prov.embedding_doublings
                  << " min_eigenvalue=" << gfbm::format_double(prov.min_eigenvalue);
    }
    std::cerr << "\n";
    return kExitOk;
}

int run_table(const TableConfig& cfg) {
    gfbm::GfbmParams params(cfg.a, cfg.b, cfg.hurst);
    std::ofstream file;
    std::ostream& out = open_output(cfg.output, file);

    if (cfg.what == "cov") {
        out << "t,s,covariance\n";
        for (double t : cfg.t_values)
            for (double s : cfg.s_values)
                out << gfbm::format_double(t) << ',' << gfbm::format_double(s) << ','
                    << gfbm::format_double(gfbm::covariance(params, s, t)) << '\n';
    } else if (cfg.what == "var") {
        out << "t,variance\n";
        for (double t : cfg.t_values)
            out << gfbm::format_double(t) << ','
                << gfbm::format_double(gfbm::variance(params, t)) << '\n';
    } else if (cfg.what == "incr") {
        out << "s,t,increment_second_moment\n";
        for (double s : cfg.s_values)
            for (double t : cfg.t_values)
                out << gfbm::format_double(s) << ',' << gfbm::format_double(t) << ','
                    << gfbm::format_double(gfbm::increment_second_moment(params, s, t)) << '\n';
    } else if (cfg.what == "bounds") {
        auto bounds = gfbm::increment_bounds(params);
        out << "regime,lower,upper\n";
        out << (bounds.regime == gfbm::Regime::C ? 'C' : 'D') << ','
            << gfbm::format_double(bounds.lower) << ','
            << gfbm::format_double(bounds.upper) << '\n';
    } else if (cfg.what == "rz") {
        out << "p,n,r_z\n";
        for (std::uint64_t n = 1; n <= cfg.n_max; ++n)
            out << cfg.p << ',' << n << ','
                << gfbm::format_double(
                       gfbm::r_z(params, static_cast<double>(cfg.p), static_cast<std::int64_t>(n)))
                << '\n';
    } else {
        throw std::invalid_argument("unknown table kind: " + cfg.what +
                                    " (expected cov, var, incr, bounds, or rz)");
    }
    out.flush();
    if (!out) throw std::invalid_argument("write failed: " + cfg.output);
    return kExitOk;
}

int run_verify(const VerifyConfig& cfg) {
    gfbm::GfbmParams params(cfg.a, cfg.b, cfg.hurst);

    gfbm::VerifyOptions options;
    if (cfg.checks_given) {
        options.checks = split_csv_list(cfg.checks);
        if (options.checks.empty()) {
            std::cerr << "gfbm verify: empty check selection, nothing to run\n";
            std::ofstream file;
            std::ostream& out = open_output(cfg.output, file);
            out << "[]\n";
            return kExitOk;
        }
    }
    options.inject_mismatch = cfg.inject_mismatch;
    options.n_paths = static_cast<std::size_t>(cfg.paths);
    options.n_pairs = static_cast<std::size_t>(cfg.pairs);
    options.n_triples = static_cast<std::size_t>(cfg.triples);
    options.lrd_n_max = cfg.lrd_n_max;
    options.hurst_paths = static_cast<std::size_t>(cfg.hurst_paths);
    options.hurst_points = static_cast<std::size_t>(cfg.hurst_points);

    auto reports = gfbm::run_verification_suite(params, cfg.seed, options);

    bool all_passed = true;
    for (const auto& report : reports) {
        all_passed = all_passed && report.passed;
        std::cerr << (report.passed ? "PASS " : "FAIL ") << report.name
                  << " (statistic=" << gfbm::format_double(report.statistic)
                  << " threshold=" << gfbm::format_double(report.threshold) << ")\n";
    }

    std::ofstream file;
    std::ostream& out = open_output(cfg.output, file);
    out << gfbm::reports_to_json(reports) << '\n';
    out.flush();
    if (!out) throw std::invalid_argument("write failed: " + cfg.output);
    return all_passed ? kExitOk : kExitVerifyFailed;
}

int run_analyze(const AnalyzeConfig& cfg) {
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + cfg.input);
    gfbm::PathEnsemble ensemble = gfbm::read_ensemble_csv(in);

    const auto& params = ensemble.params();
    const auto& grid = ensemble.grid();
    nlohmann::ordered_json doc;
    doc["schema_version"] = "1";
    doc["input"] = cfg.input;
    doc["params"] = {{"a", params.a()}, {"b", params.b()}, {"hurst", params.hurst()}};
    doc["n_paths"] = ensemble.n_paths();
    doc["n_points"] = ensemble.n_points();

    // Hurst exponent from second-order discrete variations.
    if (grid.is_uniform() && grid.size() >= 256) {
        auto est = gfbm::hurst_estimate(ensemble);
        doc["hurst"] = {{"mean", est.mean},
                        {"dispersion", est.dispersion},
                        {"first_order_mean", est.first_order_mean},
                        {"paths", est.n_paths},
                        {"degenerate_paths", est.n_degenerate}};
    } else {
        doc["hurst"] = {{"error", "needs a uniform grid with at least 256 points"}};
    }

    // Occupation-density histogram per path; summary statistics across paths.
    if (grid.is_uniform() && grid.size() >= 2) {
        std::size_t degenerate = 0;
        double mean_sq = 0.0;
        double max_identity_error = 0.0;
        for (std::size_t i = 0; i < ensemble.n_paths(); ++i) {
            auto lt = gfbm::occupation_local_time(ensemble.path(i), grid,
                                                  static_cast<std::size_t>(cfg.bins));
            if (lt.degenerate) ++degenerate;
            mean_sq += lt.square_integral();
            double horizon = grid.points().back();
            max_identity_error =
                std::max(max_identity_error, std::abs(lt.occupation_integral() - horizon));
        }
        mean_sq /= static_cast<double>(ensemble.n_paths());

        auto first = gfbm::occupation_local_time(ensemble.path(0), grid,
                                                 static_cast<std::size_t>(cfg.bins));
        doc["local_time"] = {{"bins", first.bin_edges.size() - 1},
                             {"mean_square_integral", mean_sq},
                             {"max_occupation_identity_error", max_identity_error},
                             {"degenerate_paths", degenerate},
                             {"histogram",
                              {{"path", 0},
                               {"bin_edges", first.bin_edges},
                               {"density", first.density},
                               {"degenerate", first.degenerate}}}};
        if (degenerate > 0)
            std::cerr << "gfbm analyze: " << degenerate
                      << " path(s) have (numerically) constant values; their occupation "
                         "histograms collapse to a single bin\n";
    } else {
        doc["local_time"] = {{"error", "needs a uniform grid with at least 2 points"}};
    }

    // sup |Z_t - Z_{t0}| / |t - t0| near a reference point, for a shrinking
    // ladder of window half-widths.
    if (grid.size() >= 3) {
        double t0 = cfg.t0 ? *cfg.t0 : grid.points()[grid.size() / 2];
        double span = grid.points().back() - grid.points().front();
        double min_step = span;
        for (std::size_t k = 1; k < grid.size(); ++k)
            min_step = std::min(min_step, grid.points()[k] - grid.points()[k - 1]);

        std::vector<double> eps_ladder;
        for (double eps = span / 4.0; eps >= min_step && eps_ladder.size() < 8; eps /= 2.0)
            eps_ladder.push_back(eps);

        if (!eps_ladder.empty()) {
            std::vector<double> mean_sup(eps_ladder.size(), 0.0);
            std::vector<double> path0_sup;
            for (std::size_t i = 0; i < ensemble.n_paths(); ++i) {
                auto sups = gfbm::difference_quotient_sup(ensemble.path(i), grid, t0,
                                                          eps_ladder);
                if (i == 0) path0_sup = sups;
                for (std::size_t k = 0; k < sups.size(); ++k) mean_sup[k] += sups[k];
            }
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < eps_ladder.size(); ++k) {
                rows.push_back(
                    {{"eps", eps_ladder[k]},
                     {"mean_sup_quotient",
                      mean_sup[k] / static_cast<double>(ensemble.n_paths())},
                     {"path0_sup_quotient", path0_sup[k]}});
            }
            doc["difference_quotient"] = {{"t0", t0}, {"rows", rows}};
        }
    }

    std::ofstream file;
    std::ostream& out = open_output(cfg.output, file);
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out) throw std::invalid_argument("write failed: " + cfg.output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized fractional Brownian motion: exact samplers, closed-form "
                 "tables, and Monte Carlo verification"};
    app.require_subcommand(1);

    SimulateConfig sim;
    auto* simulate = app.add_subcommand("simulate", "sample paths and write them as CSV");
    simulate->add_option("--a", sim.a, "weight of the forward-time component")->required();
    simulate->add_option("--b", sim.b, "weight of the reversed-time component")->required();
    simulate->add_option("--hurst", sim.hurst, "Hurst exponent in (0,1)")->required();
    simulate->add_option("--t-max", sim.t_max, "time horizon")->default_val(1.0);
    simulate->add_option("--points", sim.points, "number of steps (rows = points + 1)")
        ->default_val(256);
    simulate->add_option("--paths", sim.paths, "number of independent paths")->default_val(1);
    simulate->add_option("--seed", sim.seed, "counter-based RNG seed")->required();
    simulate->add_option("--method", sim.method, "cholesky or circulant")
        ->default_val("circulant");
    simulate->add_option("-o,--output", sim.output, "output file (default stdout)");

    TableConfig tab;
    auto* table = app.add_subcommand("table", "print closed-form quantities as CSV");
    table->add_option("--a", tab.a, "weight of the forward-time component")->required();
    table->add_option("--b", tab.b, "weight of the reversed-time component")->required();
    table->add_option("--hurst", tab.hurst, "Hurst exponent in (0,1)")->required();
    table->add_option("--what", tab.what, "cov, var, incr, bounds, or rz")->required();
    table->add_option("--t", tab.t_values, "time points (repeatable)");
    table->add_option("--s", tab.s_values, "second time points (repeatable)");
    table->add_option("--p", tab.p, "increment start for rz")->default_val(1);
    table->add_option("--n-max", tab.n_max, "largest lag for rz")->default_val(10);
    table->add_option("-o,--output", tab.output, "output file (default stdout)");

    VerifyConfig ver;
    auto* verify = app.add_subcommand("verify", "run the Monte Carlo verification suite");
    verify->add_option("--a", ver.a, "weight of the forward-time component")->required();
    verify->add_option("--b", ver.b, "weight of the reversed-time component")->required();
    verify->add_option("--hurst", ver.hurst, "Hurst exponent in (0,1)")->required();
    verify->add_option("--seed", ver.seed, "counter-based RNG seed")->required();
    auto* checks_opt =
        verify->add_option("--checks", ver.checks, "comma-separated check names (default: all)");
    verify->add_flag("--inject-mismatch", ver.inject_mismatch,
                     "negative control: compare sampled paths against deliberately wrong "
                     "parameters; the covariance checks must fail");
    verify->add_option("--paths", ver.paths, "paths per sampled ensemble")->default_val(20000);
    verify->add_option("--pairs", ver.pairs, "random pairs for the bound scan")
        ->default_val(10000);
    verify->add_option("--triples", ver.triples, "random triples for the Markov scan")
        ->default_val(200);
    verify->add_option("--lrd-n-max", ver.lrd_n_max, "partial-sum horizon")
        ->default_val(1000000);
    verify->add_option("--hurst-paths", ver.hurst_paths, "paths for the Hurst check")
        ->default_val(50);
    verify->add_option("--hurst-points", ver.hurst_points, "steps for the Hurst check")
        ->default_val(8192);
    verify->add_option("-o,--output", ver.output, "JSON report file (default stdout)");

    AnalyzeConfig ana;
    auto* analyze = app.add_subcommand("analyze", "estimate path statistics from a CSV file");
    analyze->add_option("input", ana.input, "path file produced by simulate")->required();
    analyze->add_option("--bins", ana.bins, "histogram bins for the occupation density")
        ->default_val(128);
    double t0_value = 0.0;
    auto* t0_opt = analyze->add_option("--t0", t0_value,
                                       "reference point for difference quotients "
                                       "(default: middle of the grid)");
    analyze->add_option("-o,--output", ana.output, "JSON output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    ver.checks_given = checks_opt->count() > 0;
    if (t0_opt->count() > 0) ana.t0 = t0_value;

    try {
        if (simulate->parsed()) return run_simulate(sim);
        if (table->parsed()) return run_table(tab);
        if (verify->parsed()) return run_verify(ver);
        if (analyze->parsed()) return run_analyze(ana);
        std::cerr << "gfbm: no subcommand given\n";
        return kExitUsage;
    } catch (const gfbm::not_positive_definite_error& e) {
        std::cerr << "gfbm: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const gfbm::embedding_error& e) {
        std::cerr << "gfbm: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const gfbm::csv_parse_error& e) {
        std::cerr << "gfbm: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "gfbm: " << e.what() << "\n";
        return kExitUsage;
    }
}
