// Command-line front end: intersection numbers from either pipeline, n-point
// series expansion, the verification suites, and the oracle cache.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "npoint/buryak.hpp"
#include "npoint/dvv.hpp"
#include "npoint/verify.hpp"

namespace {

using nlohmann::json;

int run_intersect(int genus, const std::vector<int>& d, const std::string& source,
                  const std::string& cache_path) {
    npoint::Rational via_series, via_oracle;
    const bool want_series = source == "buryak" || source == "both";
    const bool want_oracle = source == "dvv" || source == "both";

    if (want_series) via_series = npoint::intersection_number(genus, d);
    if (want_oracle) {
        npoint::CorrelatorTable table;
        if (!cache_path.empty()) table.load(cache_path);
        via_oracle = table.correlator(genus, d);
        if (!cache_path.empty()) table.save(cache_path);
    }

    if (source == "buryak") {
        std::cout << npoint::rational_to_string(via_series) << "\n";
    } else if (source == "dvv") {
        std::cout << npoint::rational_to_string(via_oracle) << "\n";
    } else {
        std::cout << "buryak: " << npoint::rational_to_string(via_series) << "\n"
                  << "dvv:    " << npoint::rational_to_string(via_oracle) << "\n";
        if (via_series != via_oracle) {
            std::cerr << "mismatch between pipelines\n";
            return 1;
        }
    }
    return 0;
}

int run_series(int n, int degree, const std::string& format) {
    const npoint::NPointSeries f = npoint::f_bur_series(n, degree);
    const char* unstable = nullptr;
    switch (f.unstable) {
        case npoint::NPointSeries::Unstable::x_pow_minus_2: unstable = "x^-2"; break;
        case npoint::NPointSeries::Unstable::inverse_sum_x: unstable = "1/(x1+x2)"; break;
        case npoint::NPointSeries::Unstable::none: break;
    }

    if (format == "text") {
        if (unstable) std::cout << "unstable: " << unstable << "\n";
        std::cout << f.stable.str() << "\n";
        return 0;
    }
    // Dimension fixes the genus of each stable coefficient: sum d = 3g - 3 + n.
    const auto genus_of = [n](const npoint::Monomial& m) {
        return (m.x_degree() - n + 3) / 3;
    };
    if (format == "csv") {
        for (int i = 1; i <= n; ++i) std::cout << "d_" << i << ",";
        std::cout << "genus,value\n";
        for (const auto& [m, c] : f.stable.terms()) {
            for (int e : m.x) std::cout << e << ",";
            std::cout << genus_of(m) << "," << npoint::rational_to_string(c) << "\n";
        }
        return 0;
    }
    json out;
    out["n"] = n;
    out["degree"] = f.cap;
    out["unstable"] = unstable ? json(unstable) : json(nullptr);
    json terms = json::array();
    for (const auto& [m, c] : f.stable.terms()) {
        terms.push_back({{"ds", m.x},
                         {"genus", genus_of(m)},
                         {"value", npoint::rational_to_string(c)}});
    }
    out["terms"] = std::move(terms);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& suite, int points, int degree) {
    std::vector<npoint::VerificationReport> reports;
    if (suite == "all") {
        reports = npoint::verify_all();
    } else if (suite == "dvv-cross") {
        reports.push_back(npoint::verify_cross_pipeline());
    } else if (suite == "prop31") {
        reports.push_back(npoint::verify_symmetric_form());
    } else if (suite == "lemmas") {
        reports.push_back(npoint::verify_permutation_lemmas(points));
    } else if (suite == "numeric") {
        reports.push_back(npoint::verify_main_theorem_numeric());
    } else if (suite == "terms") {
        reports.push_back(npoint::verify_term_correspondence());
    } else if (suite == "consistency") {
        reports.push_back(npoint::verify_series_consistency(degree));
    } else if (suite == "string-kdv") {
        reports.push_back(npoint::verify_string_and_kdv());
    }

    bool all_ok = true;
    for (const npoint::VerificationReport& r : reports) {
        std::cout << r.summary() << "\n";
        for (const npoint::CheckResult& c : r.checks) {
            std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) std::cout << " -- " << c.detail;
            std::cout << "\n";
        }
        all_ok = all_ok && r.ok();
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"n-point functions of psi-class intersection numbers"};
    app.require_subcommand(1);

    int genus = 0;
    std::vector<int> d;
    std::string source = "both";
    std::string cache_path;
    CLI::App* intersect = app.add_subcommand(
        "intersect", "One intersection number <tau_{d_1}...tau_{d_n}>_g");
    intersect->add_option("-g,--genus", genus, "Genus")->required();
    intersect->add_option("-d,--indices", d, "Tau indices d_1 ... d_n")
        ->required()
        ->expected(1, 16);
    intersect->add_option("-s,--source", source, "Pipeline: buryak, dvv or both")
        ->check(CLI::IsMember({"buryak", "dvv", "both"}));
    intersect->add_option("--cache", cache_path, "Oracle cache file (loaded and updated)");

    int n = 1, degree = 6;
    std::string format = "text";
    CLI::App* series = app.add_subcommand("series", "Stable part of the n-point series");
    series->add_option("-n,--points", n, "Number of marked points")->required()
        ->check(CLI::Range(1, 5));
    series->add_option("-D,--degree", degree, "Total-degree truncation")
        ->check(CLI::Range(0, 60));
    series->add_option("-f,--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string suite = "all";
    int points = 100, cons_degree = 12;
    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", suite, "Suite name")
        ->check(CLI::IsMember({"all", "dvv-cross", "prop31", "lemmas", "numeric", "terms",
                               "consistency", "string-kdv"}));
    verify->add_option("--points", points, "Random points per identity (lemmas)")
        ->check(CLI::Range(1, 100000));
    verify->add_option("--degree", cons_degree, "Truncation degree (consistency)")
        ->check(CLI::Range(0, 60));

    std::string cache_file = "dvv_cache.txt";
    std::string cache_cmd;
    CLI::App* cache = app.add_subcommand("cache", "Inspect or reset the oracle cache");
    cache->add_option("action", cache_cmd, "dump, clear or path")
        ->required()
        ->check(CLI::IsMember({"dump", "clear", "path"}));
    cache->add_option("--cache", cache_file, "Cache file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (intersect->parsed()) return run_intersect(genus, d, source, cache_path);
        if (series->parsed()) return run_series(n, degree, format);
        if (verify->parsed()) return run_verify(suite, points, cons_degree);
        if (cache->parsed()) {
            if (cache_cmd == "path") {
                std::cout << cache_file << "\n";
            } else if (cache_cmd == "dump") {
                npoint::CorrelatorTable table;
                table.load(cache_file);
                std::cout << table.dump();
            } else {
                std::remove(cache_file.c_str());
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
