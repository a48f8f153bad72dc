#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ant/arithmetic.hpp"
#include "ant/delta_method.hpp"
#include "ant/exponents.hpp"
#include "ant/suites.hpp"

namespace {

bool parse_config_file(const std::string& path, std::map<std::string, std::string>& out,
                       std::string& err) {
    std::ifstream in(path);
    if (!in) {
        err = "cannot open config file: " + path;
        return false;
    }
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t\r");
        size_t e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos) {
            err = "config line " + std::to_string(lineno) + " is not key = value";
            return false;
        }
        out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return true;
}

int run_verify(const std::string& suite, const ant::SuiteOptions& opt,
               const std::string& report_path) {
    ant::VerificationReport rep = ant::run_suite(suite, opt);
    std::string json = rep.to_json();
    std::cout << json << "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "cannot write report file: " << report_path << "\n";
            return 2;
        }
        out << json << "\n";
    }
    std::cerr << suite << ": " << rep.passed() << " passed, " << rep.failed() << " failed, "
              << rep.total() << " total\n";
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification-grade checks for the delta-method subconvexity toolkit"};
    app.require_subcommand(1);

    std::string config_path, report_path;
    long long seed = -1;
    int jobs = 0;
    app.add_option("--config", config_path, "flat key = value config file");
    app.add_option("--report", report_path, "write the JSON report here as well");
    app.add_option("--jobs", jobs, "run independent cases concurrently");
    app.add_option("--seed", seed, "seed for randomized cases");

    auto* verify = app.add_subcommand("verify", "run one verification suite (or 'all')");
    std::string suite;
    verify->add_option("suite", suite, "suite name")->required();

    auto* audit = app.add_subcommand("audit-delta", "dump the additive-detector term ledger");
    long long audit_n = 0, audit_q = 1;
    double audit_C = 30.0;
    audit->add_option("n", audit_n, "detected integer")->required();
    audit->add_option("q", audit_q, "modulus factor")->check(CLI::PositiveNumber);
    audit->add_option("C", audit_C, "modulus scale")->check(CLI::PositiveNumber);

    auto* cache = app.add_subcommand("build-cache", "materialize the coefficient cache");
    long long cache_n_max = 1000;
    std::string cache_path = "tau_cache.csv";
    cache->add_option("n_max", cache_n_max, "largest index to tabulate")
        ->check(CLI::PositiveNumber);
    cache->add_option("--out", cache_path, "cache file path");

    auto* kl = app.add_subcommand("kloosterman", "evaluate S(a, b; c)");
    long long kl_a = 0, kl_b = 0, kl_c = 1;
    kl->add_option("a", kl_a)->required();
    kl->add_option("b", kl_b)->required();
    kl->add_option("c", kl_c)->required()->check(CLI::PositiveNumber);

    auto* expo = app.add_subcommand("exponents", "exponent bookkeeping utilities");
    std::string expo_action;
    expo->add_option("action", expo_action, "'trace' prints the derivation trace")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    ant::SuiteOptions opt;
    if (!config_path.empty()) {
        std::string err;
        if (!parse_config_file(config_path, opt.config, err)) {
            std::cerr << err << "\n";
            return 2;
        }
    }
    try {
        if (opt.config.count("seed")) opt.seed = std::stoull(opt.config.at("seed"));
        if (opt.config.count("jobs")) opt.jobs = std::stoi(opt.config.at("jobs"));
        if (opt.config.count("budget_seconds"))
            opt.budget_seconds = std::stod(opt.config.at("budget_seconds"));
    } catch (const std::exception&) {
        std::cerr << "config: seed/jobs/budget_seconds must be numeric\n";
        return 2;
    }
    if (seed >= 0) opt.seed = (unsigned long long)seed;
    if (jobs > 0) opt.jobs = jobs;

    try {
        if (verify->parsed()) {
            if (!ant::is_suite_name(suite)) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            return run_verify(suite, opt, report_path);
        }
        if (audit->parsed()) {
            std::cout << ant::audit_delta_csv(audit_n, audit_q, audit_C);
            return 0;
        }
        if (cache->parsed()) {
            long long lines = ant::write_tau_cache(cache_path, cache_n_max);
            std::cout << cache_path << ": " << lines << " entries\n";
            return 0;
        }
        if (kl->parsed()) {
            ant::cplx v = ant::kloosterman(kl_a, kl_b, kl_c);
            std::printf("S(%lld, %lld; %lld) = %.12g\n", kl_a, kl_b, kl_c, v.real());
            return 0;
        }
        if (expo->parsed()) {
            if (expo_action != "trace") {
                std::cerr << "unknown exponents action: " << expo_action << "\n";
                return 2;
            }
            std::cout << ant::exponents::trace_text();
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
