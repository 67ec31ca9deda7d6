#include <congsum/suite.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

unsigned effective_jobs(unsigned cli_jobs) {
    if (const char* env = std::getenv("CONGSUM_JOBS")) {
        try {
            const unsigned n = static_cast<unsigned>(std::stoul(env));
            if (n >= 1) return n;
        } catch (...) {
        }
        std::cerr << "congsum: ignoring bad CONGSUM_JOBS value\n";
    }
    return cli_jobs;
}

int emit_and_exit(const congsum::Report& rep, const std::string& format,
                  const std::string& out) {
    if (out.empty())
        congsum::emit(rep, format, std::cout);
    else
        congsum::emit_to_path(rep, format, out);
    return rep.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for binomial-sum congruences"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out;
    unsigned jobs = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out, "write report to file instead of stdout");
    app.add_option("--jobs", jobs, "worker threads (env CONGSUM_JOBS overrides)")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "run congruence checks");
    verify->fallthrough();
    std::string config_path, statement;
    std::uint64_t prime = 0;
    std::string x_str, d_str;
    verify->add_option("--config", config_path, "suite config JSON");
    verify->add_option("--statement", statement, "single statement id");
    verify->add_option("--p", prime, "prime for single-statement mode");
    verify->add_option("--x", x_str, "rational x as n/d");
    verify->add_option("--d", d_str, "rational d as n/d");

    auto* identity = app.add_subcommand("identity", "exact identity checks");
    identity->fallthrough();
    unsigned n_max = 12, trials = 50;
    std::uint64_t seed = 1;
    identity->add_option("--n-max", n_max, "largest n")->check(CLI::PositiveNumber);
    identity->add_option("--trials", trials, "random (x,d) trials");
    identity->add_option("--seed", seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (!config_path.empty()) {
                std::ifstream f(config_path);
                if (!f) throw congsum::io_failure("cannot open " + config_path);
                nlohmann::json j;
                f >> j;
                congsum::SuiteConfig cfg = congsum::config_from_json(j);
                cfg.parallelism = effective_jobs(jobs);
                return emit_and_exit(congsum::run_suite(cfg), format, out);
            }
            if (statement.empty()) {
                std::cerr << "congsum: verify needs --config or --statement\n";
                return 2;
            }
            auto id = congsum::parse_statement(statement);
            if (!id) {
                std::cerr << "congsum: unknown statement " << statement << '\n';
                return 2;
            }
            std::optional<congsum::BigRational> x, d;
            if (!x_str.empty()) x = congsum::parse_rational(x_str);
            if (!d_str.empty()) d = congsum::parse_rational(d_str);
            congsum::Report rep;
            rep.config.prime_min = rep.config.prime_max = prime;
            rep.config.statements = {*id};
            rep.records.push_back(congsum::run_single(*id, prime, x, d));
            return emit_and_exit(rep, format, out);
        }

        // identity subcommand
        congsum::SuiteConfig cfg;
        cfg.statements = {congsum::StatementId::LEMMA_2_1, congsum::StatementId::THEOREM_1_5};
        cfg.identity_n_max = n_max;
        cfg.random_trials = trials;
        cfg.random_seed = seed;
        cfg.parallelism = effective_jobs(jobs);
        return emit_and_exit(congsum::run_suite(cfg), format, out);
    } catch (const congsum::error& e) {
        std::cerr << "congsum: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "congsum: bad JSON: " << e.what() << '\n';
        return 2;
    }
}
