#pragma once

#include <congsum/verifier.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace congsum {

struct SuiteConfig {
    std::vector<StatementId> statements;  // empty means "all"
    std::uint64_t prime_min = 5;
    std::uint64_t prime_max = 199;
    std::vector<std::string> x_set = {"-1/2", "-1/3", "-1/4", "-1/6", "0",
                                      "1",    "2",    "1/5",  "-2/7", "7/3"};
    std::vector<std::string> d_set = {"1", "-1", "2", "1/2", "3", "-16", "5/3"};
    unsigned identity_n_max = 12;
    unsigned random_trials = 50;
    std::uint64_t random_seed = 1;
    unsigned parallelism = 1;
    bool dual_reading = true;
};

inline void validate(const SuiteConfig& c) {
    if (c.prime_min < 3) throw invalid_config("prime_min must be >= 3");
    if (c.prime_min > c.prime_max) throw invalid_config("prime_min exceeds prime_max");
    if (c.identity_n_max < 1) throw invalid_config("identity_n_max must be >= 1");
    if (c.parallelism < 1) throw invalid_config("parallelism must be >= 1");
    for (const auto& s : c.x_set) parse_rational(s);
    for (const auto& s : c.d_set) parse_rational(s);
}

inline nlohmann::json config_to_json(const SuiteConfig& c) {
    nlohmann::json j;
    if (c.statements.empty()) {
        j["statements"] = "all";
    } else {
        auto arr = nlohmann::json::array();
        for (auto id : c.statements) arr.push_back(statement_name(id));
        j["statements"] = arr;
    }
    j["prime_min"] = c.prime_min;
    j["prime_max"] = c.prime_max;
    j["x_set"] = c.x_set;
    j["d_set"] = c.d_set;
    j["identity_n_max"] = c.identity_n_max;
    j["random_trials"] = c.random_trials;
    j["random_seed"] = c.random_seed;
    // parallelism is a runtime knob, not part of the result's identity;
    // omitting it keeps reports byte-identical across job counts
    j["dual_reading"] = c.dual_reading;
    return j;
}

inline SuiteConfig config_from_json(const nlohmann::json& j) {
    SuiteConfig c;
    try {
        if (j.contains("statements") && !(j["statements"].is_string() && j["statements"] == "all")) {
            for (const auto& s : j["statements"]) {
                auto id = parse_statement(s.get<std::string>());
                if (!id) throw invalid_config("unknown statement: " + s.get<std::string>());
                c.statements.push_back(*id);
            }
        }
        if (j.contains("prime_min")) c.prime_min = j["prime_min"].get<std::uint64_t>();
        if (j.contains("prime_max")) c.prime_max = j["prime_max"].get<std::uint64_t>();
        if (j.contains("x_set")) c.x_set = j["x_set"].get<std::vector<std::string>>();
        if (j.contains("d_set")) c.d_set = j["d_set"].get<std::vector<std::string>>();
        if (j.contains("identity_n_max")) c.identity_n_max = j["identity_n_max"].get<unsigned>();
        if (j.contains("random_trials")) c.random_trials = j["random_trials"].get<unsigned>();
        if (j.contains("random_seed")) c.random_seed = j["random_seed"].get<std::uint64_t>();
        if (j.contains("parallelism")) c.parallelism = j["parallelism"].get<unsigned>();
        if (j.contains("dual_reading")) c.dual_reading = j["dual_reading"].get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw invalid_config(std::string("bad config field: ") + e.what());
    }
    validate(c);
    return c;
}

struct StatementSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
};

struct Report {
    SuiteConfig config;
    std::vector<Record> records;
    double wall_seconds = 0.0;  // never serialized to JSON; output must be
                                // byte-identical across parallelism levels

    std::map<std::string, StatementSummary> summary() const {
        std::map<std::string, StatementSummary> m;
        for (const auto& r : records) {
            auto& s = m[statement_name(r.statement)];
            if (r.kind == RecordKind::Skip)
                ++s.skipped;
            else if (r.pass)
                ++s.pass;
            else
                ++s.fail;
        }
        return m;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& r : records)
            if (r.kind != RecordKind::Skip && !r.pass) ++n;
        return n;
    }
};

/// Dispatch a single (statement, p, x, d) check. Statements with no prime
/// parameter reject p; parametrized ones require their parameters.
inline Record run_single(StatementId id, std::uint64_t p,
                         const std::optional<BigRational>& x = std::nullopt,
                         const std::optional<BigRational>& d = std::nullopt,
                         SixReading reading = SixReading::Bridge) {
    switch (id) {
        case StatementId::THEOREM_1_1:
            if (!x || !d) throw invalid_config("THEOREM_1_1 requires x and d");
            return check_theorem_1_1(*x, *d, p);
        case StatementId::THEOREM_1_3:
            if (!x || !d) throw invalid_config("THEOREM_1_3 requires x and d");
            return check_theorem_1_3(*x, *d, p);
        case StatementId::COR_C1:
        case StatementId::COR_C2:
        case StatementId::COR_C3:
        case StatementId::COR_C4:
        case StatementId::COR_C5:
        case StatementId::COR_C6:
        case StatementId::COR_C7:
        case StatementId::COR_C8: {
            if (!d) throw invalid_config("corollaries require d");
            const int cid = static_cast<int>(id) - static_cast<int>(StatementId::COR_C1) + 1;
            return check_corollary(cid, *d, p, reading);
        }
        case StatementId::BG_ZPS:
        case StatementId::BG_SUN_D0:
        case StatementId::BG_SUN_D1:
        case StatementId::BG_SUN_DM1:
        case StatementId::BG_MT:
        case StatementId::BG_WANG_HAN:
        case StatementId::BG_MAO:
            return check_background(id, p, x);
        case StatementId::LEMMA_2_1:
        case StatementId::THEOREM_1_5:
            throw invalid_config(statement_name(id) +
                                 " is an exact identity; use the identity runner");
        default:
            return check_auxiliary(id, p, x, d);
    }
}

namespace detail {

inline std::vector<StatementId> expand_statements(const SuiteConfig& c) {
    if (!c.statements.empty()) return c.statements;
    std::vector<StatementId> all;
    for (int i = 0; i < kStatementCount; ++i) all.push_back(static_cast<StatementId>(i));
    return all;
}

inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = lo; p <= hi; ++p)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

/// Seeded rational sampler for the exact-identity trials: |num|, |den| <= 50.
/// Reduction via modulo keeps the stream independent of library
/// distribution internals.
struct RationalSampler {
    std::mt19937_64 rng;
    explicit RationalSampler(std::uint64_t seed) : rng(seed) {}
    long pick(long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    BigRational rational(bool nonzero) {
        while (true) {
            const long num = pick(-50, 50);
            const long den = pick(1, 50);
            if (nonzero && num == 0) continue;
            return make_rational(num, den);
        }
    }
};

}  // namespace detail

/// Run every requested check over the configured grids. The task list is
/// built up front in a fixed order; workers fill a result slot per task, so
/// the record sequence is independent of scheduling.
inline Report run_suite(const SuiteConfig& config) {
    validate(config);
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<BigRational> xs, ds;
    for (const auto& s : config.x_set) xs.push_back(parse_rational(s));
    for (const auto& s : config.d_set) ds.push_back(parse_rational(s));

    const auto primes = detail::primes_in(config.prime_min, config.prime_max);
    std::vector<std::function<Record()>> tasks;

    for (StatementId id : detail::expand_statements(config)) {
        switch (id) {
            case StatementId::LEMMA_2_1:
            case StatementId::THEOREM_1_5: {
                detail::RationalSampler sampler(config.random_seed ^
                                                static_cast<std::uint64_t>(id));
                for (unsigned t = 0; t < config.random_trials; ++t) {
                    const BigRational x = sampler.rational(false);
                    const BigRational d = sampler.rational(true);
                    const auto n = static_cast<unsigned long>(
                        sampler.pick(1, static_cast<long>(config.identity_n_max)));
                    if (id == StatementId::LEMMA_2_1) {
                        for (SumVariant v :
                             {SumVariant::Full, SumVariant::Odd, SumVariant::Catalan})
                            tasks.push_back([=] { return check_lemma_2_1(v, x, d, n); });
                    } else {
                        tasks.push_back([=] { return check_theorem_1_5(x, d, n); });
                    }
                }
                break;
            }
            case StatementId::THEOREM_1_1:
            case StatementId::THEOREM_1_3:
                for (auto p : primes)
                    for (const auto& x : xs)
                        for (const auto& d : ds)
                            tasks.push_back([=] { return run_single(id, p, x, d); });
                break;
            case StatementId::COR_C1:
            case StatementId::COR_C2:
            case StatementId::COR_C3:
            case StatementId::COR_C4:
            case StatementId::COR_C5:
            case StatementId::COR_C6:
            case StatementId::COR_C7:
            case StatementId::COR_C8:
                for (auto p : primes)
                    for (const auto& d : ds) {
                        tasks.push_back([=] { return run_single(id, p, std::nullopt, d); });
                        if (config.dual_reading &&
                            (id == StatementId::COR_C4 || id == StatementId::COR_C8))
                            tasks.push_back([=] {
                                return run_single(id, p, std::nullopt, d, SixReading::Printed);
                            });
                    }
                break;
            case StatementId::AUX_PRODUCT_L1:
            case StatementId::BG_WANG_HAN:
            case StatementId::BG_MAO:
                for (auto p : primes)
                    for (const auto& x : xs)
                        tasks.push_back([=] { return run_single(id, p, x); });
                break;
            case StatementId::AUX_SPECIALIZATION_L3:
                for (auto p : primes)
                    for (const auto& x : xs)
                        for (const auto& d : ds)
                            tasks.push_back([=] { return run_single(id, p, x, d); });
                break;
            default:
                for (auto p : primes) tasks.push_back([=] { return run_single(id, p); });
                break;
        }
    }

    std::vector<Record> results(tasks.size());
    const unsigned workers = std::min<unsigned>(
        config.parallelism, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    results[i] = tasks[i]();
                }
            });
        for (auto& th : pool) th.join();
    }

    Report rep;
    rep.config = config;
    rep.records = std::move(results);
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline nlohmann::json record_to_json(const Record& r) {
    nlohmann::json j;
    j["statement"] = statement_name(r.statement);
    j["kind"] = r.kind == RecordKind::Congruence ? "congruence"
                : r.kind == RecordKind::Identity ? "identity"
                                                 : "skip";
    if (r.p != 0) j["p"] = r.p;
    if (!r.x.empty()) j["x"] = r.x;
    if (!r.d.empty()) j["d"] = r.d;
    if (!r.case_tag.empty()) j["case"] = r.case_tag;
    if (r.exponent != 0) j["exponent"] = r.exponent;
    if (r.kind == RecordKind::Skip) {
        j["skip_reason"] = r.skip_reason;
    } else {
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["pass"] = r.pass;
    }
    return j;
}

inline Record record_from_json(const nlohmann::json& j) {
    Record r;
    auto id = parse_statement(j.at("statement").get<std::string>());
    if (!id) throw invalid_config("unknown statement in record");
    r.statement = *id;
    const std::string kind = j.at("kind").get<std::string>();
    r.kind = kind == "congruence" ? RecordKind::Congruence
             : kind == "identity" ? RecordKind::Identity
                                  : RecordKind::Skip;
    if (j.contains("p")) r.p = j["p"].get<std::uint64_t>();
    if (j.contains("x")) r.x = j["x"].get<std::string>();
    if (j.contains("d")) r.d = j["d"].get<std::string>();
    if (j.contains("case")) r.case_tag = j["case"].get<std::string>();
    if (j.contains("exponent")) r.exponent = j["exponent"].get<unsigned>();
    if (r.kind == RecordKind::Skip) {
        r.skip_reason = j.at("skip_reason").get<std::string>();
    } else {
        r.lhs = j.at("lhs").get<std::string>();
        r.rhs = j.at("rhs").get<std::string>();
        r.pass = j.at("pass").get<bool>();
    }
    return r;
}

inline nlohmann::json report_to_json(const Report& rep) {
    nlohmann::json j;
    j["config"] = config_to_json(rep.config);
    auto arr = nlohmann::json::array();
    for (const auto& r : rep.records) arr.push_back(record_to_json(r));
    j["records"] = arr;
    nlohmann::json sum;
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& [name, s] : rep.summary()) {
        sum[name] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
        pass += s.pass;
        fail += s.fail;
        skipped += s.skipped;
    }
    j["summary"] = {{"by_statement", sum},
                    {"total", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
    return j;
}

inline Report parse_report(const nlohmann::json& j) {
    Report rep;
    rep.config = config_from_json(j.at("config"));
    for (const auto& rj : j.at("records")) rep.records.push_back(record_from_json(rj));
    return rep;
}

inline std::string csv_field(const std::string& s) { return s.empty() ? "-" : s; }

inline void emit_csv(const Report& rep, std::ostream& os) {
    os << "statement,p,x,d,case,exponent,lhs,rhs,pass\n";
    for (const auto& r : rep.records) {
        os << statement_name(r.statement) << ',';
        if (r.p != 0)
            os << r.p << ',';
        else
            os << "-,";
        os << csv_field(r.x) << ',' << csv_field(r.d) << ',' << csv_field(r.case_tag) << ',';
        if (r.exponent != 0)
            os << r.exponent << ',';
        else
            os << "-,";
        if (r.kind == RecordKind::Skip)
            os << "-,-,skip\n";
        else
            os << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ','
               << (r.pass ? "true" : "false") << '\n';
    }
}

inline void emit_text(const Report& rep, std::ostream& os) {
    os << "statement                 pass   fail   skipped\n";
    os << "------------------------  -----  -----  -------\n";
    for (const auto& [name, s] : rep.summary()) {
        os << name;
        for (std::size_t i = name.size(); i < 26; ++i) os << ' ';
        char buf[64];
        std::snprintf(buf, sizeof buf, "%5zu  %5zu  %7zu\n", s.pass, s.fail, s.skipped);
        os << buf;
    }
    std::size_t shown = 0;
    for (const auto& r : rep.records) {
        if (r.kind == RecordKind::Skip || r.pass) continue;
        if (shown == 0) os << "\nfailures:\n";
        if (++shown > 50) {
            os << "  ...\n";
            break;
        }
        os << "  " << statement_name(r.statement);
        if (r.p != 0) os << " p=" << r.p;
        if (!r.x.empty()) os << " x=" << r.x;
        if (!r.d.empty()) os << " d=" << r.d;
        if (!r.case_tag.empty()) os << " case=" << r.case_tag;
        os << " lhs=" << r.lhs << " rhs=" << r.rhs << '\n';
    }
    os << "\nrecords: " << rep.records.size() << "  failures: " << rep.failures()
       << "  wall: " << rep.wall_seconds << "s\n";
}

inline void emit(const Report& rep, const std::string& format, std::ostream& os) {
    if (format == "json")
        os << report_to_json(rep).dump(2) << '\n';
    else if (format == "csv")
        emit_csv(rep, os);
    else if (format == "text")
        emit_text(rep, os);
    else
        throw invalid_config("unknown format: " + format);
    if (!os) throw io_failure("write failed");
}

inline void emit_to_path(const Report& rep, const std::string& format, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw io_failure("cannot open " + path);
    emit(rep, format, f);
    if (!f) throw io_failure("write failed: " + path);
}

}  // namespace congsum
