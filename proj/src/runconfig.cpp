#include "loopmod/runconfig.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace loopmod {

namespace {

int log_level() {
    const char* env = std::getenv("LOOPMOD_LOG");
    if (!env) return 1;
    std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    if (v == "warn") return 1;
    if (v == "error" || v == "quiet") return 0;
    return 1;
}

void log_info(const std::string& msg) {
    if (log_level() >= 2) std::cerr << "[loopmod] " << msg << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::config_error, "cannot read tuple file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_artifact(const RunConfig& cfg, const std::string& bytes, std::ostream& out) {
    if (cfg.out_path) {
        std::ofstream file(*cfg.out_path, std::ios::binary);
        if (!file) throw Error(errc::config_error, "cannot write output file: " + *cfg.out_path);
        file << bytes;
    } else {
        out << bytes;
    }
}

std::pair<long, long> grade_window(const RunConfig& cfg) {
    long lo = cfg.r_min.value_or(-static_cast<long>(cfg.m));
    long hi = cfg.r_max.value_or(static_cast<long>(cfg.m));
    if (lo > hi) throw Error(errc::config_error, "empty grade window");
    return {lo, hi};
}

int run_decompose(const RunConfig& cfg, std::ostream& out) {
    DrinfeldTuple pi = resolve_tuple(cfg);
    DecompositionReport report = decompose(pi, cfg.d, cfg.jobs);
    if (parse_format(cfg.format) != Format::Json)
        throw Error(errc::format_mismatch, "decomposition reports are emitted as JSON");
    write_artifact(cfg, render_json(decomposition_to_json(report)), out);
    return 0;
}

int run_character(const RunConfig& cfg, std::ostream& out) {
    ComparisonReport report = compare_all(cfg.n, cfg.m, cfg.jobs);
    Format f = parse_format(cfg.format);
    if (f == Format::Csv)
        write_artifact(cfg, comparison_to_csv(report), out);
    else if (f == Format::Json)
        write_artifact(cfg, render_json(comparison_to_json(report)), out);
    else
        throw Error(errc::format_mismatch, "character tables are emitted as JSON or CSV");
    return 0;
}

int run_crystal(const RunConfig& cfg, std::ostream& out) {
    auto [lo, hi] = grade_window(cfg);
    CrystalGraph graph = build_component_crystal(cfg.s, cfg.m, cfg.n, lo, hi);
    Format f = parse_format(cfg.format);
    if (f == Format::Dot)
        write_artifact(cfg, crystal_to_dot(graph), out);
    else if (f == Format::Json)
        write_artifact(cfg, render_json(crystal_to_json(graph)), out);
    else
        throw Error(errc::format_mismatch, "crystal graphs are emitted as JSON or DOT");
    return 0;
}

int run_maj(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.composition)
        throw Error(errc::config_error, "maj requires --composition");
    if (parse_format(cfg.format) != Format::Json)
        throw Error(errc::format_mismatch, "maj reports are emitted as JSON");
    std::vector<mpz_class> counts = count_maj_by_residue(*cfg.composition, cfg.m);
    Json j;
    j["composition"] = cfg.composition->parts;
    j["m"] = cfg.m;
    Json values = Json::array();
    for (const auto& c : counts) values.push_back(static_cast<long>(c.get_si()));
    j["counts"] = std::move(values);
    write_artifact(cfg, render_json(j), out);
    return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    if (parse_format(cfg.format) != Format::Json)
        throw Error(errc::format_mismatch, "verification reports are emitted as JSON");
    Json j;
    size_t issues = 0;

    if (cfg.suite == "characters" || cfg.suite == "all") {
        log_info("running character comparison suite");
        ComparisonReport chars = compare_all(cfg.n, cfg.m, cfg.jobs);
        j["characters"] = Json{{"rows", chars.rows.size()},
                               {"discrepancies", chars.discrepancies}};
        issues += chars.discrepancies.size();
    }
    if (cfg.suite == "crystal" || cfg.suite == "all") {
        log_info("running crystal axiom and oracle suite");
        EvalParams ctx = EvalParams::natural(cfg.n, cfg.m, cfg.m);
        AxiomReport axioms = verify_axioms(ctx, cfg.m);
        std::vector<std::string> oracle = check_oracle_agreement(ctx, cfg.m);
        j["crystal"] = Json{{"axiom_violations", axioms.violations},
                            {"oracle_mismatches", oracle}};
        issues += axioms.violations.size() + oracle.size();
    }
    if (!j.contains("characters") && !j.contains("crystal"))
        throw Error(errc::config_error, "unknown verify suite: " + cfg.suite);

    j["ok"] = issues == 0;
    write_artifact(cfg, render_json(j), out);
    return issues == 0 ? 0 : 1;
}

}  // namespace

DrinfeldTuple resolve_tuple(const RunConfig& cfg) {
    if (!cfg.tuple_text) return DrinfeldTuple::natural_power(cfg.n, cfg.m);
    const std::string& text = *cfg.tuple_text;
    bool looks_inline = text.find(':') != std::string::npos;
    std::string body = looks_inline ? text : slurp(text);
    DrinfeldTuple pi = parse_tuple(body, cfg.m);
    if (pi.n != cfg.n)
        throw Error(errc::config_error, "tuple has " + std::to_string(pi.n) +
                                            " components but --n is " + std::to_string(cfg.n));
    return pi;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.n < 1) throw Error(errc::config_error, "--n must be at least 1");
        if (cfg.m < 1) throw Error(errc::config_error, "--m must be at least 1");
        switch (cfg.command) {
            case RunConfig::Command::Decompose: return run_decompose(cfg, out);
            case RunConfig::Command::Character: return run_character(cfg, out);
            case RunConfig::Command::Crystal: return run_crystal(cfg, out);
            case RunConfig::Command::Maj: return run_maj(cfg, out);
            case RunConfig::Command::Verify: return run_verify(cfg, out);
        }
        throw Error(errc::config_error, "unknown command");
    } catch (const Error& e) {
        Json j;
        j["error"] = Json{{"code", e.code()}, {"message", e.what()}};
        err << render_json(j);
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = Json{{"code", "InternalError"}, {"message", e.what()}};
        err << render_json(j);
        return 2;
    }
}

}  // namespace loopmod
