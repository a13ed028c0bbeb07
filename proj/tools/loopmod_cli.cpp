// Command-line front end: decompose quantum loop modules, emit character
// tables, crystal graphs, Maj censuses and verification reports.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loopmod/runconfig.hpp"

namespace {

loopmod::Composition parse_composition(const std::string& text) {
    std::vector<unsigned> parts;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty())
                throw loopmod::Error(loopmod::errc::config_error,
                                     "bad composition literal: " + text);
            parts.push_back(static_cast<unsigned>(std::stoul(cur)));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return loopmod::Composition(std::move(parts));
}

void parse_window(const std::string& text, loopmod::RunConfig& cfg) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw loopmod::Error(loopmod::errc::config_error,
                             "r-window must be lo:hi, got " + text);
    cfg.r_min = std::stol(text.substr(0, colon));
    cfg.r_max = std::stol(text.substr(colon + 1));
}

void add_common(CLI::App* cmd, loopmod::RunConfig& cfg) {
    cmd->add_option("--n", cfg.n, "rank of sl_{n+1} (number of Drinfeld polynomials)");
    cmd->add_option("--m", cfg.m, "period / order of zeta");
    cmd->add_option("--format", cfg.format, "output format: json, csv or dot");
    cmd->add_option("--out", cfg.out_path, "write the artifact to this path");
    cmd->add_option("--jobs", cfg.jobs, "worker threads (0 = hardware)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum loop module decomposition, characters and zeta-crystals"};
    app.require_subcommand(1);

    loopmod::RunConfig cfg;
    std::string composition_text, window_text;

    CLI::App* decompose = app.add_subcommand("decompose", "split L(V(pi)) into simple components");
    add_common(decompose, cfg);
    decompose->add_option("--tuple", cfg.tuple_text,
                          "Drinfeld tuple (file path or inline 'roots: ...' / 'coeffs: ...')");
    decompose->add_option("--d", cfg.d, "grade offset of L(V; d)");
    decompose->callback([&] { cfg.command = loopmod::RunConfig::Command::Decompose; });

    CLI::App* character = app.add_subcommand("character", "closed vs brute-force character table");
    add_common(character, cfg);
    character->callback([&] { cfg.command = loopmod::RunConfig::Command::Character; });

    CLI::App* crystal = app.add_subcommand("crystal", "component zeta-crystal graph");
    add_common(crystal, cfg);
    crystal->add_option("--s", cfg.s, "component residue class");
    crystal->add_option("--r-window", window_text, "grade window lo:hi (default -m:m)");
    crystal->callback([&] { cfg.command = loopmod::RunConfig::Command::Crystal; });

    CLI::App* majcmd = app.add_subcommand("maj", "Maj census of words by residue");
    add_common(majcmd, cfg);
    majcmd->add_option("--composition", composition_text, "letter multiplicities k_0,...,k_n")
        ->required();
    majcmd->callback([&] { cfg.command = loopmod::RunConfig::Command::Maj; });

    CLI::App* verify = app.add_subcommand("verify", "run the oracle agreement suites");
    add_common(verify, cfg);
    verify->add_option("--suite", cfg.suite, "characters, crystal or all");
    verify->callback([&] { cfg.command = loopmod::RunConfig::Command::Verify; });

    try {
        app.parse(argc, argv);
        if (!composition_text.empty()) cfg.composition = parse_composition(composition_text);
        if (!window_text.empty()) parse_window(window_text, cfg);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        loopmod::Json j;
        j["error"] = loopmod::Json{{"code", loopmod::errc::config_error},
                                   {"message", e.what()}};
        std::cerr << loopmod::render_json(j);
        return 1;
    } catch (const loopmod::Error& e) {
        loopmod::Json j;
        j["error"] = loopmod::Json{{"code", e.code()}, {"message", e.what()}};
        std::cerr << loopmod::render_json(j);
        return 1;
    }

    return loopmod::run(cfg, std::cout, std::cerr);
}
