#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "loopmod/io.hpp"

namespace loopmod {

struct RunConfig {
    enum class Command { Decompose, Character, Crystal, Maj, Verify };

    Command command = Command::Decompose;
    unsigned n = 1;
    unsigned m = 1;
    long d = 0;
    std::optional<std::string> tuple_text;  // file path or inline literal
    std::optional<Composition> composition;
    long s = 0;
    std::optional<long> r_min, r_max;  // default window: [-m, m]
    std::string format = "json";
    std::optional<std::string> out_path;
    unsigned jobs = 1;
    std::string suite = "all";  // verify: characters | crystal | all
};

// Dispatch a command; writes the artifact to cfg.out_path or `out`, and on
// failure a machine-readable {"error": {...}} JSON to `err`. Returns the
// process exit status (0 on success).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Resolve the tuple for a config: parse --tuple (inline text or a file path)
// or default to the natural-power family for (n, m).
DrinfeldTuple resolve_tuple(const RunConfig& cfg);

}  // namespace loopmod
