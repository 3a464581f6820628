#pragma once

#include <string>
#include <vector>

#include <jacquet/cli/json_io.hpp>

namespace jacquet::cli
{

// {"gl": [{"name", "dim", "conj_self_dual"}],
//  "gu": [{"name", "rank", "reducibility": {rho: "a"}, "twist_fixed": [rho]}]}
// GL entries are declared first so GU entries may refer to them. Throws
// RegistryConflict, UnknownLabel, or DomainError on malformed entries.
struct Declarations {
    std::vector<GLLabel> gl;
    std::vector<GULabel> gu;
};

Declarations load_declarations(const json &j, LabelRegistry &registry);
// Reads and parses a file; throws ParseError on invalid JSON.
json read_json_file(const std::string &path);

} // namespace jacquet::cli
