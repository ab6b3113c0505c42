#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coref/resolve.hpp"

namespace coref::cli {

// Environment variable that overrides the default resource directory.
inline constexpr const char* kResourceEnv = "COREF_RESOURCES";

// Reads a JSON object whose keys are ResolveConfig field names. Unknown keys
// and non-boolean values throw InputError.
ResolveConfig load_config(const std::string& path);

// Entry point of the `coref` tool. Returns the process exit status: 0 when
// every document succeeded, 1 when some document failed, 2 on bad usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coref::cli
