#pragma once

#include <iosfwd>

#include "qlab/check.hpp"

namespace qlab {

// Exit codes: 0 success, 1 validation failure / unknown name,
// 2 parse or usage error, 3 enumeration cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The bundled workspace: boolean base, the CTX context, the 4-element poset
// fixtures with their identity distributors, and the CTX closure space.
Workspace builtin_workspace();

}  // namespace qlab
