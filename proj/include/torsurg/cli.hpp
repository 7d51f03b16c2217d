#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torsurg {

// Exit codes: 0 success, 1 domain precondition failure, 2 usage/parse/IO.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torsurg
