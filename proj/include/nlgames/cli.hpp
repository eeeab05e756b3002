#pragma once
// Command-line front end, callable in-process for tests. Returns the process
// exit code: 0 success or passing check, 1 failing check (non-equilibrium,
// signaling behavior, infeasible synthesis), 2 usage or parse error, 3
// internal limit (enumeration ceiling, unexpected internal failure).

#include <iosfwd>
#include <string>
#include <vector>

namespace nlgames {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlgames
