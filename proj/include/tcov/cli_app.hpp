// Command-line front end.  Subcommands: census, homology, loci, verify,
// export.  Exit codes: 0 success, 1 usage or validation error, 2 resource
// budget exhausted, 3 internal consistency failure.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcov {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

} // namespace tcov
