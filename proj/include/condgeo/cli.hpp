#ifndef CONDGEO_CLI_HPP
#define CONDGEO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace condgeo {

// Exit codes: 0 holds/valid/verified, 1 fails/countermodel, 2 unknown
// (bound or budget exhausted), 3 input error, 4 internal invariant failure.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace condgeo

#endif
