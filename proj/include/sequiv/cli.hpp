#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sequiv::cli {

// Exit code contract:
//   0  success / isometric
//   1  distinct invariant
//   2  domain error (not Seifert type, bad dimensions, failing move, ...)
//   3  parse error (malformed JSON/CSV/polynomial, bad usage)
//   4  unknown (search budget exhausted without a verdict)
//   70 internal arithmetic self-check failure (a bug, not an input problem)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sequiv::cli
