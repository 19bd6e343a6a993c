// Command line front end. Commands: verify | hh | ch | bracket | cobracket |
// axioms | ncsymp-compare | fixture. Exit codes: 0 ok, 2 parse, 3 invariant,
// 4 axiom, 5 truncation. Reports are deterministic byte for byte.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycl {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycl
