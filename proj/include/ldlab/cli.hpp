#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ldlab/magma.hpp"

namespace ldlab {

// "dihedral:<k>", "affine:<m>:<t>", "laver:<n>", "trivial:<m>", "file:<path.csv>".
FiniteMagma parse_rack_spec(const std::string& spec);
// "1,2,1" -> {1, 2, 1}
std::vector<int> parse_colour_list(const std::string& text);

// Runs one command line (program name excluded). Exit codes: 0 success,
// 1 domain or resource error, 2 usage or parse error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldlab
