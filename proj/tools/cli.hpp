#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cosetgrowth::cli {

// Exit codes: 0 pass, 1 assertion failure or domain error, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace cosetgrowth::cli
