#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asnp::cli {

// args excludes the program name. Returns 0 (ok), 1 (hard check failed or engine bug), 2 (bad input or budget).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asnp::cli
