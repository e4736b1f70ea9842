#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sigbasis/buchberger.hpp"
#include "sigbasis/gvw.hpp"

namespace sigbasis {

// Exit codes: 0 success, 1 input error or failed verification, 2 step limit.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// key=value per line.
std::string formatStats(const GvwStats& stats, std::size_t basisSize, std::size_t syzygyLms);
std::string formatStats(const BuchbergerStats& stats, std::size_t basisSize);

}  // namespace sigbasis
