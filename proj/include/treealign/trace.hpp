#pragma once

#include <string>
#include <vector>

namespace treealign {

// A trace is the sequence of activity names executed for one case.
using Trace = std::vector<std::string>;

std::string trace_to_string(const Trace& trace);

}  // namespace treealign
