#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "smx/classify.hpp"

namespace smx::cli {

enum ExitStatus : int {
  kOk = 0,
  kIoOrParse = 1,      // also usage errors
  kIncompatible = 2,   // Dimension/Partition/Arity mismatch
  kImproper = 3,       // `check` on a union with identical components
};

// `args` excludes the program name. A file argument of "-" reads `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

// One JSON object with exactly the ClassReport fields.
std::string report_to_json(const ClassReport& report);
std::string report_to_text(const ClassReport& report);

}  // namespace smx::cli
