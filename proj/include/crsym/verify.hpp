#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crsym/random.hpp"

namespace crsym {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string builtin;
  std::vector<CheckLine> checks;
  bool ok() const;
};

// Regression suite of a builtin; throws std::invalid_argument for unknown names.
VerifyReport verify_builtin(const std::string& name, std::uint64_t seed = kDefaultSeed);

}  // namespace crsym
