#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rsconcat/concat.hpp"

namespace rsconcat::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kIoError = 3 };

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool passed() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Every structural and algebraic check on a loaded code.
VerifyReport verify_code(const StabilizerCodeL& code);

/// Pauli string for one generator: (0,0)->I, (1,0)->X, (0,1)->Z, (1,1)->Y.
std::string to_pauli(const SymplecticVector& row);

/// Entry point shared by the binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rsconcat::cli
