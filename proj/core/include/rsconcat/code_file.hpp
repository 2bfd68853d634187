#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rsconcat/concat.hpp"

namespace rsconcat {

inline constexpr int kCodeFileVersion = 1;

/// Malformed code file; line() is 1-based. When the input ends early it names
/// the first missing line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Plain-text code file:
///
///   rsconcat-code <version>
///   m <m>
///   N <N>
///   K <K>
///   n <n>
///   k <k>
///   field <2m> <modulus hex>
///   basis <hex> ... <hex>
///   S <rank>
///   <u-bits>|<v-bits>        (rank lines)
///   N_L <rank>
///   <u-bits>|<v-bits>        (rank lines)
///
/// Bit p of each half sits at string index p.
void store_code(std::ostream& os, const StabilizerCodeL& code);

/// Parses a code file. Structure is checked here (line shapes, counts, a
/// valid primitive modulus and self-dual basis); algebraic claims are left to
/// the verifier, so declared n/k are taken as written.
StabilizerCodeL load_code(std::istream& is);

}  // namespace rsconcat
