#pragma once

#include <iosfwd>
#include <string>

#include "lasserre/sdp.hpp"

namespace lasserre {

/// SDPA sparse format (".dat-s"): mDIM line, nBLOCK line, blockStruct line
/// (diagonal blocks negative), objective vector line, then entry lines
/// "matno blockno i j value" with 1-based upper-triangle indices. matno 0
/// holds the objective matrices C, matno j holds A_j, and the vector line
/// holds the right-hand sides. 17 significant digits, LF line endings.
void write_sdpa(const SdpProblem& p, std::ostream& os);
void write_sdpa(const SdpProblem& p, const std::string& path);

/// Parse failures carry 1-based line/column plus the offending token.
class SdpaParseError : public std::runtime_error {
 public:
  SdpaParseError(int line, int column, const std::string& token, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  int line_, column_;
  std::string token_;
};

SdpProblem read_sdpa(std::istream& is);
SdpProblem read_sdpa(const std::string& path);

}  // namespace lasserre
