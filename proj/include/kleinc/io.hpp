#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kleinc/code.hpp"

namespace kleinc {

/// Raised for malformed code files; the message names the line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Code file format: optional `#` comment lines and blank lines, then one
/// generator per line over {0,a,b,c}, all of equal length. A file with a
/// single `# length N` header and no generators denotes the zero code.
KCode parse_code(std::string_view text);
KCode read_code_file(const std::filesystem::path& path);

/// Writes the canonical basis, one row per line, preceded by a length header.
std::string format_code(const KCode& c);
void write_code_file(const KCode& c, const std::filesystem::path& path);

}  // namespace kleinc
