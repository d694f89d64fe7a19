#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "z2z4q8/group.hpp"

namespace z2z4q8 {

/// Syntax error at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg, const std::string& source = "")
      : std::runtime_error((source.empty() ? "" : source + ":") + std::to_string(line) + ":" + std::to_string(column) +
                           ": " + msg),
        line_(line), column_(column), msg_(msg) {}
  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] int column() const noexcept { return column_; }
  [[nodiscard]] const std::string& message() const noexcept { return msg_; }

 private:
  int line_;
  int column_;
  std::string msg_;
};

/// Line-oriented text:
///
///   # comment
///   sig k1 k2 k3
///   gen t1 ... tl
///
/// Z2 tokens are 0|1, Z4 tokens 0..3. A Q8 token is a product of a, b with
/// optional exponents ("a3b", "b3", "a^2b", "1"), normalized on read.
struct GeneratorFile {
  GroupSignature signature;
  std::vector<GroupWord> generators;

  friend bool operator==(const GeneratorFile&, const GeneratorFile&) = default;
};

[[nodiscard]] GeneratorFile parse_generators(std::string_view text);
[[nodiscard]] GeneratorFile read_generator_file(const std::string& path);
[[nodiscard]] std::string print_generators(const GeneratorFile& f);

/// One element in the token grammar, e.g. "1 1 a2 a2". `line` and
/// `first_column` position error messages.
[[nodiscard]] GroupWord parse_element(const GroupSignature& sig, std::string_view tokens, int line = 1,
                                      int first_column = 1);

/// Q8 code of a token, or -1 if it is not a word in a and b.
[[nodiscard]] int parse_q8_token(std::string_view token);

}  // namespace z2z4q8
