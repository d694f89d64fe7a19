#include "z2z4q8/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace z2z4q8 {

int parse_q8_token(std::string_view t) {
  if (t.empty()) return -1;
  if (t == "1" || t == "e") return q8::kOne;
  std::uint8_t acc = q8::kOne;
  std::size_t i = 0;
  while (i < t.size()) {
    const char letter = t[i++];
    if (letter != 'a' && letter != 'b') return -1;
    if (i < t.size() && t[i] == '^') ++i;
    int exp = 1;
    const std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i > start) {
      if (i - start > 3) return -1;
      exp = std::stoi(std::string(t.substr(start, i - start)));
    } else if (t[i - 1] == '^') {
      return -1;
    }
    const std::uint8_t gen = letter == 'a' ? q8::kA : q8::kB;
    for (int k = 0; k < exp % 4; ++k) acc = q8::mul(acc, gen);
  }
  return acc;
}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> split(std::string_view line, int first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), first_column + static_cast<int>(start)});
  }
  return out;
}

int parse_count(const Token& t, int line) {
  int v = -1;
  const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size() || v < 0 || v > 4096)
    throw ParseError(line, t.column, "bad signature count '" + std::string(t.text) + "'");
  return v;
}

GroupWord parse_tokens(const GroupSignature& sig, const std::vector<Token>& toks, int line, int end_column) {
  if (toks.size() != static_cast<std::size_t>(sig.l())) {
    const int col = toks.size() > static_cast<std::size_t>(sig.l()) ? toks[static_cast<std::size_t>(sig.l())].column
                                                                      : end_column;
    throw ParseError(line, col,
                     "expected " + std::to_string(sig.l()) + " coordinates, got " + std::to_string(toks.size()));
  }
  std::vector<std::uint8_t> codes(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const auto& t = toks[i];
    int v = -1;
    switch (sig.factor(static_cast<int>(i))) {
      case GroupSignature::Factor::Z2:
        if (t.text == "0" || t.text == "1") v = t.text[0] - '0';
        break;
      case GroupSignature::Factor::Z4:
        if (t.text.size() == 1 && t.text[0] >= '0' && t.text[0] <= '3') v = t.text[0] - '0';
        break;
      case GroupSignature::Factor::Q8:
        v = parse_q8_token(t.text);
        break;
    }
    if (v < 0) {
      static constexpr const char* kWhat[3] = {"Z2", "Z4", "Q8"};
      throw ParseError(line, t.column,
                       "bad " + std::string(kWhat[static_cast<int>(sig.factor(static_cast<int>(i)))]) + " token '" +
                           std::string(t.text) + "'");
    }
    codes[i] = static_cast<std::uint8_t>(v);
  }
  return GroupWord::from_codes(sig, codes);
}

}  // namespace

GroupWord parse_element(const GroupSignature& sig, std::string_view tokens, int line, int first_column) {
  return parse_tokens(sig, split(tokens, first_column), line, first_column + static_cast<int>(tokens.size()));
}

GeneratorFile parse_generators(std::string_view text) {
  GeneratorFile f;
  bool have_sig = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto toks = split(line, 1);
    if (toks.empty()) continue;
    const auto& kw = toks.front();
    const std::vector<Token> rest(toks.begin() + 1, toks.end());
    const int end_col = static_cast<int>(line.size()) + 1;
    if (kw.text == "sig") {
      if (have_sig) throw ParseError(line_no, kw.column, "duplicate sig line");
      if (rest.size() != 3) throw ParseError(line_no, rest.size() > 3 ? rest[3].column : end_col, "sig needs k1 k2 k3");
      const int k1 = parse_count(rest[0], line_no), k2 = parse_count(rest[1], line_no), k3 = parse_count(rest[2], line_no);
      if (k1 + k2 + k3 == 0) throw ParseError(line_no, rest[0].column, "signature has no coordinates");
      f.signature = GroupSignature(k1, k2, k3);
      have_sig = true;
    } else if (kw.text == "gen") {
      if (!have_sig) throw ParseError(line_no, kw.column, "gen before sig");
      f.generators.push_back(parse_tokens(f.signature, rest, line_no, end_col));
    } else {
      throw ParseError(line_no, kw.column, "expected 'sig' or 'gen', got '" + std::string(kw.text) + "'");
    }
  }
  if (!have_sig) throw ParseError(line_no, 1, "missing sig line");
  return f;
}

GeneratorFile read_generator_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_generators(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path);
  }
}

std::string print_generators(const GeneratorFile& f) {
  std::string out = "sig " + std::to_string(f.signature.k1) + " " + std::to_string(f.signature.k2) + " " +
                    std::to_string(f.signature.k3) + "\n";
  for (const auto& g : f.generators) out += "gen " + to_string(g) + "\n";
  return out;
}

}  // namespace z2z4q8
