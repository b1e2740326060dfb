#include "kleinc/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace kleinc {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Parses "# length N" headers; returns -1 for ordinary comments.
int header_length(std::string_view comment) {
  std::istringstream in{std::string(comment.substr(1))};
  std::string word;
  int n = -1;
  if (in >> word && word == "length" && in >> n) return n;
  return -1;
}

}  // namespace

KCode parse_code(std::string_view text) {
  std::vector<KWord> gens;
  int declared = -1;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim_right(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    std::size_t lead = 0;
    while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t')) ++lead;
    const std::string_view body = line.substr(lead);
    if (body.empty()) continue;
    if (body.front() == '#') {
      if (const int n = header_length(body); n >= 0) declared = n;
      continue;
    }
    if (body.size() > static_cast<std::size_t>(KWord::max_length))
      throw ParseError(line_no, static_cast<int>(lead) + 1, "word longer than 64 symbols");
    KWord w(static_cast<int>(body.size()));
    for (std::size_t i = 0; i < body.size(); ++i) {
      const char ch = body[i];
      if (ch != '0' && ch != 'a' && ch != 'b' && ch != 'c')
        throw ParseError(line_no, static_cast<int>(lead + i) + 1,
                         std::string("invalid symbol '") + ch + "' (expected one of 0, a, b, c)");
      w.set(static_cast<int>(i), symbol_from_char(ch));
    }
    if (!gens.empty() && w.length() != gens.front().length())
      throw ParseError(line_no, static_cast<int>(lead) + 1,
                       "generator has length " + std::to_string(w.length()) + ", expected " +
                           std::to_string(gens.front().length()));
    if (declared >= 0 && w.length() != declared)
      throw ParseError(line_no, static_cast<int>(lead) + 1, "generator length disagrees with the length header");
    gens.push_back(w);
  }
  if (gens.empty()) {
    if (declared < 0) throw ParseError(line_no, 1, "no generators and no '# length N' header");
    return KCode(declared);
  }
  return KCode::span(gens);
}

KCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str());
}

std::string format_code(const KCode& c) {
  std::string out = "# length " + std::to_string(c.length()) + "\n";
  for (const auto& r : c.basis()) out += r.str() + "\n";
  return out;
}

void write_code_file(const KCode& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_code(c);
}

}  // namespace kleinc
