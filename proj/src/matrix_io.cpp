// Copyright 2026 The csdopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "csdopt/cli.hpp"
#include "csdopt/errors.hpp"

namespace csdopt {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

double to_double(std::string_view s, std::size_t line, std::size_t column) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed number '" + std::string(s) + "'", line,
                     column);
  return v;
}

class Lines {
 public:
  explicit Lines(std::string_view text) : text_(text) {}

  /// Next line with its 1-based number; false at end of input.
  bool next(std::string_view& line) {
    if (pos_ > text_.size() || (pos_ == text_.size() && trailing_done_))
      return false;
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) {
      end = text_.size();
      trailing_done_ = true;
      if (pos_ == end) return false;
    }
    line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++number_;
    return true;
  }
  std::size_t number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
  bool trailing_done_ = false;
};

}  // namespace

UnitaryMatrix parse_matrix(std::string_view text, double tol) {
  Lines lines(text);
  std::string_view line;
  if (!lines.next(line)) throw ParseError("missing header", 1, 1);
  auto head = split(line);
  if (head.size() != 3 || head[0].text != "dim")
    throw ParseError("expected 'dim <m> <real|complex>'", 1,
                     head.empty() ? 1 : head[0].column);
  std::size_t m = 0;
  {
    auto s = head[1].text;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), m);
    if (ec != std::errc() || ptr != s.data() + s.size() || m == 0)
      throw ParseError("bad dimension", 1, head[1].column);
  }
  bool complex = false;
  if (head[2].text == "complex")
    complex = true;
  else if (head[2].text != "real")
    throw ParseError("expected 'real' or 'complex'", 1, head[2].column);

  ComplexMatrix a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < m; ++r) {
    if (!lines.next(line))
      throw ParseError("expected row " + std::to_string(r + 1) + " of " +
                           std::to_string(m),
                       lines.number() + 1, 1);
    const std::size_t ln = lines.number();
    auto toks = split(line);
    if (toks.size() != m)
      throw ParseError("expected " + std::to_string(m) + " entries, found " +
                           std::to_string(toks.size()),
                       ln, toks.size() > m ? toks[m].column : line.size() + 1);
    for (std::size_t c = 0; c < m; ++c) {
      const auto& t = toks[c];
      Complex v;
      if (complex) {
        auto comma = t.text.find(',');
        if (comma == std::string_view::npos)
          throw ParseError("expected 're,im'", ln, t.column);
        v = {to_double(t.text.substr(0, comma), ln, t.column),
             to_double(t.text.substr(comma + 1), ln, t.column + comma + 1)};
      } else {
        v = {to_double(t.text, ln, t.column), 0.0};
      }
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  while (lines.next(line)) {
    auto toks = split(line);
    if (!toks.empty())
      throw ParseError("unexpected content after matrix", lines.number(),
                       toks[0].column);
  }
  return UnitaryMatrix(std::move(a), tol);
}

UnitaryMatrix parse_matrix_file(const std::filesystem::path& path,
                                double tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str(), tol);
}

std::string format_matrix(const ComplexMatrix& m) {
  const bool real = has_zero_imaginary(m);
  std::string out = "dim " + std::to_string(m.rows()) +
                    (real ? " real\n" : " complex\n");
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      if (real)
        std::snprintf(buf, sizeof buf, "%.17g", m(r, c).real());
      else
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", m(r, c).real(),
                      m(r, c).imag());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void write_matrix_file(const std::filesystem::path& path,
                       const ComplexMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_matrix(m);
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace csdopt
