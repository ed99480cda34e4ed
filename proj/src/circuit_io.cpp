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
#include <optional>
#include <string>

#include "csdopt/circuit.hpp"
#include "csdopt/errors.hpp"

namespace csdopt {

namespace {

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

/// Splits a line into whitespace-separated tokens with 1-based columns.
struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  /// Next line, or nullopt at end of input. Tracks the line number.
  std::optional<std::string_view> next() {
    if (pos_ >= text_.size()) return std::nullopt;
    const std::size_t end = text_.find('\n', pos_);
    std::string_view line = text_.substr(
        pos_, end == std::string_view::npos ? text_.size() - pos_
                                            : end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

template <class Int>
Int parse_int(std::string_view s, std::size_t line, std::size_t col) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'",
                     line, col);
  }
  return v;
}

double parse_double(std::string_view s, std::size_t line, std::size_t col) {
  const std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
    throw ParseError("expected a number, got '" + tmp + "'", line, col);
  }
  return v;
}

std::string_view expect_key(const Token& t, std::string_view key,
                            std::size_t line) {
  if (t.text.substr(0, key.size()) != key) {
    throw ParseError("expected '" + std::string(key) + "'", line, t.column);
  }
  return t.text.substr(key.size());
}

Gate parse_gate(const std::vector<Token>& toks, int n, std::size_t line) {
  const std::string_view kind = toks[0].text;
  if (kind == "SWAP") {
    if (toks.size() != 2) throw ParseError("SWAP takes t=<i>,<j>", line, 1);
    const std::string_view v = expect_key(toks[1], "t=", line);
    const std::size_t comma = v.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("SWAP needs two targets", line, toks[1].column);
    }
    const int a = parse_int<int>(v.substr(0, comma), line, toks[1].column + 2);
    const int b = parse_int<int>(v.substr(comma + 1), line,
                                 toks[1].column + 3 + comma);
    return Gate::swap(a, b);
  }
  GateKind k;
  if (kind == "RY") {
    k = GateKind::RY;
  } else if (kind == "RZ") {
    k = GateKind::RZ;
  } else if (kind == "PHASE") {
    k = GateKind::PHASE;
  } else if (kind == "Z") {
    k = GateKind::Z;
  } else {
    throw ParseError("unknown gate kind '" + std::string(kind) + "'", line, 1);
  }
  const bool with_angle = k != GateKind::Z;
  const std::size_t expected = with_angle ? 4 : 3;
  if (toks.size() != expected) {
    throw ParseError("wrong number of fields for " + std::string(kind), line,
                     1);
  }
  Gate g;
  g.kind = k;
  g.target =
      parse_int<int>(expect_key(toks[1], "t=", line), line, toks[1].column + 2);
  if (with_angle) {
    g.angle = parse_double(expect_key(toks[2], "a=", line), line,
                           toks[2].column + 2);
  }
  const Token& ct = toks[expected - 1];
  const std::string_view pat = expect_key(ct, "c=", line);
  if (pat.size() != static_cast<std::size_t>(n)) {
    throw ParseError("control pattern must have " + std::to_string(n) +
                         " characters",
                     line, ct.column + 2);
  }
  for (int q = 1; q <= n; ++q) {
    const char ch = pat[static_cast<std::size_t>(q - 1)];
    const std::uint32_t bit = 1U << (q - 1);
    if (ch == '1') {
      g.ctrl_mask |= bit;
      g.ctrl_value |= bit;
    } else if (ch == '0') {
      g.ctrl_mask |= bit;
    } else if (ch != '.') {
      throw ParseError("pattern characters must be 0, 1 or '.'", line,
                       ct.column + 2 + static_cast<std::size_t>(q - 1));
    }
  }
  return g;
}

}  // namespace

std::string export_gatelist(const SegmentedCircuit& c) {
  const int n = c.n_qubits();
  std::string out;
  out += "qubits " + std::to_string(n) + "\n";
  out += "segments " + std::to_string(c.segments().size()) + "\n";
  for (std::size_t s = 0; s < c.segments().size(); ++s) {
    const Circuit& seg = c.segments()[s];
    out += "segment " + c.names()[s] + " " + std::to_string(seg.size()) + "\n";
    for (const Gate& g : seg.gates()) {
      if (g.kind == GateKind::SWAP) {
        out += "SWAP t=" + std::to_string(g.target) + "," +
               std::to_string(g.target2) + "\n";
        continue;
      }
      out += std::string(to_string(g.kind)) + " t=" + std::to_string(g.target);
      if (g.has_angle()) out += " a=" + format_angle(g.angle);
      out += " c=" + g.pattern(n) + "\n";
    }
  }
  return out;
}

SegmentedCircuit parse_gatelist(std::string_view text) {
  LineReader reader(text);
  auto header = [&](std::string_view key) -> std::pair<Token, std::size_t> {
    const auto line = reader.next();
    if (!line) throw ParseError("missing '" + std::string(key) + "' line",
                                reader.line_no() + 1, 1);
    const auto toks = tokenize(*line);
    if (toks.size() != 2 || toks[0].text != key) {
      throw ParseError("expected '" + std::string(key) + " <count>'",
                       reader.line_no(), 1);
    }
    return {toks[1], reader.line_no()};
  };
  const auto [nq_tok, nq_line] = header("qubits");
  const int n = parse_int<int>(nq_tok.text, nq_line, nq_tok.column);
  if (n < 1 || n > kMaxQubits) {
    throw ParseError("qubit count out of range", nq_line, nq_tok.column);
  }
  const auto [ns_tok, ns_line] = header("segments");
  const auto n_segments =
      parse_int<std::size_t>(ns_tok.text, ns_line, ns_tok.column);

  std::vector<std::string> names;
  std::vector<Circuit> segments;
  for (std::size_t s = 0; s < n_segments; ++s) {
    const auto line = reader.next();
    if (!line) throw ParseError("missing segment header", reader.line_no() + 1, 1);
    const auto toks = tokenize(*line);
    if (toks.size() != 3 || toks[0].text != "segment") {
      throw ParseError("expected 'segment <name> <gatecount>'",
                       reader.line_no(), 1);
    }
    const auto count =
        parse_int<std::size_t>(toks[2].text, reader.line_no(), toks[2].column);
    Circuit seg(n);
    for (std::size_t i = 0; i < count; ++i) {
      const auto gl = reader.next();
      if (!gl) throw ParseError("missing gate line", reader.line_no() + 1, 1);
      const auto gtoks = tokenize(*gl);
      if (gtoks.empty()) throw ParseError("empty gate line", reader.line_no(), 1);
      const Gate g = parse_gate(gtoks, n, reader.line_no());
      try {
        seg.append(g);
      } catch (const ShapeError& e) {
        throw ParseError(e.what(), reader.line_no(), 1);
      }
    }
    names.emplace_back(toks[1].text);
    segments.push_back(std::move(seg));
  }
  while (const auto rest = reader.next()) {
    if (!tokenize(*rest).empty()) {
      throw ParseError("unexpected content after last segment",
                       reader.line_no(), 1);
    }
  }
  return SegmentedCircuit(n, std::move(names), std::move(segments));
}

std::string export_qasm(const SegmentedCircuit& c) {
  const int n = c.n_qubits();
  std::string out = "OPENQASM 3.0;\nqubit[" + std::to_string(n) + "] q;\n";
  auto qubit = [](int k) { return "q[" + std::to_string(k - 1) + "]"; };
  for (std::size_t s = 0; s < c.segments().size(); ++s) {
    out += "// segment " + c.names()[s] + "\n";
    for (const Gate& g : c.segments()[s].gates()) {
      if (g.kind == GateKind::SWAP) {
        out += "swap " + qubit(g.target) + ", " + qubit(g.target2) + ";\n";
        continue;
      }
      if (g.is_global_phase()) {
        out += "gphase(" + format_angle(g.angle) + ");\n";
        continue;
      }
      std::string mods;
      std::string operands;
      for (int k = 1; k <= n; ++k) {
        const std::uint32_t bit = 1U << (k - 1);
        if (!(g.ctrl_mask & bit)) continue;
        mods += (g.ctrl_value & bit) ? "ctrl @ " : "negctrl @ ";
        operands += qubit(k) + ", ";
      }
      std::string op;
      switch (g.kind) {
        case GateKind::RY:
          op = "ry(" + format_angle(g.angle) + ")";
          break;
        case GateKind::RZ:
          op = "rz(" + format_angle(g.angle) + ")";
          break;
        case GateKind::PHASE:
          // Controlled scalar phase on the target's two states.
          op = "gphase(" + format_angle(g.angle) + ")";
          break;
        case GateKind::Z:
          op = "z";
          break;
        case GateKind::SWAP:
          break;
      }
      out += mods + op + " " + operands + qubit(g.target) + ";\n";
    }
  }
  return out;
}

}  // namespace csdopt
