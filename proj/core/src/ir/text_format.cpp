// Copyright 2026 The CPQC Authors
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

#include "cpqc/ir/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cpqc/common/errors.hpp"

namespace cpqc::ir {
namespace {

constexpr std::string_view kMagic = "cpqc-ir v1";

struct Token {
  std::string_view text;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

  bool done() const { return pos_ >= tokens_.size(); }
  std::string_view peek() const { return done() ? std::string_view{} : tokens_[pos_].text; }

  [[noreturn]] void fail(const std::string& what) const {
    const int col = done() ? (tokens_.empty() ? 1 : end_column()) : tokens_[pos_].column;
    throw ParseError(what, line_, col);
  }

  /// Fails at the token consumed last.
  [[noreturn]] void fail_previous(const std::string& what) const {
    throw ParseError(what, line_, pos_ == 0 ? 1 : tokens_[pos_ - 1].column);
  }

  std::string_view word() {
    if (done()) fail("unexpected end of line");
    return tokens_[pos_++].text;
  }

  long integer(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    const Token& t = tokens_[pos_];
    long value = 0;
    const auto* end = t.text.data() + t.text.size();
    const auto res = std::from_chars(t.text.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
      fail(std::string("expected integer ") + what + ", got '" + std::string(t.text) + "'");
    }
    ++pos_;
    return value;
  }

  int index(const char* what) {
    const long v = integer(what);
    if (v < 0 || v > 1'000'000) {
      --pos_;
      fail(std::string(what) + " out of range");
    }
    return static_cast<int>(v);
  }

  double real(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    const Token& t = tokens_[pos_];
    double value = 0.0;
    const auto* end = t.text.data() + t.text.size();
    const auto res = std::from_chars(t.text.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
      fail(std::string("expected number ") + what + ", got '" + std::string(t.text) + "'");
    }
    ++pos_;
    return value;
  }

  void expect_end() const {
    if (!done()) fail("unexpected token '" + std::string(peek()) + "'");
  }

 private:
  int end_column() const {
    const Token& last = tokens_.back();
    return last.column + static_cast<int>(last.text.size());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

std::optional<sim::GateKind> parse_kind(std::string_view word) {
  using sim::GateKind;
  if (word == "rx") return GateKind::RX;
  if (word == "ry") return GateKind::RY;
  if (word == "rz") return GateKind::RZ;
  if (word == "sx") return GateKind::SX;
  if (word == "x") return GateKind::X;
  if (word == "h") return GateKind::H;
  if (word == "u3") return GateKind::U3;
  return std::nullopt;
}

Block parse_gate(LineParser& p, std::string_view head) {
  using sim::GateKind;
  using sim::GateOp;
  if (head == "cx" || head == "ccx") {
    const int c0 = p.index("control");
    if (head == "cx") {
      const int t = p.index("target");
      p.expect_end();
      return FixedBlock{GateOp::cnot(c0, t)};
    }
    const int c1 = p.index("control");
    const int t = p.index("target");
    p.expect_end();
    return FixedBlock{GateOp::toffoli(c0, c1, t)};
  }
  const auto kind = parse_kind(head);
  if (!kind) p.fail_previous("unknown gate '" + std::string(head) + "'");
  const int target = p.index("target");

  enum class Source { None, Param, Feature, Angle } source = Source::None;
  int index = 0;
  GateOp gate{*kind, target, {}};
  if (!p.done() && p.peek() != "ctrl") {
    const std::string_view what = p.word();
    if (what == "param") {
      source = Source::Param;
      index = p.index("parameter slot");
    } else if (what == "feature") {
      source = Source::Feature;
      index = p.index("feature index");
    } else if (what == "angle") {
      source = Source::Angle;
      gate.angle = p.real("angle");
      if (*kind == GateKind::U3) {
        gate.phi = p.real("phi");
        gate.lambda = p.real("lambda");
      }
    } else {
      p.fail("expected param, feature, angle or ctrl, got '" + std::string(what) + "'");
    }
  }
  std::vector<int> controls;
  if (!p.done()) {
    if (p.word() != "ctrl") p.fail("expected ctrl");
    while (!p.done()) controls.push_back(p.index("control"));
    if (controls.empty()) p.fail("ctrl needs at least one qubit");
  }
  p.expect_end();

  const bool rotation = sim::is_rotation(*kind);
  if ((source == Source::Param || source == Source::Feature) && !rotation) {
    p.fail("only rx, ry and rz take a param or feature");
  }
  if (rotation && source == Source::None) p.fail("rotation needs param, feature or angle");
  if (*kind == GateKind::U3 && source != Source::Angle) p.fail("u3 needs angle t p l");
  if (!rotation && *kind != GateKind::U3 && source == Source::Angle) {
    p.fail("gate takes no angle");
  }
  switch (source) {
    case Source::Param:
      return ParamBlock{sim::rotation_axis(*kind), index, target, std::move(controls)};
    case Source::Feature:
      if (!controls.empty()) p.fail("encodings cannot be controlled");
      return EncodingBlock{index, sim::rotation_axis(*kind), target};
    default:
      gate.controls = std::move(controls);
      return FixedBlock{std::move(gate)};
  }
}

void append_controls(std::string& out, const std::vector<int>& controls) {
  if (controls.empty()) return;
  out += " ctrl";
  for (int c : controls) out += " " + std::to_string(c);
}

std::string format_block(const Block& block) {
  std::string out;
  if (const auto* e = std::get_if<EncodingBlock>(&block)) {
    out += 'r';
    out += sim::axis_letter(e->axis);
    out += " " + std::to_string(e->target) + " feature " + std::to_string(e->feature);
    return out;
  }
  if (const auto* p = std::get_if<ParamBlock>(&block)) {
    out += 'r';
    out += sim::axis_letter(p->axis);
    out += " " + std::to_string(p->target) + " param " + std::to_string(p->slot);
    append_controls(out, p->controls);
    return out;
  }
  const sim::GateOp& g = std::get<FixedBlock>(block).gate;
  if (g.kind == sim::GateKind::X && g.controls.size() == 1) {
    return "cx " + std::to_string(g.controls[0]) + " " + std::to_string(g.target);
  }
  if (g.kind == sim::GateKind::X && g.controls.size() == 2) {
    return "ccx " + std::to_string(g.controls[0]) + " " + std::to_string(g.controls[1]) + " " +
           std::to_string(g.target);
  }
  out += sim::gate_kind_name(g.kind);
  out += " " + std::to_string(g.target);
  if (sim::is_rotation(g.kind)) out += " angle " + format_double(g.angle);
  if (g.kind == sim::GateKind::U3) {
    out += " angle " + format_double(g.angle) + " " + format_double(g.phi) + " " +
           format_double(g.lambda);
  }
  append_controls(out, g.controls);
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string serialize(const Circuit& circuit, std::span<const double> theta,
                      const std::optional<ConditionalHeader>& conditional) {
  std::string out;
  out += kMagic;
  out += "\nnum_qubits " + std::to_string(circuit.num_qubits);
  out += "\nnum_features " + std::to_string(circuit.num_features);
  out += "\nnum_params " + std::to_string(circuit.num_params);
  out += "\nmeasure";
  for (int q : circuit.measured) out += " " + std::to_string(q);
  if (!theta.empty()) {
    out += "\ntheta";
    for (double v : theta) out += " " + format_double(v);
  }
  if (conditional) {
    out += "\nconditional\nregisters";
    for (int s : conditional->sizes) out += " " + std::to_string(s);
    out += "\nsteps";
    for (double s : conditional->steps) out += " " + format_double(s);
    out += "\ntarget " + std::to_string(conditional->target_size);
  }
  out += '\n';
  for (const Layer& layer : circuit.layers) {
    out += "layer\n";
    for (const Block& b : layer.blocks) out += format_block(b) + "\n";
  }
  return out;
}

Document deserialize(std::string_view text) {
  Document doc;
  Circuit& c = doc.circuit;
  c.measured.clear();
  bool seen_magic = false, seen_qubits = false, seen_features = false, seen_params = false,
       seen_measure = false, in_body = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    LineParser p(tokenize(line), line_no);
    if (p.done()) continue;
    if (!seen_magic) {
      const std::string_view a = p.word();
      if (a != "cpqc-ir" || p.word() != "v1") p.fail("expected header 'cpqc-ir v1'");
      p.expect_end();
      seen_magic = true;
      continue;
    }
    const std::string_view head = p.word();
    if (!in_body) {
      if (head == "num_qubits") {
        c.num_qubits = p.index("num_qubits");
        seen_qubits = true;
      } else if (head == "num_features") {
        c.num_features = p.index("num_features");
        seen_features = true;
      } else if (head == "num_params") {
        c.num_params = p.index("num_params");
        seen_params = true;
      } else if (head == "measure") {
        while (!p.done()) c.measured.push_back(p.index("measured qubit"));
        seen_measure = true;
      } else if (head == "theta") {
        while (!p.done()) doc.theta.push_back(p.real("theta"));
      } else if (head == "conditional") {
        doc.conditional.emplace();
      } else if (head == "registers" && doc.conditional) {
        while (!p.done()) doc.conditional->sizes.push_back(p.index("register size"));
      } else if (head == "steps" && doc.conditional) {
        while (!p.done()) doc.conditional->steps.push_back(p.real("step"));
      } else if (head == "target" && doc.conditional) {
        doc.conditional->target_size = p.index("target size");
      } else if (head == "layer") {
        if (!seen_qubits) p.fail("missing num_qubits before first layer");
        in_body = true;
        c.layers.emplace_back();
      } else {
        p.fail_previous("unknown header field '" + std::string(head) + "'");
      }
      p.expect_end();
      continue;
    }
    if (head == "layer") {
      p.expect_end();
      c.layers.emplace_back();
      continue;
    }
    c.layers.back().blocks.push_back(parse_gate(p, head));
  }
  if (!seen_magic) throw ParseError("empty document", 1, 1);
  const auto missing = [&](const char* field) {
    throw ParseError(std::string("missing ") + field, line_no, 1);
  };
  if (!seen_qubits) missing("num_qubits");
  if (!seen_features) missing("num_features");
  if (!seen_params) missing("num_params");
  if (!seen_measure) c.measured = {0};
  if (!doc.theta.empty() && doc.theta.size() != static_cast<std::size_t>(c.num_params)) {
    throw ParseError("theta has " + std::to_string(doc.theta.size()) + " values, expected " +
                         std::to_string(c.num_params),
                     line_no, 1);
  }
  if (doc.conditional && doc.conditional->sizes.size() != doc.conditional->steps.size()) {
    throw ParseError("conditional registers and steps differ in length", line_no, 1);
  }
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line_no, 1);
  }
  return doc;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace cpqc::ir
