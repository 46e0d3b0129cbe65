#include "billiards/graph_spec.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "billiards/errors.hpp"
#include "billiards/graph6.hpp"

namespace billiards {

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  MaterializedGraph parse_all() {
    MaterializedGraph g = parse_spec();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("graph spec: " + what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  int parse_int() {
    if (!peek_digit()) fail("expected an integer");
    long value = 0;
    while (peek_digit()) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1'000'000) fail("integer too large");
    }
    return static_cast<int>(value);
  }

  MaterializedGraph parse_spec() {
    if (accept("edges:")) return parse_edges();
    if (accept("g6:")) {
      // The size byte fixes the length, so "@" (a legal graph6 byte) can
      // still follow as an operator.
      if (pos_ >= text_.size()) fail("missing graph6 data");
      const std::size_t start = pos_;
      const std::size_t n = static_cast<unsigned char>(text_[pos_]) >= 63
                                ? static_cast<unsigned char>(text_[pos_]) - 63u
                                : 0u;
      const std::size_t length = std::min(1 + (n * (n > 0 ? n - 1 : 0) / 2 + 5) / 6, text_.size() - start);
      pos_ += length;
      return MaterializedGraph(parse_graph6(text_.substr(start, length)));
    }
    if (accept("compl:")) {
      MaterializedGraph h = parse_spec();
      expect('@');
      const int n = parse_int();
      if (!h.refraction_only()) fail("compl: operand has reflection edges");
      return MaterializedGraph(compl_n(h.graph(), n));
    }
    if (accept("wedge:")) {
      MaterializedGraph g1 = parse_spec();
      expect('@');
      const int v1 = parse_int();
      expect('+');
      MaterializedGraph g2 = parse_spec();
      expect('@');
      const int v2 = parse_int();
      return wedge(g1, v1, g2, v2);
    }
    if (accept("union:")) {
      MaterializedGraph g1 = parse_spec();
      expect('+');
      MaterializedGraph g2 = parse_spec();
      return disjoint_union(g1, g2);
    }
    for (std::string_view name : {"complete", "cycle", "path", "empty", "star"}) {
      if (accept(std::string(name) + ":")) {
        const int params[] = {parse_int()};
        return MaterializedGraph(family(name, params));
      }
    }
    if (accept("kbip:")) {
      const int l = parse_int();
      expect(',');
      const int params[] = {l, parse_int()};
      return MaterializedGraph(family("kbip", params));
    }
    if (accept("tree:")) {
      std::vector<int> params{parse_int()};
      if (accept(";")) {
        params.push_back(parse_int());
        while (accept(",")) params.push_back(parse_int());
      }
      return MaterializedGraph(family("tree", params));
    }
    fail("unknown graph spec");
  }

  MaterializedGraph parse_edges() {
    const int n = parse_int();
    expect(';');
    std::vector<Edge> edges;
    std::vector<Edge> reflect;
    if (peek_digit()) {
      do {
        const int a = parse_int();
        expect('-');
        const int b = parse_int();
        if (a < 1 || b < 1 || a > n || b > n) fail("vertex out of range");
        if (a == b) fail("self-loop");
        edges.emplace_back(a, b);
        if (accept("!")) reflect.emplace_back(a, b);
      } while (accept(","));
    }
    return MaterializedGraph(Graph(n, edges), reflect);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MaterializedGraph parse_graph_spec(std::string_view text) { return SpecParser(text).parse_all(); }

std::string format_graph_spec(const MaterializedGraph& g) {
  std::string out = "edges:" + std::to_string(g.order()) + ";";
  bool first = true;
  for (const Edge& e : g.graph().edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e.a) + "-" + std::to_string(e.b);
    if (g.kind(e.a, e.b) == EdgeKind::Reflect) out += '!';
  }
  return out;
}

}  // namespace billiards
