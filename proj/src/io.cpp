#include "frl/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

#include "frl/error.hpp"

namespace frl {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] static void fail_at(std::size_t pos, const std::string& what) {
    throw Error(ErrorKind::Parse, "graph parse error at position " + std::to_string(pos) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Multigraph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::size_t>& positions) {
  if (n < 1) Cursor::fail_at(0, "vertex count must be >= 1");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [a, b] = edges[k];
    if (a == b) throw Error(ErrorKind::Parse, "tadpoles unsupported (edge " + std::to_string(a) + "-" +
                                                  std::to_string(b) + " at position " +
                                                  std::to_string(positions[k]) + ")");
    if (a >= n || b >= n)
      Cursor::fail_at(positions[k], "vertex out of range in edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  return Multigraph::from_edges(n, edges);
}

Multigraph parse_graph_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("graph JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_integer())
    throw Error(ErrorKind::Parse, "graph JSON needs an integer \"vertices\" field");
  const int n = j["vertices"].get<int>();
  std::vector<std::pair<int, int>> edges;
  std::vector<std::size_t> positions;
  if (j.contains("edges")) {
    const Json& list = j["edges"];
    if (!list.is_array()) throw Error(ErrorKind::Parse, "graph JSON \"edges\" must be an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const Json& e = list[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        throw Error(ErrorKind::Parse, "graph JSON edge " + std::to_string(k) + " must be a pair of vertex indices");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      positions.push_back(k);
    }
  }
  return build_graph(n, edges, positions);
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  Cursor c(text);
  if (c.accept('{')) return parse_graph_json(text);
  c.expect('n');
  c.expect('=');
  const int n = c.integer();
  std::vector<std::pair<int, int>> edges;
  std::vector<std::size_t> positions;
  if (c.accept(';') && !c.at_end()) {
    c.expect('e');
    c.expect('=');
    if (!c.at_end() && !c.accept(';')) {
      do {
        c.skip_space();
        const std::size_t at = c.position();
        const int a = c.integer();
        c.expect('-');
        const int b = c.integer();
        edges.emplace_back(a, b);
        positions.push_back(at);
      } while (c.accept(','));
      c.accept(';');
    }
  }
  if (!c.at_end()) c.fail("unexpected trailing input");
  return build_graph(n, edges, positions);
}

namespace {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void dump_rec(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const bool pretty = indent > 0;
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        if (pretty) out += '\n' + pad;
        out += Json(it.key()).dump();
        out += pretty ? ": " : ":";
        dump_rec(it.value(), indent, depth + 1, out);
      }
      if (pretty) out += '\n' + close_pad;
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat && pretty ? ", " : ",";
        first = false;
        if (pretty && !flat) out += '\n' + pad;
        dump_rec(v, indent, depth + 1, out);
      }
      if (pretty && !flat) out += '\n' + close_pad;
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  return out;
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Json to_json(const PowerCountReport& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["scaling_degree"] = r.scaling_degree;
  j["divergence_degree"] = r.divergence_degree;
  j["superficially_divergent"] = r.superficially_divergent;
  j["eg_primitive"] = r.eg_primitive;
  j["subdivergence_free"] = r.subdivergence_free;
  if (r.worst_subgraph) {
    j["worst_subgraph"] = r.worst_subgraph->members();
    j["worst_subgraph_divergence_degree"] = r.worst_subgraph_degree;
  } else {
    j["worst_subgraph"] = nullptr;
  }
  return j;
}

Json to_json(const PeriodEstimate& e) {
  Json j;
  j["value"] = e.value;
  j["method"] = std::string(to_string(e.method));
  if (e.method == QuadratureMethod::MonteCarlo) {
    j["std_error"] = e.error;
    j["dirichlet_shape"] = e.dirichlet_shape;
  } else {
    j["richardson_delta"] = e.error;
    j["points_per_axis"] = e.points_per_axis;
  }
  j["evaluations"] = e.evaluations;
  return j;
}

PeriodEstimate period_estimate_from_json(const Json& j) {
  PeriodEstimate e;
  e.value = j.at("value").get<double>();
  e.method = parse_quadrature_method(j.at("method").get<std::string>());
  if (e.method == QuadratureMethod::MonteCarlo) {
    e.error = j.at("std_error").get<double>();
    e.dirichlet_shape = j.at("dirichlet_shape").get<double>();
  } else {
    e.error = j.at("richardson_delta").get<double>();
    e.points_per_axis = j.at("points_per_axis").get<int>();
  }
  e.evaluations = j.at("evaluations").get<std::uint64_t>();
  return e;
}

Json to_json(const ResidueValue& v) {
  Json j;
  j["i_power"] = v.i_power();
  j["rational"] = {{"num", numerator(v.rational()).str()}, {"den", denominator(v.rational()).str()}};
  j["pi_power"] = v.pi_power();
  if (v.transcendental())
    j["transcendental"] = {{"tag", v.transcendental()->tag}, {"value", v.transcendental()->value}};
  else
    j["transcendental"] = nullptr;
  j["exact"] = v.exact_text();
  const auto z = v.numeric();
  j["numeric"] = {{"re", z.real()}, {"im", z.imag()}};
  return j;
}

ResidueValue residue_from_json(const Json& j) {
  Rational r(BigInt(j.at("rational").at("num").get<std::string>()),
             BigInt(j.at("rational").at("den").get<std::string>()));
  std::optional<Transcendental> t;
  if (!j.at("transcendental").is_null())
    t = Transcendental{j["transcendental"].at("tag").get<std::string>(),
                       j["transcendental"].at("value").get<double>()};
  return ResidueValue(j.at("i_power").get<int>(), r, j.at("pi_power").get<int>(), t);
}

Json to_json(const DiffOpResidue& d) {
  return {{"coefficient", to_json(d.coefficient)}, {"box_power", d.box_power}};
}

Json to_json(const CoproductTerm& t) {
  return {{"coefficient", t.coefficient}, {"left", to_string(t.left)}, {"right", to_string(t.right)}};
}

Json to_json(const BetaTerm& t) {
  Json blocks = Json::array();
  for (const auto& b : t.block_graphs) blocks.push_back(graph_to_json(b));
  Json status = Json::array();
  for (auto s : t.leaf_status) status.push_back(std::string(to_string(s)));
  return {{"partition", t.partition},
          {"quotient_graph", graph_to_json(t.quotient_graph)},
          {"block_graphs", blocks},
          {"leaf_status", status}};
}

}  // namespace frl
