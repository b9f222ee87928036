#include "anumber/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "anumber/error.hpp"

namespace anumber {

std::string VertexSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

SimpleGraph::SimpleGraph(int order) {
  if (order < 0) throw MalformedInput("negative vertex count");
  if (order > VertexSubset::kMaxVertices) {
    throw UnsupportedInstance("graphs are limited to 63 vertices, got " +
                              std::to_string(order));
  }
  adjacency_.assign(static_cast<std::size_t>(order), VertexSubset{});
}

SimpleGraph::SimpleGraph(int order, const std::vector<Edge>& edges) : SimpleGraph(order) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw MalformedInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") outside vertex range 0.." + std::to_string(order - 1));
    }
    if (u == v) throw MalformedInput("loop at vertex " + std::to_string(u));
    adjacency_[u] = adjacency_[u].with(v);
    adjacency_[v] = adjacency_[v].with(u);
  }
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= order()) return false;
  return adjacency_[u].contains(v);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto nbrs : adjacency_) twice += static_cast<std::size_t>(nbrs.size());
  return twice / 2;
}

std::vector<SimpleGraph::Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> out;
  out.reserve(adjacency_.size());
  for (auto nbrs : adjacency_) out.push_back(nbrs.size());
  return out;
}

std::string_view family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::complete: return "complete";
    case GraphFamily::star: return "star";
  }
  return "?";
}

GraphFamily parse_family(std::string_view name) {
  for (auto f : {GraphFamily::path, GraphFamily::cycle, GraphFamily::complete, GraphFamily::star}) {
    if (family_name(f) == name) return f;
  }
  throw MalformedInput("unknown graph family '" + std::string(name) +
                       "' (expected path, cycle, complete or star)");
}

SimpleGraph generate(GraphFamily family, int n) {
  if (n < 0) throw MalformedInput("negative vertex count");
  std::vector<SimpleGraph::Edge> edges;
  switch (family) {
    case GraphFamily::path:
      for (int k = 0; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
      break;
    case GraphFamily::cycle:
      if (n == 1 || n == 2) {
        throw UnsupportedInstance("a simple cycle needs 0 or at least 3 vertices");
      }
      for (int k = 0; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
      if (n >= 3) edges.emplace_back(n - 1, 0);
      break;
    case GraphFamily::complete:
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      break;
    case GraphFamily::star:
      for (int k = 1; k < n; ++k) edges.emplace_back(0, k);
      break;
  }
  return SimpleGraph(n, edges);
}

namespace {

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw MalformedInput(std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

SimpleGraph generate_from_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw MalformedInput("generator spec must look like 'path:6', got '" + std::string(spec) + "'");
  }
  auto family = parse_family(spec.substr(0, colon));
  int n = parse_int(spec.substr(colon + 1), "vertex count");
  return generate(family, n);
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string word;
    while (words >> word) tokens.push_back(word);
  }
  if (tokens.empty()) throw MalformedInput("edge list is empty (expected vertex count)");
  int n = parse_int(tokens.front(), "vertex count");
  if (n < 0) throw MalformedInput("negative vertex count");
  if ((tokens.size() - 1) % 2 != 0) throw MalformedInput("edge list has a dangling endpoint");

  std::vector<SimpleGraph::Edge> edges;
  for (std::size_t k = 1; k < tokens.size(); k += 2) {
    edges.emplace_back(parse_int(tokens[k], "vertex index"),
                       parse_int(tokens[k + 1], "vertex index"));
  }
  return SimpleGraph(n, edges);
}

std::string encode_edge_list(const SimpleGraph& graph) {
  std::string out = std::to_string(graph.order()) + "\n";
  for (auto [u, v] : graph.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

SimpleGraph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw MalformedInput("graph6 string is empty");
  for (char c : text) {
    auto byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126) {
      throw MalformedInput("graph6 byte " + std::to_string(byte) + " outside 63..126");
    }
  }
  auto value = [&](std::size_t k) { return static_cast<std::uint64_t>(text[k]) - 63; };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (value(0) != 63) {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && value(1) == 63) {
    if (text.size() < 8) throw MalformedInput("graph6 header truncated");
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | value(k);
    pos = 8;
  } else {
    if (text.size() < 4) throw MalformedInput("graph6 header truncated");
    for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | value(k);
    pos = 4;
  }
  if (n > static_cast<std::uint64_t>(VertexSubset::kMaxVertices)) {
    throw UnsupportedInstance("graphs are limited to 63 vertices, graph6 header says " +
                              std::to_string(n));
  }

  const int order = static_cast<int>(n);
  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos < byte_count) throw MalformedInput("graph6 bit stream truncated");
  if (text.size() - pos > byte_count) throw MalformedInput("graph6 has trailing bytes");

  std::vector<SimpleGraph::Edge> edges;
  std::size_t bit = 0;
  auto read_bit = [&](std::size_t index) {
    auto word = value(pos + index / 6);
    return (word >> (5 - index % 6)) & 1U;
  };
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (read_bit(bit)) edges.emplace_back(i, j);
    }
  }
  for (; bit < byte_count * 6; ++bit) {
    if (read_bit(bit)) throw MalformedInput("graph6 padding bits are not zero");
  }
  return SimpleGraph(order, edges);
}

std::string encode_graph6(const SimpleGraph& graph) {
  const int n = graph.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + 63);
    }
  }
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (graph.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(word + 63);
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((word << (6 - filled)) + 63);
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& graph, VertexSubset subset) {
  if (!subset.is_subset_of(graph.vertices())) {
    throw DomainError("subset " + subset.to_string() + " is not contained in the vertex set");
  }
  std::vector<int> relabel(static_cast<std::size_t>(graph.order()), -1);
  int next = 0;
  for (int v : subset) relabel[v] = next++;
  std::vector<SimpleGraph::Edge> edges;
  for (int u : subset) {
    for (int v : graph.neighbors(u) & subset) {
      if (u < v) edges.emplace_back(relabel[u], relabel[v]);
    }
  }
  return SimpleGraph(next, edges);
}

namespace {

VertexSubset component_of(const SimpleGraph& graph, VertexSubset within, int start) {
  auto reached = VertexSubset::singleton(start);
  auto frontier = reached;
  while (!frontier.empty()) {
    VertexSubset next;
    for (int v : frontier) next = next | graph.neighbors(v);
    next = (next & within) - reached;
    reached = reached | next;
    frontier = next;
  }
  return reached;
}

}  // namespace

std::vector<VertexSubset> components_within(const SimpleGraph& graph, VertexSubset subset) {
  std::vector<VertexSubset> out;
  auto rest = subset;
  while (!rest.empty()) {
    auto piece = component_of(graph, subset, rest.min());
    out.push_back(piece);
    rest = rest - piece;
  }
  return out;
}

bool is_connected(const SimpleGraph& graph, VertexSubset subset) {
  if (subset.empty()) return false;
  return component_of(graph, subset, subset.min()) == subset;
}

bool is_connected(const SimpleGraph& graph) { return is_connected(graph, graph.vertices()); }

SimpleGraph disjoint_union(const SimpleGraph& first, const SimpleGraph& second) {
  auto edges = first.edges();
  const int shift = first.order();
  for (auto [u, v] : second.edges()) edges.emplace_back(u + shift, v + shift);
  return SimpleGraph(first.order() + second.order(), edges);
}

}  // namespace anumber
