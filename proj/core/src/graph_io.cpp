#include <algorithm>

#include <nlohmann/json.hpp>

#include "c2lab/error.hpp"
#include "c2lab/graph.hpp"

namespace c2lab {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

int sixbits(std::string_view s, std::size_t pos, std::size_t base) {
  const auto ch = static_cast<unsigned char>(s[pos]);
  if (ch < kBias || ch > 126) {
    throw ParseError("graph6 byte out of range 63..126", base + pos);
  }
  return ch - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);
  if (text.front() == ':' || text.front() == '&') {
    throw ParseError("sparse6/digraph6 input is not supported", base);
  }

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::size_t>(sixbits(text, 0, base));
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) != 126) {
    if (text.size() < 4) throw ParseError("truncated graph6 size header", base + text.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sixbits(text, i, base));
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated graph6 size header", base + text.size());
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(sixbits(text, i, base));
    pos = 8;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need) {
    throw ParseError("truncated graph6 adjacency data: expected " + std::to_string(need) +
                         " bytes",
                     base + text.size());
  }
  if (text.size() - pos > need) {
    throw ParseError("trailing bytes after graph6 adjacency data", base + pos + need);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = sixbits(text, pos + k / 6, base);
      if ((chunk >> (5 - k % 6)) & 1) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  return Graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  if (!g.is_simple()) throw InvalidInput("graph6 encodes simple graphs only");
  const std::size_t n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    throw InvalidInput("graph too large for graph6 emission");
  }
  std::vector<char> adj(n * n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u * n + e.v] = 1;
    adj[e.v * n + e.u] = 1;
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | adj[i * n + j];
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(const nlohmann::json& document) {
  if (!document.is_object() || !document.contains("n") || !document.contains("edges")) {
    throw InvalidInput(R"(edge list must be an object with "n" and "edges")");
  }
  const auto& jn = document.at("n");
  if (!jn.is_number_integer()) throw InvalidInput(R"("n" must be an integer)");
  const auto n = jn.get<std::int64_t>();
  if (n < 0) throw InvalidInput("vertex count must be non-negative");
  const auto& jedges = document.at("edges");
  if (!jedges.is_array()) throw InvalidInput(R"("edges" must be an array)");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    const auto& pair = jedges[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw InvalidInput("edge " + std::to_string(i) + " is not a pair of integers");
    }
    const auto a = pair[0].get<std::int64_t>();
    const auto b = pair[1].get<std::int64_t>();
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InvalidInput("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                         std::to_string(n - 1));
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return parse_edge_list(doc);
}

nlohmann::json emit_edge_list(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

}  // namespace c2lab
