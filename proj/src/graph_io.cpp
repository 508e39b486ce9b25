#include "isocrit/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace isocrit {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxOneByte = 62;
constexpr int kMaxThreeByte = 258047;

long long bit_count(long long n) { return n * (n - 1) / 2; }

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxThreeByte) {
    throw std::invalid_argument("graph too large for supported graph6 headers");
  }
  std::string out;
  if (n <= kMaxOneByte) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  const long long bits = bit_count(n);
  std::string data((bits + 5) / 6, 0);
  long long t = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (g.has_edge(row, col)) data[t / 6] |= static_cast<char>(1 << (5 - t % 6));
      ++t;
    }
  }
  for (char& c : data) c = static_cast<char>(c + kOffset);
  return out + data;
}

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  for (char c : text) {
    if (c < kOffset || c > 126) {
      throw std::invalid_argument("graph6 byte out of range");
    }
  }
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw std::invalid_argument("eight-byte graph6 headers are not supported");
    }
    if (text.size() < 4) throw std::invalid_argument("truncated graph6 header");
    n = (static_cast<long long>(text[1] - kOffset) << 12) |
        (static_cast<long long>(text[2] - kOffset) << 6) |
        static_cast<long long>(text[3] - kOffset);
    pos = 4;
  } else {
    n = text[0] - kOffset;
    pos = 1;
  }
  if (n > kMaxThreeByte) throw std::invalid_argument("graph6 order too large");
  const long long bits = bit_count(n);
  const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != expected) {
    throw std::invalid_argument("graph6 length mismatch");
  }
  EdgeSet edges;
  long long t = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      const int c = text[pos + t / 6] - kOffset;
      if ((c >> (5 - t % 6)) & 1) edges.emplace_back(row, col);
      ++t;
    }
  }
  // padding bits beyond the triangle must be zero
  for (; t < static_cast<long long>(expected) * 6; ++t) {
    const int c = text[pos + t / 6] - kOffset;
    if ((c >> (5 - t % 6)) & 1) {
      throw std::invalid_argument("nonzero trailing bits in graph6 string");
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(std::istream& in) {
  int n = 0;
  int m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list missing 'n m' header");
  if (n < 0 || m < 0) throw std::invalid_argument("negative counts in edge list header");
  EdgeSet edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list truncated");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace isocrit
