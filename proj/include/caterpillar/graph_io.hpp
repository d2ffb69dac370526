#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "caterpillar/errors.hpp"
#include "caterpillar/tree.hpp"

namespace caterpillar {

// ---- edge list ----
//
//   N
//   u v
//   ...
//
// 0-indexed, whitespace separated. Lines starting with '#' and blank lines
// are ignored.

namespace detail {

inline bool parse_index(std::string_view token, std::uint64_t& out) {
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && end == token.data() + token.size();
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    auto end = line.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

}  // namespace detail

inline Tree read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    if (!n) {
      std::uint64_t value = 0;
      if (tokens.size() != 1 || !detail::parse_index(tokens[0], value)) {
        throw InputError("expected a vertex count", line_no);
      }
      if (value == 0 || value > UINT32_MAX) throw InputError("vertex count out of range", line_no);
      n = value;
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (tokens.size() != 2 || !detail::parse_index(tokens[0], u) || !detail::parse_index(tokens[1], v)) {
      throw InputError("expected an edge 'u v'", line_no);
    }
    if (u >= *n || v >= *n) {
      throw InputError("edge endpoint outside 0.." + std::to_string(*n - 1), line_no);
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw InputError("missing vertex count", line_no);
  try {
    return Tree(*n, std::move(edges));
  } catch (const InputError& e) {
    throw InputError(e.what(), line_no);
  }
}

inline Tree read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& os, const Tree& g) {
  os << g.n_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

// ---- graph6 ----

namespace detail {

inline void graph6_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 0x3f));
  } else {
    throw DomainError("graph6 output supports at most 258047 vertices");
  }
}

}  // namespace detail

// Standard graph6 string (no ">>graph6<<" header, no newline).
inline std::string to_graph6(const Tree& g) {
  const std::size_t n = g.n_vertices();
  std::string out;
  detail::graph6_size(out, n);

  // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
  const std::size_t bit_count = n * (n - 1) / 2;
  std::vector<bool> bits(bit_count, false);
  for (const auto& [a, b] : g.edges()) {
    const std::size_t i = std::min(a, b), j = std::max(a, b);
    bits[j * (j - 1) / 2 + i] = true;
  }
  for (std::size_t pos = 0; pos < bit_count; pos += 6) {
    int chunk = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      chunk <<= 1;
      if (pos + b < bit_count && bits[pos + b]) chunk |= 1;
    }
    out += static_cast<char>(63 + chunk);
  }
  return out;
}

inline Tree from_graph6(std::string_view text) {
  text = detail::trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw InputError("invalid graph6 byte");
  }
  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw InputError("unsupported graph6 size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    pos = 4;
  }
  const std::size_t bit_count = n * (n - 1) / 2;
  const std::size_t expected = (bit_count + 5) / 6;
  if (text.size() - pos != expected) {
    throw InputError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                     std::to_string(expected));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int chunk = text[pos + bit / 6] - 63;
      if (chunk & (1 << (5 - bit % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Tree(n, std::move(edges));
}

// ---- DOT (output only) ----

inline void write_dot(std::ostream& os, const Tree& g, std::string_view name = "G") {
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.n_vertices(); ++v) os << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

}  // namespace caterpillar
