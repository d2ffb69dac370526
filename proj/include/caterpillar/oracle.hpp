#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "caterpillar/errors.hpp"
#include "caterpillar/spine.hpp"
#include "caterpillar/tree.hpp"

// Brute-force ground truth. Nothing in here uses the counting or enumeration
// code: free trees come from decoding every Prüfer sequence, isomorphism
// classes from AHU certificates.

namespace caterpillar::oracle {

inline constexpr std::uint64_t kMinVertices = 3;
inline constexpr std::uint64_t kMaxVertices = 10;
inline constexpr std::uint64_t kDefaultCeiling = 9;

inline void check_budget(std::uint64_t n) {
  if (n < kMinVertices || n > kMaxVertices) {
    throw DomainError("labeled tree enumeration supports 3 <= N <= 10 (N^(N-2) Prüfer sequences); got N=" +
                      std::to_string(n));
  }
}

// Tree with Prüfer sequence `seq` on vertices 0..n-1, n = seq.size() + 2.
inline Tree prufer_decode(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) ++degree[v];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = static_cast<Vertex>(ptr);
  for (Vertex v : seq) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = static_cast<Vertex>(ptr);
    }
    --degree[edges.back().first];
  }
  // The two vertices left with degree 1.
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  edges.emplace_back(a, b);
  return Tree(n, std::move(edges));
}

// Calls `visit` for every labeled tree on n vertices, in lexicographic order
// of Prüfer sequences. `first_symbols` restricts the leading symbol (for
// partitioned scans); empty means all.
inline void for_each_labeled_tree(std::uint64_t n, const std::function<void(const Tree&)>& visit,
                                  const std::vector<Vertex>& first_symbols = {}) {
  check_budget(n);
  std::vector<Vertex> leads = first_symbols;
  if (leads.empty()) {
    for (Vertex v = 0; v < n; ++v) leads.push_back(v);
  }
  const std::size_t len = n - 2;
  for (Vertex lead : leads) {
    std::vector<Vertex> seq(len, 0);
    seq[0] = lead;
    while (true) {
      visit(prufer_decode(seq));
      std::size_t i = len;
      while (i > 1 && seq[i - 1] == n - 1) seq[--i] = 0;
      if (i <= 1) break;
      ++seq[i - 1];
    }
  }
}

inline std::uint64_t count_labeled_trees(std::uint64_t n) {
  std::uint64_t count = 0;
  for_each_labeled_tree(n, [&](const Tree&) { ++count; });
  return count;
}

struct CensusResult {
  std::uint64_t n_vertices = 0;
  std::uint64_t free_tree_count = 0;
  std::uint64_t caterpillar_count = 0;
  std::set<IsoCertificate> caterpillar_certificates;
};

namespace detail {

struct PartialCensus {
  std::set<IsoCertificate> trees;
  std::set<IsoCertificate> caterpillars;

  void merge(PartialCensus&& other) {
    trees.merge(other.trees);
    caterpillars.merge(other.caterpillars);
  }
};

inline PartialCensus scan(std::uint64_t n, const std::vector<Vertex>& leads) {
  PartialCensus part;
  for_each_labeled_tree(
      n,
      [&](const Tree& t) {
        auto cert = iso_certificate(t);
        if (part.trees.contains(cert)) return;
        if (std::holds_alternative<IsCaterpillar>(recognize(t))) part.caterpillars.insert(cert);
        part.trees.insert(std::move(cert));
      },
      leads);
  return part;
}

}  // namespace detail

// Free trees on n vertices up to isomorphism, and which of them are
// caterpillars. The Prüfer space is split by leading symbol across `jobs`
// threads; the merge is order-independent.
inline CensusResult free_tree_census(std::uint64_t n, unsigned jobs = 1) {
  check_budget(n);
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(n));
  std::vector<std::vector<Vertex>> partitions(jobs);
  for (Vertex v = 0; v < n; ++v) partitions[v % jobs].push_back(v);

  std::vector<detail::PartialCensus> parts(jobs);
  if (jobs == 1) {
    parts[0] = detail::scan(n, partitions[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] { parts[j] = detail::scan(n, partitions[j]); });
    }
  }
  for (unsigned j = 1; j < jobs; ++j) parts[0].merge(std::move(parts[j]));

  CensusResult result;
  result.n_vertices = n;
  result.free_tree_count = parts[0].trees.size();
  result.caterpillar_count = parts[0].caterpillars.size();
  result.caterpillar_certificates = std::move(parts[0].caterpillars);
  return result;
}

// Palindromic k-part compositions of N-k-2, counted by walking every
// composition depth-first.
inline std::uint64_t symmetric_bruteforce(const SpineClassParams& p) {
  const auto checked = SpineClassParams::make(p.n_vertices, p.spine_len);
  if (checked.n_vertices > 32) throw DomainError("symmetric_bruteforce supports N <= 32");
  const std::size_t k = checked.spine_len;
  std::vector<Weight> parts(k, 0);
  std::uint64_t palindromes = 0;
  std::function<void(std::size_t, Weight)> fill = [&](std::size_t pos, Weight remaining) {
    if (pos + 1 == k) {
      parts[pos] = remaining;
      bool palindrome = true;
      for (std::size_t i = 0; i < k; ++i) palindrome = palindrome && parts[i] == parts[k - 1 - i];
      palindromes += palindrome;
      return;
    }
    for (Weight w = 0; w <= remaining; ++w) {
      parts[pos] = w;
      fill(pos + 1, remaining - w);
    }
  };
  fill(0, checked.composition_total());
  return palindromes;
}

// graph6 from an adjacency matrix, written from the format description
// independently of the primary codec: build the upper-triangle bit string
// column by column, pad to a multiple of 6, emit each sextet + 63.
inline std::string reference_graph6(const std::vector<std::vector<bool>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::string bits;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) bits += adjacency[i][j] ? '1' : '0';
  }
  while (bits.size() % 6) bits += '0';
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    out += static_cast<char>(std::stoi(bits.substr(i, 6), nullptr, 2) + 63);
  }
  return out;
}

inline std::vector<std::vector<bool>> adjacency_matrix(const Tree& g) {
  std::vector<std::vector<bool>> m(g.n_vertices(), std::vector<bool>(g.n_vertices(), false));
  for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

}  // namespace caterpillar::oracle
