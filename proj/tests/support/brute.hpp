#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's generators and formulas.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace brute {

// Every k-tuple over [0, total] (odometer), keeping those that sum to total.
inline std::vector<std::vector<std::uint64_t>> compositions(std::uint64_t total, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> t(k, 0);
  while (true) {
    std::uint64_t s = 0;
    for (auto x : t) s += x;
    if (s == total) out.push_back(t);
    std::size_t i = 0;
    while (i < k && t[i] == total) t[i++] = 0;
    if (i == k) break;
    ++t[i];
  }
  // The odometer runs little-endian; sort to lexicographic order.
  std::sort(out.begin(), out.end());
  return out;
}

inline bool palindrome(const std::vector<std::uint64_t>& v) {
  return std::equal(v.begin(), v.end(), v.rbegin());
}

// Pascal's triangle in 64-bit; fine for n <= 60.
inline std::uint64_t choose(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  std::vector<std::vector<std::uint64_t>> row(n + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    row[i].assign(i + 1, 1);
    for (std::int64_t j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
  }
  return row[n][r];
}

}  // namespace brute
