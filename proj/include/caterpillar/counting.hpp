#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "caterpillar/errors.hpp"
#include "caterpillar/spine.hpp"

namespace caterpillar {

using BigCount = boost::multiprecision::cpp_int;

// Binomial coefficient; 0 outside 0 <= r <= n.
inline BigCount binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigCount result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

// |S_{N,k}|: number of k-part compositions of N-k-2, i.e. C(N-3, k-1).
inline BigCount spine_class_order(const SpineClassParams& p) {
  const auto checked = SpineClassParams::make(p.n_vertices, p.spine_len);
  const auto n = static_cast<std::int64_t>(checked.n_vertices);
  const auto k = static_cast<std::int64_t>(checked.spine_len);
  return binomial(n - 3, k - 1);
}

// Number of palindromic spines in S_{N,k} (fixed points of reversal).
//
//   k even, N even:  C(N/2 - 2, k/2 - 1)
//   k even, N odd:   0  (a palindrome of even length has even sum, N-k-2 is odd)
//   k odd:           C(ceil(N/2) - 2, (k-1)/2)
inline BigCount symmetric_class_order(const SpineClassParams& p) {
  const auto checked = SpineClassParams::make(p.n_vertices, p.spine_len);
  const auto n = static_cast<std::int64_t>(checked.n_vertices);
  const auto k = static_cast<std::int64_t>(checked.spine_len);
  if (k % 2 == 0) {
    if (n % 2 != 0) return 0;
    return binomial(n / 2 - 2, k / 2 - 1);
  }
  return binomial((n + 1) / 2 - 2, (k - 1) / 2);
}

// Z2 orbits of S_{N,k}: (|S| + |S^reversal|) / 2.
inline BigCount orbit_count(const SpineClassParams& p) {
  const BigCount fixed_sum = spine_class_order(p) + symmetric_class_order(p);
  if (boost::multiprecision::bit_test(fixed_sum, 0)) {
    throw std::logic_error("orbit count: odd fixed-point total for " + std::to_string(p.n_vertices) +
                           "," + std::to_string(p.spine_len));
  }
  return fixed_sum / 2;
}

// 2^(N-4) + 2^floor((N-4)/2), with N = 3 evaluating to 1.
inline BigCount caterpillar_count_closed(std::uint64_t n) {
  if (n < 3) throw DomainError("caterpillar counts are defined for N >= 3 (got " + std::to_string(n) + ")");
  if (n == 3) return 1;
  BigCount result = 0;
  boost::multiprecision::bit_set(result, static_cast<unsigned>(n - 4));
  BigCount half = 0;
  boost::multiprecision::bit_set(half, static_cast<unsigned>((n - 4) / 2));
  return result + half;
}

struct CountRow {
  std::uint64_t spine_len;
  BigCount class_order;
  BigCount symmetric_order;
  BigCount orbit_count;
};

struct CountReport {
  std::uint64_t n_vertices;
  std::vector<CountRow> rows;
  BigCount total_by_sum;
  BigCount total_closed_form;
};

// Burnside summation over spine lengths k = 1..N-2.
inline CountReport caterpillar_count_sum(std::uint64_t n) {
  if (n < 3) throw DomainError("caterpillar counts are defined for N >= 3 (got " + std::to_string(n) + ")");
  CountReport report{n, {}, 0, caterpillar_count_closed(n)};
  report.rows.reserve(n - 2);
  for (std::uint64_t k = 1; k <= n - 2; ++k) {
    const SpineClassParams p{n, k};
    CountRow row{k, spine_class_order(p), symmetric_class_order(p), 0};
    row.orbit_count = orbit_count(p);
    report.total_by_sum += row.orbit_count;
    report.rows.push_back(std::move(row));
  }
  return report;
}

// Tab-separated serialization.
inline void write_report_tsv(std::ostream& os, const CountReport& r) {
  os << "k\tclass_order\tsymmetric\torbits\n";
  for (const auto& row : r.rows) {
    os << row.spine_len << '\t' << row.class_order << '\t' << row.symmetric_order << '\t' << row.orbit_count
       << '\n';
  }
  os << "total\t" << r.total_by_sum << '\n';
  os << "closed_form\t" << r.total_closed_form << '\n';
}

}  // namespace caterpillar
