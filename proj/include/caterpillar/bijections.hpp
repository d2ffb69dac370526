#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "caterpillar/spine.hpp"

// The three maps that transport symmetric spines between classes:
//
//   f : sym S_{N,k}      -> S_{N/2+1, k/2}       keep the first half
//   g : sym S_{N,k}      -> sym S_{N-1, k-1}     merge the middle pair
//   h : sym S_{N-1, k-1} -> sym S_{N, k-1}       add a flag to the middle vertex
//
// with N and k even. Each map checks the parities of its argument's own class
// and throws BijectionDomainError for anything outside its domain.

namespace caterpillar {

enum class BijectionFailure { wrong_parity, not_symmetric, wrong_class, middle_not_even, middle_zero };

inline std::string_view to_string(BijectionFailure r) {
  switch (r) {
    case BijectionFailure::wrong_parity: return "wrong_parity";
    case BijectionFailure::not_symmetric: return "not_symmetric";
    case BijectionFailure::wrong_class: return "wrong_class";
    case BijectionFailure::middle_not_even: return "middle_not_even";
    case BijectionFailure::middle_zero: return "middle_zero";
  }
  return "unknown";
}

class BijectionDomainError : public std::domain_error {
 public:
  BijectionDomainError(BijectionFailure reason, const std::string& detail)
      : std::domain_error(std::string(to_string(reason)) + ": " + detail), reason_(reason) {}

  BijectionFailure reason() const noexcept { return reason_; }

 private:
  BijectionFailure reason_;
};

namespace detail {

// wrong_parity is about the spine length, wrong_class about the vertex count.
inline void require_length_parity(const Spine& s, bool even, std::string_view map) {
  if ((s.size() % 2 == 0) != even) {
    throw BijectionDomainError(BijectionFailure::wrong_parity,
                               std::string(map) + " needs " + (even ? "even" : "odd") +
                                   " spine length, got " + std::to_string(s.size()));
  }
}

inline void require_symmetric(const Spine& s, std::string_view map) {
  if (!is_symmetric(s)) {
    throw BijectionDomainError(BijectionFailure::not_symmetric,
                               std::string(map) + " needs a palindromic spine, got " + to_literal(s));
  }
}

inline void require_vertex_parity(const Spine& s, bool even, std::string_view map) {
  const auto n = class_params(s).n_vertices;
  if ((n % 2 == 0) != even) {
    throw BijectionDomainError(BijectionFailure::wrong_class,
                               std::string(map) + " needs " + (even ? "even" : "odd") +
                                   " vertex count, got N=" + std::to_string(n));
  }
}

inline std::vector<Weight> copy(const Spine& s) { return {s.begin(), s.end()}; }

}  // namespace detail

inline Spine bij_f(const Spine& s) {
  detail::require_length_parity(s, true, "f");
  detail::require_symmetric(s, "f");
  detail::require_vertex_parity(s, true, "f");
  return Spine(std::vector<Weight>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2)));
}

// Mirror: (z_1..z_m) -> (z_1..z_m, z_m..z_1). Every spine is in the domain.
inline Spine bij_f_inv(const Spine& z) {
  auto out = detail::copy(z);
  out.insert(out.end(), z.components().rbegin(), z.components().rend());
  return Spine(std::move(out));
}

inline Spine bij_g(const Spine& s) {
  detail::require_length_parity(s, true, "g");
  detail::require_symmetric(s, "g");
  detail::require_vertex_parity(s, true, "g");
  auto out = detail::copy(s);
  const std::size_t mid = s.size() / 2;
  out[mid - 1] += out[mid];
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(mid));
  return Spine(std::move(out));
}

// Splits the middle component 2q into q, q.
inline Spine bij_g_inv(const Spine& z) {
  detail::require_length_parity(z, false, "g-inv");
  detail::require_symmetric(z, "g-inv");
  const std::size_t mid = z.size() / 2;
  if (z[mid] % 2 != 0) {
    throw BijectionDomainError(BijectionFailure::middle_not_even,
                               "g-inv needs an even middle component, got " + std::to_string(z[mid]));
  }
  detail::require_vertex_parity(z, false, "g-inv");
  auto out = detail::copy(z);
  const Weight half = out[mid] / 2;
  out[mid] = half;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(mid), half);
  return Spine(std::move(out));
}

inline Spine bij_h(const Spine& s) {
  detail::require_length_parity(s, false, "h");
  detail::require_symmetric(s, "h");
  detail::require_vertex_parity(s, false, "h");
  auto out = detail::copy(s);
  out[s.size() / 2] += 1;
  return Spine(std::move(out));
}

inline Spine bij_h_inv(const Spine& z) {
  detail::require_length_parity(z, false, "h-inv");
  detail::require_symmetric(z, "h-inv");
  const std::size_t mid = z.size() / 2;
  if (z[mid] == 0) {
    throw BijectionDomainError(BijectionFailure::middle_zero, "h-inv needs a middle component >= 1");
  }
  detail::require_vertex_parity(z, true, "h-inv");
  auto out = detail::copy(z);
  out[mid] -= 1;
  return Spine(std::move(out));
}

}  // namespace caterpillar
