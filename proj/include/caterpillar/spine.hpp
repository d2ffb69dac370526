#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "caterpillar/errors.hpp"

namespace caterpillar {

using Weight = std::uint64_t;

// Leaf counts along the interior of a maximal path, read left to right.
// Never empty.
class Spine {
 public:
  using const_iterator = std::vector<Weight>::const_iterator;

  explicit Spine(std::vector<Weight> components) : components_(std::move(components)) {
    if (components_.empty()) throw DomainError("spine must have at least one component");
  }
  Spine(std::initializer_list<Weight> components) : Spine(std::vector<Weight>(components)) {}

  std::size_t size() const noexcept { return components_.size(); }
  Weight operator[](std::size_t i) const { return components_[i]; }
  std::span<const Weight> components() const noexcept { return components_; }
  const_iterator begin() const noexcept { return components_.begin(); }
  const_iterator end() const noexcept { return components_.end(); }

  Weight sum() const noexcept {
    Weight total = 0;
    for (Weight w : components_) total += w;
    return total;
  }

  friend bool operator==(const Spine&, const Spine&) = default;
  friend auto operator<=>(const Spine&, const Spine&) = default;

 private:
  std::vector<Weight> components_;
};

// Identifies the spine class: spines of length k whose caterpillars have N vertices.
struct SpineClassParams {
  std::uint64_t n_vertices;
  std::uint64_t spine_len;

  // Throws DomainError unless 1 <= k <= N-2.
  static SpineClassParams make(std::uint64_t n_vertices, std::uint64_t spine_len) {
    if (spine_len < 1 || n_vertices < 3 || spine_len > n_vertices - 2) {
      throw DomainError("spine class requires 1 <= k <= N-2 (got N=" + std::to_string(n_vertices) +
                        ", k=" + std::to_string(spine_len) + ")");
    }
    return {n_vertices, spine_len};
  }

  // Sum every member of the class must have: N - k - 2.
  std::uint64_t composition_total() const noexcept { return n_vertices - spine_len - 2; }

  friend bool operator==(const SpineClassParams&, const SpineClassParams&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const SpineClassParams& p) {
  return os << "(N=" << p.n_vertices << ", k=" << p.spine_len << ")";
}

enum class GroupElement { identity, reversal };

constexpr GroupElement compose(GroupElement a, GroupElement b) noexcept {
  return a == b ? GroupElement::identity : GroupElement::reversal;
}

inline Spine act(GroupElement g, const Spine& s) {
  if (g == GroupElement::identity) return s;
  return Spine(std::vector<Weight>(s.components().rbegin(), s.components().rend()));
}

inline bool is_palindrome(std::span<const Weight> c) noexcept {
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

// Fixed point of the reversal action.
inline bool is_symmetric(const Spine& s) noexcept { return is_palindrome(s.components()); }

// True when s <= reverse(s) lexicographically, without materializing the reversal.
inline bool is_canonical_form(std::span<const Weight> c) noexcept {
  for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j) {
    if (c[i] != c[j]) return c[i] < c[j];
  }
  return true;
}

// Lexicographically least member of a spine's reversal orbit. This is the
// isomorphism certificate for the induced caterpillar.
class CanonicalSpine {
 public:
  const Spine& spine() const noexcept { return spine_; }
  std::size_t size() const noexcept { return spine_.size(); }
  Weight operator[](std::size_t i) const { return spine_[i]; }

  friend bool operator==(const CanonicalSpine&, const CanonicalSpine&) = default;
  friend auto operator<=>(const CanonicalSpine&, const CanonicalSpine&) = default;

  friend CanonicalSpine canonicalize(const Spine& s);

 private:
  explicit CanonicalSpine(Spine s) : spine_(std::move(s)) {}
  Spine spine_;
};

inline CanonicalSpine canonicalize(const Spine& s) {
  if (is_canonical_form(s.components())) return CanonicalSpine(s);
  return CanonicalSpine(act(GroupElement::reversal, s));
}

// N = sum + k + 2.
inline SpineClassParams class_params(const Spine& s) noexcept {
  return {s.sum() + s.size() + 2, s.size()};
}

// ---- spine literal: "2,1,3" ----

inline std::string to_literal(const Spine& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

inline std::string to_literal(const CanonicalSpine& s) { return to_literal(s.spine()); }

inline std::ostream& operator<<(std::ostream& os, const Spine& s) { return os << to_literal(s); }
inline std::ostream& operator<<(std::ostream& os, const CanonicalSpine& s) {
  return os << to_literal(s.spine());
}

namespace detail {

inline std::string_view trim(std::string_view v) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = v.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = v.find_last_not_of(ws);
  return v.substr(first, last - first + 1);
}

}  // namespace detail

inline Spine parse_spine(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw InputError("empty spine literal");
  std::vector<Weight> components;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto token = detail::trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    if (token.empty()) throw InputError("empty component in spine literal '" + std::string(text) + "'");
    Weight value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw InputError("spine component out of range: '" + std::string(token) + "'");
    }
    if (ec != std::errc() || end != token.data() + token.size()) {
      throw InputError("spine components must be non-negative decimal integers, got '" +
                       std::string(token) + "'");
    }
    components.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Spine(std::move(components));
}

}  // namespace caterpillar
