#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "caterpillar/errors.hpp"
#include "caterpillar/spine.hpp"
#include "caterpillar/tree.hpp"

// Streaming generators. Order is fixed: ascending spine length, then
// lexicographically ascending spine within a length. Every stream holds O(k)
// state and is single-pass.

namespace caterpillar {

// CRTP helper giving a generator `begin()/end()` so it works with range-for.
// Derived provides done(), advance() and value().
template <typename Derived>
class Stream {
 public:
  struct sentinel {};

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using difference_type = std::ptrdiff_t;
    using value_type = typename Derived::value_type;

    iterator() = default;
    explicit iterator(Derived* s) : stream_(s) {}

    value_type operator*() const { return stream_->value(); }
    iterator& operator++() {
      stream_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, sentinel) { return it.stream_->done(); }

   private:
    Derived* stream_ = nullptr;
  };

  iterator begin() { return iterator(static_cast<Derived*>(this)); }
  sentinel end() { return {}; }

  // Consumes the stream.
  std::size_t count() {
    auto& self = static_cast<Derived&>(*this);
    std::size_t n = 0;
    for (; !self.done(); self.advance()) ++n;
    return n;
  }
};

// All k-part non-negative compositions of N-k-2, lexicographically ascending:
// (0,..,0,n) first, (n,0,..,0) last.
class Compositions : public Stream<Compositions> {
 public:
  using value_type = Spine;

  explicit Compositions(SpineClassParams p)
      : params_(SpineClassParams::make(p.n_vertices, p.spine_len)), parts_(params_.spine_len, 0) {
    parts_.back() = params_.composition_total();
  }

  const SpineClassParams& params() const noexcept { return params_; }
  bool done() const noexcept { return done_; }
  std::span<const Weight> current() const noexcept { return parts_; }
  Spine value() const { return Spine(parts_); }

  // Lexicographic successor: with p the last nonzero position (p >= 1),
  // increment position p-1 and move the remaining s[p]-1 units to the tail.
  void advance() {
    const std::size_t k = parts_.size();
    std::size_t p = k - 1;
    while (p > 0 && parts_[p] == 0) --p;
    if (p == 0) {
      done_ = true;
      return;
    }
    const Weight carry = parts_[p] - 1;
    parts_[p] = 0;
    parts_[p - 1] += 1;
    parts_[k - 1] = carry;
  }

 private:
  SpineClassParams params_;
  std::vector<Weight> parts_;
  bool done_ = false;
};

// One representative per reversal orbit: the compositions with s <= reverse(s).
class CanonicalSpines : public Stream<CanonicalSpines> {
 public:
  using value_type = CanonicalSpine;

  explicit CanonicalSpines(SpineClassParams p) : inner_(p) { skip(); }

  const SpineClassParams& params() const noexcept { return inner_.params(); }
  bool done() const noexcept { return inner_.done(); }
  std::span<const Weight> current() const noexcept { return inner_.current(); }
  CanonicalSpine value() const { return canonicalize(inner_.value()); }
  void advance() {
    inner_.advance();
    skip();
  }

 private:
  void skip() {
    while (!inner_.done() && !is_canonical_form(inner_.current())) inner_.advance();
  }

  Compositions inner_;
};

struct EnumeratedCaterpillar {
  CanonicalSpine spine;
  Tree tree;
};

// Every non-isomorphic caterpillar on N vertices, spine lengths 1..N-2.
class Caterpillars : public Stream<Caterpillars> {
 public:
  using value_type = EnumeratedCaterpillar;

  explicit Caterpillars(std::uint64_t n_vertices) : n_(n_vertices) {
    if (n_ < 3) {
      throw DomainError("caterpillar enumeration requires N >= 3 (got " + std::to_string(n_) + ")");
    }
    class_.emplace(SpineClassParams{n_, 1});
    settle();
  }

  bool done() const noexcept { return !class_; }
  CanonicalSpine spine() const { return class_->value(); }
  EnumeratedCaterpillar value() const {
    auto s = class_->value();
    auto t = decode(s);
    return {std::move(s), std::move(t)};
  }
  void advance() {
    class_->advance();
    settle();
  }

 private:
  void settle() {
    while (class_ && class_->done()) {
      const auto k = class_->params().spine_len;
      if (k + 2 >= n_) {
        class_.reset();
      } else {
        class_.emplace(SpineClassParams{n_, k + 1});
      }
    }
  }

  std::uint64_t n_;
  std::optional<CanonicalSpines> class_;
};

}  // namespace caterpillar
