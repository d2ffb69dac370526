#include <gtest/gtest.h>

#include "caterpillar/bijections.hpp"
#include "support/brute.hpp"

using namespace caterpillar;

namespace {

BijectionFailure failure_of(Spine (*map)(const Spine&), const Spine& s) {
  try {
    map(s);
  } catch (const BijectionDomainError& e) {
    return e.reason();
  }
  ADD_FAILURE() << "no domain error for " << s;
  return BijectionFailure::wrong_class;
}

std::vector<Spine> symmetric_members(std::uint64_t n, std::uint64_t k) {
  std::vector<Spine> out;
  if (n < 3 || k < 1 || k > n - 2) return out;
  for (auto& c : brute::compositions(n - k - 2, k)) {
    if (brute::palindrome(c)) out.emplace_back(c);
  }
  return out;
}

}  // namespace

TEST(BijectionF, Examples) {
  EXPECT_EQ(bij_f(Spine{0, 2, 2, 0}), (Spine{0, 2}));
  EXPECT_EQ(class_params(Spine{0, 2}), (SpineClassParams{6, 2}));
  EXPECT_EQ(bij_f_inv(Spine{0, 2}), (Spine{0, 2, 2, 0}));
  EXPECT_EQ(failure_of(bij_f, Spine{1, 2, 3, 4}), BijectionFailure::not_symmetric);
  EXPECT_EQ(failure_of(bij_f, Spine{1, 2, 3}), BijectionFailure::wrong_parity);
}

TEST(BijectionG, Examples) {
  EXPECT_EQ(bij_g(Spine{0, 2, 2, 0}), (Spine{0, 4, 0}));
  EXPECT_EQ(class_params(Spine{0, 4, 0}), (SpineClassParams{9, 3}));
  EXPECT_EQ(bij_g_inv(Spine{0, 4, 0}), (Spine{0, 2, 2, 0}));
  EXPECT_EQ(bij_g(Spine{1, 2, 2, 1}), (Spine{1, 4, 1}));
  EXPECT_EQ(class_params(Spine{1, 4, 1}), (SpineClassParams{11, 3}));
  EXPECT_EQ(bij_g(Spine{3, 3}), (Spine{6}));
  EXPECT_EQ(bij_g_inv(Spine{6}), (Spine{3, 3}));
}

TEST(BijectionG, DomainErrors) {
  EXPECT_EQ(failure_of(bij_g, Spine{0, 4, 0}), BijectionFailure::wrong_parity);
  EXPECT_EQ(failure_of(bij_g, Spine{0, 1, 2, 0}), BijectionFailure::not_symmetric);
  EXPECT_EQ(failure_of(bij_g_inv, Spine{0, 2, 2, 0}), BijectionFailure::wrong_parity);
  EXPECT_EQ(failure_of(bij_g_inv, Spine{1, 4, 0}), BijectionFailure::not_symmetric);
  // Odd middle never occurs for genuine members; a crafted input reaches the guard.
  EXPECT_EQ(failure_of(bij_g_inv, Spine{0, 5, 0}), BijectionFailure::middle_not_even);
}

TEST(BijectionH, Examples) {
  EXPECT_EQ(bij_h(Spine{0, 4, 0}), (Spine{0, 5, 0}));
  EXPECT_EQ(class_params(Spine{0, 5, 0}), (SpineClassParams{10, 3}));
  EXPECT_EQ(bij_h_inv(Spine{0, 5, 0}), (Spine{0, 4, 0}));
  EXPECT_EQ(bij_h(Spine{1, 4, 1}), (Spine{1, 5, 1}));
  EXPECT_EQ(class_params(Spine{1, 5, 1}), (SpineClassParams{12, 3}));
}

TEST(BijectionH, DomainErrors) {
  EXPECT_EQ(failure_of(bij_h, Spine{0, 5, 0}), BijectionFailure::wrong_class);
  EXPECT_EQ(failure_of(bij_h, Spine{1, 1}), BijectionFailure::wrong_parity);
  EXPECT_EQ(failure_of(bij_h, Spine{1, 2, 3}), BijectionFailure::not_symmetric);
  EXPECT_EQ(failure_of(bij_h_inv, Spine{1, 0, 1}), BijectionFailure::middle_zero);
  EXPECT_EQ(failure_of(bij_h_inv, Spine{0, 4, 0}), BijectionFailure::wrong_class);
}

TEST(BijectionDomainError, MessageNamesReason) {
  try {
    bij_f(Spine{1, 2, 3});
    FAIL();
  } catch (const BijectionDomainError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("wrong_parity", 0), 0u);
  }
}

// Exhaustive over every symmetric spine with N <= 16, independent of the
// library's composition stream.
TEST(BijectionProperties, RoundTripsAndCodomains) {
  for (std::uint64_t n = 3; n <= 16; ++n) {
    for (std::uint64_t k = 1; k <= n - 2; ++k) {
      for (const auto& s : symmetric_members(n, k)) {
        if (n % 2 == 0 && k % 2 == 0) {
          const auto f = bij_f(s);
          EXPECT_EQ(class_params(f), (SpineClassParams{n / 2 + 1, k / 2}));
          EXPECT_EQ(bij_f_inv(f), s);
          const auto g = bij_g(s);
          EXPECT_EQ(class_params(g), (SpineClassParams{n - 1, k - 1}));
          EXPECT_TRUE(is_symmetric(g));
          EXPECT_EQ(bij_g_inv(g), s);
        } else if (k % 2 == 1 && n % 2 == 1) {
          EXPECT_EQ(s[k / 2] % 2, 0u) << s;  // middle-parity lemma
          const auto h = bij_h(s);
          EXPECT_EQ(class_params(h), (SpineClassParams{n + 1, k}));
          EXPECT_TRUE(is_symmetric(h));
          EXPECT_EQ(bij_h_inv(h), s);
          EXPECT_EQ(bij_g(bij_g_inv(s)), s);
        } else if (k % 2 == 1) {
          EXPECT_EQ(s[k / 2] % 2, 1u) << s;
          EXPECT_EQ(bij_h(bij_h_inv(s)), s);
        } else {
          ADD_FAILURE() << "palindrome in an odd-N/even-k class: " << s;
        }
      }
    }
  }
}

TEST(BijectionProperties, FInverseOnWholeCodomain) {
  for (std::uint64_t m = 3; 2 * (m - 1) <= 16; ++m) {
    for (std::uint64_t j = 1; j <= m - 2; ++j) {
      for (const auto& c : brute::compositions(m - j - 2, j)) {
        const Spine z(c);
        const auto x = bij_f_inv(z);
        EXPECT_TRUE(is_symmetric(x));
        EXPECT_EQ(class_params(x), (SpineClassParams{2 * (m - 1), 2 * j}));
        EXPECT_EQ(bij_f(x), z);
      }
    }
  }
}

TEST(BijectionProperties, CardinalityTransport) {
  for (std::uint64_t n = 4; n <= 16; n += 2) {
    for (std::uint64_t k = 2; k <= n - 2; k += 2) {
      const auto expected = brute::choose(static_cast<std::int64_t>(n / 2) - 2, static_cast<std::int64_t>(k / 2) - 1);
      EXPECT_EQ(symmetric_members(n, k).size(), expected);
      EXPECT_EQ(symmetric_members(n, k - 1).size(), expected);
      EXPECT_EQ(symmetric_members(n - 1, k - 1).size(), expected);
      EXPECT_EQ(brute::compositions(n / 2 + 1 - k / 2 - 2, k / 2).size(), expected);
      EXPECT_TRUE(symmetric_members(n - 1, k).empty());
    }
  }
}
