#include <sstream>

#include <gtest/gtest.h>

#include "caterpillar/counting.hpp"
#include "support/brute.hpp"

using namespace caterpillar;

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(Binomial, PascalAndSymmetry) {
  for (std::int64_t n = 0; n <= 60; ++n) {
    for (std::int64_t r = 0; r <= n; ++r) {
      EXPECT_EQ(binomial(n, r), BigCount(brute::choose(n, r)));
      EXPECT_EQ(binomial(n, r), binomial(n, n - r));
      if (n > 0) EXPECT_EQ(binomial(n, r), binomial(n - 1, r - 1) + binomial(n - 1, r));
    }
  }
}

TEST(SpineClassOrder, Examples) {
  EXPECT_EQ(spine_class_order({7, 3}), 6);
  EXPECT_EQ(spine_class_order({4, 2}), 1);
  EXPECT_EQ(spine_class_order({10, 4}), 35);
  EXPECT_THROW(spine_class_order({10, 9}), DomainError);
  EXPECT_THROW(spine_class_order({10, 0}), DomainError);
}

TEST(SymmetricClassOrder, Examples) {
  EXPECT_EQ(symmetric_class_order({10, 4}), 3);
  EXPECT_EQ(symmetric_class_order({9, 4}), 0);
  EXPECT_EQ(symmetric_class_order({11, 3}), 4);
  EXPECT_EQ(symmetric_class_order({3, 1}), 1);
  EXPECT_THROW(symmetric_class_order({2, 1}), DomainError);
}

TEST(OrbitCount, Examples) {
  EXPECT_EQ(orbit_count({10, 4}), 19);
  EXPECT_EQ(orbit_count({4, 2}), 1);
  EXPECT_EQ(orbit_count({7, 3}), 4);
  EXPECT_THROW(orbit_count({5, 4}), DomainError);
}

// Class, palindrome and orbit counts against a naive odometer scan.
TEST(Counting, AgreesWithBruteForce) {
  for (std::uint64_t n = 3; n <= 14; ++n) {
    for (std::uint64_t k = 1; k <= n - 2; ++k) {
      const auto all = brute::compositions(n - k - 2, k);
      std::uint64_t palindromes = 0, orbits = 0;
      for (const auto& c : all) {
        palindromes += brute::palindrome(c);
        orbits += c <= std::vector<std::uint64_t>(c.rbegin(), c.rend());
      }
      const SpineClassParams p{n, k};
      EXPECT_EQ(spine_class_order(p), all.size()) << p;
      EXPECT_EQ(symmetric_class_order(p), palindromes) << p;
      EXPECT_EQ(orbit_count(p), orbits) << p;
    }
  }
}

TEST(Counting, ParityTheoremAndIntegrality) {
  for (std::uint64_t n = 3; n <= 300; ++n) {
    for (std::uint64_t k = 1; k <= n - 2; ++k) {
      const SpineClassParams p{n, k};
      const BigCount fixed = spine_class_order(p) + symmetric_class_order(p);
      ASSERT_EQ(fixed % 2, 0) << p;
      if (n % 2 == 1 && k % 2 == 0) ASSERT_EQ(symmetric_class_order(p), 0) << p;
    }
  }
}

TEST(CountClosed, Examples) {
  EXPECT_EQ(caterpillar_count_closed(8), 20);
  EXPECT_EQ(caterpillar_count_closed(9), 36);
  EXPECT_EQ(caterpillar_count_closed(3), 1);
  EXPECT_EQ(caterpillar_count_closed(4), 2);
  EXPECT_THROW(caterpillar_count_closed(2), DomainError);
  EXPECT_THROW(caterpillar_count_closed(0), DomainError);
}

TEST(CountClosed, BeyondSixtyFourBits) {
  // 2^64 + 2^32 at N = 68.
  EXPECT_EQ(caterpillar_count_closed(68).str(), "18446744078004518912");
  const BigCount one = 1;
  EXPECT_EQ(caterpillar_count_closed(1000), (one << 996) + (one << 498));
}

TEST(CountSum, Examples) {
  EXPECT_EQ(caterpillar_count_sum(7).total_by_sum, 10);
  EXPECT_EQ(caterpillar_count_sum(4).total_by_sum, 2);
  EXPECT_EQ(caterpillar_count_sum(3).total_by_sum, 1);
  EXPECT_THROW(caterpillar_count_sum(2), DomainError);
}

TEST(CountSum, ReportInvariants) {
  for (std::uint64_t n = 3; n <= 120; ++n) {
    const auto r = caterpillar_count_sum(n);
    ASSERT_EQ(r.rows.size(), n - 2);
    BigCount total = 0;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const auto& row = r.rows[i];
      EXPECT_EQ(row.spine_len, i + 1);
      EXPECT_EQ(row.orbit_count * 2, row.class_order + row.symmetric_order);
      total += row.orbit_count;
    }
    EXPECT_EQ(total, r.total_by_sum);
    EXPECT_EQ(r.total_by_sum, r.total_closed_form) << "N=" << n;
  }
}

TEST(CountReport, TsvSerialization) {
  std::ostringstream os;
  write_report_tsv(os, caterpillar_count_sum(6));
  EXPECT_EQ(os.str(),
            "k\tclass_order\tsymmetric\torbits\n"
            "1\t1\t1\t1\n"
            "2\t3\t1\t2\n"
            "3\t3\t1\t2\n"
            "4\t1\t1\t1\n"
            "total\t6\n"
            "closed_form\t6\n");
}
