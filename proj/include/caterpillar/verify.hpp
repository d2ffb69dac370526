#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "caterpillar/bijections.hpp"
#include "caterpillar/counting.hpp"
#include "caterpillar/enumeration.hpp"
#include "caterpillar/oracle.hpp"
#include "caterpillar/spine.hpp"
#include "caterpillar/tree.hpp"

// Cross-checks between the closed form, the Burnside sum, the generators, the
// bijections and the brute-force census. Each check reports the smallest
// failing instance.

namespace caterpillar::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;              // range on success, first failure otherwise
  std::vector<std::string> extra;  // additional report lines (census rows)
};

inline std::ostream& operator<<(std::ostream& os, const CheckResult& r) {
  os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
  for (const auto& line : r.extra) os << line << '\n';
  return os;
}

namespace detail {

inline std::string range(std::uint64_t lo, std::uint64_t hi) {
  return "N=" + std::to_string(lo) + ".." + std::to_string(hi);
}

template <typename A, typename B>
std::string mismatch(const std::string& where, const A& expected, const B& actual) {
  std::ostringstream os;
  os << where << " expected " << expected << " actual " << actual;
  return os.str();
}

}  // namespace detail

// Closed form against the Burnside summation for 3..n_max.
inline CheckResult closed_form_vs_sum(std::uint64_t n_max) {
  CheckResult r{"closed form vs Burnside sum", true, {}, {}};
  for (std::uint64_t n = 3; n <= n_max; ++n) {
    const auto report = caterpillar_count_sum(n);
    if (report.total_by_sum != report.total_closed_form) {
      r.passed = false;
      r.detail = detail::mismatch("N=" + std::to_string(n), report.total_closed_form, report.total_by_sum);
      return r;
    }
  }
  r.detail = detail::range(3, n_max);
  return r;
}

// Composition stream sizes against class order, symmetric order and orbit count.
inline CheckResult stream_counts(std::uint64_t n_max) {
  CheckResult r{"composition streams vs class/symmetric/orbit orders", true, {}, {}};
  for (std::uint64_t n = 3; n <= n_max; ++n) {
    for (std::uint64_t k = 1; k <= n - 2; ++k) {
      const SpineClassParams p{n, k};
      std::uint64_t all = 0, palindromes = 0, canonical = 0;
      for (Compositions c(p); !c.done(); c.advance()) {
        ++all;
        palindromes += is_palindrome(c.current());
        canonical += is_canonical_form(c.current());
      }
      const std::string where = "(N=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
      auto fail = [&](const std::string& what, const BigCount& expected, std::uint64_t actual) {
        r.passed = false;
        r.detail = detail::mismatch(what + " " + where, expected, actual);
        return r;
      };
      if (BigCount(all) != spine_class_order(p)) return fail("compositions", spine_class_order(p), all);
      if (BigCount(palindromes) != symmetric_class_order(p)) {
        return fail("palindromes", symmetric_class_order(p), palindromes);
      }
      if (BigCount(canonical) != orbit_count(p)) return fail("orbit representatives", orbit_count(p), canonical);
      if (n % 2 == 1 && k % 2 == 0 && palindromes != 0) return fail("odd-N/even-k palindromes", 0, palindromes);
    }
  }
  r.detail = detail::range(3, n_max);
  return r;
}

// Exhaustive round trips of f, g, h over every symmetric spine with N <= n_max,
// plus codomain-class and cardinality checks.
inline CheckResult bijection_round_trips(std::uint64_t n_max) {
  CheckResult r{"bijection round trips and class transport", true, {}, {}};
  std::uint64_t checked = 0;
  auto fail = [&](const std::string& what) {
    r.passed = false;
    r.detail = what;
    return r;
  };
  auto symmetric_members = [](std::uint64_t n, std::uint64_t k) {
    std::vector<Spine> out;
    if (k < 1 || n < 3 || k > n - 2) return out;
    for (Compositions c({n, k}); !c.done(); c.advance()) {
      auto s = c.value();
      if (is_symmetric(s)) out.push_back(std::move(s));
    }
    return out;
  };
  auto in_class = [](const Spine& s, std::uint64_t n, std::uint64_t k, bool symmetric) {
    const auto p = class_params(s);
    return p.n_vertices == n && p.spine_len == k && (!symmetric || is_symmetric(s));
  };

  try {
    for (std::uint64_t n = 3; n <= n_max; ++n) {
      for (std::uint64_t k = 1; k <= n - 2; ++k) {
        const std::string where = " on (N=" + std::to_string(n) + ", k=" + std::to_string(k) + ") spine ";
        for (const auto& s : symmetric_members(n, k)) {
          ++checked;
          const auto lit = to_literal(s);
          if (n % 2 == 0 && k % 2 == 0) {
            const auto fs = bij_f(s);
            if (!in_class(fs, n / 2 + 1, k / 2, false)) return fail("f codomain" + where + lit);
            if (bij_f_inv(fs) != s) return fail("f_inv(f(s)) != s" + where + lit);
            const auto gs = bij_g(s);
            if (!in_class(gs, n - 1, k - 1, true)) return fail("g codomain" + where + lit);
            if (bij_g_inv(gs) != s) return fail("g_inv(g(s)) != s" + where + lit);
          } else if (n % 2 == 1 && k % 2 == 1) {
            if (s[k / 2] % 2 != 0) return fail("odd middle" + where + lit);
            const auto hs = bij_h(s);
            if (!in_class(hs, n + 1, k, true)) return fail("h codomain" + where + lit);
            if (bij_h_inv(hs) != s) return fail("h_inv(h(s)) != s" + where + lit);
            const auto gi = bij_g_inv(s);
            if (!in_class(gi, n + 1, k + 1, true)) return fail("g_inv codomain" + where + lit);
            if (bij_g(gi) != s) return fail("g(g_inv(s)) != s" + where + lit);
          } else if (n % 2 == 0 && k % 2 == 1) {
            if (s[k / 2] % 2 != 1) return fail("even middle" + where + lit);
            const auto hi = bij_h_inv(s);
            if (!in_class(hi, n - 1, k, true)) return fail("h_inv codomain" + where + lit);
            if (bij_h(hi) != s) return fail("h(h_inv(s)) != s" + where + lit);
          } else {
            return fail("symmetric member of an odd-N/even-k class" + where + lit);
          }
        }

        // Codomain side of f: every spine of S_{M,m} with 2(M-1) <= n_max.
        if (2 * (n - 1) <= n_max) {
          for (Compositions c({n, k}); !c.done(); c.advance()) {
            ++checked;
            const auto z = c.value();
            const auto fz = bij_f_inv(z);
            if (!in_class(fz, 2 * (n - 1), 2 * k, true)) return fail("f_inv codomain" + where + to_literal(z));
            if (bij_f(fz) != z) return fail("f(f_inv(z)) != z" + where + to_literal(z));
          }
        }
      }
    }

    // Cardinality transport: |sym S_{N,k}| = |sym S_{N,k-1}| = |sym S_{N-1,k-1}| = |S_{N/2+1,k/2}|.
    for (std::uint64_t n = 4; n <= n_max; n += 2) {
      for (std::uint64_t k = 2; k <= n - 2; k += 2) {
        const auto sym = symmetric_members(n, k).size();
        const auto sym_odd_k = symmetric_members(n, k - 1).size();
        const auto sym_prev = symmetric_members(n - 1, k - 1).size();
        const auto half = Compositions({n / 2 + 1, k / 2}).count();
        const auto expected = binomial(static_cast<std::int64_t>(n / 2) - 2, static_cast<std::int64_t>(k / 2) - 1);
        if (sym != half || sym_odd_k != half || sym_prev != half || BigCount(half) != expected) {
          std::ostringstream os;
          os << "cardinalities at (N=" << n << ", k=" << k << "): " << sym << ", " << sym_odd_k << ", "
             << sym_prev << ", " << half << " vs binomial " << expected;
          return fail(os.str());
        }
      }
    }
  } catch (const BijectionDomainError& e) {
    return fail(std::string("unexpected domain error: ") + e.what());
  }
  r.detail = detail::range(3, n_max) + ", " + std::to_string(checked) + " spines";
  return r;
}

// Census counts against the closed form, and census certificates against the
// certificates of the enumerated caterpillars.
inline CheckResult census(std::uint64_t n_max, unsigned jobs = 1) {
  CheckResult r{"brute-force census vs closed form and enumeration", true, {}, {}};
  r.extra.push_back("N\tfree_trees\tcaterpillars");
  for (std::uint64_t n = 3; n <= n_max; ++n) {
    const auto c = oracle::free_tree_census(n, jobs);
    r.extra.push_back(std::to_string(n) + "\t" + std::to_string(c.free_tree_count) + "\t" +
                      std::to_string(c.caterpillar_count));
    const auto closed = caterpillar_count_closed(n);
    if (BigCount(c.caterpillar_count) != closed) {
      r.passed = false;
      r.detail = detail::mismatch("N=" + std::to_string(n), closed, c.caterpillar_count);
      return r;
    }
    std::set<IsoCertificate> enumerated;
    std::uint64_t yielded = 0;
    for (const auto& item : Caterpillars(n)) {
      ++yielded;
      enumerated.insert(iso_certificate(item.tree));
    }
    if (enumerated.size() != yielded) {
      r.passed = false;
      r.detail = detail::mismatch("duplicate isomorphism classes in enumeration at N=" + std::to_string(n),
                                  yielded, enumerated.size());
      return r;
    }
    if (enumerated != c.caterpillar_certificates) {
      r.passed = false;
      r.detail = "enumerated certificate set differs from census at N=" + std::to_string(n);
      return r;
    }
  }
  r.detail = detail::range(3, n_max);
  return r;
}

struct Options {
  std::uint64_t n_max = 30;
  std::uint64_t oracle_ceiling = oracle::kDefaultCeiling;
  unsigned jobs = 1;
};

// Runs the four checks in fixed order. With jobs > 1 they run concurrently;
// results always come back in check order.
inline std::vector<CheckResult> run_all(const Options& opt) {
  if (opt.n_max < 3) throw DomainError("verify requires Nmax >= 3 (got " + std::to_string(opt.n_max) + ")");
  if (opt.oracle_ceiling > oracle::kMaxVertices) {
    throw DomainError("oracle ceiling is at most " + std::to_string(oracle::kMaxVertices));
  }
  const auto n = opt.n_max;
  std::vector<std::function<CheckResult()>> checks{
      [n] { return closed_form_vs_sum(n); },
      [n] { return stream_counts(std::min<std::uint64_t>(n, 20)); },
      [n] { return bijection_round_trips(std::min<std::uint64_t>(n, 16)); },
  };
  const auto census_max = std::min(n, opt.oracle_ceiling);
  if (census_max >= 3) checks.push_back([census_max, &opt] { return census(census_max, opt.jobs); });

  std::vector<CheckResult> results;
  if (opt.jobs <= 1) {
    for (auto& c : checks) results.push_back(c());
    return results;
  }
  std::vector<std::future<CheckResult>> pending;
  for (auto& c : checks) pending.push_back(std::async(std::launch::async, c));
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace caterpillar::verify
