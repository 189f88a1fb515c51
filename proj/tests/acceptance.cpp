// Acceptance suite: one line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "oracles.hpp"
#include "wedgekit/cramer.hpp"
#include "wedgekit/reversing.hpp"
#include "wedgekit/verify.hpp"
#include "wedgekit/wedge.hpp"

using namespace wedgekit;

namespace {

constexpr std::uint64_t acceptance_seed = 20260810;

int failures = 0;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

void criterion(int id, const std::string& name, bool ok, double seconds) {
  std::printf("%s  criterion %2d  %-34s (%.2f s)\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              seconds);
  if (!ok) ++failures;
}

MatrixQ from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  MatrixQ m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

VectorQ vec(std::initializer_list<int> xs) {
  VectorQ v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v(i++) = Rational(x);
  return v;
}

bool wedge_equals(std::initializer_list<std::initializer_list<int>> rows,
                  std::initializer_list<int> expect) {
  return matrix_equal(wedge(from_ints(rows)).components, vec(expect));
}

// 1. The three worked wedge products, exact equality.
bool worked_example_regression() {
  bool ok = wedge_equals({{2, 3, -1, 5}, {4, 7, 2, 0}}, {-10, 35, 13, 20, 8, -2});
  ok = ok && wedge_equals({{5, -1, 3, 2}, {0, 2, 7, 4}}, {-2, 8, -13, -20, 35, -10});

  const int pairs[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  const int expected[6][6] = {{0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, -1, 0, 0},
                              {0, 0, 1, 0, 0, 0},  {0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}};
  for (int c = 0; c < 6; ++c) {
    MatrixQ m(2, 4);
    m.setZero();
    m(0, pairs[c][0] - 1) = Rational(1);
    m(1, pairs[c][1] - 1) = Rational(1);
    VectorQ e(6);
    for (int j = 0; j < 6; ++j) e(j) = Rational(expected[c][j]);
    ok = ok && matrix_equal(wedge(m).components, e);
  }
  return ok;
}

// 2. Lexicographic rank checks for (5,3) and (5,2).
bool rank_regression() {
  return rank(IndexSet({2, 3, 4}, 5)) == 7 && rank(IndexSet({3, 4, 5}, 5)) == 10 &&
         rank(IndexSet({2, 5}, 5)) == 7 && rank(IndexSet({3, 5}, 5)) == 9 &&
         binomial(5, 3) == 10 && binomial(5, 2) == 10 &&
         enumerate_subsets(5, 3).size() == 10 && enumerate_subsets(5, 2).size() == 10;
}

bool suite_passes(const std::string& id, int n_min, int n_max, int trials) {
  VerifyOptions opts;
  opts.n_min = n_min;
  opts.n_max = n_max;
  opts.trials = trials;
  opts.seed = acceptance_seed;
  const Report rep = run_verify(id, opts);
  if (!rep.all_pass()) {
    for (const Check& c : rep.checks) {
      if (!c.pass) std::fprintf(stderr, "  failed: %s  %s\n", c.name.c_str(), c.witness.c_str());
    }
  }
  return rep.all_pass();
}

// 8. Every wedge component equals the signed cofactor-oracle minor, k <= n <= 6.
bool oracle_equivalence() {
  std::mt19937_64 rng(acceptance_seed);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int t = 0; t < 10; ++t) {
        const MatrixQ u = oracle::random_matrix(rng, k, n);
        const WedgeVector<Rational> w = wedge(u);
        const Count c = binomial(n, k);
        for (const IndexSet& s : enumerate_subsets(n, k)) {
          const Count r = rank(s);
          const Rational expect = ((c - r) % 2 == 0 ? Rational(1) : Rational(-1)) *
                                  oracle::det_cofactor(minor_matrix(u, s));
          if (!(w.components(static_cast<Eigen::Index>(c - r)) == expect)) return false;
        }
      }
    }
  }
  return true;
}

// 9. Exact residual/path agreement via the suite, plus the float bound.
bool cramer_criterion() {
  if (!suite_passes("cramer-equiv", 2, 7, 100)) return false;
  std::mt19937_64 rng(acceptance_seed);
  for (int n = 2; n <= 7; ++n) {
    for (int t = 0; t < 50; ++t) {
      MatrixD a(n, n);
      VectorD b(n);
      do {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) a(i, j) = oracle::digit(rng);
        }
      } while (float_singular(a));
      for (int i = 0; i < n; ++i) b(i) = oracle::digit(rng);
      const LinearSystem<double> sys(a, b);
      const VectorD res = residual(sys, solve(sys));
      const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
      for (int i = 0; i < n; ++i) {
        if (std::abs(res(i)) > float_rel_tol * scale) return false;
      }
    }
  }
  return true;
}

// 10. No single global sign links the wedge of the 2 x 4 example and its
// reversing, via the verify surface and directly.
bool final_remarks_counterexample() {
  VerifyOptions opts;
  opts.n_min = 2;
  opts.n_max = 4;
  opts.trials = 5;
  opts.seed = acceptance_seed;
  const Report rep = run_verify("wedge-props", opts);
  bool surfaced = false;
  for (const Check& c : rep.checks) {
    if (c.name == "final-remarks-no-global-sign") surfaced = c.pass;
  }

  const MatrixQ u = from_ints({{2, 3, -1, 5}, {4, 7, 2, 0}});
  const VectorQ w = wedge(u).components;
  const VectorQ wr = wedge(MatrixQ(reverse_matrix(u))).components;
  return surfaced && !matrix_equal(w, wr) && !matrix_equal(w, VectorQ(-wr));
}

bool timed(int id, const std::string& name, bool (*fn)()) {
  const double t0 = now_seconds();
  const bool ok = fn();
  criterion(id, name, ok, now_seconds() - t0);
  return ok;
}

}  // namespace

int main() {
  const double t0 = now_seconds();

  timed(1, "worked-example-regression", worked_example_regression);
  timed(2, "rank-regression", rank_regression);
  timed(3, "prop1-exchange-det", [] { return suite_passes("prop1", 1, 12, 1); });
  timed(4, "prop2-reversed-minors", [] { return suite_passes("prop2", 2, 8, 100); });
  timed(5, "prop3-reversed-cross-sign", [] { return suite_passes("prop3", 2, 8, 100); });
  timed(6, "palindromic-vanishing", [] { return suite_passes("palindromic-vanish", 3, 8, 100); });
  timed(7, "wedge-property-suite", [] { return suite_passes("wedge-props", 1, 8, 100); });
  timed(8, "oracle-equivalence", oracle_equivalence);
  timed(9, "cramer-residual-and-paths", cramer_criterion);
  timed(10, "final-remarks-counterexample", final_remarks_counterexample);

  const double total = now_seconds() - t0;
  criterion(11, "suite-under-60s", total < 60.0, total);

  if (failures == 0) {
    std::printf("acceptance: all 11 criteria passed in %.2f s\n", total);
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
