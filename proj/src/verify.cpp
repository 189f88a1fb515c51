#include "wedgekit/verify.hpp"

#include <random>
#include <sstream>

#include "wedgekit/cramer.hpp"
#include "wedgekit/io.hpp"
#include "wedgekit/reversing.hpp"

namespace wedgekit {

namespace {

using Rng = std::mt19937_64;

// Integer entries uniform in [-9, 9]. Drawn straight off the engine so the
// stream, and with it every report byte, is reproducible across platforms.
int random_digit(Rng& rng) { return static_cast<int>(rng() % 19) - 9; }

MatrixQ random_matrix(Rng& rng, int rows, int cols) {
  MatrixQ m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(random_digit(rng));
  }
  return m;
}

VectorQ random_vec(Rng& rng, int n) {
  VectorQ v(n);
  for (int i = 0; i < n; ++i) v(i) = Rational(random_digit(rng));
  return v;
}

VectorQ random_palindromic(Rng& rng, int n) {
  VectorQ v(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    v(i) = Rational(random_digit(rng));
    v(n - 1 - i) = v(i);
  }
  return v;
}

VectorQ random_antipalindromic(Rng& rng, int n) {
  VectorQ v(n);
  for (int i = 0; i < n / 2; ++i) {
    v(i) = Rational(random_digit(rng));
    v(n - 1 - i) = -v(i);
  }
  if (n % 2 == 1) v(n / 2) = Rational(0);  // the middle entry must equal its negation
  return v;
}

std::string describe(const MatrixQ& m) {
  std::string out;
  for (const std::string& line : matrix_lines(m)) {
    if (!out.empty()) out += "; ";
    out += line;
  }
  return out;
}

std::string describe(const VectorQ& v) {
  std::string out;
  for (const std::string& tok : vector_tokens(v)) {
    if (!out.empty()) out += " ";
    out += tok;
  }
  return out;
}

struct Range {
  int lo;
  int hi;
};

Range resolve_range(const VerifyOptions& opts, int def_lo, int def_hi, int floor_lo) {
  Range r{opts.n_min.value_or(def_lo), opts.n_max.value_or(def_hi)};
  if (r.lo < floor_lo || r.hi < r.lo) {
    throw DomainError("invalid size range " + std::to_string(r.lo) + ".." +
                      std::to_string(r.hi) + " (minimum n is " + std::to_string(floor_lo) +
                      ")");
  }
  return r;
}

void echo_options(Report& rep, const std::string& id, Range r, const VerifyOptions& opts,
                  bool uses_trials) {
  rep.add_input("proposition", id);
  rep.add_input("n_min", r.lo);
  rep.add_input("n_max", r.hi);
  if (uses_trials) {
    rep.add_input("trials", opts.trials);
    rep.add_input("seed", opts.seed);
  }
}

Report verify_prop1(const VerifyOptions& opts) {
  Report rep;
  rep.command = "verify";
  rep.mode = "exact";
  const Range r = resolve_range(opts, 1, 12, 1);
  echo_options(rep, "prop1", r, opts, false);
  for (int n = r.lo; n <= r.hi; ++n) {
    const Rational closed = Rational(exchange_det(n).value());
    const Rational direct = det(exchange_matrix<Rational>(n));
    const bool ok = closed == direct;
    rep.add_check("exchange-det n=" + std::to_string(n), ok,
                  ok ? "" : "closed form " + closed.to_string() + " vs det(J_n) = " +
                                direct.to_string());
  }
  return rep;
}

Report verify_prop2(const VerifyOptions& opts) {
  Report rep;
  rep.command = "verify";
  rep.mode = "exact";
  const Range r = resolve_range(opts, 2, 8, 2);
  echo_options(rep, "prop2", r, opts, true);
  Rng rng(opts.seed);
  for (int n = r.lo; n <= r.hi; ++n) {
    bool ok = true;
    std::string witness;
    for (int t = 0; t < opts.trials && ok; ++t) {
      const MatrixQ m = random_matrix(rng, n - 1, n);
      for (int k = 1; k <= n && ok; ++k) {
        const MatrixQ lhs = delete_column(reverse_matrix(m), k);
        const MatrixQ rhs = reverse_matrix(delete_column(m, n - k + 1));
        if (!matrix_equal(lhs, rhs)) {
          ok = false;
          witness = "trial " + std::to_string(t) + ", k = " + std::to_string(k) +
                    ", M = " + describe(m);
        }
      }
    }
    rep.add_check("reversed-minor n=" + std::to_string(n), ok, witness);
  }
  return rep;
}

Report verify_prop3(const VerifyOptions& opts) {
  Report rep;
  rep.command = "verify";
  rep.mode = "exact";
  const Range r = resolve_range(opts, 2, 8, 2);
  echo_options(rep, "prop3", r, opts, true);
  Rng rng(opts.seed);
  for (int n = r.lo; n <= r.hi; ++n) {
    const SignParity sign = prop3_sign(n);
    bool ok = true;
    std::string witness;
    for (int t = 0; t < opts.trials && ok; ++t) {
      const MatrixQ m = random_matrix(rng, n - 1, n);
      const VectorQ lhs = cross(reverse_matrix(m));
      VectorQ rhs = reverse_vector(VectorQ(cross(m)));
      if (sign.value() < 0) rhs = -rhs;
      if (!matrix_equal(lhs, rhs)) {
        ok = false;
        witness = "trial " + std::to_string(t) + ", M = " + describe(m) + ", lhs = " +
                  describe(lhs) + ", sign*reversed = " + describe(rhs);
      }
    }
    rep.add_check("reversed-cross sign n=" + std::to_string(n) +
                      " (sign = " + (sign.value() > 0 ? std::string("+1") : std::string("-1")) +
                      ")",
                  ok, witness);
  }
  return rep;
}

Report verify_palindromic_vanish(const VerifyOptions& opts) {
  Report rep;
  rep.command = "verify";
  rep.mode = "exact";
  const Range r = resolve_range(opts, 3, 8, 3);
  echo_options(rep, "palindromic-vanish", r, opts, true);
  Rng rng(opts.seed);
  for (int n = r.lo; n <= r.hi; ++n) {
    if (n == 3) {
      // In R^3 the vanishing law does not hold: exhibit palindromic factors
      // with a nonzero cross product.
      MatrixQ m(2, 3);
      m << Rational(1), Rational(2), Rational(1), Rational(3), Rational(5), Rational(3);
      const VectorQ c = cross(m);
      const bool nonzero = !is_zero_matrix(c);
      rep.add_check("n=3 nonzero witness", nonzero,
                    "cross(" + describe(m) + ") = " + describe(c));
      continue;
    }
    for (const bool anti : {false, true}) {
      bool ok = true;
      std::string witness;
      for (int t = 0; t < opts.trials && ok; ++t) {
        MatrixQ m(n - 1, n);
        for (int i = 0; i < n - 1; ++i) {
          m.row(i) =
              (anti ? random_antipalindromic(rng, n) : random_palindromic(rng, n)).transpose();
        }
        const VectorQ c = cross(m);
        if (!is_zero_matrix(c)) {
          ok = false;
          witness = "trial " + std::to_string(t) + ", M = " + describe(m) + ", cross = " +
                    describe(c);
        }
      }
      rep.add_check(std::string(anti ? "antipalindromic" : "palindromic") + " vanish n=" +
                        std::to_string(n),
                    ok, witness);
    }
  }
  return rep;
}

Report verify_wedge_props(const VerifyOptions& opts) {
  Report rep;
  rep.command = "verify";
  rep.mode = "exact";
  const Range r = resolve_range(opts, 1, 8, 1);
  echo_options(rep, "wedge-props", r, opts, true);
  Rng rng(opts.seed);

  for (int n = r.lo; n <= r.hi; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (binomial(n, k) > opts.cap) continue;
      bool linear_ok = true, swap_ok = true, dependent_ok = true;
      std::string linear_w, swap_w, dependent_w;
      for (int t = 0; t < opts.trials; ++t) {
        const MatrixQ u = random_matrix(rng, k, n);

        // k-linearity in a random slot.
        if (linear_ok) {
          const int slot = static_cast<int>(rng() % static_cast<unsigned>(k));
          const VectorQ b = random_vec(rng, n);
          const Rational alpha = Rational(random_digit(rng));
          const Rational beta = Rational(random_digit(rng));
          MatrixQ combined = u;
          combined.row(slot) = (alpha * u.row(slot).transpose() + beta * b).transpose();
          MatrixQ replaced = u;
          replaced.row(slot) = b.transpose();
          const VectorQ lhs = wedge(combined, opts.cap).components;
          const VectorQ rhs =
              alpha * wedge(u, opts.cap).components + beta * wedge(replaced, opts.cap).components;
          if (!matrix_equal(lhs, rhs)) {
            linear_ok = false;
            linear_w = "trial " + std::to_string(t) + ", U = " + describe(u);
          }
        }

        // Row-swap antisymmetry (needs two rows).
        if (swap_ok && k >= 2) {
          const int a = static_cast<int>(rng() % static_cast<unsigned>(k));
          int b2 = static_cast<int>(rng() % static_cast<unsigned>(k - 1));
          if (b2 >= a) ++b2;
          MatrixQ swapped = u;
          swapped.row(a).swap(swapped.row(b2));
          const VectorQ lhs = wedge(swapped, opts.cap).components;
          const VectorQ rhs = -wedge(u, opts.cap).components;
          if (!matrix_equal(lhs, rhs)) {
            swap_ok = false;
            swap_w = "trial " + std::to_string(t) + ", U = " + describe(u);
          }
        }

        // Linearly dependent rows: a random combination of the others.
        if (dependent_ok) {
          MatrixQ dep = u;
          dep.row(k - 1).setZero();
          for (int i = 0; i + 1 < k; ++i) {
            dep.row(k - 1) += Rational(random_digit(rng)) * dep.row(i);
          }
          const VectorQ w = wedge(dep, opts.cap).components;
          if (!is_zero_matrix(w)) {
            dependent_ok = false;
            dependent_w = "trial " + std::to_string(t) + ", U = " + describe(dep);
          }
        }
      }
      const std::string suffix = " k=" + std::to_string(k) + " n=" + std::to_string(n);
      rep.add_check("wedge-linearity" + suffix, linear_ok, linear_w);
      rep.add_check("wedge-antisymmetry" + suffix, swap_ok, swap_w);
      rep.add_check("wedge-dependent-zero" + suffix, dependent_ok, dependent_w);
    }

    // k = n: the single component is the determinant.
    {
      bool ok = true;
      std::string witness;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const MatrixQ u = random_matrix(rng, n, n);
        if (!(det_via_wedge(u) == det(u))) {
          ok = false;
          witness = "trial " + std::to_string(t) + ", U = " + describe(u);
        }
      }
      rep.add_check("wedge-equals-det n=" + std::to_string(n), ok, witness);
    }

    // k = n-1: the wedge is the generalized vector product, orthogonal to
    // every factor, and satisfies the first-row and row-j Laplace identities.
    if (n >= 2) {
      bool wedge_ok = true, orth_ok = true, laplace_ok = true;
      std::string wedge_w, orth_w, laplace_w;
      for (int t = 0; t < opts.trials; ++t) {
        const MatrixQ m = random_matrix(rng, n - 1, n);
        const VectorQ c = cross(m);
        if (wedge_ok && !matrix_equal(VectorQ(wedge(m, opts.cap).components), c)) {
          wedge_ok = false;
          wedge_w = "trial " + std::to_string(t) + ", M = " + describe(m);
        }
        if (orth_ok) {
          for (int i = 0; i < n - 1 && orth_ok; ++i) {
            if (!(dot(m.row(i).transpose(), c) == Rational(0))) {
              orth_ok = false;
              orth_w = "trial " + std::to_string(t) + ", row " + std::to_string(i + 1) +
                       ", M = " + describe(m);
            }
          }
        }
        if (laplace_ok) {
          const MatrixQ a = random_matrix(rng, n, n);
          const Rational d = det(a);
          const int j = static_cast<int>(rng() % static_cast<unsigned>(n));
          MatrixQ rest(n - 1, n);
          int rr = 0;
          for (int i = 0; i < n; ++i) {
            if (i != j) rest.row(rr++) = a.row(i);
          }
          Rational lhs = dot(a.row(j).transpose(), VectorQ(cross(rest)));
          if (j % 2 == 1) lhs = -lhs;  // (-1)^(1+j) with 1-based j
          if (!(lhs == d)) {
            laplace_ok = false;
            laplace_w = "trial " + std::to_string(t) + ", j = " + std::to_string(j + 1) +
                        ", A = " + describe(a);
          }
        }
      }
      rep.add_check("cross-equals-wedge n=" + std::to_string(n), wedge_ok, wedge_w);
      rep.add_check("cross-orthogonality n=" + std::to_string(n), orth_ok, orth_w);
      rep.add_check("laplace-expansion n=" + std::to_string(n), laplace_ok, laplace_w);
    }

    // k = 1 in even dimension: factor orthogonal to its wedge.
    if (n % 2 == 0) {
      bool ok = true;
      std::string witness;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const VectorQ u = random_vec(rng, n);
        const WedgeVector<Rational> w = wedge_k1(u);
        if (!(dot(u, w.components) == Rational(0)) ||
            !matrix_equal(w.components, VectorQ(wedge(MatrixQ(u.transpose()), opts.cap).components))) {
          ok = false;
          witness = "trial " + std::to_string(t) + ", u = " + describe(u);
        }
      }
      rep.add_check("k1-orthogonality n=" + std::to_string(n), ok, witness);
    }
  }

  // No single global sign relates the wedge of a matrix and of its
  // reversing; the fixed 2x4 counterexample stays on file.
  {
    MatrixQ u(2, 4);
    u << Rational(2), Rational(3), Rational(-1), Rational(5), Rational(4), Rational(7),
        Rational(2), Rational(0);
    const VectorQ w = wedge(u).components;
    const VectorQ wr = wedge(MatrixQ(reverse_matrix(u))).components;
    const bool plus = matrix_equal(w, wr);
    const bool minus = matrix_equal(w, VectorQ(-wr));
    rep.add_check("final-remarks-no-global-sign", !plus && !minus,
                  "wedge(U) = " + describe(w) + ", wedge(reversed U) = " + describe(wr));
  }
  return rep;
}

Report verify_cramer_equiv(const VerifyOptions& opts) {
  Report rep;
  rep.command = "verify";
  rep.mode = "exact";
  const Range r = resolve_range(opts, 2, 7, 1);
  echo_options(rep, "cramer-equiv", r, opts, true);
  Rng rng(opts.seed);
  for (int n = r.lo; n <= r.hi; ++n) {
    bool residual_ok = true, paths_ok = true, lemma_ok = true;
    std::string residual_w, paths_w, lemma_w;
    for (int t = 0; t < opts.trials; ++t) {
      MatrixQ a = random_matrix(rng, n, n);
      while (det(a) == Rational(0)) a = random_matrix(rng, n, n);
      const VectorQ b = random_vec(rng, n);
      const LinearSystem<Rational> sys(a, b);

      const VectorQ x = solve(sys);
      if (residual_ok && !is_zero_matrix(residual(sys, x))) {
        residual_ok = false;
        residual_w = "trial " + std::to_string(t) + ", A = " + describe(a) + ", b = " +
                     describe(b);
      }
      if (paths_ok) {
        const VectorQ xc = solve_via_cross(sys);
        bool components_ok = matrix_equal(x, xc);
        for (int i = 1; i <= n && components_ok; ++i) {
          components_ok = solve_component(sys, i) == x(i - 1);
        }
        if (!components_ok) {
          paths_ok = false;
          paths_w = "trial " + std::to_string(t) + ", A = " + describe(a) + ", b = " +
                    describe(b);
        }
      }
      if (lemma_ok && n >= 2) {
        // The derivation's lemma: A_j is orthogonal to cross(A_2, ..., A_n).
        MatrixQ rest(n - 1, n);
        for (int j = 2; j <= n; ++j) rest.row(j - 2) = sys.column(j).transpose();
        const VectorQ c = cross(rest);
        for (int j = 2; j <= n && lemma_ok; ++j) {
          if (!(dot(sys.column(j), c) == Rational(0))) {
            lemma_ok = false;
            lemma_w = "trial " + std::to_string(t) + ", j = " + std::to_string(j);
          }
        }
      }
    }
    rep.add_check("exact-residual n=" + std::to_string(n), residual_ok, residual_w);
    rep.add_check("path-equivalence n=" + std::to_string(n), paths_ok, paths_w);
    rep.add_check("orthogonality-lemma n=" + std::to_string(n), lemma_ok, lemma_w);
  }
  return rep;
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {
      "prop1", "prop2", "prop3", "palindromic-vanish", "wedge-props", "cramer-equiv"};
  return ids;
}

Report run_verify(const std::string& id, const VerifyOptions& opts) {
  if (id == "prop1") return verify_prop1(opts);
  if (id == "prop2") return verify_prop2(opts);
  if (id == "prop3") return verify_prop3(opts);
  if (id == "palindromic-vanish") return verify_palindromic_vanish(opts);
  if (id == "wedge-props") return verify_wedge_props(opts);
  if (id == "cramer-equiv") return verify_cramer_equiv(opts);
  std::string known;
  for (const std::string& k : verify_ids()) known += (known.empty() ? "" : ", ") + k;
  throw DomainError("unknown proposition id '" + id + "' (known: " + known + ")");
}

}  // namespace wedgekit
