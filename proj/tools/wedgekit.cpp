#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "wedgekit/cramer.hpp"
#include "wedgekit/io.hpp"
#include "wedgekit/report.hpp"
#include "wedgekit/reversing.hpp"
#include "wedgekit/verify.hpp"
#include "wedgekit/wedge.hpp"

namespace {

using namespace wedgekit;

// Exit contract: 0 all checks pass, 1 check failure, 2 input/parse error,
// 3 capacity, 4 singularity.
constexpr int exit_ok = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_input_error = 2;
constexpr int exit_capacity = 3;
constexpr int exit_singular = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Count resolve_cap(const CLI::Option* cap_flag, Count cap_value) {
  if (cap_flag->count() > 0) return cap_value;  // flag wins over the environment
  if (const char* env = std::getenv("WEDGEKIT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw DomainError("WEDGEKIT_CAP must be a positive integer, got '" + std::string(env) +
                        "'");
    }
    return static_cast<Count>(v);
  }
  return cap_value;
}

int emit(const Report& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << rep.to_text();
  }
  return rep.all_pass() ? exit_ok : exit_check_failure;
}

// |dot| compared against the cancellation scale of its terms.
bool float_dot_vanishes(const VectorD& u, const VectorD& v, double dot_value) {
  double scale = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    scale = std::max(scale, std::abs(u(i) * v(i)));
  }
  return std::abs(dot_value) <= std::max(float_abs_tol, float_rel_tol * scale);
}

template <typename Scalar>
nlohmann::ordered_json lines_json(const Matrix<Scalar>& m) {
  return nlohmann::ordered_json(matrix_lines(m));
}

template <typename Scalar>
nlohmann::ordered_json tokens_json(const Vector<Scalar>& v) {
  return nlohmann::ordered_json(vector_tokens(v));
}

template <typename Scalar>
Report do_wedge(const Matrix<Scalar>& u, bool plucker, Count cap) {
  Report rep;
  rep.command = "wedge";
  rep.mode = scalar_mode<Scalar>::name;
  rep.add_input("matrix", lines_json(u));
  const WedgeVector<Scalar> w = wedge(u, cap);
  rep.add_output("n", w.n);
  rep.add_output("k", w.k);
  rep.add_output("convention", WedgeVector<Scalar>::convention);
  rep.add_output("wedge", tokens_json(w.components));
  if (w.k == w.n) rep.add_output("det", to_token(w.components(0)));
  if (plucker) rep.add_output("plucker", tokens_json(Vector<Scalar>(to_plucker(w))));
  return rep;
}

template <typename Scalar>
Report do_cross(const Matrix<Scalar>& m) {
  Report rep;
  rep.command = "cross";
  rep.mode = scalar_mode<Scalar>::name;
  rep.add_input("matrix", lines_json(m));
  const Vector<Scalar> c = cross(m);
  rep.add_output("cross", tokens_json(c));

  const Eigen::Index n = m.cols();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Vector<Scalar> row = m.row(i).transpose();
    const Scalar d = dot(row, c);
    bool ok;
    if constexpr (scalar_mode<Scalar>::exact) {
      ok = d == Scalar(0);
    } else {
      ok = float_dot_vanishes(row, c, d);
    }
    rep.add_check("orthogonal-to-row-" + std::to_string(i + 1), ok,
                  "dot = " + to_token(d));
  }
  if (n >= 4) {
    int palindromic = 0, antipalindromic = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Symmetry s = classify(m.row(i));
      palindromic += s == Symmetry::palindromic;
      antipalindromic += s == Symmetry::antipalindromic;
    }
    if (palindromic == m.rows()) {
      rep.add_check("degenerate: palindromic", is_zero_matrix(c),
                    "palindromic factors, cross must vanish");
    } else if (antipalindromic == m.rows()) {
      rep.add_check("degenerate: antipalindromic", is_zero_matrix(c),
                    "antipalindromic factors, cross must vanish");
    }
  }
  return rep;
}

template <typename Scalar>
Report do_solve(const SystemInput<Scalar>& input) {
  Report rep;
  rep.command = "solve";
  rep.mode = scalar_mode<Scalar>::name;
  rep.add_input("matrix", lines_json(input.coefficients));
  rep.add_input("rhs", tokens_json(input.rhs));
  const LinearSystem<Scalar> sys(input.coefficients, input.rhs);
  const Vector<Scalar> x = solve(sys);
  rep.add_output("solution", tokens_json(x));
  const Vector<Scalar> res = residual(sys, x);
  rep.add_output("residual", tokens_json(res));
  bool ok;
  if constexpr (scalar_mode<Scalar>::exact) {
    ok = is_zero_matrix(res);
  } else {
    double rhs_scale = 0.0;
    for (Eigen::Index i = 0; i < input.rhs.size(); ++i) {
      rhs_scale = std::max(rhs_scale, std::abs(input.rhs(i)));
    }
    ok = true;
    for (Eigen::Index i = 0; i < res.size(); ++i) {
      ok = ok && std::abs(res(i)) <= std::max(float_abs_tol, float_rel_tol * rhs_scale);
    }
  }
  rep.add_check("residual-zero", ok);
  return rep;
}

Report do_classify(const MatrixQ& m) {
  Report rep;
  rep.command = "classify";
  rep.mode = "exact";
  rep.add_input("matrix", lines_json(m));
  rep.add_output("classification", to_string(classify(m)));
  rep.add_output("reversed", lines_json(MatrixQ(reverse_matrix(m))));
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wedgekit: generalized vector products, exterior products, exact Cramer "
               "solving, and reversing-operator checks"};
  app.require_subcommand(1);

  std::string mode = "exact";
  std::string format = "text";
  Count cap = default_component_cap;
  bool plucker = false;
  std::string file;
  std::string prop_id;
  VerifyOptions vopts;
  int n_min = -1, n_max = -1;

  auto add_common = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_mode) {
      cmd->add_option("--mode", mode, "Arithmetic mode")
          ->check(CLI::IsMember({"exact", "float"}));
    }
  };

  CLI::App* wedge_cmd = app.add_subcommand(
      "wedge", "Exterior product of the rows of a k x n matrix file");
  wedge_cmd->add_option("file", file, "Matrix file")->required();
  CLI::Option* cap_flag = wedge_cmd->add_option("--cap", cap, "Component count cap");
  wedge_cmd->add_flag("--plucker", plucker,
                      "Also emit unsigned ascending-lex coordinates");
  add_common(wedge_cmd, true);

  CLI::App* cross_cmd = app.add_subcommand(
      "cross", "Generalized vector product of the rows of an (n-1) x n matrix file");
  cross_cmd->add_option("file", file, "Matrix file")->required();
  add_common(cross_cmd, true);

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Solve the square system in a matrix file with a final b: line");
  solve_cmd->add_option("file", file, "System file")->required();
  add_common(solve_cmd, true);

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Palindromic / antipalindromic / neither classification");
  classify_cmd->add_option("file", file, "Matrix file")->required();
  add_common(classify_cmd, false);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a named identity suite");
  verify_cmd->add_option("proposition", prop_id, "One of: prop1, prop2, prop3, "
                                                 "palindromic-vanish, wedge-props, "
                                                 "cramer-equiv")
      ->required();
  verify_cmd->add_option("--nmin", n_min, "Smallest dimension");
  verify_cmd->add_option("--nmax", n_max, "Largest dimension");
  verify_cmd->add_option("--trials", vopts.trials, "Trials per dimension");
  verify_cmd->add_option("--seed", vopts.seed, "Generator seed");
  CLI::Option* verify_cap_flag = verify_cmd->add_option("--cap", cap, "Component count cap");
  add_common(verify_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input_error;
  }

  try {
    if (wedge_cmd->parsed()) {
      const Count effective_cap = resolve_cap(cap_flag, cap);
      const std::string text = read_file(file);
      const Report rep = mode == "float" ? do_wedge(parse_matrix_float(text), plucker,
                                                    effective_cap)
                                         : do_wedge(parse_matrix_exact(text), plucker,
                                                    effective_cap);
      return emit(rep, format);
    }
    if (cross_cmd->parsed()) {
      const std::string text = read_file(file);
      const Report rep = mode == "float" ? do_cross(parse_matrix_float(text))
                                         : do_cross(parse_matrix_exact(text));
      return emit(rep, format);
    }
    if (solve_cmd->parsed()) {
      const std::string text = read_file(file);
      const Report rep = mode == "float" ? do_solve(parse_system_float(text))
                                         : do_solve(parse_system_exact(text));
      return emit(rep, format);
    }
    if (classify_cmd->parsed()) {
      return emit(do_classify(parse_matrix_exact(read_file(file))), format);
    }
    if (verify_cmd->parsed()) {
      if (n_min >= 0) vopts.n_min = n_min;
      if (n_max >= 0) vopts.n_max = n_max;
      vopts.cap = resolve_cap(verify_cap_flag, cap);
      return emit(run_verify(prop_id, vopts), format);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return exit_input_error;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_capacity;
  } catch (const SingularSystemError& e) {
    std::cerr << "error: " << e.what() << " (" << e.evidence() << ")\n";
    return exit_singular;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_check_failure;
  }
  return exit_input_error;
}
