#include "wedgekit/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

#include "wedgekit/error.hpp"

namespace wedgekit {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
  std::string_view text;
  int line;    // 1-based
  int column;  // 1-based
};

// Lines split on '\n'; blank lines are skipped, everything else must parse.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> rows;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    std::vector<Token> row;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i >= line.size()) break;
      const size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      row.push_back(Token{line.substr(start, i - start), line_no,
                          static_cast<int>(start) + 1});
    }
    if (!row.empty()) rows.push_back(std::move(row));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return rows;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::optional<Rational> try_parse_rational(std::string_view tok) {
  const size_t slash = tok.find('/');
  std::string_view num = slash == std::string_view::npos ? tok : tok.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{}
                                                         : tok.substr(slash + 1);
  auto strip_sign = [](std::string_view s) {
    return (!s.empty() && s[0] == '-') ? s.substr(1) : s;
  };
  if (!all_digits(strip_sign(num))) return std::nullopt;
  if (slash != std::string_view::npos && !all_digits(strip_sign(den))) return std::nullopt;

  mpq_class q;
  if (q.set_str(std::string(tok), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return Rational(q);
}

std::optional<double> try_parse_double(std::string_view tok) {
  double value = 0.0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

template <typename Scalar, typename ParseToken>
Matrix<Scalar> parse_rows(const std::vector<std::vector<Token>>& rows, ParseToken parse,
                          const char* what) {
  if (rows.empty()) throw ParseError("empty matrix", 1, 1);
  const size_t cols = rows.front().size();
  Matrix<Scalar> m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw ParseError("ragged row: expected " + std::to_string(cols) + " entries, got " +
                           std::to_string(rows[i].size()),
                       rows[i].front().line, rows[i].front().column);
    }
    for (size_t j = 0; j < cols; ++j) {
      const Token& t = rows[i][j];
      auto v = parse(t.text);
      if (!v) {
        throw ParseError("'" + std::string(t.text) + "' is not a valid " + what + " entry",
                         t.line, t.column);
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = *v;
    }
  }
  return m;
}

// Splits off a trailing "b:" row; it must be the last non-blank line.
std::pair<std::vector<std::vector<Token>>, std::vector<Token>> split_system(
    std::vector<std::vector<Token>> rows) {
  std::vector<Token> rhs;
  for (size_t i = 0; i < rows.size(); ++i) {
    Token& first = rows[i].front();
    if (first.text.rfind("b:", 0) != 0) continue;
    if (i + 1 != rows.size()) {
      throw ParseError("the b: right-hand side must be the final line", first.line,
                       first.column);
    }
    rhs = std::move(rows[i]);
    rows.pop_back();
    if (rhs.front().text == "b:") {
      rhs.erase(rhs.begin());
    } else {
      rhs.front().text.remove_prefix(2);
      rhs.front().column += 2;
    }
    if (rhs.empty()) throw ParseError("empty right-hand side", first.line, first.column);
    return {std::move(rows), std::move(rhs)};
  }
  const int last_line = rows.empty() ? 1 : rows.back().front().line;
  throw ParseError("system file is missing the final b: right-hand side line",
                   last_line, 1);
}

template <typename Scalar, typename ParseToken>
SystemInput<Scalar> parse_system(std::string_view text, ParseToken parse, const char* what) {
  auto [rows, rhs_tokens] = split_system(tokenize(text));
  SystemInput<Scalar> sys;
  sys.coefficients = parse_rows<Scalar>(rows, parse, what);
  sys.rhs.resize(static_cast<Eigen::Index>(rhs_tokens.size()));
  for (size_t j = 0; j < rhs_tokens.size(); ++j) {
    auto v = parse(rhs_tokens[j].text);
    if (!v) {
      throw ParseError("'" + std::string(rhs_tokens[j].text) + "' is not a valid " + what +
                           " entry",
                       rhs_tokens[j].line, rhs_tokens[j].column);
    }
    sys.rhs(static_cast<Eigen::Index>(j)) = *v;
  }
  return sys;
}

}  // namespace

Rational parse_rational_token(std::string_view token) {
  auto v = try_parse_rational(token);
  if (!v) throw DomainError("'" + std::string(token) + "' is not a valid exact entry");
  return *v;
}

double parse_double_token(std::string_view token) {
  auto v = try_parse_double(token);
  if (!v) throw DomainError("'" + std::string(token) + "' is not a valid float entry");
  return *v;
}

std::string to_token(const Rational& r) { return r.to_string(); }

std::string to_token(double d) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, ptr);
}

MatrixQ parse_matrix_exact(std::string_view text) {
  return parse_rows<Rational>(tokenize(text), try_parse_rational, "exact");
}

MatrixD parse_matrix_float(std::string_view text) {
  return parse_rows<double>(tokenize(text), try_parse_double, "float");
}

SystemInput<Rational> parse_system_exact(std::string_view text) {
  return parse_system<Rational>(text, try_parse_rational, "exact");
}

SystemInput<double> parse_system_float(std::string_view text) {
  return parse_system<double>(text, try_parse_double, "float");
}

}  // namespace wedgekit
