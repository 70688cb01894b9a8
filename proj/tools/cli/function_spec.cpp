#include "function_spec.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

#include "phin/haar.hpp"
#include "phin/specfun.hpp"

namespace phin::cli {

namespace {

[[noreturn]] void fail(const std::string& what, std::string_view text) {
  throw SpecError(what + " in function spec '" + std::string(text) + "'");
}

long parse_int(std::string_view s, std::string_view whole) {
  long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) fail("expected an integer, got '" + std::string(s) + "'", whole);
  return v;
}

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v))
    fail("expected a number, got '" + std::string(s) + "'", whole);
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Index just past the parenthesis matching the '(' at `open`.
std::size_t match_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i + 1;
  }
  fail("unbalanced parentheses", s);
}

FunctionExpr normalized_gaussian(int n) {
  // ||g_n||^2 = n^(1/2n) Gamma(1/2n) / n.
  const double mu = 1.0 / (2.0 * n);
  const double norm_sq = std::pow(n, mu) * gamma(mu) / n;
  return FunctionExpr::scaled(1.0 / std::sqrt(norm_sq), FunctionExpr::n_gaussian(n));
}

FunctionExpr load_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open samples file '" + path + "'");
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> ts;
  std::vector<std::complex<double>> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cols = split(line, ',');
    if (cols.size() < 2 || cols.size() > 3) throw SpecError("samples file '" + path + "': expected t,re[,im]");
    ts.push_back(parse_real(cols[0], line));
    values.emplace_back(parse_real(cols[1], line), cols.size() == 3 ? parse_real(cols[2], line) : 0.0);
  }
  if (ts.size() < 2) throw SpecError("samples file '" + path + "' needs at least two rows");
  const double step = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
  if (!(step > 0.0)) throw SpecError("samples file '" + path + "': t must increase");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (std::fabs(ts[i] - (ts.front() + static_cast<double>(i) * step)) > 1e-9 * std::max(1.0, std::fabs(ts[i])))
      throw SpecError("samples file '" + path + "': t grid is not uniform");
  }
  return FunctionExpr::samples(SampledGrid{ts.front(), step, std::move(values)});
}

FunctionExpr parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) fail("missing ':'", text);
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);

  if (kind == "ngauss") {
    constexpr std::string_view suffix = "-normalized";
    if (rest.size() > suffix.size() && rest.substr(rest.size() - suffix.size()) == suffix)
      return normalized_gaussian(static_cast<int>(parse_int(rest.substr(0, rest.size() - suffix.size()), text)));
    return FunctionExpr::n_gaussian(static_cast<int>(parse_int(rest, text)));
  }
  if (kind == "haar+" || kind == "haar-" || kind == "eigen") {
    const auto parts = split(rest, ':');
    if (parts.size() != 2) fail("expected two integer fields", text);
    const long a = parse_int(parts[0], text);
    const long b = parse_int(parts[1], text);
    if (kind == "eigen") return FunctionExpr::eigen(static_cast<int>(a), static_cast<int>(b));
    const HaarIndex idx(static_cast<int>(a), b);
    return kind == "haar+" ? FunctionExpr::haar_even(idx) : FunctionExpr::haar_odd(idx);
  }
  if (kind == "dilate") {
    const std::size_t sep = rest.find(':');
    if (sep == std::string_view::npos || sep + 1 >= rest.size() || rest[sep + 1] != '(')
      fail("expected dilate:<alpha>:(<spec>)", text);
    const std::size_t end = match_paren(rest, sep + 1);
    if (end != rest.size()) fail("trailing text after ')'", text);
    const double alpha = parse_real(rest.substr(0, sep), text);
    return FunctionExpr::dilate(alpha, parse(rest.substr(sep + 2, end - sep - 3)));
  }
  if (kind == "sum") {
    std::vector<std::pair<std::complex<double>, FunctionExpr>> terms;
    std::size_t pos = 0;
    while (pos < rest.size()) {
      const std::size_t star = rest.find('*', pos);
      if (star == std::string_view::npos || star + 1 >= rest.size() || rest[star + 1] != '(')
        fail("expected <weight>*(<spec>)", text);
      const double w = parse_real(rest.substr(pos, star - pos), text);
      const std::size_t end = match_paren(rest, star + 1);
      terms.emplace_back(w, parse(rest.substr(star + 2, end - star - 3)));
      pos = end;
      if (pos < rest.size()) {
        if (rest[pos] != '+') fail("expected '+' between terms", text);
        ++pos;
        if (pos == rest.size()) fail("dangling '+'", text);
      }
    }
    if (terms.empty()) fail("empty sum", text);
    return FunctionExpr::sum(std::move(terms));
  }
  if (kind == "samples") {
    if (rest.empty()) fail("missing path", text);
    return load_samples(std::string(rest));
  }
  fail("unknown kind '" + std::string(kind) + "'", text);
}

}  // namespace

FunctionExpr parse_function_spec(const std::string& text) { return parse(text); }

}  // namespace phin::cli
