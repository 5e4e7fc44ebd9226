#pragma once
/* Plain-text input and output: block-partition and matroid-family parsing
 * for the command line, and rendering of partitions, virtual
 * representations, graded polynomials, and integer polynomials.
 *
 * Rendering conventions: a partition prints inside brackets with runs of
 * three or more equal parts compressed as p^e (so [3,2,2,2] prints as
 * "[3,2^3]" but [1,1] stays "[1,1]"); the factors of a multipartition are
 * joined with "⊗"; terms of a virtual representation are joined with
 * " + " or " - " and carry a multiplicity prefix when it is not one. */

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matroid.hpp"
#include "partition.hpp"
#include "rep.hpp"
#include "young.hpp"

namespace equikl {

// --- rendering ---------------------------------------------------------

inline std::string render_partition(const Partition& p) {
  const std::vector<int>& parts = p.parts();
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const size_t run = j - i;
    if (i > 0) os << ',';
    if (run >= 3)
      os << parts[i] << '^' << run;
    else
      for (size_t t = 0; t < run; ++t) {
        if (t > 0) os << ',';
        os << parts[i];
      }
    i = j;
  }
  os << ']';
  return os.str();
}

inline std::string render_multipartition(const MultiPartition& mp) {
  if (mp.empty()) return "V[]";
  std::string out;
  for (size_t b = 0; b < mp.size(); ++b) {
    if (b > 0) out += "⊗";
    out += "V" + render_partition(mp[b]);
  }
  return out;
}

inline std::string render_virtual_rep(const VirtualRep& r) {
  if (r.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mp, c] : r.terms()) {
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    const long long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += render_multipartition(mp);
    first = false;
  }
  return out;
}

/* One "[x^j] = ..." line per degree from zero up to the degree of f. */
inline std::string render_graded(const GradedVirtualRep& f) {
  std::ostringstream os;
  const int top = std::max(f.degree(), 0);
  for (int j = 0; j <= top; ++j)
    os << "[x^" << j << "] = " << render_virtual_rep(f.coefficient(j)) << "\n";
  return os.str();
}

/* Integer polynomial in descending powers, e.g. "84x^3+120x^2+27x+1". */
inline std::string render_int_poly(const std::map<int, long long>& poly) {
  std::string out;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    const auto& [d, c] = *it;
    if (c == 0) continue;
    if (!out.empty())
      out += c < 0 ? "-" : "+";
    else if (c < 0)
      out += "-";
    const long long a = c < 0 ? -c : c;
    if (a != 1 || d == 0) out += std::to_string(a);
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

// --- parsing -----------------------------------------------------------

namespace detail {

inline int parse_int_at(const std::string& text, size_t& i, const std::string& what) {
  size_t j = i;
  while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
  if (j == i || j - i > 9) throw parse_error("expected a number in " + what);
  const int value = std::atoi(text.substr(i, j - i).c_str());
  i = j;
  return value;
}

}  // namespace detail

/* Block syntax: brace-wrapped comma-separated labels joined by '|', for
 * example "{1,2,3,4}|{5}|{6,7,8,9,10}". */
inline std::vector<std::vector<int>> parse_blocks(const std::string& text) {
  const std::string what = "block list '" + text + "'";
  std::vector<std::vector<int>> out;
  size_t i = 0;
  while (true) {
    if (i >= text.size() || text[i] != '{') throw parse_error("expected '{' in " + what);
    ++i;
    std::vector<int> block;
    while (true) {
      block.push_back(detail::parse_int_at(text, i, what));
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= text.size() || text[i] != '}') throw parse_error("expected '}' in " + what);
    ++i;
    out.push_back(std::move(block));
    if (i == text.size()) break;
    if (text[i] != '|') throw parse_error("expected '|' in " + what);
    ++i;
  }
  return out;
}

/* Family specs: uniform:k,n  cycle:n  glued:a,b  lambda:r,k,h,n  boolean:n.
 * The lambda spec names the rank-k matroid on {1..n} whose bases are the
 * k-subsets with at most k-r elements outside {1..h}. */
inline bool looks_like_matroid_spec(const std::string& spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string::npos) return false;
  const std::string family = spec.substr(0, colon);
  return family == "uniform" || family == "cycle" || family == "glued" ||
         family == "lambda" || family == "boolean";
}

inline Matroid parse_matroid_spec(const std::string& spec) {
  const std::string what = "matroid spec '" + spec + "'";
  const size_t colon = spec.find(':');
  if (colon == std::string::npos) throw parse_error("expected family:args in " + what);
  const std::string family = spec.substr(0, colon);
  std::vector<int> args;
  size_t i = colon + 1;
  while (true) {
    args.push_back(detail::parse_int_at(spec, i, what));
    if (i < spec.size() && spec[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (i != spec.size()) throw parse_error("trailing characters in " + what);
  auto arity = [&](size_t n) {
    if (args.size() != n)
      throw parse_error("family '" + family + "' takes " + std::to_string(n) +
                        " arguments in " + what);
  };
  if (family == "uniform") {
    arity(2);
    return Matroid::uniform(args[0], default_ground(args[1]));
  }
  if (family == "cycle") {
    arity(1);
    return Matroid::cycle(default_ground(args[0]));
  }
  if (family == "glued") {
    arity(2);
    return Matroid::glued_cycles(args[0], args[1]);
  }
  if (family == "lambda") {
    arity(4);
    return Matroid::lambda_matroid(args[0], args[1], default_ground(args[2]),
                                   default_ground(args[3]));
  }
  if (family == "boolean") {
    arity(1);
    return Matroid::boolean_matroid(default_ground(args[0]));
  }
  throw parse_error("unknown matroid family '" + family + "'");
}

}  // namespace equikl
