#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/normalizer.hpp"
#include "houghton/shift.hpp"

namespace houghton {

/// Syntax or range error in an expression, located by byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

/// Well-formed expression whose value does not fit the requested type,
/// e.g. a ray permutation where an element of H_n is required.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed expression over a fixed number of rays.
///
///   expr    := product [ ';' rays ]
///   product := factor { factor }            left to right, g then h
///   factor  := primary { '^' int | '\'' }
///   primary := 'g' int | 'a' | 'id' | 'sh' | 's' digit digit
///            | '(' point { point } ')'      cycle literal, point = ray '.' pos
///            | 'rho' '[' int { ',' int } ']'
///            | 'T' '[' int { ',' int } ']' '{' [ point '->' point { ',' ... } ] '}'
///            | '[' product ']'
///   rays    := 'rho' '[' ... ']' | 's' digit digit
///
/// `sh` is the standard infinite cycle of X_1 and only exists for one ray.
class Expr {
 public:
  enum class Kind { Gen, Alpha, Identity, Shift, Cycle, Rays, Literal, Product, Power };

  struct Node {
    Kind kind = Kind::Identity;
    std::size_t offset = 0;
    int index = 0;                         // Gen
    Index exponent = 1;                    // Power
    std::vector<Point> points;             // Cycle
    std::vector<int> rays;                 // Rays
    std::vector<Index> translation;        // Literal
    std::vector<FinitePerm::Entry> pairs;  // Literal
    std::vector<std::size_t> children;     // Product, Power
  };

  int n() const { return n_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t root() const { return root_; }
  bool uses_shift() const;

 private:
  friend Expr parse_expr(std::string_view text, int n);
  int n_ = 1;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

/// Parses and range-checks against n rays. Throws ParseError.
Expr parse_expr(std::string_view text, int n);

/// Value in H_n x| Sigma_n. Throws ParseError for literals that do not
/// describe a bijection and EvalError when `sh` appears.
NormElem eval_norm(const Expr& e);
/// Value in H_n; EvalError if the ray part is nontrivial.
HoughtonElem eval_elem(const Expr& e);
/// Value in FSym_1 <gamma>; requires n = 1.
ShiftElem eval_shift(const Expr& e);

}  // namespace houghton
