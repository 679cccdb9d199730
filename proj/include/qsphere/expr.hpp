#pragma once

#include "qsphere/tensor_form.hpp"

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qsphere::expr {

enum class Kind { Integer, Atom, Negate, Add, Subtract, Multiply, Divide, Power, Call };

struct Node {
  Kind kind = Kind::Integer;
  std::string name;
  mpz_class integer;
  int exponent = 0;
  std::vector<std::unique_ptr<Node>> children;
};

using Expr = std::unique_ptr<Node>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*; unary := '-' unary | factor;
/// factor := primary ['^' ['-'|'+'] int]; primary := atom | int | func '(' expr ')' | '(' expr ')'.
Expr parse(const std::string& text);

/// Prefix rendering of the syntax tree, e.g. "(* (^ q 2) bm)".
std::string render_tree(const Node& node);

using Value = std::variant<Scalar, AlgebraElement<Scalar>, Form<Scalar>, TensorForm<Scalar>>;

Value evaluate(const Node& node);
Value evaluate(const std::string& text);

std::string type_name(const Value& v);
std::string render(const Value& v);

/// Canonical equality after promoting scalars and elements to forms.
bool same_value(const Value& x, const Value& y);

}  // namespace qsphere::expr
