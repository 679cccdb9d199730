#include "qsphere/expr.hpp"

#include "qsphere/sphere.hpp"
#include "qsphere/spin.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace qsphere::expr {

namespace {

using E = AlgebraElement<Scalar>;
using Fm = Form<Scalar>;
using TF = TensorForm<Scalar>;

const std::vector<std::string> kAtoms{"a", "b", "c", "d", "b0", "bp", "bm", "e0", "ep", "em", "q", "s"};
const std::vector<std::string> kFunctions{"d", "del", "delbar", "star", "nabla", "dirac", "lap", "S", "eps"};

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  for (const auto& y : xs)
    if (y == x) return true;
  return false;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected) { throw ParseError(pos_, std::move(expected)); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr binary(Kind kind, Expr lhs, Expr rhs) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Kind::Add, std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = binary(Kind::Subtract, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = binary(Kind::Multiply, std::move(lhs), parse_unary());
      } else if (accept('/')) {
        lhs = binary(Kind::Divide, std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) {
      auto n = std::make_unique<Node>();
      n->kind = Kind::Negate;
      n->children.push_back(parse_unary());
      return n;
    }
    return parse_factor();
  }

  Expr parse_factor() {
    Expr base = parse_primary();
    if (!accept('^')) return base;
    skip();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const mpz_class k = read_integer({"integer exponent"});
    if (!k.fits_sint_p() || abs(k) > 10000) fail({"exponent of at most 10000"});
    auto n = std::make_unique<Node>();
    n->kind = Kind::Power;
    n->exponent = static_cast<int>(k.get_si()) * (negative ? -1 : 1);
    n->children.push_back(std::move(base));
    return n;
  }

  mpz_class read_integer(std::vector<std::string> expected) {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::move(expected));
    return mpz_class(text_.substr(start, pos_ - start));
  }

  Expr parse_primary() {
    skip();
    const std::vector<std::string> expected{"integer", "atom", "function", "'('"};
    if (pos_ >= text_.size()) fail(expected);
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Expr inner = parse_expr();
      if (!accept(')')) fail({"')'"});
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      auto n = std::make_unique<Node>();
      n->kind = Kind::Integer;
      n->integer = read_integer(expected);
      return n;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) fail(expected);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    const std::size_t after_name = pos_;
    if (contains(kFunctions, name) && accept('(')) {
      auto n = std::make_unique<Node>();
      n->kind = Kind::Call;
      n->name = name;
      n->children.push_back(parse_expr());
      if (!accept(')')) fail({"')'"});
      return n;
    }
    pos_ = after_name;
    if (!contains(kAtoms, name)) {
      pos_ = start;
      fail(expected);
    }
    auto n = std::make_unique<Node>();
    n->kind = Kind::Atom;
    n->name = name;
    return n;
  }
};

// ---------------------------------------------------------------------------
// evaluation

Value atom(const std::string& name) {
  if (name == "a") return gen<Scalar>(Gen::A);
  if (name == "b") return gen<Scalar>(Gen::B);
  if (name == "c") return gen<Scalar>(Gen::C);
  if (name == "d") return gen<Scalar>(Gen::D);
  if (name == "b0") return b0<Scalar>();
  if (name == "bp") return bp<Scalar>();
  if (name == "bm") return bm<Scalar>();
  if (name == "e0") return Fm::basis(kZero);
  if (name == "ep") return Fm::basis(kPlus);
  if (name == "em") return Fm::basis(kMinus);
  if (name == "q") return q_power<Scalar>(1);
  return Scalar::s_power(1);
}

enum Rank { kScalarRank = 0, kElementRank = 1, kFormRank = 2, kTensorRank = 3 };

E as_element(const Value& v) {
  if (const auto* x = std::get_if<Scalar>(&v)) return E(*x);
  return std::get<E>(v);
}

Fm as_form(const Value& v) {
  if (const auto* x = std::get_if<Fm>(&v)) return *x;
  return Fm(as_element(v));
}

Value add(const Value& x, const Value& y, bool subtract) {
  const int rank = static_cast<int>(std::max(x.index(), y.index()));
  const Scalar sign(subtract ? -1 : 1);
  if (rank == kScalarRank) return std::get<Scalar>(x) + std::get<Scalar>(y) * sign;
  if (rank == kElementRank) return as_element(x) + as_element(y) * sign;
  if (rank == kFormRank) {
    if (x.index() == kTensorRank || y.index() == kTensorRank) throw TypeError("cannot add a tensor and a form");
    return as_form(x) + as_form(y) * sign;
  }
  if (x.index() != kTensorRank || y.index() != kTensorRank)
    throw TypeError("cannot add " + type_name(x) + " and " + type_name(y));
  return std::get<TF>(x) + std::get<TF>(y) * sign;
}

Value scale(const Value& v, const Scalar& k) {
  return std::visit([&](const auto& x) -> Value { return x * k; }, v);
}

Value multiply(const Value& x, const Value& y) {
  if (const auto* k = std::get_if<Scalar>(&x)) return scale(y, *k);
  if (const auto* k = std::get_if<Scalar>(&y)) return scale(x, *k);
  if (x.index() == kTensorRank || y.index() == kTensorRank) {
    if (x.index() == kElementRank && y.index() == kTensorRank) return std::get<E>(x) * std::get<TF>(y);
    throw TypeError("tensors can only be multiplied by scalars or by functions from the left");
  }
  if (x.index() == kElementRank && y.index() == kElementRank) return std::get<E>(x) * std::get<E>(y);
  if (x.index() == kElementRank) return std::get<E>(x) * std::get<Fm>(y);
  if (y.index() == kElementRank) return std::get<Fm>(x) * std::get<E>(y);
  return wedge(std::get<Fm>(x), std::get<Fm>(y));
}

Value power(const Value& x, int n) {
  if (const auto* k = std::get_if<Scalar>(&x)) {
    if (n < 0 && k->is_zero()) throw TypeError("negative power of zero");
    Scalar base = n < 0 ? k->inverse() : *k;
    Scalar r(1);
    for (int i = 0; i < std::abs(n); ++i) r *= base;
    return r;
  }
  if (n < 0) throw TypeError("negative exponent needs a scalar base, got " + type_name(x));
  if (x.index() == kTensorRank) throw TypeError("powers of tensors are not defined");
  Value r = Scalar(1);
  for (int i = 0; i < n; ++i) r = multiply(r, x);
  return r;
}

E require_element(const Value& v, const std::string& fn) {
  if (v.index() > kElementRank) throw TypeError(fn + " expects a function, got " + type_name(v));
  return as_element(v);
}

Fm require_form(const Value& v, const std::string& fn) {
  if (v.index() != kFormRank) throw TypeError(fn + " expects a form, got " + type_name(v));
  return std::get<Fm>(v);
}

E dirac_element(const E& x) {
  Spinor<Scalar> sp;
  for (const auto& [deg, part] : x.degree_split()) {
    if (deg == 1) {
      sp.minus = part;
    } else if (deg == -1) {
      sp.plus = part;
    } else {
      throw TypeError("dirac expects a spinor, i.e. parts of degree 1 and -1, got degree " + std::to_string(deg));
    }
  }
  const Spinor<Scalar> r = dirac(sp);
  return r.minus + r.plus;
}

Value call(const std::string& fn, const Value& arg) {
  try {
    if (fn == "d") {
      if (arg.index() == kTensorRank) throw TypeError("d expects a function or form, got tensor");
      if (arg.index() == kFormRank) return d(std::get<Fm>(arg));
      return d(as_element(arg));
    }
    if (fn == "del" || fn == "delbar") {
      if (arg.index() == kFormRank) return fn == "del" ? del(std::get<Fm>(arg)) : delbar(std::get<Fm>(arg));
      const E f = require_element(arg, fn);
      return fn == "del" ? del(f) : delbar(f);
    }
    if (fn == "star") return hodge_star(require_form(arg, fn));
    if (fn == "nabla") return nabla(require_form(arg, fn));
    if (fn == "dirac") return dirac_element(require_element(arg, fn));
    if (fn == "lap") return laplacian(require_element(arg, fn));
    if (fn == "S") return antipode(require_element(arg, fn));
    return counit(require_element(arg, fn));
  } catch (const std::invalid_argument& ex) {
    throw TypeError(fn + ": " + ex.what());
  }
}

std::string tree(const Node& n) {
  switch (n.kind) {
    case Kind::Integer:
      return n.integer.get_str();
    case Kind::Atom:
      return n.name;
    case Kind::Negate:
      return "(- " + tree(*n.children[0]) + ")";
    case Kind::Add:
      return "(+ " + tree(*n.children[0]) + " " + tree(*n.children[1]) + ")";
    case Kind::Subtract:
      return "(- " + tree(*n.children[0]) + " " + tree(*n.children[1]) + ")";
    case Kind::Multiply:
      return "(* " + tree(*n.children[0]) + " " + tree(*n.children[1]) + ")";
    case Kind::Divide:
      return "(/ " + tree(*n.children[0]) + " " + tree(*n.children[1]) + ")";
    case Kind::Power:
      return "(^ " + tree(*n.children[0]) + " " + std::to_string(n.exponent) + ")";
    case Kind::Call:
      return "(" + n.name + " " + tree(*n.children[0]) + ")";
  }
  return {};
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": expected " + join(expected)),
      position_(position),
      expected_(std::move(expected)) {}

Expr parse(const std::string& text) { return Parser(text).parse_all(); }

std::string render_tree(const Node& node) { return tree(node); }

Value evaluate(const Node& n) {
  switch (n.kind) {
    case Kind::Integer:
      return Scalar(mpq_class(n.integer));
    case Kind::Atom:
      return atom(n.name);
    case Kind::Negate:
      return scale(evaluate(*n.children[0]), Scalar(-1));
    case Kind::Add:
      return add(evaluate(*n.children[0]), evaluate(*n.children[1]), false);
    case Kind::Subtract:
      return add(evaluate(*n.children[0]), evaluate(*n.children[1]), true);
    case Kind::Multiply:
      return multiply(evaluate(*n.children[0]), evaluate(*n.children[1]));
    case Kind::Divide: {
      const Value rhs = evaluate(*n.children[1]);
      const auto* k = std::get_if<Scalar>(&rhs);
      if (k == nullptr) throw TypeError("division only by scalars, got " + type_name(rhs));
      if (k->is_zero()) throw TypeError("division by zero");
      return scale(evaluate(*n.children[0]), k->inverse());
    }
    case Kind::Power:
      return power(evaluate(*n.children[0]), n.exponent);
    case Kind::Call:
      return call(n.name, evaluate(*n.children[0]));
  }
  throw TypeError("malformed expression");
}

Value evaluate(const std::string& text) { return evaluate(*parse(text)); }

std::string type_name(const Value& v) {
  switch (v.index()) {
    case kScalarRank:
      return "scalar";
    case kElementRank:
      return "function";
    case kFormRank:
      return "form";
    default:
      return "tensor";
  }
}

std::string render(const Value& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

bool same_value(const Value& x, const Value& y) {
  if (x.index() == kTensorRank || y.index() == kTensorRank)
    return x.index() == y.index() && std::get<TF>(x) == std::get<TF>(y);
  return as_form(x) == as_form(y);
}

}  // namespace qsphere::expr
