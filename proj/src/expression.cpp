#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "dlab/continuous.hpp"
#include "dlab/errors.hpp"

namespace dlab {

struct Expression::Node {
  enum class Kind { kNumber, kVariable, kNeg, kAdd, kSub, kMul, kDiv, kPow, kAbs, kNorm2 };
  Kind kind = Kind::kNumber;
  double number = 0.0;
  int variable = 0;
  std::vector<std::shared_ptr<const Node>> args;

  double eval(std::span<const double> p) const {
    switch (kind) {
      case Kind::kNumber:
        return number;
      case Kind::kVariable:
        return static_cast<std::size_t>(variable) < p.size() ? p[static_cast<std::size_t>(variable)] : 0.0;
      case Kind::kNeg:
        return -args[0]->eval(p);
      case Kind::kAdd:
        return args[0]->eval(p) + args[1]->eval(p);
      case Kind::kSub:
        return args[0]->eval(p) - args[1]->eval(p);
      case Kind::kMul:
        return args[0]->eval(p) * args[1]->eval(p);
      case Kind::kDiv:
        return args[0]->eval(p) / args[1]->eval(p);
      case Kind::kPow:
        return std::pow(args[0]->eval(p), args[1]->eval(p));
      case Kind::kAbs:
        return std::abs(args[0]->eval(p));
      case Kind::kNorm2: {
        double s = 0.0;
        for (const auto& a : args) {
          const double v = a->eval(p);
          s += v * v;
        }
        return std::sqrt(s);
      }
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind kind, std::vector<NodePtr> args) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = kind;
  n->args = std::move(args);
  return n;
}

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := ('+' | '-') unary | power
// power   := primary ('^' unary)?
// primary := number | variable | ('abs' | 'norm2') '(' expr (',' expr)* ')' | '(' expr ')'
class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

  int arity = 0;

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr left = term();
    while (true) {
      if (accept('+')) {
        left = make(Kind::kAdd, {left, term()});
      } else if (accept('-')) {
        left = make(Kind::kSub, {left, term()});
      } else {
        return left;
      }
    }
  }

  NodePtr term() {
    NodePtr left = unary();
    while (true) {
      if (accept('*')) {
        left = make(Kind::kMul, {left, unary()});
      } else if (accept('/')) {
        left = make(Kind::kDiv, {left, unary()});
      } else {
        return left;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Kind::kNeg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Kind::kPow, {base, unary()});
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) fail("bad number");
      pos_ += static_cast<std::size_t>(end - begin);
      auto n = std::make_shared<Expression::Node>();
      n->number = v;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string name = s_.substr(pos_, end - pos_);
      pos_ = end;
      if (name == "abs" || name == "norm2") {
        if (!accept('(')) fail("expected '(' after " + name);
        std::vector<NodePtr> args{expr()};
        while (accept(',')) args.push_back(expr());
        if (!accept(')')) fail("expected ')'");
        if (name == "abs" && args.size() != 1) fail("abs takes one argument");
        return make(name == "abs" ? Kind::kAbs : Kind::kNorm2, std::move(args));
      }
      return variable(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr variable(const std::string& name) {
    int index = -1;
    if (name == "x" || name == "t") {
      index = 0;
    } else if (name == "y") {
      index = 1;
    } else if (name == "z") {
      index = 2;
    } else if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '8') {
      index = name[1] - '1';
    } else {
      fail("unknown name '" + name + "'");
    }
    arity = std::max(arity, index + 1);
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::kVariable;
    n->variable = index;
    return n;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

double to_number(const std::string& text, const std::string& spec) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0') throw ParseError("bad number '" + text + "' in density '" + spec + "'");
  return v;
}

}  // namespace

Expression Expression::parse(const std::string& text) {
  Parser p(text);
  Expression e;
  e.root_ = p.parse();
  e.text_ = text;
  e.arity_ = p.arity;
  return e;
}

double Expression::operator()(std::span<const double> point) const { return root_->eval(point); }

NamedDensity density_by_name(const std::string& spec, int dim) {
  NamedDensity out;
  out.label = spec;
  if (spec.rfind("expr:", 0) == 0) {
    const Expression e = Expression::parse(spec.substr(5));
    out.rule = [e](std::span<const double> p) { return e(p); };
    return out;
  }
  const auto parts = split(spec, ':');
  const std::string& head = parts[0];
  if (head == "const") {
    if (parts.size() > 2) throw ParseError("const takes at most one value: '" + spec + "'");
    const double c = parts.size() == 2 ? to_number(parts[1], spec) : 1.0;
    if (!(c > 0.0)) throw InvalidArgument("constant density must be positive");
    out.rule = [c](std::span<const double>) { return c; };
    out.radial = RadialDensity{spec, dim, [c](double) { return c; }, {}};
    return out;
  }
  if (head == "linear" && parts.size() == 1) {
    out.rule = [](std::span<const double> p) { return p[0]; };
    return out;
  }
  if (head == "invsq" && parts.size() == 1) {
    out.radial = RadialDensity{spec, dim, [](double r) { return 1.0 / (1.0 + r * r); }, {}};
    out.rule = out.radial->as_function();
    return out;
  }
  if (head == "radial_fk" && (parts.size() == 3 || parts.size() == 4)) {
    const int d = static_cast<int>(to_number(parts[1], spec));
    const double k = to_number(parts[2], spec);
    FkExponent e = FkExponent::kTwoMinusD;
    if (parts.size() == 4) {
      if (parts[3] == "d-2") {
        e = FkExponent::kDMinusTwo;
      } else if (parts[3] != "2-d") {
        throw ParseError("radial_fk exponent must be '2-d' or 'd-2': '" + spec + "'");
      }
    }
    out.radial = fk_density(d, k, e);
    out.radial->label = spec;
    out.rule = out.radial->as_function();
    return out;
  }
  throw ParseError("unknown density '" + spec + "' (const[:c], linear, invsq, radial_fk:d:k[:2-d|d-2], expr:<e>)");
}

Density1D as_density_1d(const NamedDensity& density) {
  auto rule = density.rule;
  return Density1D{density.label, [rule](double t) { return rule(std::span<const double>(&t, 1)); }};
}

Density2D as_density_2d(const NamedDensity& density) {
  auto rule = density.rule;
  return [rule](double x, double y) {
    const double p[2] = {x, y};
    return rule(std::span<const double>(p, 2));
  };
}

}  // namespace dlab
