#include "whlab/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <utility>

#include "whlab/errors.hpp"

namespace whlab {

namespace {

using Kind = Expression::Op::Kind;

double step(double x) { return x >= 0.0 ? 1.0 : 0.0; }
double fabs_(double x) { return std::abs(x); }
double exp_(double x) { return std::exp(x); }
double log_(double x) { return std::log(x); }
double sqrt_(double x) { return std::sqrt(x); }
double sin_(double x) { return std::sin(x); }
double cos_(double x) { return std::cos(x); }
double tan_(double x) { return std::tan(x); }
double atan_(double x) { return std::atan(x); }
double sinh_(double x) { return std::sinh(x); }
double cosh_(double x) { return std::cosh(x); }
double tanh_(double x) { return std::tanh(x); }
double floor_(double x) { return std::floor(x); }
double pow_(double a, double b) { return std::pow(a, b); }
double min_(double a, double b) { return std::fmin(a, b); }
double max_(double a, double b) { return std::fmax(a, b); }
double atan2_(double a, double b) { return std::atan2(a, b); }

struct UnaryEntry {
  const char* name;
  double (*fn)(double);
};
struct BinaryEntry {
  const char* name;
  double (*fn)(double, double);
};

constexpr UnaryEntry unary_functions[] = {
    {"abs", fabs_}, {"exp", exp_},   {"log", log_},   {"sqrt", sqrt_}, {"sin", sin_},
    {"cos", cos_},  {"tan", tan_},   {"atan", atan_}, {"sinh", sinh_}, {"cosh", cosh_},
    {"tanh", tanh_}, {"floor", floor_}, {"step", step},
};
constexpr BinaryEntry binary_functions[] = {
    {"pow", pow_}, {"min", min_}, {"max", max_}, {"atan2", atan2_},
};

} // namespace

class ExpressionParser {
public:
  ExpressionParser(std::string_view text, const std::vector<std::string>& vars,
                   std::vector<Expression::Op>& out)
      : text_(text), vars_(vars), out_(out) {}

  void parse() {
    expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("expression '" + std::string(text_) + "': " + what + " at position " +
                          std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void emit(Kind k) { out_.push_back({k}); }

  void expr() {
    term();
    for (;;) {
      if (accept('+')) {
        term();
        emit(Kind::add);
      } else if (accept('-')) {
        term();
        emit(Kind::sub);
      } else {
        return;
      }
    }
  }

  void term() {
    unary();
    for (;;) {
      if (accept('*')) {
        unary();
        emit(Kind::mul);
      } else if (accept('/')) {
        unary();
        emit(Kind::div);
      } else {
        return;
      }
    }
  }

  void unary() {
    if (accept('-')) {
      unary();
      emit(Kind::negate);
    } else if (accept('+')) {
      unary();
    } else {
      power();
    }
  }

  void power() {
    primary();
    if (accept('^')) {
      unary();
      emit(Kind::pow);
    }
  }

  void primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      expr();
      if (!accept(')')) fail("expected ')'");
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string rest(text_.substr(pos_));
      char* end = nullptr;
      double v = std::strtod(rest.c_str(), &end);
      if (end == rest.c_str()) fail("malformed number");
      pos_ += std::size_t(end - rest.c_str());
      out_.push_back({Kind::number, v});
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (accept('(')) {
        call(name);
        return;
      }
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) {
          out_.push_back({Kind::variable, 0.0, int(i)});
          return;
        }
      if (name == "pi") {
        out_.push_back({Kind::number, std::numbers::pi});
        return;
      }
      if (name == "e") {
        out_.push_back({Kind::number, std::numbers::e});
        return;
      }
      fail("unknown identifier '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void call(const std::string& name) {
    for (const auto& f : unary_functions)
      if (name == f.name) {
        expr();
        if (!accept(')')) fail("expected ')' after argument of " + name);
        Expression::Op op{Kind::call1};
        op.unary = f.fn;
        out_.push_back(op);
        return;
      }
    for (const auto& f : binary_functions)
      if (name == f.name) {
        expr();
        if (!accept(',')) fail("expected ',' in call to " + name);
        expr();
        if (!accept(')')) fail("expected ')' after arguments of " + name);
        Expression::Op op{Kind::call2};
        op.binary = f.fn;
        out_.push_back(op);
        return;
      }
    fail("unknown function '" + name + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::vector<Expression::Op>& out_;
  std::size_t pos_ = 0;
};

Expression Expression::parse(std::string_view text, std::vector<std::string> variables) {
  Expression e;
  e.text_ = std::string(text);
  e.variables_ = std::move(variables);
  ExpressionParser(e.text_, e.variables_, e.program_).parse();
  return e;
}

double Expression::operator()(std::span<const double> values) const {
  require(values.size() == variables_.size(), "expression variable count mismatch");
  double stack[64];
  int top = 0;
  for (const Op& op : program_) {
    switch (op.kind) {
    case Kind::number: stack[top++] = op.value; break;
    case Kind::variable: stack[top++] = values[std::size_t(op.index)]; break;
    case Kind::negate: stack[top - 1] = -stack[top - 1]; break;
    case Kind::call1: stack[top - 1] = op.unary(stack[top - 1]); break;
    default: {
      double b = stack[--top];
      double& a = stack[top - 1];
      switch (op.kind) {
      case Kind::add: a += b; break;
      case Kind::sub: a -= b; break;
      case Kind::mul: a *= b; break;
      case Kind::div: a /= b; break;
      case Kind::pow: a = std::pow(a, b); break;
      case Kind::call2: a = op.binary(a, b); break;
      default: break;
      }
    }
    }
    if (top >= 64) throw ValidationError("expression '" + text_ + "' is nested too deeply");
  }
  return stack[0];
}

} // namespace whlab
