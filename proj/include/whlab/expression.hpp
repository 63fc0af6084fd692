#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace whlab {

/// Real arithmetic expression over a fixed list of named variables, e.g.
/// "2 + 0.5 * step(x)" or "exp(abs(x))". Supports + - * / ^, parentheses,
/// the constants pi and e, the unary functions abs exp log sqrt sin cos tan
/// atan sinh cosh tanh floor step, and the binary functions pow min max atan2.
class Expression {
public:
  static Expression parse(std::string_view text, std::vector<std::string> variables);

  /// Evaluates with `values[i]` bound to the i-th declared variable.
  double operator()(std::span<const double> values) const;

  const std::string& text() const { return text_; }

  struct Op {
    enum class Kind { number, variable, negate, add, sub, mul, div, pow, call1, call2 };
    Kind kind;
    double value = 0.0;
    int index = 0;
    double (*unary)(double) = nullptr;
    double (*binary)(double, double) = nullptr;
  };

private:
  std::string text_;
  std::vector<std::string> variables_;
  std::vector<Op> program_; // postfix
  friend class ExpressionParser;
};

} // namespace whlab
