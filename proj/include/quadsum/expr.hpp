#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadsum::harness {

// Parse failure with the byte offset of the offending token.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, size_t at)
        : std::runtime_error(message + " at offset " + std::to_string(at)), offset(at) {}
    size_t offset;
};

// Domain failure during evaluation (log of a nonpositive value, ...).
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression over: number literals, pi, e, variables x and y, unary minus,
// + - * / ^ (with ^ right associative and binding tighter than unary minus),
// and calls sin, cos, exp, log, abs, min, max.
class FunctionExpr {
  public:
    static FunctionExpr parse(std::string_view src);

    double eval(double x, double y = 0.0) const;
    std::string unparse() const;
    bool uses_y() const;
    const std::string& source() const { return source_; }

    struct Node;
    FunctionExpr(FunctionExpr&&) noexcept;
    FunctionExpr& operator=(FunctionExpr&&) noexcept;
    FunctionExpr(const FunctionExpr&);
    FunctionExpr& operator=(const FunctionExpr&);
    ~FunctionExpr();

    // Structural equality of the syntax trees.
    static bool same_tree(const FunctionExpr& a, const FunctionExpr& b);

  private:
    FunctionExpr() = default;
    std::unique_ptr<Node> root_;
    std::string source_;
};

}  // namespace quadsum::harness
