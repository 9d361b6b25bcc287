#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tansurf/errors.hpp"
#include "tansurf/jet.hpp"

namespace tansurf {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Number, Variable, Unary, Binary, Call };
    Kind kind;
    double number = 0.0;
    int var_index = -1;
    std::string name;   // variable or function name
    char op = 0;        // + - * / ^ for Binary, '-' for Unary
    ExprPtr lhs, rhs;
};

/// Parsed scalar expression over a declared list of variable names.
class Expr {
public:
    Expr() = default;
    Expr(ExprPtr root, std::shared_ptr<const std::vector<std::string>> vars)
        : root_(std::move(root)), vars_(std::move(vars)) {}

    bool empty() const { return !root_; }
    const ExprNode& root() const { return *root_; }
    const std::vector<std::string>& variables() const { return *vars_; }

private:
    ExprPtr root_;
    std::shared_ptr<const std::vector<std::string>> vars_;
};

/// Parse with precedence ^ > unary- > * / > + -; ^ right-associative.
/// Throws SyntaxError (position annotated) or UnknownVariable.
Expr parse_expr(const std::string& source, const std::vector<std::string>& variables);

/// IEEE double evaluation; bindings are positional in the declared order.
double eval_scalar(const Expr& e, const std::vector<double>& bindings);

/// Order-K jet of the composite function. All bindings must share order and
/// base point; literals become constant jets of the same order.
Jet eval_jet(const Expr& e, const std::vector<Jet>& bindings, int order, double base);
Jet eval_jet(const Expr& e, const std::vector<Jet>& bindings);

std::string to_string(const Expr& e);

/// True when the expression is the literal 0 (used for sparse Christoffel
/// storage, not a general zero test).
bool is_literal_zero(const Expr& e);

Expr zero_expr(const std::vector<std::string>& variables);
/// Builds 0.5*(a + b) without evaluating anything.
Expr half_sum_expr(const Expr& a, const Expr& b);
/// Polynomial sum c0 + c1*var + c2*var^2 + ... as an expression tree.
Expr poly_expr(const std::vector<double>& coeffs, const std::string& var,
               const std::vector<std::string>& variables);

} // namespace tansurf
