#include "tansurf/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace tansurf {

namespace {

const char* const kFunctions[] = {"sin", "cos", "tan", "exp", "log", "sqrt", "tanh", "abs"};

bool is_function(const std::string& name) {
    for (const char* f : kFunctions)
        if (name == f) return true;
    return false;
}

class Parser {
public:
    Parser(const std::string& src, std::shared_ptr<const std::vector<std::string>> vars)
        : src_(src), vars_(std::move(vars)) {}

    Expr parse() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError("empty expression", pos_);
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos_ < src_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return Expr(std::move(e), vars_);
    }

private:
    ExprPtr parse_sum() {
        ExprPtr lhs = parse_term();
        for (;;) {
            skip_ws();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                char op = src_[pos_++];
                lhs = binary(op, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            skip_ws();
            if (pos_ < src_.size() && (src_[pos_] == '*' || src_[pos_] == '/')) {
                char op = src_[pos_++];
                lhs = binary(op, lhs, parse_unary());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_unary() {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '-') {
            ++pos_;
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::Unary;
            n->op = '-';
            n->lhs = parse_unary();
            return n;
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '^') {
            ++pos_;
            return binary('^', base, parse_unary()); // right-associative
        }
        return base;
    }

    ExprPtr parse_primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_sum();
            skip_ws();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    ExprPtr parse_number() {
        const char* begin = src_.c_str() + pos_;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) throw SyntaxError("malformed number", pos_);
        pos_ += static_cast<std::size_t>(end - begin);
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::Number;
        n->number = v;
        return n;
    }

    ExprPtr parse_name() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        skip_ws();
        if (is_function(name)) {
            expect('(');
            ExprPtr arg = parse_sum();
            skip_ws();
            expect(')');
            auto n = std::make_shared<ExprNode>();
            n->kind = ExprNode::Kind::Call;
            n->name = std::move(name);
            n->lhs = std::move(arg);
            return n;
        }
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            if ((*vars_)[i] == name) {
                auto n = std::make_shared<ExprNode>();
                n->kind = ExprNode::Kind::Variable;
                n->var_index = static_cast<int>(i);
                n->name = std::move(name);
                return n;
            }
        }
        throw UnknownVariable(name);
    }

    static ExprPtr binary(char op, ExprPtr lhs, ExprPtr rhs) {
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::Binary;
        n->op = op;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    void expect(char c) {
        if (pos_ >= src_.size() || src_[pos_] != c)
            throw SyntaxError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    const std::string& src_;
    std::shared_ptr<const std::vector<std::string>> vars_;
    std::size_t pos_ = 0;
};

double eval_scalar_node(const ExprNode& n, const std::vector<double>& b) {
    switch (n.kind) {
        case ExprNode::Kind::Number:
            return n.number;
        case ExprNode::Kind::Variable:
            return b.at(static_cast<std::size_t>(n.var_index));
        case ExprNode::Kind::Unary:
            return -eval_scalar_node(*n.lhs, b);
        case ExprNode::Kind::Binary: {
            const double l = eval_scalar_node(*n.lhs, b);
            const double r = eval_scalar_node(*n.rhs, b);
            switch (n.op) {
                case '+': return l + r;
                case '-': return l - r;
                case '*': return l * r;
                case '/':
                    if (r == 0.0) throw DomainError("division by zero");
                    return l / r;
                case '^': {
                    if (l == 0.0 && r < 0.0)
                        throw DomainError("zero raised to a negative power");
                    if (l < 0.0 && r != std::floor(r))
                        throw DomainError("non-integer power of negative base");
                    return std::pow(l, r);
                }
            }
            throw DomainError("unknown operator");
        }
        case ExprNode::Kind::Call: {
            const double x = eval_scalar_node(*n.lhs, b);
            if (n.name == "sin") return std::sin(x);
            if (n.name == "cos") return std::cos(x);
            if (n.name == "tan") return std::tan(x);
            if (n.name == "exp") return std::exp(x);
            if (n.name == "log") {
                if (!(x > 0.0)) throw DomainError("log of non-positive value");
                return std::log(x);
            }
            if (n.name == "sqrt") {
                if (x < 0.0) throw DomainError("sqrt of negative value");
                return std::sqrt(x);
            }
            if (n.name == "tanh") return std::tanh(x);
            if (n.name == "abs") return std::abs(x);
            throw DomainError("unknown function " + n.name);
        }
    }
    throw DomainError("corrupt expression node");
}

Jet eval_jet_node(const ExprNode& n, const std::vector<Jet>& b, int order, double base) {
    switch (n.kind) {
        case ExprNode::Kind::Number:
            return Jet::constant(order, base, n.number);
        case ExprNode::Kind::Variable:
            return b.at(static_cast<std::size_t>(n.var_index));
        case ExprNode::Kind::Unary:
            return -eval_jet_node(*n.lhs, b, order, base);
        case ExprNode::Kind::Binary: {
            const Jet l = eval_jet_node(*n.lhs, b, order, base);
            const Jet r = eval_jet_node(*n.rhs, b, order, base);
            switch (n.op) {
                case '+': return l + r;
                case '-': return l - r;
                case '*': return l * r;
                case '/': return l / r;
                case '^': return pow(l, r);
            }
            throw DomainError("unknown operator");
        }
        case ExprNode::Kind::Call: {
            const Jet x = eval_jet_node(*n.lhs, b, order, base);
            if (n.name == "sin") return sin(x);
            if (n.name == "cos") return cos(x);
            if (n.name == "tan") return tan(x);
            if (n.name == "exp") return exp(x);
            if (n.name == "log") return log(x);
            if (n.name == "sqrt") return sqrt(x);
            if (n.name == "tanh") return tanh(x);
            if (n.name == "abs") return abs(x);
            throw DomainError("unknown function " + n.name);
        }
    }
    throw DomainError("corrupt expression node");
}

int precedence(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Kind::Binary:
            if (n.op == '+' || n.op == '-') return 1;
            if (n.op == '*' || n.op == '/') return 2;
            return 4; // ^
        case ExprNode::Kind::Unary:
            return 3;
        default:
            return 5;
    }
}

void print_node(const ExprNode& n, std::string& out, int parent_prec, bool rhs_of_parent) {
    const int prec = precedence(n);
    const bool need_parens =
        prec < parent_prec || (prec == parent_prec && rhs_of_parent && n.kind == ExprNode::Kind::Binary);
    if (need_parens) out += '(';
    switch (n.kind) {
        case ExprNode::Kind::Number: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", n.number);
            out += buf;
            break;
        }
        case ExprNode::Kind::Variable:
            out += n.name;
            break;
        case ExprNode::Kind::Unary:
            out += '-';
            print_node(*n.lhs, out, prec, false);
            break;
        case ExprNode::Kind::Binary:
            // ^ is right-associative; its lhs needs parens at equal precedence.
            print_node(*n.lhs, out, n.op == '^' ? prec + 1 : prec, false);
            out += n.op;
            print_node(*n.rhs, out, prec, n.op != '^');
            break;
        case ExprNode::Kind::Call:
            out += n.name;
            out += '(';
            print_node(*n.lhs, out, 0, false);
            out += ')';
            break;
    }
    if (need_parens) out += ')';
}

} // namespace

Expr parse_expr(const std::string& source, const std::vector<std::string>& variables) {
    auto vars = std::make_shared<const std::vector<std::string>>(variables);
    return Parser(source, vars).parse();
}

double eval_scalar(const Expr& e, const std::vector<double>& bindings) {
    if (e.empty()) throw DomainError("evaluating empty expression");
    return eval_scalar_node(e.root(), bindings);
}

Jet eval_jet(const Expr& e, const std::vector<Jet>& bindings, int order, double base) {
    if (e.empty()) throw DomainError("evaluating empty expression");
    for (const Jet& j : bindings)
        if (j.order() != order || j.base() != base)
            throw OrderExhausted("jet bindings must share order and base point");
    return eval_jet_node(e.root(), bindings, order, base);
}

Jet eval_jet(const Expr& e, const std::vector<Jet>& bindings) {
    if (bindings.empty()) throw DomainError("eval_jet needs at least one binding or explicit order");
    return eval_jet(e, bindings, bindings[0].order(), bindings[0].base());
}

std::string to_string(const Expr& e) {
    if (e.empty()) return "";
    std::string out;
    print_node(e.root(), out, 0, false);
    return out;
}

bool is_literal_zero(const Expr& e) {
    return e.empty() || (e.root().kind == ExprNode::Kind::Number && e.root().number == 0.0);
}

Expr zero_expr(const std::vector<std::string>& variables) {
    return parse_expr("0", variables);
}

Expr half_sum_expr(const Expr& a, const Expr& b) {
    return parse_expr("0.5*((" + to_string(a) + ")+(" + to_string(b) + "))", a.variables());
}

Expr poly_expr(const std::vector<double>& coeffs, const std::string& var,
               const std::vector<std::string>& variables) {
    std::string src;
    char buf[64];
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (!src.empty()) src += " + ";
        std::snprintf(buf, sizeof buf, "%.17g", coeffs[d]);
        src += "(";
        src += buf;
        src += ")";
        if (d >= 1) {
            src += "*" + var;
            if (d >= 2) src += "^" + std::to_string(d);
        }
    }
    if (src.empty()) src = "0";
    return parse_expr(src, variables);
}

} // namespace tansurf
