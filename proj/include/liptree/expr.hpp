#pragma once

#include <cctype>
#include <cmath>
#include <iomanip>
#include <cstddef>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liptree/weights.hpp"

namespace liptree {

struct ParseError : std::runtime_error {
    ParseError(std::size_t offset, const std::string& expected, const std::string& got)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " +
                             expected + ", got " + got),
          offset(offset),
          expected(expected) {}
    std::size_t offset;
    std::string expected;
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expression tree for radial symbols over the single variable x = |v|.
/// Calls: log, exp, sqrt, min, max, pow, ell(j, .), Lambda(k, .) where the
/// first argument of ell/Lambda must be an integer literal.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Call };
    Kind kind;
    double number = 0.0;     // Number
    std::string name;        // Call
    int int_arg = 0;         // ell/Lambda index
    std::vector<ExprPtr> args;
};

inline ExprPtr make_number(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Number;
    n->number = v;
    return n;
}

inline ExprPtr make_var() {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Var;
    return n;
}

inline ExprPtr make_unary(ExprNode::Kind k, ExprPtr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->args = {std::move(a)};
    return n;
}

inline ExprPtr make_binary(ExprNode::Kind k, ExprPtr a, ExprPtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->args = {std::move(a), std::move(b)};
    return n;
}

inline ExprPtr make_call(std::string name, std::vector<ExprPtr> args, int int_arg = 0) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Call;
    n->name = std::move(name);
    n->args = std::move(args);
    n->int_arg = int_arg;
    return n;
}

namespace detail {

class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input", current_token());
        return e;
    }

private:
    // expr := term (('+'|'-') term)*
    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                lhs = make_binary(ExprNode::Kind::Add, lhs, parse_term());
            } else if (peek() == '-') {
                ++pos_;
                lhs = make_binary(ExprNode::Kind::Sub, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    // term := factor (('*'|'/') factor)*
    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                lhs = make_binary(ExprNode::Kind::Mul, lhs, parse_factor());
            } else if (peek() == '/') {
                ++pos_;
                lhs = make_binary(ExprNode::Kind::Div, lhs, parse_factor());
            } else {
                return lhs;
            }
        }
    }

    // factor := number | 'x' | ident '(' args ')' | '(' expr ')' | '-' factor
    ExprPtr parse_factor() {
        skip_ws();
        char c = peek();
        if (c == '-') {
            ++pos_;
            return make_unary(ExprNode::Kind::Neg, parse_factor());
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        fail("number, 'x', identifier, '(' or '-'", current_token());
        return nullptr;  // unreachable
    }

    ExprPtr parse_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        // optional exponent
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark;
            }
        }
        try {
            return make_number(std::stod(text_.substr(start, pos_ - start)));
        } catch (const std::exception&) {
            pos_ = start;
            fail("number", text_.substr(start, pos_ - start + 1));
            return nullptr;
        }
    }

    ExprPtr parse_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        skip_ws();
        if (name == "x" && peek() != '(') return make_var();
        if (peek() != '(') {
            pos_ = start;
            fail("'(' after identifier", current_token());
        }
        ++pos_;
        std::vector<ExprPtr> args;
        skip_ws();
        if (peek() != ')') {
            args.push_back(parse_expr());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                args.push_back(parse_expr());
                skip_ws();
            }
        }
        expect(')');
        return finish_call(start, std::move(name), std::move(args));
    }

    ExprPtr finish_call(std::size_t at, std::string name, std::vector<ExprPtr> args) {
        auto require_arity = [&](std::size_t n) {
            if (args.size() != n)
                throw ParseError(at, name + " with " + std::to_string(n) + " argument(s)",
                                 std::to_string(args.size()) + " argument(s)");
        };
        if (name == "log" || name == "exp" || name == "sqrt") {
            require_arity(1);
            return make_call(std::move(name), std::move(args));
        }
        if (name == "min" || name == "max" || name == "pow") {
            require_arity(2);
            return make_call(std::move(name), std::move(args));
        }
        if (name == "ell" || name == "Lambda") {
            require_arity(2);
            const ExprNode& first = *args[0];
            double idx = 0.0;
            if (first.kind == ExprNode::Kind::Number) {
                idx = first.number;
            } else if (first.kind == ExprNode::Kind::Neg &&
                       first.args[0]->kind == ExprNode::Kind::Number) {
                idx = -first.args[0]->number;
            } else {
                throw ParseError(at, "integer literal as first argument of " + name,
                                 "expression");
            }
            if (idx != std::floor(idx) || idx < 0.0)
                throw ParseError(at, "non-negative integer index for " + name,
                                 std::to_string(idx));
            return make_call(std::move(name), {args[1]}, static_cast<int>(idx));
        }
        throw ParseError(at, "known function (log, exp, sqrt, min, max, pow, ell, Lambda)",
                         name);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("'") + c + "'", current_token());
        ++pos_;
    }

    std::string current_token() const {
        if (pos_ >= text_.size()) return "end of input";
        return std::string("'") + text_[pos_] + "'";
    }

    [[noreturn]] void fail(const std::string& expected, const std::string& got) const {
        throw ParseError(pos_, expected, got);
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(const std::string& text) { return detail::Parser{text}.parse(); }

inline double eval_expr(const ExprNode& n, double x) {
    using K = ExprNode::Kind;
    switch (n.kind) {
        case K::Number: return n.number;
        case K::Var: return x;
        case K::Neg: return -eval_expr(*n.args[0], x);
        case K::Add: return eval_expr(*n.args[0], x) + eval_expr(*n.args[1], x);
        case K::Sub: return eval_expr(*n.args[0], x) - eval_expr(*n.args[1], x);
        case K::Mul: return eval_expr(*n.args[0], x) * eval_expr(*n.args[1], x);
        case K::Div: {
            double num = eval_expr(*n.args[0], x);
            double den = eval_expr(*n.args[1], x);
            if (den == 0.0) throw EvalError("division by zero");
            return num / den;
        }
        case K::Call: {
            if (n.name == "log") {
                double a = eval_expr(*n.args[0], x);
                if (a <= 0.0) throw EvalError("log of non-positive value");
                return std::log(a);
            }
            if (n.name == "exp") return std::exp(eval_expr(*n.args[0], x));
            if (n.name == "sqrt") {
                double a = eval_expr(*n.args[0], x);
                if (a < 0.0) throw EvalError("sqrt of negative value");
                return std::sqrt(a);
            }
            if (n.name == "min")
                return std::min(eval_expr(*n.args[0], x), eval_expr(*n.args[1], x));
            if (n.name == "max")
                return std::max(eval_expr(*n.args[0], x), eval_expr(*n.args[1], x));
            if (n.name == "pow") {
                double r = std::pow(eval_expr(*n.args[0], x), eval_expr(*n.args[1], x));
                if (!std::isfinite(r)) throw EvalError("pow out of domain");
                return r;
            }
            if (n.name == "ell") return ell(n.int_arg, eval_expr(*n.args[0], x));
            if (n.name == "Lambda") return lambda_weight(n.int_arg, eval_expr(*n.args[0], x));
            throw EvalError("unknown function: " + n.name);
        }
    }
    throw EvalError("malformed expression node");
}

inline double eval_expr(const ExprPtr& e, double x) { return eval_expr(*e, x); }

inline std::string print_expr(const ExprNode& n) {
    using K = ExprNode::Kind;
    std::ostringstream out;
    switch (n.kind) {
        case K::Number: out << std::setprecision(17) << n.number; break;
        case K::Var: out << 'x'; break;
        case K::Neg: out << "(-" << print_expr(*n.args[0]) << ')'; break;
        case K::Add: out << '(' << print_expr(*n.args[0]) << '+' << print_expr(*n.args[1]) << ')'; break;
        case K::Sub: out << '(' << print_expr(*n.args[0]) << '-' << print_expr(*n.args[1]) << ')'; break;
        case K::Mul: out << '(' << print_expr(*n.args[0]) << '*' << print_expr(*n.args[1]) << ')'; break;
        case K::Div: out << '(' << print_expr(*n.args[0]) << '/' << print_expr(*n.args[1]) << ')'; break;
        case K::Call:
            out << n.name << '(';
            if (n.name == "ell" || n.name == "Lambda") out << n.int_arg << ',';
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i) out << ',';
                out << print_expr(*n.args[i]);
            }
            out << ')';
            break;
    }
    return out.str();
}

inline std::string print_expr(const ExprPtr& e) { return print_expr(*e); }

inline bool expr_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
    if (a.kind == ExprNode::Kind::Number && a.number != b.number) return false;
    if (a.kind == ExprNode::Kind::Call && (a.name != b.name || a.int_arg != b.int_arg)) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!expr_equal(*a.args[i], *b.args[i])) return false;
    return true;
}

}  // namespace liptree
