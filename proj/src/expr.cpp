#include "quadsum/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

namespace quadsum::harness {

namespace {

enum class Op { Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Exp, Log, Abs, Min, Max };

}  // namespace

struct FunctionExpr::Node {
    enum class Kind { Number, VarX, VarY, Unary, Binary, Call1, Call2 };

    Kind kind;
    double number = 0.0;
    Op op = Op::Neg;
    std::unique_ptr<Node> a, b;

    std::unique_ptr<Node> clone() const {
        auto n = std::make_unique<Node>();
        n->kind = kind;
        n->number = number;
        n->op = op;
        if (a) n->a = a->clone();
        if (b) n->b = b->clone();
        return n;
    }
};

namespace {

using Node = FunctionExpr::Node;

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };
    Kind kind;
    size_t offset;
    double number = 0.0;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
        current_.offset = pos_;
        if (pos_ >= src_.size()) {
            current_.kind = Token::Kind::End;
            return;
        }
        char c = src_[pos_];
        if ((c >= '0' && c <= '9') || c == '.') {
            const char* begin = src_.data() + pos_;
            const char* end = src_.data() + src_.size();
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc{}) throw ParseError("malformed number", pos_);
            current_.kind = Token::Kind::Number;
            current_.number = value;
            pos_ += ptr - begin;
            return;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   ((src_[pos_] >= 'a' && src_[pos_] <= 'z') ||
                    (src_[pos_] >= 'A' && src_[pos_] <= 'Z') ||
                    (src_[pos_] >= '0' && src_[pos_] <= '9') || src_[pos_] == '_')) {
                ++pos_;
            }
            current_.kind = Token::Kind::Ident;
            current_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        ++pos_;
        switch (c) {
            case '+': current_.kind = Token::Kind::Plus; return;
            case '-': current_.kind = Token::Kind::Minus; return;
            case '*': current_.kind = Token::Kind::Star; return;
            case '/': current_.kind = Token::Kind::Slash; return;
            case '^': current_.kind = Token::Kind::Caret; return;
            case '(': current_.kind = Token::Kind::LParen; return;
            case ')': current_.kind = Token::Kind::RParen; return;
            case ',': current_.kind = Token::Kind::Comma; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", pos_ - 1);
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    Token current_;
};

std::unique_ptr<Node> make_number(double v) {
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::Number;
    n->number = v;
    return n;
}

std::unique_ptr<Node> make_unary(std::unique_ptr<Node> a) {
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::Unary;
    n->op = Op::Neg;
    n->a = std::move(a);
    return n;
}

std::unique_ptr<Node> make_binary(Op op, std::unique_ptr<Node> a, std::unique_ptr<Node> b) {
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::Binary;
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : lex_(src) {}

    std::unique_ptr<Node> run() {
        auto node = expr();
        if (lex_.peek().kind != Token::Kind::End) {
            throw ParseError("trailing input", lex_.peek().offset);
        }
        return node;
    }

  private:
    std::unique_ptr<Node> expr() {
        auto node = term();
        while (true) {
            auto kind = lex_.peek().kind;
            if (kind == Token::Kind::Plus) {
                lex_.take();
                node = make_binary(Op::Add, std::move(node), term());
            } else if (kind == Token::Kind::Minus) {
                lex_.take();
                node = make_binary(Op::Sub, std::move(node), term());
            } else {
                return node;
            }
        }
    }

    std::unique_ptr<Node> term() {
        auto node = unary();
        while (true) {
            auto kind = lex_.peek().kind;
            if (kind == Token::Kind::Star) {
                lex_.take();
                node = make_binary(Op::Mul, std::move(node), unary());
            } else if (kind == Token::Kind::Slash) {
                lex_.take();
                node = make_binary(Op::Div, std::move(node), unary());
            } else {
                return node;
            }
        }
    }

    std::unique_ptr<Node> unary() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            return make_unary(unary());
        }
        return power();
    }

    // '^' is right associative and binds tighter than unary minus.
    std::unique_ptr<Node> power() {
        auto base = primary();
        if (lex_.peek().kind == Token::Kind::Caret) {
            lex_.take();
            return make_binary(Op::Pow, std::move(base), unary());
        }
        return base;
    }

    std::unique_ptr<Node> primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Number:
                return make_number(t.number);
            case Token::Kind::LParen: {
                auto node = expr();
                expect(Token::Kind::RParen, "expected ')'");
                return node;
            }
            case Token::Kind::Ident:
                return ident(t);
            default:
                throw ParseError("expected a value", t.offset);
        }
    }

    std::unique_ptr<Node> ident(const Token& t) {
        if (t.text == "x") {
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::VarX;
            return n;
        }
        if (t.text == "y") {
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::VarY;
            return n;
        }
        if (t.text == "pi") return make_number(std::numbers::pi);
        if (t.text == "e") return make_number(std::numbers::e);

        static const std::array<std::pair<const char*, Op>, 5> unary_calls{
            {{"sin", Op::Sin}, {"cos", Op::Cos}, {"exp", Op::Exp}, {"log", Op::Log},
             {"abs", Op::Abs}}};
        for (const auto& [name, op] : unary_calls) {
            if (t.text == name) {
                expect(Token::Kind::LParen, "expected '(' after function name");
                auto a = expr();
                expect(Token::Kind::RParen, "expected ')'");
                auto n = std::make_unique<Node>();
                n->kind = Node::Kind::Call1;
                n->op = op;
                n->a = std::move(a);
                return n;
            }
        }
        if (t.text == "min" || t.text == "max") {
            expect(Token::Kind::LParen, "expected '(' after function name");
            auto a = expr();
            expect(Token::Kind::Comma, "expected ','");
            auto b = expr();
            expect(Token::Kind::RParen, "expected ')'");
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::Call2;
            n->op = t.text == "min" ? Op::Min : Op::Max;
            n->a = std::move(a);
            n->b = std::move(b);
            return n;
        }
        throw ParseError("unknown identifier '" + t.text + "'", t.offset);
    }

    void expect(Token::Kind kind, const char* message) {
        Token t = lex_.take();
        if (t.kind != kind) throw ParseError(message, t.offset);
    }

    Lexer lex_;
};

double eval_node(const Node& n, double x, double y) {
    switch (n.kind) {
        case Node::Kind::Number: return n.number;
        case Node::Kind::VarX: return x;
        case Node::Kind::VarY: return y;
        case Node::Kind::Unary: return -eval_node(*n.a, x, y);
        case Node::Kind::Binary: {
            double a = eval_node(*n.a, x, y);
            double b = eval_node(*n.b, x, y);
            switch (n.op) {
                case Op::Add: return a + b;
                case Op::Sub: return a - b;
                case Op::Mul: return a * b;
                case Op::Div: return a / b;
                case Op::Pow: return std::pow(a, b);
                default: break;
            }
            return 0.0;
        }
        case Node::Kind::Call1: {
            double a = eval_node(*n.a, x, y);
            switch (n.op) {
                case Op::Sin: return std::sin(a);
                case Op::Cos: return std::cos(a);
                case Op::Exp: return std::exp(a);
                case Op::Log:
                    if (a <= 0.0) throw EvalError("log of nonpositive value");
                    return std::log(a);
                case Op::Abs: return std::abs(a);
                default: break;
            }
            return 0.0;
        }
        case Node::Kind::Call2: {
            double a = eval_node(*n.a, x, y);
            double b = eval_node(*n.b, x, y);
            return n.op == Op::Min ? std::min(a, b) : std::max(a, b);
        }
    }
    return 0.0;
}

std::string format_number(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void unparse_node(const Node& n, std::string& out) {
    switch (n.kind) {
        case Node::Kind::Number:
            out += format_number(n.number);
            return;
        case Node::Kind::VarX: out += 'x'; return;
        case Node::Kind::VarY: out += 'y'; return;
        case Node::Kind::Unary:
            out += "(-";
            unparse_node(*n.a, out);
            out += ')';
            return;
        case Node::Kind::Binary: {
            out += '(';
            unparse_node(*n.a, out);
            switch (n.op) {
                case Op::Add: out += '+'; break;
                case Op::Sub: out += '-'; break;
                case Op::Mul: out += '*'; break;
                case Op::Div: out += '/'; break;
                case Op::Pow: out += '^'; break;
                default: break;
            }
            unparse_node(*n.b, out);
            out += ')';
            return;
        }
        case Node::Kind::Call1:
        case Node::Kind::Call2: {
            switch (n.op) {
                case Op::Sin: out += "sin"; break;
                case Op::Cos: out += "cos"; break;
                case Op::Exp: out += "exp"; break;
                case Op::Log: out += "log"; break;
                case Op::Abs: out += "abs"; break;
                case Op::Min: out += "min"; break;
                case Op::Max: out += "max"; break;
                default: break;
            }
            out += '(';
            unparse_node(*n.a, out);
            if (n.kind == Node::Kind::Call2) {
                out += ',';
                unparse_node(*n.b, out);
            }
            out += ')';
            return;
        }
    }
}

bool uses_y_node(const Node& n) {
    if (n.kind == Node::Kind::VarY) return true;
    if (n.a && uses_y_node(*n.a)) return true;
    if (n.b && uses_y_node(*n.b)) return true;
    return false;
}

bool same_node(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.op != b.op) return false;
    if (a.kind == Node::Kind::Number && a.number != b.number) return false;
    if (static_cast<bool>(a.a) != static_cast<bool>(b.a)) return false;
    if (static_cast<bool>(a.b) != static_cast<bool>(b.b)) return false;
    if (a.a && !same_node(*a.a, *b.a)) return false;
    if (a.b && !same_node(*a.b, *b.b)) return false;
    return true;
}

}  // namespace

FunctionExpr FunctionExpr::parse(std::string_view src) {
    FunctionExpr e;
    e.root_ = Parser(src).run();
    e.source_ = std::string(src);
    return e;
}

double FunctionExpr::eval(double x, double y) const { return eval_node(*root_, x, y); }

std::string FunctionExpr::unparse() const {
    std::string out;
    unparse_node(*root_, out);
    return out;
}

bool FunctionExpr::uses_y() const { return uses_y_node(*root_); }

bool FunctionExpr::same_tree(const FunctionExpr& a, const FunctionExpr& b) {
    return same_node(*a.root_, *b.root_);
}

FunctionExpr::FunctionExpr(FunctionExpr&&) noexcept = default;
FunctionExpr& FunctionExpr::operator=(FunctionExpr&&) noexcept = default;
FunctionExpr::~FunctionExpr() = default;

FunctionExpr::FunctionExpr(const FunctionExpr& other)
    : root_(other.root_ ? other.root_->clone() : nullptr), source_(other.source_) {}

FunctionExpr& FunctionExpr::operator=(const FunctionExpr& other) {
    if (this != &other) {
        root_ = other.root_ ? other.root_->clone() : nullptr;
        source_ = other.source_;
    }
    return *this;
}

}  // namespace quadsum::harness
