#include <cctype>
#include <string>
#include <vector>

#include "ts/error.hpp"
#include "ts/expr.hpp"

namespace ts::expr
{

namespace
{

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, prime, end, invalid };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
};

constexpr std::size_t max_depth = 200;
constexpr std::size_t max_index_digits = 6;

class Parser
{
public:
    explicit Parser(std::string_view src) : src_(src) { advance(); }

    ExprPtr sum()
    {
        ExprPtr lhs = product();
        while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
            const BinaryOp op = tok_.kind == Tok::plus ? BinaryOp::add : BinaryOp::sub;
            const std::size_t at = tok_.offset;
            advance();
            ExprPtr rhs = product();
            lhs = make(Binary{op, std::move(lhs), std::move(rhs)}, at);
        }
        return lhs;
    }

    const Token &current() const { return tok_; }
    void advance() { tok_ = lex(); }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        std::string found = tok_.kind == Tok::end ? "end of input" : "'" + std::string(tok_.text) + "'";
        throw SyntaxError(tok_.offset, std::move(expected), found);
    }

private:
    struct DepthGuard {
        explicit DepthGuard(Parser &p) : p_(p)
        {
            if (++p_.depth_ > max_depth) {
                p_.fail({"shallower nesting"});
            }
        }
        ~DepthGuard() { --p_.depth_; }
        DepthGuard(const DepthGuard &) = delete;
        DepthGuard &operator=(const DepthGuard &) = delete;

        Parser &p_;
    };

    template <typename Node>
    static ExprPtr make(Node node, std::size_t offset)
    {
        return std::make_shared<const Expr>(Expr{std::move(node), offset});
    }

    Token lex()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) {
            return {Tok::end, start, {}};
        }
        const char c = src_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            return Token{k, start, src_.substr(start, 1)};
        };
        switch (c) {
        case '+': return single(Tok::plus);
        case '-': return single(Tok::minus);
        case '*': return single(Tok::star);
        case '/': return single(Tok::slash);
        case '^': return single(Tok::caret);
        case '(': return single(Tok::lparen);
        case ')': return single(Tok::rparen);
        case ',': return single(Tok::comma);
        case '\'': return single(Tok::prime);
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
            if (pos_ + 1 < src_.size() && src_[pos_] == '.' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    ++pos_;
                }
            }
            return {Tok::number, start, src_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            return {Tok::ident, start, src_.substr(start, pos_ - start)};
        }
        return single(Tok::invalid);
    }

    void expect(Tok kind, const char *what)
    {
        if (tok_.kind != kind) {
            fail({what});
        }
        advance();
    }

    std::size_t small_integer(std::string_view digits, std::size_t at)
    {
        if (digits.empty() || digits.size() > max_index_digits ||
            digits.find('.') != std::string_view::npos) {
            throw SyntaxError(at, {"integer index below 10^6"}, "'" + std::string(digits) + "'");
        }
        return std::stoul(std::string(digits));
    }

    std::size_t integer_argument()
    {
        expect(Tok::lparen, "'('");
        if (tok_.kind != Tok::number) {
            fail({"integer"});
        }
        const std::size_t n = small_integer(tok_.text, tok_.offset);
        advance();
        expect(Tok::rparen, "')'");
        return n;
    }

    ExprPtr call_argument()
    {
        expect(Tok::lparen, "'('");
        ExprPtr e = sum();
        expect(Tok::rparen, "')'");
        return e;
    }

    ExprPtr product()
    {
        ExprPtr lhs = unary();
        while (tok_.kind == Tok::star || tok_.kind == Tok::slash) {
            const BinaryOp op = tok_.kind == Tok::star ? BinaryOp::mul : BinaryOp::div;
            const std::size_t at = tok_.offset;
            advance();
            ExprPtr rhs = unary();
            lhs = make(Binary{op, std::move(lhs), std::move(rhs)}, at);
        }
        return lhs;
    }

    ExprPtr unary()
    {
        DepthGuard guard(*this);
        if (tok_.kind == Tok::minus) {
            const std::size_t at = tok_.offset;
            advance();
            return make(Unary{UnaryOp::neg, unary()}, at);
        }
        return power();
    }

    ExprPtr power()
    {
        ExprPtr base = primary();
        if (tok_.kind != Tok::caret) {
            return base;
        }
        const std::size_t at = tok_.offset;
        advance();
        return make(Power{std::move(base), exponent()}, at);
    }

    Rat literal(const Token &t)
    {
        return Rat::parse(t.text);
    }

    Rat exponent()
    {
        bool paren = false;
        if (tok_.kind == Tok::lparen) {
            paren = true;
            advance();
        }
        bool negative = false;
        if (tok_.kind == Tok::minus || tok_.kind == Tok::plus) {
            negative = tok_.kind == Tok::minus;
            advance();
        }
        if (tok_.kind != Tok::number) {
            fail({"rational exponent"});
        }
        Rat r = literal(tok_);
        advance();
        if (paren && tok_.kind == Tok::slash) {
            advance();
            if (tok_.kind != Tok::number) {
                fail({"denominator"});
            }
            const Rat den = literal(tok_);
            if (den.is_zero()) {
                fail({"nonzero denominator"});
            }
            advance();
            r /= den;
        }
        if (paren) {
            expect(Tok::rparen, "')'");
        }
        return negative ? -r : r;
    }

    ExprPtr primary()
    {
        DepthGuard guard(*this);
        const Token t = tok_;
        switch (t.kind) {
        case Tok::number:
            advance();
            return make(Number{literal(t)}, t.offset);
        case Tok::lparen: {
            advance();
            ExprPtr e = sum();
            expect(Tok::rparen, "')'");
            return e;
        }
        case Tok::ident:
            advance();
            return identifier(t);
        default:
            fail({"expression"});
        }
    }

    ExprPtr identifier(const Token &t)
    {
        const std::string_view name = t.text;
        if (name == "x") {
            return make(Variable{}, t.offset);
        }
        if (name == "ans") {
            return make(Answer{}, t.offset);
        }
        if (name == "Y") {
            std::size_t order = 0;
            while (tok_.kind == Tok::prime) {
                ++order;
                advance();
            }
            return make(DiffVar{order}, t.offset);
        }
        if (name == "l") {
            return make(IterLog{integer_argument()}, t.offset);
        }
        if (name.size() > 1 && name[0] == 'l' &&
            name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
            return make(IterLog{small_integer(name.substr(1), t.offset)}, t.offset);
        }
        if (name == "e") {
            if (tok_.kind != Tok::caret) {
                fail({"'^' after e"});
            }
            advance();
            if (tok_.kind == Tok::minus) {
                const std::size_t at = tok_.offset;
                advance();
                return make(Unary{UnaryOp::exp, make(Unary{UnaryOp::neg, primary()}, at)}, t.offset);
            }
            return make(Unary{UnaryOp::exp, primary()}, t.offset);
        }
        if (name == "lambda" || name == "omega") {
            return make(Sequence{name == "omega", integer_argument()}, t.offset);
        }
        static const std::pair<std::string_view, UnaryOp> functions[] = {
            {"exp", UnaryOp::exp}, {"log", UnaryOp::log},   {"derive", UnaryOp::derive}, {"up", UnaryOp::up},
            {"down", UnaryOp::down}, {"iota", UnaryOp::iota}, {"O", UnaryOp::big_o},
        };
        for (const auto &[fname, op] : functions) {
            if (name == fname) {
                return make(Unary{op, call_argument()}, t.offset);
            }
        }
        throw SyntaxError(t.offset, {"expression"}, "unknown identifier '" + std::string(name) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
    Token tok_{Tok::end, 0, {}};
};

} // namespace

ExprPtr parse(std::string_view input)
{
    Parser p(input);
    ExprPtr e = p.sum();
    if (p.current().kind != Tok::end) {
        p.fail({"operator", "end of input"});
    }
    return e;
}

PrefixParse parse_prefix(std::string_view input)
{
    Parser p(input);
    ExprPtr e = p.sum();
    if (p.current().kind == Tok::comma) {
        p.advance();
    }
    const std::size_t consumed = p.current().kind == Tok::end ? input.size() : p.current().offset;
    return {std::move(e), consumed};
}

namespace
{

const char *unary_name(UnaryOp op)
{
    switch (op) {
    case UnaryOp::neg: return "neg";
    case UnaryOp::exp: return "exp";
    case UnaryOp::log: return "log";
    case UnaryOp::derive: return "derive";
    case UnaryOp::up: return "up";
    case UnaryOp::down: return "down";
    case UnaryOp::iota: return "iota";
    case UnaryOp::big_o: return "O";
    }
    return "?";
}

const char *binary_name(BinaryOp op)
{
    switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    }
    return "?";
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

std::string to_sexpr(const Expr &e)
{
    return std::visit(
        overloaded{
            [](const Number &n) { return n.value.str(); },
            [](const Variable &) { return std::string("x"); },
            [](const IterLog &l) { return "l" + std::to_string(l.index); },
            [](const DiffVar &d) { return "Y" + std::string(d.order, '\''); },
            [](const Answer &) { return std::string("ans"); },
            [](const Unary &u) { return "(" + std::string(unary_name(u.op)) + " " + to_sexpr(*u.arg) + ")"; },
            [](const Binary &b) {
                return "(" + std::string(binary_name(b.op)) + " " + to_sexpr(*b.lhs) + " " + to_sexpr(*b.rhs) + ")";
            },
            [](const Power &p) { return "(^ " + to_sexpr(*p.base) + " " + p.exponent.str() + ")"; },
            [](const Sequence &s) { return std::string(s.omega ? "omega" : "lambda") + "(" + std::to_string(s.n) + ")"; },
        },
        e.node);
}

bool mentions_diff_var(const Expr &e)
{
    return std::visit(overloaded{
                          [](const DiffVar &) { return true; },
                          [](const Unary &u) { return mentions_diff_var(*u.arg); },
                          [](const Binary &b) { return mentions_diff_var(*b.lhs) || mentions_diff_var(*b.rhs); },
                          [](const Power &p) { return mentions_diff_var(*p.base); },
                          [](const auto &) { return false; },
                      },
                      e.node);
}

} // namespace ts::expr
