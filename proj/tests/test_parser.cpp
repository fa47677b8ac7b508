#include <doctest.h>

#include <random>
#include <string>

#include "support.hpp"
#include "ts/error.hpp"
#include "ts/harness.hpp"

using namespace ts;
using namespace ts::test;

namespace
{

std::string sx(std::string_view text)
{
    return expr::to_sexpr(*expr::parse(text));
}

std::size_t error_offset(std::string_view text)
{
    try {
        expr::parse(text);
    } catch (const SyntaxError &e) {
        return e.position();
    }
    FAIL("expected a syntax error for " << text);
    return 0;
}

// Random text drawn mostly from grammar fragments so that many inputs get deep
// into the parser before failing.
std::string random_input(std::mt19937_64 &rng, std::size_t max_len)
{
    static const char *const pieces[] = {
        "x",  "l1", "l(2)", "Y",      "'",    "ans",   "e^",   "exp(", "log(", "derive(", "up(",   "down(",
        "(",  ")",  "+",    "-",      "*",    "/",     "^",    "2",    "3/4",  "(1/2)",   "(-3/2)", "0",
        ",",  " ",  "O(",   "iota(",  "lambda(", "omega(", "1.5", "l",   "e",    "#",       "\t",   "99999999",
    };
    constexpr std::size_t n_pieces = sizeof(pieces) / sizeof(pieces[0]);
    std::string out;
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    const std::size_t target = len_dist(rng);
    while (out.size() < target) {
        if (rng() % 8 == 0) {
            out.push_back(static_cast<char>(rng() % 256));
        } else {
            out += pieces[rng() % n_pieces];
        }
    }
    if (out.size() > target) {
        out.resize(target);
    }
    return out;
}

} // namespace

TEST_CASE("parser builds the expected trees")
{
    CHECK(sx("x^2 + 42 + 1/x") == "(+ (+ (^ x 2) 42) (/ 1 x))");
    CHECK(sx("exp(x)*log(x)") == "(* (exp x) (log x))");
    CHECK(sx("l(3) + l2") == "(+ l3 l2)");
    CHECK(sx("e^x") == "(exp x)");
    CHECK(sx("e^-x") == "(exp (neg x))");
    CHECK(sx("e^(x^2)") == "(exp (^ x 2))");
    CHECK(sx("x^(1/2)") == "(^ x 1/2)");
    CHECK(sx("x^(-3/2)") == "(^ x -3/2)");
    CHECK(sx("x^-1") == "(^ x -1)");
    CHECK(sx("Y'' + Y'*Y") == "(+ Y'' (* Y' Y))");
    CHECK(sx("lambda(3) - omega(2)") == "(- lambda(3) omega(2))");
    CHECK(sx("derive(up(down(iota(x))))") == "(derive (up (down (iota x))))");
    CHECK(sx("1 + O(1/x)") == "(+ 1 (O (/ 1 x)))");
    CHECK(sx("  x\t*\n2 ") == "(* x 2)");
    CHECK(sx("0.25") == "1/4");
}

TEST_CASE("precedence and associativity")
{
    CHECK(sx("-x^2") == "(neg (^ x 2))");
    CHECK(sx("-x*2") == "(* (neg x) 2)");
    CHECK(sx("1 - x - 2") == "(- (- 1 x) 2)");
    CHECK(sx("1/x/2") == "(/ (/ 1 x) 2)");
    CHECK(sx("1 + 2*x^3") == "(+ 1 (* 2 (^ x 3)))");
    CHECK(sx("--x") == "(neg (neg x))");
    CHECK(sx("(1 + x)^2") == "(^ (+ 1 x) 2)");
}

TEST_CASE("syntax errors carry offsets")
{
    CHECK(error_offset("log(") == 4);
    CHECK(error_offset("") == 0);
    CHECK(error_offset("x +") == 3);
    CHECK(error_offset("x x") == 2);
    CHECK(error_offset("(x") == 2);
    CHECK(error_offset("x^y") == 2);
    CHECK(error_offset("foo(x)") == 0);
    CHECK(error_offset("x # 2") == 2);
    CHECK(error_offset("x^(1/0)") == 5);
    CHECK(error_offset("l(1234567)") == 2);
    try {
        expr::parse("log(");
    } catch (const SyntaxError &e) {
        REQUIRE(!e.expected().empty());
        CHECK(e.expected().front() == "expression");
    }
}

TEST_CASE("nesting depth is limited")
{
    std::string deep(90, '(');
    deep += "x";
    deep += std::string(90, ')');
    CHECK(sx(deep) == "x");
    const std::string too_deep = std::string(4096, '(');
    CHECK_THROWS_AS(expr::parse(too_deep), SyntaxError);
    std::string negs(4000, '-');
    negs += "x";
    CHECK_THROWS_AS(expr::parse(negs), SyntaxError);
}

TEST_CASE("printed series parse back to themselves")
{
    GenConfig cfg;
    cfg.seed = 20240611;
    cfg.max_terms = 5;
    cfg.max_height = 2;
    SeriesGenerator gen(cfg);
    for (int i = 0; i < 1000; ++i) {
        const Transseries f = gen.series();
        const std::string text = print_canonical(f);
        INFO(text);
        CHECK(S(text) == f);
    }
}

TEST_CASE("canonical spellings")
{
    CHECK(print_canonical(S("x^2 - 1")) == "x^2 - 1");
    CHECK(print_canonical(S("lambda(1)")) == "1/x + 1/(x*l1)");
    CHECK(print_canonical(S("3*x/4 - 1/(2*x^2)")) == "3*x/4 - 1/(2*x^2)");
    CHECK(print_canonical(S("e^(x^2) + x^(1/2)")) == "e^(x^2) + x^(1/2)");
    CHECK(print_canonical(S("1/(1 - 1/x)", 3)) == "1 + 1/x + 1/x^2 + 1/x^3 + O(1/x^4)");
    CHECK(print_canonical(S("0")) == "0");
}

TEST_CASE("parser never crashes on random input")
{
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20000; ++i) {
        const std::string text = random_input(rng, i % 10 == 0 ? 4096 : 40);
        try {
            expr::parse(text);
        } catch (const SyntaxError &e) {
            REQUIRE(e.position() <= text.size());
        }
    }
}
