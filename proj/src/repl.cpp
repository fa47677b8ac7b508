#include "ts/repl.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ts/calculus.hpp"
#include "ts/diffpoly.hpp"
#include "ts/error.hpp"
#include "ts/evaluator.hpp"
#include "ts/explog.hpp"
#include "ts/harness.hpp"
#include "ts/printer.hpp"
#include "ts/series_json.hpp"
#include "ts/surreal.hpp"

namespace ts
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(std::string_view s)
{
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; in >> w;) {
        out.push_back(w);
    }
    return out;
}

unsigned long parse_count(std::string_view s, const char *what)
{
    s = trim(s);
    unsigned long n = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw InvalidArgument(std::string("expected ") + what + ", got '" + std::string(s) + "'");
    }
    return n;
}

std::size_t sequence_index(std::string_view s)
{
    const unsigned long n = parse_count(s, "an index");
    if (n > max_sequence_index) {
        throw InvalidArgument("index must be at most " + std::to_string(max_sequence_index));
    }
    return n;
}

struct Session {
    ReplState &state;

    EvalContext context() const { return {state.budget, state.answer}; }

    Transseries series(std::string_view text) const
    {
        text = trim(text);
        if (text.empty()) {
            throw InvalidArgument("missing expression");
        }
        return evaluate(*expr::parse(text), context());
    }

    DiffPolynomial poly(std::string_view text) const
    {
        return evaluate_poly(*expr::parse(trim(text)), context());
    }

    // "a b" or "a, b": the first expression is the longest parsable prefix.
    std::pair<std::string_view, std::string_view> split_two(std::string_view text) const
    {
        text = trim(text);
        const auto [e, used] = expr::parse_prefix(text);
        std::string_view first = text.substr(0, used);
        while (!first.empty() && (first.back() == ',' || first.back() == ' ')) {
            first.remove_suffix(1);
        }
        const std::string_view second = trim(text.substr(used));
        if (second.empty()) {
            throw InvalidArgument("expected two arguments");
        }
        return {first, second};
    }

    std::string show(const Transseries &f)
    {
        state.answer = f;
        return state.json ? dump_series(f) : print_canonical(f);
    }
};

surreal::SignSeq sign_seq(const std::string &w)
{
    if (w == "()" || w == "0") {
        return {};
    }
    return surreal::SignSeq::parse(w);
}

std::string show_seq(const surreal::SignSeq &s)
{
    return s.empty() ? "()" : s.str();
}

std::string order_symbol(std::strong_ordering o)
{
    return o < 0 ? "<" : o > 0 ? ">" : "=";
}

std::string surreal_command(std::string_view args)
{
    using namespace surreal;
    const auto w = words(args);
    if (w.empty()) {
        throw InvalidArgument("usage: :surreal add|sub|mul|cmp|simpler a b, neg|value a, from q, between L... | R...");
    }
    const std::string &op = w[0];
    auto need = [&](std::size_t n) {
        if (w.size() != n + 1) {
            throw InvalidArgument(":surreal " + op + " takes " + std::to_string(n) + " operand(s)");
        }
    };
    if (op == "add" || op == "sub" || op == "mul" || op == "cmp" || op == "simpler") {
        need(2);
        const SignSeq a = sign_seq(w[1]);
        const SignSeq b = sign_seq(w[2]);
        if (op == "add") {
            return show_seq(add(a, b));
        }
        if (op == "sub") {
            return show_seq(sub(a, b));
        }
        if (op == "mul") {
            return show_seq(mul(a, b));
        }
        if (op == "cmp") {
            return order_symbol(cmp(a, b));
        }
        return simpler(a, b) ? "yes" : "no";
    }
    if (op == "neg") {
        need(1);
        return show_seq(neg(sign_seq(w[1])));
    }
    if (op == "value") {
        need(1);
        return to_dyadic(sign_seq(w[1])).str();
    }
    if (op == "from") {
        need(1);
        return show_seq(from_dyadic(Dyadic::from_rat(Rat::parse(w[1]))));
    }
    if (op == "between") {
        std::vector<SignSeq> left;
        std::vector<SignSeq> right;
        bool bar = false;
        for (std::size_t i = 1; i < w.size(); ++i) {
            if (w[i] == "|") {
                if (bar) {
                    throw InvalidArgument("more than one '|'");
                }
                bar = true;
            } else {
                (bar ? right : left).push_back(sign_seq(w[i]));
            }
        }
        if (!bar) {
            throw InvalidArgument("expected '|' between left and right options");
        }
        return show_seq(simplest_between(left, right));
    }
    throw InvalidArgument("unknown surreal operation '" + op + "'");
}

std::string verdict(const PredVerdict &v)
{
    switch (v.outcome) {
    case PredVerdict::Outcome::yes: return "yes (n = " + std::to_string(v.witness) + ")";
    case PredVerdict::Outcome::no: return "no";
    case PredVerdict::Outcome::unknown: break;
    }
    return "unknown";
}

std::string shape_text(const ShapeVerdict &v)
{
    if (v.is_other()) {
        return "other";
    }
    std::string s = "A(Y)*(Y')^" + std::to_string(*v.yprime_power);
    if (v.quasilinear) {
        s += ", quasilinear";
    }
    return s;
}

std::string newton_text(const NewtonResult &r)
{
    if (r.outcome == NewtonResult::Outcome::stabilized) {
        return print_diffpoly(r.poly);
    }
    return "not stabilized by level " + std::to_string(r.level) + "; last dominant part " + print_diffpoly(r.poly);
}

std::string run_command(Session &s, const std::string &name, std::string_view args)
{
    ReplState &st = s.state;
    if (name == "derive") {
        return s.show(derive(s.series(args)));
    }
    if (name == "exp") {
        return s.show(exp(s.series(args), st.budget));
    }
    if (name == "log") {
        return s.show(log(s.series(args), st.budget));
    }
    if (name == "up") {
        return s.show(upward_shift(s.series(args)));
    }
    if (name == "down") {
        return s.show(downward_shift(s.series(args)));
    }
    if (name == "iota") {
        return s.show(iota(s.series(args), st.budget));
    }
    if (name == "lambda") {
        return s.show(lambda(sequence_index(args)));
    }
    if (name == "omega") {
        return s.show(omega_seq(sequence_index(args)));
    }
    if (name == "cmp") {
        const auto [a, b] = s.split_two(args);
        switch (compare_dominance(s.series(a), s.series(b))) {
        case DomRel::below: return "<<";
        case DomRel::asymp: return "~~";
        case DomRel::above: return ">>";
        }
    }
    if (name == "sign") {
        return std::to_string(sign(s.series(args)));
    }
    if (name == "decompose") {
        const Decomposition d = decompose(s.series(args));
        return "infinite: " + print_canonical(d.infinite) + "\nconstant: " + d.constant.str() +
               "\ninfinitesimal: " + print_canonical(d.infinitesimal);
    }
    if (name == "lambdapred") {
        return verdict(lambda_pred(s.series(args), st.budget));
    }
    if (name == "omegapred") {
        return verdict(omega_pred(s.series(args), st.budget));
    }
    if (name == "newton") {
        const std::string_view text = trim(args);
        const auto [e, used] = expr::parse_prefix(text);
        const std::string_view rest = trim(text.substr(used));
        const std::size_t level = rest.empty() ? st.budget : parse_count(rest, "a level");
        if (level > max_budget) {
            throw InvalidArgument("level must be at most " + std::to_string(max_budget));
        }
        return newton_text(newton_poly(evaluate_poly(*e, s.context()), level));
    }
    if (name == "shape") {
        const NewtonResult r = newton_poly(s.poly(args), st.budget);
        return print_diffpoly(r.poly) + ": " + shape_text(shape_check(r.poly));
    }
    if (name == "conj") {
        const auto [p, phi] = s.split_two(args);
        return print_diffpoly(conjugate(s.poly(p), s.series(phi), st.budget));
    }
    if (name == "peval") {
        const auto [p, f] = s.split_two(args);
        return s.show(eval(s.poly(p), s.series(f)));
    }
    if (name == "poly") {
        return print_diffpoly(s.poly(args));
    }
    if (name == "surreal") {
        return surreal_command(args);
    }
    if (name == "budget") {
        if (trim(args).empty()) {
            return std::to_string(st.budget);
        }
        const unsigned long n = parse_count(args, "a budget");
        if (n < 1 || n > max_budget) {
            throw InvalidArgument("budget must be between 1 and " + std::to_string(max_budget));
        }
        st.budget = static_cast<unsigned>(n);
        return "budget = " + std::to_string(n);
    }
    if (name == "json") {
        const std::string_view v = trim(args);
        if (v != "on" && v != "off") {
            throw InvalidArgument("usage: :json on|off");
        }
        st.json = v == "on";
        return {};
    }
    if (name == "save") {
        if (!st.answer) {
            throw InvalidArgument("nothing to save");
        }
        const std::string path(trim(args));
        std::ofstream out(path);
        if (!out || !(out << dump_series(*st.answer) << '\n')) {
            throw InvalidArgument("cannot write '" + path + "'");
        }
        return "saved " + path;
    }
    if (name == "load") {
        const std::string path(trim(args));
        std::ifstream in(path);
        if (!in) {
            throw InvalidArgument("cannot read '" + path + "'");
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return s.show(parse_series_json(buf.str()));
    }
    if (name == "help") {
        return repl_help();
    }
    if (name == "quit" || name == "q") {
        st.quit = true;
        return {};
    }
    throw InvalidArgument("unknown command ':" + name + "' (try :help)");
}

} // namespace

ReplCommand parse_command(std::string_view line)
{
    line = trim(line);
    ReplCommand cmd;
    if (line.empty() || line.front() == '#') {
        return cmd;
    }
    if (line.front() == ':') {
        const auto space = line.find_first_of(" \t");
        cmd.kind = ReplCommand::Kind::command;
        cmd.name = std::string(line.substr(1, space == std::string_view::npos ? std::string_view::npos : space - 1));
        cmd.args = space == std::string_view::npos ? "" : std::string(trim(line.substr(space)));
        return cmd;
    }
    cmd.kind = ReplCommand::Kind::eval;
    cmd.expr = expr::parse(line);
    return cmd;
}

ReplOutput repl_step(ReplState &state, std::string_view line)
{
    ReplOutput out;
    try {
        const ReplCommand cmd = parse_command(line);
        Session s{state};
        switch (cmd.kind) {
        case ReplCommand::Kind::empty: break;
        case ReplCommand::Kind::eval: out.text = s.show(evaluate(*cmd.expr, s.context())); break;
        case ReplCommand::Kind::command: out.text = run_command(s, cmd.name, cmd.args); break;
        }
    } catch (const Error &e) {
        out.status = ReplOutput::Status::user_error;
        out.text = std::string("error: ") + e.what();
    } catch (const nlohmann::json::exception &e) {
        out.status = ReplOutput::Status::user_error;
        out.text = std::string("error: bad JSON: ") + e.what();
    } catch (const std::exception &e) {
        out.status = ReplOutput::Status::internal_error;
        out.text = std::string("internal error: ") + e.what();
    }
    return out;
}

std::string repl_help()
{
    return R"(expressions   x^2 + 42 + 1/x, exp(x)*log(x), e^(x^2), l2, lambda(3), ans
:derive f     derivative           :exp f / :log f      expand to the budget
:up f         f(e^x)               :down f              f(log x)
:iota f       1/f, 0 at 0          :sign f              -1, 0 or 1
:decompose f  infinite + constant + infinitesimal parts
:cmp f g      << ~~ or >> (separate with ',' when ambiguous)
:lambda n     :omega n             :lambdapred f        :omegapred f
:newton P [n] Newton polynomial, e.g. :newton Y' + Y 4
:shape P      shape of the Newton polynomial
:conj P, phi  rewrite P for the derivation phi*d/dx
:peval P, f   P(f)                 :poly P              normalize P
:surreal add|sub|mul|cmp|simpler a b, neg|value a, from q, between L... | R...
              sign sequences such as ++- ; () is zero
:budget [n]   show or set the expansion budget (1..64)
:json on|off  JSON output          :save file / :load file   store or restore ans
:quit)";
}

} // namespace ts
