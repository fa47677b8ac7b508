#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ts/expr.hpp"
#include "ts/series.hpp"

namespace ts
{

struct ReplState {
    unsigned budget = 8;
    std::optional<Transseries> answer;
    // Print series results in the JSON interchange format.
    bool json = false;
    bool quit = false;
};

inline constexpr unsigned max_budget = 64;

// One parsed input line. Plain expressions become `eval`; everything else is a
// ':name args' command whose arguments are kept as raw text.
struct ReplCommand {
    enum class Kind { empty, eval, command };
    Kind kind = Kind::empty;
    std::string name;
    std::string args;
    expr::ExprPtr expr;
};

ReplCommand parse_command(std::string_view line);

struct ReplOutput {
    enum class Status { ok, user_error, internal_error };
    Status status = Status::ok;
    // Empty, or one or more lines without the final newline.
    std::string text;
};

// Never throws: user mistakes come back as "error: ..." with user_error status.
ReplOutput repl_step(ReplState &state, std::string_view line);

std::string repl_help();

} // namespace ts
