// susa — command-line front end for the exact sexagesimal engine.
//
// Exit codes: 0 success, 1 domain error (reported on stderr, or in the
// "error" field with --json), 2 usage error.

#include <cctype>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "susa/corpus.hpp"
#include "susa/equations.hpp"
#include "susa/errors.hpp"
#include "susa/exact.hpp"
#include "susa/numtheory.hpp"
#include "susa/scribal.hpp"
#include "susa/sexagesimal.hpp"

using json = nlohmann::ordered_json;
using susa::ExactNumber;

namespace {

// ---------------------------------------------------------------------------
// Expression parser for `susa eval`.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' integer)?
//   atom   := numeral | '(' expr ')' | '-' atom | 'sqrt' '(' expr ')'
//
// A numeral token is a run of digits, commas and semicolons. Tokens without
// ',' or ';' are plain decimal integers; floating numerals (commas, no
// semicolon) are anchored at the --anchor exponent (default 0).

class Parser {
public:
    Parser(std::string_view text, std::optional<int> anchor)
        : text_(text), anchor_(anchor) {}

    ExactNumber parse() {
        ExactNumber v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw susa::Error(susa::ErrorCode::MalformedSeparator,
                              "unexpected trailing input at '" +
                                  std::string(text_.substr(pos_)) + "'");
        return v;
    }

private:
    ExactNumber expr() {
        ExactNumber v = term();
        while (true) {
            skip_ws();
            if (peek() == '+') { ++pos_; v = v + term(); }
            else if (peek() == '-') { ++pos_; v = v - term(); }
            else return v;
        }
    }

    ExactNumber term() {
        ExactNumber v = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') { ++pos_; v = v * factor(); }
            else if (peek() == '/') { ++pos_; v = v / factor(); }
            else return v;
        }
    }

    ExactNumber factor() {
        ExactNumber v = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            bool negexp = false;
            if (peek() == '-') { negexp = true; ++pos_; }
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
            if (digits.empty())
                throw susa::Error(susa::ErrorCode::MalformedSeparator,
                                  "expected integer exponent after '^'");
            long long e = std::stoll(digits);
            v = susa::pow(v, negexp ? -e : e);
        }
        return v;
    }

    ExactNumber atom() {
        skip_ws();
        char c = peek();
        if (c == '-') { ++pos_; return -atom(); }
        if (c == '(') {
            ++pos_;
            ExactNumber v = expr();
            expect(')');
            return v;
        }
        if (text_.substr(pos_).starts_with("sqrt")) {
            pos_ += 4;
            skip_ws();
            expect('(');
            ExactNumber v = expr();
            expect(')');
            return susa::sqrt_exact(v);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == ',' || text_[pos_] == ';'))
                ++pos_;
            std::string_view tok = text_.substr(start, pos_ - start);
            if (tok.find(',') == std::string_view::npos &&
                tok.find(';') == std::string_view::npos)
                return ExactNumber::from_string(std::string(tok));
            if (tok.find(';') == std::string_view::npos && !anchor_)
                throw susa::Error(susa::ErrorCode::MalformedSeparator,
                                  "floating numeral '" + std::string(tok) +
                                      "' requires --anchor");
            return susa::numeral_value(tok, anchor_.value_or(0));
        }
        throw susa::Error(susa::ErrorCode::EmptyInput,
                          pos_ >= text_.size() ? "unexpected end of expression"
                                               : "unexpected character '" +
                                                     std::string(1, c) + "'");
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            throw susa::Error(susa::ErrorCode::MalformedSeparator,
                              std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::optional<int> anchor_;
};

// ---------------------------------------------------------------------------

json value_json(const ExactNumber& v) {
    json out;
    try {
        out["sexagesimal"] = susa::format_sexagesimal(v);
    } catch (const susa::Error&) {
        // irregular denominator: rational field only
    }
    out["rational"] = v.to_string();
    return out;
}

// Prints a value per --format; in plain mode an irregular denominator falls
// back to the rational form with a warning on stderr.
void print_value(const ExactNumber& v, const std::string& format, bool as_json) {
    if (as_json) {
        json out = value_json(v);
        if (!out.contains("sexagesimal") && format != "rat")
            throw susa::Error(susa::ErrorCode::NonTerminating,
                              "denominator " + v.denominator().str() +
                                  " is not 2-3-5-smooth");
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::string sex;
    bool have_sex = true;
    try {
        sex = susa::format_sexagesimal(v);
    } catch (const susa::Error&) {
        have_sex = false;
    }
    if (format == "rat") {
        std::cout << v.to_string() << "\n";
        return;
    }
    if (!have_sex) {
        std::cerr << "warning: no finite sexagesimal form (denominator "
                  << v.denominator().str() << " is not 2-3-5-smooth)\n";
        std::cout << v.to_string() << "\n";
        return;
    }
    if (format == "sex")
        std::cout << sex << "\n";
    else // both
        std::cout << sex << " = " << v.to_string() << "\n";
}

int fail(const susa::Error& e, bool as_json) {
    if (as_json) {
        json out;
        out["error"] = susa::error_name(e.code());
        out["message"] = e.what();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cerr << "error: " << e.what() << "\n";
    }
    return e.code() == susa::ErrorCode::UnknownProblem ? 2 : 1;
}

json bindings_json(const susa::scribal::Bindings& bindings) {
    json out = json::object();
    for (const auto& [name, value] : bindings)
        out[name] = value_json(value);
    return out;
}

void print_bindings(const susa::scribal::Bindings& bindings) {
    for (const auto& [name, value] : bindings) {
        std::cout << "  " << name << " = ";
        try {
            std::cout << susa::format_sexagesimal(value) << " = ";
        } catch (const susa::Error&) {
        }
        std::cout << value.to_string() << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sexagesimal computation engine and tablet-procedure interpreter"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --format/--json appear after the subcommand

    std::string format = "both";
    bool as_json = false;
    app.add_option("--format", format, "Output format: sex, rat, both")
        ->check(CLI::IsMember({"sex", "rat", "both"}));
    app.add_flag("--json", as_json, "Emit deterministic JSON");

    // eval
    std::string eval_text;
    int anchor_exp = 0;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an exact expression");
    eval_cmd->add_option("expression", eval_text, "Infix expression over numerals")->required();
    eval_cmd->add_option("--anchor", anchor_exp,
                         "Power of 60 of the last digit of floating numerals");

    // factor
    std::string factor_text;
    auto* factor_cmd = app.add_subcommand("factor", "Factor a positive integer");
    factor_cmd->add_option("n", factor_text, "Integer to factor")->required();
    factor_cmd->add_option("--anchor", anchor_exp,
                           "Power of 60 of the last digit of floating numerals");

    // recip
    std::string recip_text;
    auto* recip_cmd = app.add_subcommand("recip", "Exact reciprocal of a numeral");
    recip_cmd->add_option("numeral", recip_text, "Value to invert")->required();
    recip_cmd->add_option("--anchor", anchor_exp,
                          "Power of 60 of the last digit of floating numerals");

    // table
    std::uint64_t table_limit = 81;
    auto* table_cmd = app.add_subcommand("table", "Reciprocal table of regular numbers");
    table_cmd->add_option("limit", table_limit, "Upper bound (inclusive)");

    // problem
    auto* problem_cmd = app.add_subcommand("problem", "Work with the tablet corpus");
    problem_cmd->require_subcommand(1);
    auto* list_cmd = problem_cmd->add_subcommand("list", "List problem ids");
    std::string problem_id;
    std::string mode_name = "scribal";
    bool show_trace = false;
    auto* run_cmd = problem_cmd->add_subcommand("run", "Run a problem");
    run_cmd->add_option("id", problem_id, "Problem id")->required();
    run_cmd->add_option("--mode", mode_name, "scribal or modern")
        ->check(CLI::IsMember({"scribal", "modern"}));
    run_cmd->add_flag("--trace", show_trace, "Print the full step trace");
    auto* verify_cmd = problem_cmd->add_subcommand("verify", "Check expected answers against the statement");
    verify_cmd->add_option("id", problem_id, "Problem id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::optional<int> anchor;
    if (eval_cmd->count("--anchor") || factor_cmd->count("--anchor") ||
        recip_cmd->count("--anchor"))
        anchor = anchor_exp;

    try {
        if (*eval_cmd) {
            ExactNumber v = Parser(eval_text, anchor).parse();
            print_value(v, format, as_json);
        } else if (*factor_cmd) {
            ExactNumber n = Parser(factor_text, anchor).parse();
            if (!n.is_integer() || n <= ExactNumber(0))
                throw susa::Error(susa::ErrorCode::NonPositive,
                                  "factor requires a positive integer");
            susa::Factorization f = susa::factor(n.numerator());
            bool regular = susa::is_regular(n.numerator());
            if (as_json) {
                json out;
                out["value"] = n.to_string();
                json fs = json::array();
                for (const auto& [p, e] : f.factors)
                    fs.push_back({{"prime", p.str()}, {"exponent", e}});
                out["factors"] = fs;
                out["regular"] = regular;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << n.to_string() << " = " << f.to_string()
                          << (regular ? "  (regular)" : "  (irregular)") << "\n";
            }
        } else if (*recip_cmd) {
            ExactNumber v = Parser(recip_text, anchor).parse();
            print_value(susa::reciprocal(v), format, as_json);
        } else if (*table_cmd) {
            auto table = susa::reciprocal_table(table_limit);
            if (as_json) {
                json out = json::array();
                for (const auto& [n, r] : table) {
                    json row;
                    row["n"] = n.str();
                    row["igi"] = value_json(r);
                    out.push_back(row);
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& [n, r] : table)
                    std::cout << n.str() << "\t" << susa::format_sexagesimal(r) << "\n";
            }
        } else if (*list_cmd) {
            auto ids = susa::corpus::Corpus::instance().ids();
            if (as_json) {
                json out = json::array();
                for (const auto& id : ids) {
                    const auto& p = susa::corpus::Corpus::instance().problem(id);
                    out.push_back({{"id", id},
                                   {"title", p.title},
                                   {"scribal", p.supports(susa::corpus::Mode::Scribal)},
                                   {"modern", p.supports(susa::corpus::Mode::Modern)}});
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& id : ids) {
                    const auto& p = susa::corpus::Corpus::instance().problem(id);
                    std::cout << id << "\t" << p.title << "\n";
                }
            }
        } else if (*run_cmd) {
            auto mode = mode_name == "modern" ? susa::corpus::Mode::Modern
                                              : susa::corpus::Mode::Scribal;
            susa::corpus::RunResult result = susa::corpus::run_problem(problem_id, mode);
            if (as_json) {
                if (show_trace) {
                    std::cout << susa::scribal::to_json(result.trace);
                } else {
                    json out;
                    out["id"] = problem_id;
                    out["mode"] = mode_name;
                    out["bindings"] = bindings_json(result.bindings);
                    std::cout << out.dump(2) << "\n";
                }
            } else {
                std::cout << problem_id << " (" << mode_name << "):\n";
                if (show_trace) {
                    for (const auto& entry : result.trace.entries) {
                        std::cout << "  ";
                        if (!entry.step.note.line.empty())
                            std::cout << entry.step.note.line << "  ";
                        std::cout << susa::scribal::opcode_name(entry.step.opcode) << "(";
                        for (std::size_t i = 0; i < entry.operand_values.size(); ++i) {
                            if (i) std::cout << ", ";
                            std::cout << entry.operand_values[i].to_string();
                        }
                        std::cout << ") -> " << entry.result.to_string();
                        if (!entry.step.note.sic.empty())
                            std::cout << "  [sic: " << entry.step.note.sic << "]";
                        if (entry.step.note.reconstructed)
                            std::cout << "  [reconstructed]";
                        std::cout << "\n";
                    }
                }
                print_bindings(result.bindings);
            }
        } else if (*verify_cmd) {
            const auto& spec = susa::corpus::Corpus::instance().problem(problem_id);
            susa::corpus::VerifyReport report =
                susa::corpus::verify_solution(spec, spec.expected);
            if (as_json) {
                json out;
                out["id"] = problem_id;
                out["all_satisfied"] = report.all_satisfied;
                json eqs = json::array();
                for (const auto& eq : report.equations)
                    eqs.push_back({{"satisfied", eq.satisfied},
                                   {"lhs", eq.lhs.to_string()},
                                   {"rhs", eq.rhs.to_string()}});
                out["equations"] = eqs;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << problem_id << ": "
                          << (report.all_satisfied ? "all equations satisfied"
                                                   : "VIOLATION") << "\n";
                for (const auto& eq : report.equations)
                    std::cout << "  " << eq.lhs.to_string()
                              << (eq.satisfied ? " == " : " != ")
                              << eq.rhs.to_string() << "\n";
            }
            if (!report.all_satisfied)
                return 1;
        }
    } catch (const susa::Error& e) {
        return fail(e, as_json);
    }
    return 0;
}
