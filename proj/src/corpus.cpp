#include "susa/corpus.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "susa/numtheory.hpp"
#include "susa/sexagesimal.hpp"

#ifndef SUSA_DATA_DIR
#define SUSA_DATA_DIR "data"
#endif

namespace susa::corpus {

using json = nlohmann::ordered_json;

ExactNumber eval(const Expr& e, const NamedValues& bindings) {
    switch (e.kind) {
        case Expr::Kind::Const:
            return e.value;
        case Expr::Kind::Var: {
            auto it = bindings.find(e.name);
            if (it == bindings.end())
                throw Error(ErrorCode::MissingBinding,
                            "unknown '" + e.name + "' is not bound");
            return it->second;
        }
        case Expr::Kind::Add: {
            ExactNumber acc(0);
            for (const Expr& c : e.children)
                acc += eval(c, bindings);
            return acc;
        }
        case Expr::Kind::Sub:
            return eval(e.children[0], bindings) - eval(e.children[1], bindings);
        case Expr::Kind::Mul: {
            ExactNumber acc(1);
            for (const Expr& c : e.children)
                acc *= eval(c, bindings);
            return acc;
        }
        case Expr::Kind::Pow:
            return pow(eval(e.children[0], bindings), e.exponent);
        case Expr::Kind::Sqrt:
            return sqrt_exact(eval(e.children[0], bindings));
    }
    throw Error(ErrorCode::BadData, "corrupt expression node");
}

bool ProblemSpec::supports(Mode mode) const {
    if (mode == Mode::Scribal)
        return !procedure.steps.empty();
    return !modern_route.empty();
}

namespace {

ExactNumber parse_value(const json& j) {
    if (j.is_number_integer())
        return ExactNumber(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.find(';') != std::string::npos)
            return numeral_value(s);
        return ExactNumber::from_string(s);
    }
    if (j.is_object() && j.contains("digits")) {
        Numeral n = parse_numeral(j.at("digits").get<std::string>());
        return anchor(std::get<FloatingNumeral>(n), j.value("anchor", 0));
    }
    throw Error(ErrorCode::BadData, "unrecognized number literal: " + j.dump());
}

Expr parse_expr(const json& j) {
    Expr e;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "const") {
        e.kind = Expr::Kind::Const;
        e.value = parse_value(j.at("value"));
    } else if (kind == "var") {
        e.kind = Expr::Kind::Var;
        e.name = j.at("name").get<std::string>();
    } else if (kind == "add" || kind == "sub" || kind == "mul") {
        e.kind = kind == "add" ? Expr::Kind::Add
                               : kind == "sub" ? Expr::Kind::Sub : Expr::Kind::Mul;
        for (const json& c : j.at("args"))
            e.children.push_back(parse_expr(c));
        if (e.children.size() < 2 ||
            (e.kind == Expr::Kind::Sub && e.children.size() != 2))
            throw Error(ErrorCode::BadData, "wrong arity for '" + kind + "'");
    } else if (kind == "pow") {
        e.kind = Expr::Kind::Pow;
        e.children.push_back(parse_expr(j.at("base")));
        e.exponent = j.at("exponent").get<long long>();
    } else if (kind == "sqrt") {
        e.kind = Expr::Kind::Sqrt;
        e.children.push_back(parse_expr(j.at("arg")));
    } else {
        throw Error(ErrorCode::BadData, "unknown expression node kind '" + kind + "'");
    }
    return e;
}

scribal::Operand parse_operand(const json& j) {
    if (j.contains("lit"))
        return scribal::LiteralOperand{parse_value(j.at("lit"))};
    if (j.contains("step"))
        return scribal::StepRefOperand{j.at("step").get<std::size_t>()};
    if (j.contains("input"))
        return scribal::InputOperand{j.at("input").get<std::string>()};
    throw Error(ErrorCode::BadData, "unrecognized operand: " + j.dump());
}

scribal::Procedure parse_procedure(const json& j) {
    scribal::Procedure proc;
    proc.name = j.value("name", "");
    if (j.contains("inputs"))
        for (const json& in : j.at("inputs"))
            proc.inputs.push_back(in.get<std::string>());
    for (const json& js : j.at("steps")) {
        scribal::Step step;
        step.opcode = scribal::opcode_from_name(js.at("op").get<std::string>());
        if (js.contains("args"))
            for (const json& a : js.at("args"))
                step.operands.push_back(parse_operand(a));
        if (js.contains("reg"))
            step.target = js.at("reg").get<std::string>();
        if (js.contains("bind"))
            step.target = js.at("bind").get<std::string>();
        step.note.line = js.value("line", "");
        step.note.sic = js.value("sic", "");
        step.note.reconstructed = js.value("reconstructed", false);
        proc.steps.push_back(std::move(step));
    }
    if (j.contains("outputs"))
        for (const json& out : j.at("outputs"))
            proc.outputs.emplace_back(out.at(0).get<std::string>(),
                                      out.at(1).get<std::size_t>());
    proc.notes = j.value("notes", "");
    return proc;
}

scribal::Bindings parse_bindings(const json& j) {
    scribal::Bindings bindings;
    for (const auto& [name, value] : j.items())
        bindings.emplace_back(name, parse_value(value));
    return bindings;
}

ProblemSpec parse_problem(const json& j) {
    if (j.value("version", 0) != 1)
        throw Error(ErrorCode::BadData, "unsupported problem file version");

    ProblemSpec spec;
    spec.id = j.at("id").get<std::string>();
    spec.title = j.value("title", "");

    for (const json& eq : j.at("statement"))
        spec.statement.push_back(Equation{parse_expr(eq.at("lhs")),
                                          parse_expr(eq.at("rhs"))});
    for (const json& u : j.at("unknowns")) {
        if (u.is_string())
            spec.unknowns.push_back({u.get<std::string>(), true});
        else
            spec.unknowns.push_back({u.at("name").get<std::string>(),
                                     u.value("nonnegative", true)});
    }

    if (j.contains("procedure")) {
        spec.procedure = parse_procedure(j.at("procedure"));
        spec.inputs = parse_bindings(j.at("inputs"));
    }

    if (j.contains("modern")) {
        const json& m = j.at("modern");
        spec.modern_route = m.at("route").get<std::string>();
        if (m.contains("quadratic")) {
            const json& q = m.at("quadratic");
            spec.quadratic = {parse_value(q.at("a")), parse_value(q.at("b")),
                              parse_value(q.at("c"))};
        }
        if (m.contains("derive"))
            for (const auto& [name, expr] : m.at("derive").items())
                spec.derive.emplace_back(name, parse_expr(expr));
        if (m.contains("matrix")) {
            for (const json& row : m.at("matrix")) {
                std::vector<ExactNumber> r;
                for (const json& v : row)
                    r.push_back(parse_value(v));
                spec.linear.coefficients.push_back(std::move(r));
            }
            for (const json& v : m.at("rhs"))
                spec.linear.rhs.push_back(parse_value(v));
        }
        if (m.contains("cubic"))
            for (const json& v : m.at("cubic"))
                spec.cubic.push_back(parse_value(v));
    }

    spec.expected = parse_bindings(j.at("expected"));
    if (j.contains("text_errors"))
        for (const json& te : j.at("text_errors"))
            spec.text_errors.push_back({te.at("line").get<std::string>(),
                                        te.at("printed").get<std::string>(),
                                        te.at("corrected").get<std::string>()});
    spec.notes = j.value("notes", "");
    return spec;
}

} // namespace

Corpus::Corpus(const std::string& data_dir) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(data_dir) / "problems";
    if (!fs::is_directory(dir))
        throw Error(ErrorCode::BadData,
                    "problem data directory not found: " + dir.string());
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".json")
            continue;
        std::ifstream in(entry.path());
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw Error(ErrorCode::BadData,
                        entry.path().string() + ": " + e.what());
        }
        ProblemSpec spec = parse_problem(j);
        problems_.emplace(spec.id, std::move(spec));
    }
    if (problems_.empty())
        throw Error(ErrorCode::BadData, "no problem files in " + dir.string());
}

const Corpus& Corpus::instance() {
    static Corpus corpus([] {
        if (const char* env = std::getenv("SUSA_DATA_DIR"))
            return std::string(env);
        return std::string(SUSA_DATA_DIR);
    }());
    return corpus;
}

std::vector<std::string> Corpus::ids() const {
    std::vector<std::string> out;
    for (const auto& [id, _] : problems_)
        out.push_back(id);
    return out;
}

const ProblemSpec& Corpus::problem(const std::string& id) const {
    auto it = problems_.find(id);
    if (it == problems_.end())
        throw Error(ErrorCode::UnknownProblem, "unknown problem '" + id + "'");
    return it->second;
}

namespace {

NamedValues as_map(const scribal::Bindings& bindings) {
    NamedValues map;
    for (const auto& [n, v] : bindings)
        map[n] = v;
    return map;
}

void append_put(scribal::Trace& trace, const std::string& name,
                const ExactNumber& value, const std::string& label = "") {
    scribal::Step step;
    step.opcode = scribal::Opcode::Put;
    step.operands = {scribal::LiteralOperand{value}};
    step.target = name;
    step.note.line = label;
    trace.entries.push_back(
        scribal::TraceEntry{trace.entries.size(), std::move(step), {value}, value});
    trace.outputs.emplace_back(name, value);
}

bool admissible(const ProblemSpec& spec, const NamedValues& values) {
    for (const Unknown& u : spec.unknowns) {
        auto it = values.find(u.name);
        if (it != values.end() && u.nonnegative && it->second.is_negative())
            return false;
    }
    return true;
}

// Shared by the substitution and octic-reduction routes: solve the stored
// quadratic, derive every unknown from each root, keep the admissible one.
RunResult run_quadratic_route(const ProblemSpec& spec) {
    auto solution =
        equations::complete_square(spec.quadratic, equations::SolveMode::Modern);
    if (solution.roots.empty())
        throw Error(ErrorCode::NoRationalRoot,
                    "no rational root for " + spec.id + ": " + solution.diagnostic);

    std::vector<NamedValues> candidates;
    for (const equations::Root& root : solution.roots) {
        NamedValues values;
        values["root"] = root.value;
        bool ok = true;
        try {
            for (const auto& [name, expr] : spec.derive)
                values[name] = eval(expr, values);
        } catch (const Error&) {
            ok = false; // e.g. a sqrt that only exists for the admissible root
        }
        if (ok && admissible(spec, values))
            candidates.push_back(std::move(values));
    }
    if (candidates.size() != 1)
        throw Error(ErrorCode::BadData,
                    spec.id + ": expected exactly one admissible root, found " +
                        std::to_string(candidates.size()));

    RunResult result;
    result.trace = solution.trace;
    result.trace.procedure = spec.id + ".modern";
    for (const auto& [name, expr] : spec.derive) {
        result.bindings.emplace_back(name, candidates[0].at(name));
        append_put(result.trace, name, candidates[0].at(name));
    }
    return result;
}

RunResult run_symmetric_route(const ProblemSpec& spec) {
    // First two derive entries give u and v in terms of nothing; the
    // remaining ones are evaluated over the solved pair.
    NamedValues values;
    auto it = spec.derive.begin();
    if (spec.derive.size() < 2)
        throw Error(ErrorCode::BadData, spec.id + ": symmetric route needs u, v");
    values["u"] = eval(it->second, values);
    ++it;
    values["v"] = eval(it->second, values);
    ++it;

    auto [x, y] = equations::solve_symmetric(values["u"], values["v"]);
    values["x"] = x;
    values["y"] = y;

    RunResult result;
    result.trace.procedure = spec.id + ".modern";
    result.bindings.emplace_back("x", x);
    result.bindings.emplace_back("y", y);
    append_put(result.trace, "x", x);
    append_put(result.trace, "y", y);
    for (; it != spec.derive.end(); ++it) {
        ExactNumber v = eval(it->second, values);
        values[it->first] = v;
        result.bindings.emplace_back(it->first, v);
        append_put(result.trace, it->first, v);
    }
    return result;
}

RunResult run_gaussian_route(const ProblemSpec& spec) {
    RunResult result;
    result.solution_set = equations::gaussian_eliminate(spec.linear);
    result.trace.procedure = spec.id + ".modern";
    if (result.solution_set.kind == equations::SolutionKind::Inconsistent)
        return result;
    for (std::size_t i = 0; i < spec.unknowns.size(); ++i) {
        const ExactNumber& v = result.solution_set.particular[i];
        result.bindings.emplace_back(spec.unknowns[i].name, v);
        append_put(result.trace, spec.unknowns[i].name, v);
    }
    return result;
}

RunResult run_change_of_variables_route(const ProblemSpec& spec) {
    std::vector<ExactNumber> roots = equations::rational_roots(spec.cubic);
    if (roots.size() != 1)
        throw Error(ErrorCode::BadData,
                    spec.id + ": expected a single rational root of the cubic");
    NamedValues values;
    values["u"] = roots[0];
    for (const auto& [name, expr] : spec.derive)
        values[name] = eval(expr, values);

    auto [x, y] = equations::solve_symmetric(values.at("u"), values.at("v"));
    RunResult result;
    result.trace.procedure = spec.id + ".modern";
    result.bindings.emplace_back("u", values.at("u"));
    result.bindings.emplace_back("v", values.at("v"));
    result.bindings.emplace_back("x", x);
    result.bindings.emplace_back("y", y);
    for (const auto& [n, v] : result.bindings)
        append_put(result.trace, n, v);
    return result;
}

RunResult run_rational_roots_route(const ProblemSpec& spec) {
    std::vector<ExactNumber> roots = equations::rational_roots(spec.cubic);
    if (roots.size() != 1)
        throw Error(ErrorCode::BadData,
                    spec.id + ": expected a single rational root");
    RunResult result;
    result.trace.procedure = spec.id + ".modern";
    result.bindings.emplace_back(spec.unknowns.at(0).name, roots[0]);
    append_put(result.trace, spec.unknowns.at(0).name, roots[0]);
    return result;
}

// The worked elimination example: z + xy + z^2 = 3, y^2 - xz + z^2 = 1,
// xy + z = 2. Substituting xy = 2 - z gives z^2 = 1; each rational branch
// reduces to a cubic in y. The irrational branch surfaces no rational root
// and is dropped.
RunResult run_elimination_route(const ProblemSpec& spec) {
    RunResult result;
    result.trace.procedure = spec.id + ".modern";

    std::vector<ExactNumber> z_roots = equations::rational_roots(
        {ExactNumber(1), ExactNumber(0), ExactNumber(-1)}); // z^2 - 1
    std::vector<NamedValues> solutions;
    for (const ExactNumber& z : z_roots) {
        ExactNumber q = ExactNumber(2) - z; // xy
        // y^2 - xz + z^2 = 1 with x = q/y  =>  y^3 + (z^2 - 1)y - zq = 0.
        std::vector<ExactNumber> y_roots = equations::rational_roots(
            {ExactNumber(1), ExactNumber(0), square(z) - ExactNumber(1),
             -(z * q)});
        for (const ExactNumber& y : y_roots) {
            if (y.is_zero())
                continue;
            NamedValues v{{"x", q / y}, {"y", y}, {"z", z}};
            bool satisfied = true;
            for (const Equation& eq : spec.statement)
                if (eval(eq.lhs, v) != eval(eq.rhs, v))
                    satisfied = false;
            if (satisfied)
                solutions.push_back(std::move(v));
        }
    }
    if (solutions.size() != 1)
        throw Error(ErrorCode::BadData,
                    spec.id + ": expected one rational solution, found " +
                        std::to_string(solutions.size()));
    for (const std::string name : {"x", "y", "z"}) {
        result.bindings.emplace_back(name, solutions[0].at(name));
        append_put(result.trace, name, solutions[0].at(name));
    }
    return result;
}

} // namespace

RunResult run_problem(const std::string& id, Mode mode) {
    const ProblemSpec& spec = Corpus::instance().problem(id);
    if (!spec.supports(mode))
        throw Error(ErrorCode::UnsupportedMode,
                    id + " does not support " +
                        (mode == Mode::Scribal ? std::string("scribal")
                                               : std::string("modern")) +
                        " mode");

    if (mode == Mode::Scribal) {
        RunResult result;
        result.trace = scribal::execute(spec.procedure, spec.inputs);
        result.bindings = result.trace.outputs;
        return result;
    }

    if (spec.modern_route == "substitution" || spec.modern_route == "octic-reduction")
        return run_quadratic_route(spec);
    if (spec.modern_route == "symmetric")
        return run_symmetric_route(spec);
    if (spec.modern_route == "gaussian")
        return run_gaussian_route(spec);
    if (spec.modern_route == "change-of-variables")
        return run_change_of_variables_route(spec);
    if (spec.modern_route == "rational-roots")
        return run_rational_roots_route(spec);
    if (spec.modern_route == "elimination")
        return run_elimination_route(spec);
    throw Error(ErrorCode::BadData,
                spec.id + ": unknown modern route '" + spec.modern_route + "'");
}

VerifyReport verify_solution(const ProblemSpec& spec,
                             const scribal::Bindings& bindings) {
    NamedValues values = as_map(bindings);
    for (const Unknown& u : spec.unknowns)
        if (!values.count(u.name))
            throw Error(ErrorCode::MissingBinding,
                        "no binding for unknown '" + u.name + "'");

    VerifyReport report;
    for (const Equation& eq : spec.statement) {
        EquationReport er;
        try {
            er.lhs = eval(eq.lhs, values);
            er.rhs = eval(eq.rhs, values);
            er.satisfied = er.lhs == er.rhs;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::MissingBinding)
                throw;
            er.satisfied = false; // e.g. a radicand that is not a perfect square
        }
        if (!er.satisfied)
            report.all_satisfied = false;
        report.equations.push_back(std::move(er));
    }
    return report;
}

VerifyReport verify_solution(const std::string& id, const scribal::Bindings& bindings) {
    return verify_solution(Corpus::instance().problem(id), bindings);
}

CrossReport cross_check(const std::string& id) {
    const ProblemSpec& spec = Corpus::instance().problem(id);
    RunResult s = run_problem(id, Mode::Scribal);
    RunResult m = run_problem(id, Mode::Modern);

    CrossReport report;
    report.scribal_bindings = s.bindings;
    report.modern_bindings = m.bindings;
    report.agree = true;

    NamedValues sv = as_map(s.bindings);
    NamedValues mv = as_map(m.bindings);
    for (const auto& [name, value] : sv) {
        auto it = mv.find(name);
        if (it != mv.end() && it->second != value)
            report.agree = false;
    }
    // Both sides must at least agree on every statement unknown.
    for (const Unknown& u : spec.unknowns)
        if (!sv.count(u.name) || !mv.count(u.name))
            report.agree = false;
    return report;
}

bool identity_check(const std::string& name, const ExactNumber& x,
                    const ExactNumber& y) {
    if (name == "smt17-identity")
        return square(x + y) - (x * y + square(x - y)) == ExactNumber(3) * x * y;
    if (name == "smt19-identity") {
        ExactNumber lhs = square(pow(x, 4) + halve(square(x) * square(y)));
        ExactNumber rhs = pow(x, 6) * (square(x) + square(y)) +
                          pow(x, 4) * pow(y, 4) * ExactNumber(1, 4);
        return lhs == rhs;
    }
    if (name == "square-difference")
        return square(x + y) - square(x - y) == ExactNumber(4) * x * y;
    throw Error(ErrorCode::BadData, "unknown identity '" + name + "'");
}

} // namespace susa::corpus
