#ifndef SUSA_CORPUS_HPP
#define SUSA_CORPUS_HPP

#include <map>
#include <string>
#include <vector>

#include "susa/equations.hpp"
#include "susa/exact.hpp"
#include "susa/scribal.hpp"

namespace susa::corpus {

/// Polynomial-with-square-root expression tree. Sqrt subterms require their
/// radicands to evaluate to perfect squares.
struct Expr {
    enum class Kind { Const, Var, Add, Sub, Mul, Pow, Sqrt };

    Kind kind = Kind::Const;
    ExactNumber value;          // Const
    std::string name;           // Var
    std::vector<Expr> children; // Add/Mul: >=2, Sub: 2, Pow/Sqrt: 1
    long long exponent = 0;     // Pow
};

using NamedValues = std::map<std::string, ExactNumber>;

ExactNumber eval(const Expr& e, const NamedValues& bindings);

struct Equation {
    Expr lhs;
    Expr rhs;
};

struct Unknown {
    std::string name;
    bool nonnegative = true; // admissibility filter
};

struct TextError {
    std::string line;
    std::string printed;
    std::string corrected;
};

enum class Mode { Scribal, Modern };

/// One SMT problem (or one of the worked modern examples): statement,
/// scribal procedure, modern route, expected answers, known text errors.
struct ProblemSpec {
    std::string id;
    std::string title;
    std::vector<Equation> statement;
    std::vector<Unknown> unknowns;
    scribal::Procedure procedure; // empty steps when scribal mode unsupported
    scribal::Bindings inputs;     // canonical inputs for the procedure
    std::string modern_route;     // substitution | symmetric | octic-reduction |
                                  // gaussian | elimination | change-of-variables |
                                  // rational-roots | "" (scribal only)
    // Route parameters (see data files): quadratic coefficients, matrices,
    // derivation expressions per unknown.
    equations::Quadratic quadratic{ExactNumber(1), ExactNumber(0), ExactNumber(0)};
    std::vector<std::pair<std::string, Expr>> derive; // evaluated in order
    equations::LinearSystem linear;
    std::vector<ExactNumber> cubic; // highest degree first

    scribal::Bindings expected;
    std::vector<TextError> text_errors;
    std::string notes;

    bool supports(Mode mode) const;
};

/// Loads every problem file in the data directory (set once; defaults to the
/// compiled-in path, overridable with the SUSA_DATA_DIR environment variable).
class Corpus {
public:
    explicit Corpus(const std::string& data_dir);

    static const Corpus& instance();

    std::vector<std::string> ids() const;
    const ProblemSpec& problem(const std::string& id) const;

private:
    std::map<std::string, ProblemSpec> problems_;
};

struct RunResult {
    scribal::Bindings bindings;
    scribal::Trace trace;
    equations::SolutionSet solution_set; // filled by the gaussian route
};

RunResult run_problem(const std::string& id, Mode mode);

struct EquationReport {
    bool satisfied = false;
    ExactNumber lhs;
    ExactNumber rhs;
};

struct VerifyReport {
    bool all_satisfied = true;
    std::vector<EquationReport> equations;
};

VerifyReport verify_solution(const std::string& id, const scribal::Bindings& bindings);
VerifyReport verify_solution(const ProblemSpec& spec, const scribal::Bindings& bindings);

struct CrossReport {
    bool agree = false;
    scribal::Bindings scribal_bindings;
    scribal::Bindings modern_bindings;
};

/// Runs both modes and checks that the admissible solutions agree exactly on
/// the unknowns they share.
CrossReport cross_check(const std::string& id);

/// Algebraic identities behind the tablet procedures, evaluated exactly on
/// both sides.
/// Names: smt17-identity, smt19-identity, square-difference.
bool identity_check(const std::string& name, const ExactNumber& x,
                    const ExactNumber& y);

} // namespace susa::corpus

#endif
