#ifndef SUSA_EQUATIONS_HPP
#define SUSA_EQUATIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "susa/exact.hpp"
#include "susa/scribal.hpp"

namespace susa::equations {

/// a*t^2 + b*t = c, the Babylonian normal form.
struct Quadratic {
    ExactNumber a, b, c;
};

enum class SolveMode { Scribal, Modern };

/// How a root fell out of the completed square. In the "w^2 + C = B*w" case
/// both positive roots exist; the scribe takes the subtractive one first.
enum class RootKind { Plain, Subtractive, Additive };

struct Root {
    ExactNumber value;
    RootKind kind = RootKind::Plain;
};

struct QuadraticSolution {
    std::vector<Root> roots;
    scribal::Trace trace;
    std::string diagnostic; // set when modern mode finds no rational root
};

/// Completing the square on the scaled substitution w = a*t, so that
/// w^2 + b*w = a*c. Scribal mode follows the tablet discipline: checked
/// subtraction only, perfect-square discriminant, positive roots only.
/// Modern mode returns every rational root; an irrational discriminant
/// leaves the root list empty with a diagnostic.
QuadraticSolution complete_square(const Quadratic& q, SolveMode mode);

struct LinearSystem {
    std::vector<std::vector<ExactNumber>> coefficients; // m x n, rectangular
    std::vector<ExactNumber> rhs;                       // length m
};

enum class SolutionKind { Unique, Parametric, Inconsistent };

struct SolutionSet {
    SolutionKind kind = SolutionKind::Inconsistent;
    std::vector<ExactNumber> particular;
    std::vector<std::vector<ExactNumber>> basis; // directions of the free part
};

/// Exact row reduction. Pivot is the first row with a nonzero entry in the
/// current column; free variables are the non-pivot columns in ascending
/// index order.
SolutionSet gaussian_eliminate(const LinearSystem& sys);

/// Semi-sum / semi-difference: given u = x+y and v = x*y, returns (x, y)
/// with x >= y. Requires (u/2)^2 - v to be a nonnegative perfect square.
std::pair<ExactNumber, ExactNumber> solve_symmetric(const ExactNumber& u,
                                                    const ExactNumber& v);

/// All distinct rational roots of the polynomial with the given coefficients
/// (highest degree first), by clearing denominators and testing divisors of
/// the constant and leading terms.
std::vector<ExactNumber> rational_roots(const std::vector<ExactNumber>& coeffs);

} // namespace susa::equations

#endif
