#include "susa/equations.hpp"

#include <algorithm>
#include <set>

#include "susa/numtheory.hpp"

namespace susa::equations {

namespace {

using scribal::Opcode;
using scribal::Procedure;
using scribal::Step;

scribal::Operand lit(const ExactNumber& v) { return scribal::LiteralOperand{v}; }
scribal::Operand ref(std::size_t i) { return scribal::StepRefOperand{i}; }

struct ProcBuilder {
    Procedure proc;

    std::size_t step(Opcode op, std::vector<scribal::Operand> operands,
                     const std::string& label = "") {
        Step s;
        s.opcode = op;
        s.operands = std::move(operands);
        s.note.line = label;
        proc.steps.push_back(std::move(s));
        return proc.steps.size() - 1;
    }
};

} // namespace

QuadraticSolution complete_square(const Quadratic& q, SolveMode mode) {
    if (q.a.is_zero())
        throw Error(ErrorCode::BadData, "quadratic with a = 0");

    // Scale by a: with w = a*t, the equation becomes w^2 + b*w = a*c.
    const ExactNumber scaled_rhs = q.a * q.c;

    QuadraticSolution solution;
    ProcBuilder pb;
    pb.proc.name = "complete-square";

    if (mode == SolveMode::Modern) {
        const ExactNumber half = halve(q.b);
        const ExactNumber disc = square(half) + scaled_rhs;
        if (disc.is_negative()) {
            solution.diagnostic = "negative discriminant " + disc.to_string();
            return solution;
        }
        ExactNumber root;
        try {
            root = sqrt_exact(disc);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotPerfectSquare)
                throw;
            solution.diagnostic =
                "discriminant " + disc.to_string() + " is not a perfect square";
            return solution;
        }

        auto s_scale = pb.step(Opcode::Multiply, {lit(q.a), lit(q.c)}, "scale");
        auto s_half = pb.step(Opcode::Halve, {lit(q.b)}, "half");
        auto s_square = pb.step(Opcode::Square, {ref(s_half)}, "square");
        auto s_sum = pb.step(Opcode::Add, {ref(s_square), ref(s_scale)}, "sum");
        auto s_sqrt = pb.step(Opcode::SquareRoot, {ref(s_sum)}, "sqrt");
        auto s_neghalf = pb.step(Opcode::Multiply, {lit(ExactNumber(-1)), ref(s_half)});
        auto s_w1 = pb.step(Opcode::Add, {ref(s_neghalf), ref(s_sqrt)}, "w");
        auto s_negsqrt = pb.step(Opcode::Multiply, {lit(ExactNumber(-1)), ref(s_sqrt)});
        auto s_w2 = pb.step(Opcode::Add, {ref(s_neghalf), ref(s_negsqrt)}, "w-second");
        auto s_rec = pb.step(Opcode::Reciprocal, {lit(q.a)});
        auto s_t1 = pb.step(Opcode::Multiply, {ref(s_rec), ref(s_w1)}, "t");
        pb.step(Opcode::Multiply, {ref(s_rec), ref(s_w2)}, "t-second");

        solution.trace = scribal::execute(pb.proc, {});
        solution.roots.push_back({solution.trace.entries[s_t1].result, RootKind::Plain});
        if (!root.is_zero())
            solution.roots.push_back(
                {solution.trace.entries.back().result, RootKind::Plain});
        return solution;
    }

    // Scribal mode. Sign analysis of w^2 + b*w = a*c decides the tablet type.
    const ExactNumber abs_b = q.b.is_negative() ? -q.b : q.b;

    if (!scaled_rhs.is_negative()) {
        // w^2 - |b|*w = C or w^2 + b*w = C: one positive root.
        auto s_scale = pb.step(Opcode::Multiply, {lit(q.a), lit(q.c)}, "scale");
        auto s_half = pb.step(Opcode::Halve, {lit(abs_b)}, "half");
        auto s_square = pb.step(Opcode::Square, {ref(s_half)}, "square");
        auto s_sum = pb.step(Opcode::Add, {ref(s_square), ref(s_scale)}, "sum");
        auto s_sqrt = pb.step(Opcode::SquareRoot, {ref(s_sum)}, "sqrt");
        std::size_t s_w;
        if (q.b.is_negative() || q.b.is_zero())
            s_w = pb.step(Opcode::Add, {ref(s_sqrt), ref(s_half)}, "w");
        else
            s_w = pb.step(Opcode::Subtract, {ref(s_sqrt), ref(s_half)}, "w");
        auto s_rec = pb.step(Opcode::Reciprocal, {lit(q.a)});
        auto s_t = pb.step(Opcode::Multiply, {ref(s_rec), ref(s_w)}, "t");

        solution.trace = scribal::execute(pb.proc, {});
        solution.roots.push_back({solution.trace.entries[s_t].result, RootKind::Plain});
        return solution;
    }

    // w^2 + C = |b|*w with C = -a*c > 0: two positive roots, subtractive
    // first. Requires b < 0; otherwise no positive root exists.
    if (!q.b.is_negative())
        throw Error(ErrorCode::NegativeResult,
                    "no positive root: w^2 + " + (-scaled_rhs).to_string() +
                        " = " + (-q.b).to_string() + "*w has b >= 0");

    auto s_scale =
        pb.step(Opcode::Multiply, {lit(-q.a), lit(q.c)}, "scale"); // |C| = -a*c
    auto s_half = pb.step(Opcode::Halve, {lit(abs_b)}, "half");
    auto s_square = pb.step(Opcode::Square, {ref(s_half)}, "square");
    auto s_diff =
        pb.step(Opcode::Subtract, {ref(s_square), ref(s_scale)}, "difference");
    auto s_sqrt = pb.step(Opcode::SquareRoot, {ref(s_diff)}, "sqrt");
    auto s_wsub = pb.step(Opcode::Subtract, {ref(s_half), ref(s_sqrt)}, "w");
    auto s_wadd = pb.step(Opcode::Add, {ref(s_half), ref(s_sqrt)}, "w-additive");
    auto s_rec = pb.step(Opcode::Reciprocal, {lit(q.a)});
    auto s_tsub = pb.step(Opcode::Multiply, {ref(s_rec), ref(s_wsub)}, "t");
    auto s_tadd =
        pb.step(Opcode::Multiply, {ref(s_rec), ref(s_wadd)}, "t-additive");

    solution.trace = scribal::execute(pb.proc, {});
    solution.roots.push_back(
        {solution.trace.entries[s_tsub].result, RootKind::Subtractive});
    if (solution.trace.entries[s_tadd].result !=
        solution.trace.entries[s_tsub].result)
        solution.roots.push_back(
            {solution.trace.entries[s_tadd].result, RootKind::Additive});
    return solution;
}

SolutionSet gaussian_eliminate(const LinearSystem& sys) {
    const std::size_t m = sys.coefficients.size();
    if (m == 0 || sys.rhs.size() != m)
        throw Error(ErrorCode::BadData, "malformed linear system");
    const std::size_t n = sys.coefficients[0].size();
    for (const auto& row : sys.coefficients)
        if (row.size() != n)
            throw Error(ErrorCode::BadData, "ragged coefficient matrix");

    auto a = sys.coefficients;
    auto b = sys.rhs;

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == m)
            continue;
        std::swap(a[row], a[pivot]);
        std::swap(b[row], b[pivot]);

        ExactNumber inv = ExactNumber(1) / a[row][col];
        for (std::size_t j = col; j < n; ++j)
            a[row][j] = a[row][j] * inv;
        b[row] = b[row] * inv;

        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero())
                continue;
            ExactNumber f = a[i][col];
            for (std::size_t j = col; j < n; ++j)
                a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }

    for (std::size_t i = row; i < m; ++i)
        if (!b[i].is_zero())
            return SolutionSet{SolutionKind::Inconsistent, {}, {}};

    SolutionSet result;
    result.particular.assign(n, ExactNumber(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        result.particular[pivot_col[i]] = b[i];

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col)
        is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<ExactNumber> dir(n, ExactNumber(0));
        dir[free_col] = ExactNumber(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            dir[pivot_col[i]] = -a[i][free_col];
        result.basis.push_back(std::move(dir));
    }

    result.kind = result.basis.empty() ? SolutionKind::Unique : SolutionKind::Parametric;
    return result;
}

std::pair<ExactNumber, ExactNumber> solve_symmetric(const ExactNumber& u,
                                                    const ExactNumber& v) {
    const ExactNumber half = halve(u);
    const ExactNumber disc = square(half) - v;
    if (disc.is_negative())
        throw Error(ErrorCode::NegativeDiscriminant,
                    "(u/2)^2 - v = " + disc.to_string() + " is negative");
    const ExactNumber s = sqrt_exact(disc);
    return {half + s, half - s};
}

namespace {

std::vector<BigInt> positive_divisors(const BigInt& n) {
    Factorization f = factor(n);
    std::vector<BigInt> divisors{1};
    for (const auto& [p, e] : f.factors) {
        std::size_t count = divisors.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i)
                divisors.push_back(divisors[i] * pk);
        }
    }
    return divisors;
}

ExactNumber eval_poly(const std::vector<ExactNumber>& coeffs, const ExactNumber& t) {
    ExactNumber acc(0);
    for (const ExactNumber& c : coeffs)
        acc = acc * t + c;
    return acc;
}

} // namespace

std::vector<ExactNumber> rational_roots(const std::vector<ExactNumber>& coeffs) {
    if (coeffs.size() < 2)
        throw Error(ErrorCode::BadData, "polynomial degree must be at least 1");
    if (coeffs.front().is_zero())
        throw Error(ErrorCode::BadData, "leading coefficient must be nonzero");

    // Clear denominators to integer coefficients.
    BigInt scale = 1;
    for (const ExactNumber& c : coeffs)
        scale = boost::multiprecision::lcm(scale, c.denominator());
    std::vector<BigInt> ic;
    ic.reserve(coeffs.size());
    for (const ExactNumber& c : coeffs)
        ic.push_back(c.numerator() * (scale / c.denominator()));

    std::set<ExactNumber> roots;
    while (ic.size() > 1 && ic.back() == 0) {
        roots.insert(ExactNumber(0));
        ic.pop_back();
    }
    if (ic.size() > 1) {
        BigInt constant = ic.back();
        BigInt leading = ic.front();
        if (constant < 0) constant = -constant;
        if (leading < 0) leading = -leading;
        for (const BigInt& p : positive_divisors(constant)) {
            for (const BigInt& q : positive_divisors(leading)) {
                for (int sign : {1, -1}) {
                    ExactNumber candidate(sign * p, q);
                    if (roots.count(candidate))
                        continue;
                    if (eval_poly(coeffs, candidate).is_zero())
                        roots.insert(candidate);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

} // namespace susa::equations
