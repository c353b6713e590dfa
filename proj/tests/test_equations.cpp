#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "susa/equations.hpp"
#include "susa/errors.hpp"

using namespace susa;
using namespace susa::equations;

namespace {

ExactNumber q(long long n, long long d) { return ExactNumber(n, d); }

std::vector<ExactNumber> root_values(const QuadraticSolution& s) {
    std::vector<ExactNumber> out;
    for (const Root& r : s.roots)
        out.push_back(r.value);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("scribal completing the square, one positive root") {
    // 28 t^2 - 20 t = 600: scale to w^2 - 20 w = 16800, w = 140, t = 5.
    QuadraticSolution s = complete_square({ExactNumber(28), ExactNumber(-20),
                                           ExactNumber(600)},
                                          SolveMode::Scribal);
    REQUIRE(s.roots.size() == 1);
    CHECK(s.roots[0].value == ExactNumber(5));
    CHECK(s.roots[0].kind == RootKind::Plain);

    // The trace shows the tablet chain: 16800, 10, 100, 16900, 130, 140.
    auto report = scribal::compare_trace(
        s.trace, {{"scale", ExactNumber(16800)},
                  {"half", ExactNumber(10)},
                  {"square", ExactNumber(100)},
                  {"sum", ExactNumber(16900)},
                  {"sqrt", ExactNumber(130)},
                  {"w", ExactNumber(140)},
                  {"t", ExactNumber(5)}});
    CHECK(report.pass);
}

TEST_CASE("scribal completing the square, subtractive and additive roots") {
    // (1/9) t^2 - (37/36) t = -35/72: w^2 + 35/648 = (37/36) w.
    QuadraticSolution s = complete_square({q(1, 9), q(-37, 36), q(-35, 72)},
                                          SolveMode::Scribal);
    REQUIRE(s.roots.size() == 2);
    CHECK(s.roots[0].value == q(1, 2));
    CHECK(s.roots[0].kind == RootKind::Subtractive);
    CHECK(s.roots[1].value == q(35, 4));
    CHECK(s.roots[1].kind == RootKind::Additive);
    auto report = scribal::compare_trace(
        s.trace, {{"scale", q(35, 648)},
                  {"half", q(37, 72)},
                  {"square", q(1369, 5184)},
                  {"difference", q(121, 576)},
                  {"sqrt", q(11, 24)}});
    CHECK(report.pass);
}

TEST_CASE("scribal mode refuses a subtraction that would go negative") {
    // w^2 + 10 = -3w has no positive root.
    CHECK_THROWS_AS(complete_square({ExactNumber(1), ExactNumber(3),
                                     ExactNumber(-10)},
                                    SolveMode::Scribal),
                    Error);
}

TEST_CASE("modern completing the square returns every rational root") {
    QuadraticSolution s = complete_square({ExactNumber(28), ExactNumber(-20),
                                           ExactNumber(600)},
                                          SolveMode::Modern);
    CHECK(root_values(s) == std::vector<ExactNumber>{q(-30, 7), ExactNumber(5)});

    s = complete_square({ExactNumber(20), ExactNumber(20), ExactNumber(600)},
                        SolveMode::Modern);
    CHECK(root_values(s) == std::vector<ExactNumber>{ExactNumber(-6), ExactNumber(5)});

    // Double root: t^2 - 2t = -1.
    s = complete_square({ExactNumber(1), ExactNumber(-2), ExactNumber(-1)},
                        SolveMode::Modern);
    CHECK(root_values(s) == std::vector<ExactNumber>{ExactNumber(1)});
}

TEST_CASE("modern mode reports irrational or complex cases as diagnostics") {
    QuadraticSolution s =
        complete_square({ExactNumber(1), ExactNumber(0), ExactNumber(2)},
                        SolveMode::Modern);
    CHECK(s.roots.empty());
    CHECK(!s.diagnostic.empty());

    s = complete_square({ExactNumber(1), ExactNumber(0), ExactNumber(-1)},
                        SolveMode::Modern);
    CHECK(s.roots.empty());
    CHECK(!s.diagnostic.empty());
}

TEST_CASE("property: completing the square agrees with a direct oracle") {
    std::mt19937_64 rng(0x5EED0201);
    std::uniform_int_distribution<long long> num(-60, 60);
    std::uniform_int_distribution<long long> den(1, 12);
    int done = 0;
    while (done < 10000) {
        ExactNumber a(num(rng), den(rng));
        if (a.is_zero())
            continue;
        ExactNumber r1(num(rng), den(rng)), r2(num(rng), den(rng));
        // a(t - r1)(t - r2) = 0  ==  a t^2 + b t = c
        ExactNumber b = -a * (r1 + r2);
        ExactNumber c = -a * r1 * r2;
        QuadraticSolution s = complete_square({a, b, c}, SolveMode::Modern);
        std::vector<ExactNumber> expected{r1, r2};
        std::sort(expected.begin(), expected.end());
        if (r1 == r2)
            expected.pop_back();
        REQUIRE(root_values(s) == expected);
        for (const Root& r : s.roots) // residual is exactly zero
            REQUIRE(a * r.value * r.value + b * r.value - c == ExactNumber(0));
        ++done;
    }
}

TEST_CASE("property: scribal roots are positive and satisfy the equation") {
    std::mt19937_64 rng(0x5EED0202);
    std::uniform_int_distribution<long long> num(1, 60);
    std::uniform_int_distribution<long long> den(1, 12);
    int done = 0;
    while (done < 10000) {
        ExactNumber a(num(rng), den(rng));
        ExactNumber r1(num(rng), den(rng)), r2(num(rng), den(rng));
        ExactNumber b = -a * (r1 + r2);
        ExactNumber c = -a * r1 * r2; // w^2 + C = |b| w with both roots positive
        QuadraticSolution s = complete_square({a, b, c}, SolveMode::Scribal);
        REQUIRE(!s.roots.empty());
        for (const Root& r : s.roots) {
            REQUIRE(r.value > ExactNumber(0));
            REQUIRE(a * r.value * r.value + b * r.value - c == ExactNumber(0));
        }
        ++done;
    }
}

TEST_CASE("gaussian elimination: unique solution") {
    LinearSystem sys;
    sys.coefficients = {{ExactNumber(2), ExactNumber(-1), ExactNumber(3)},
                        {ExactNumber(1), ExactNumber(1), ExactNumber(2)},
                        {ExactNumber(-1), ExactNumber(2), ExactNumber(1)}};
    sys.rhs = {ExactNumber(2), ExactNumber(1), ExactNumber(0)};
    SolutionSet s = gaussian_eliminate(sys);
    CHECK(s.kind == SolutionKind::Unique);
    CHECK(s.particular == std::vector<ExactNumber>{q(1, 6), q(-1, 6), q(1, 2)});
    CHECK(s.basis.empty());
}

TEST_CASE("gaussian elimination: parametric line") {
    LinearSystem sys;
    sys.coefficients = {{ExactNumber(1), ExactNumber(1), ExactNumber(-1)},
                        {ExactNumber(1), ExactNumber(-1), ExactNumber(1)}};
    sys.rhs = {ExactNumber(1), ExactNumber(1)};
    SolutionSet s = gaussian_eliminate(sys);
    CHECK(s.kind == SolutionKind::Parametric);
    CHECK(s.particular ==
          std::vector<ExactNumber>{ExactNumber(1), ExactNumber(0), ExactNumber(0)});
    REQUIRE(s.basis.size() == 1);
    CHECK(s.basis[0] ==
          std::vector<ExactNumber>{ExactNumber(0), ExactNumber(1), ExactNumber(1)});
}

TEST_CASE("gaussian elimination: inconsistent system") {
    LinearSystem sys;
    sys.coefficients = {{ExactNumber(1), ExactNumber(1)},
                        {ExactNumber(2), ExactNumber(2)}};
    sys.rhs = {ExactNumber(1), ExactNumber(3)};
    CHECK(gaussian_eliminate(sys).kind == SolutionKind::Inconsistent);
}

TEST_CASE("property: elimination reproduces a planted solution") {
    std::mt19937_64 rng(0x5EED0203);
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 6);
    int done = 0;
    while (done < 10000) {
        LinearSystem sys;
        std::vector<ExactNumber> x;
        for (int j = 0; j < 3; ++j)
            x.emplace_back(num(rng), den(rng));
        for (int i = 0; i < 3; ++i) {
            std::vector<ExactNumber> row;
            ExactNumber acc(0);
            for (int j = 0; j < 3; ++j) {
                row.emplace_back(num(rng), den(rng));
                acc += row.back() * x[j];
            }
            sys.coefficients.push_back(std::move(row));
            sys.rhs.push_back(acc);
        }
        SolutionSet s = gaussian_eliminate(sys);
        REQUIRE(s.kind != SolutionKind::Inconsistent);
        if (s.kind == SolutionKind::Unique) {
            REQUIRE(s.particular == x);
        } else {
            // The planted solution still satisfies every equation.
            for (std::size_t i = 0; i < 3; ++i) {
                ExactNumber acc(0);
                for (std::size_t j = 0; j < 3; ++j)
                    acc += sys.coefficients[i][j] * s.particular[j];
                REQUIRE(acc == sys.rhs[i]);
            }
        }
        ++done;
    }
}

TEST_CASE("semi-sum and semi-difference") {
    auto [x, y] = solve_symmetric(ExactNumber(1), q(2, 9));
    CHECK(x == q(2, 3));
    CHECK(y == q(1, 3));

    auto [p, r] = solve_symmetric(ExactNumber(70), ExactNumber(1200));
    CHECK(p == ExactNumber(40));
    CHECK(r == ExactNumber(30));

    CHECK_THROWS_AS(solve_symmetric(ExactNumber(2), ExactNumber(2)), Error);
    CHECK_THROWS_AS(solve_symmetric(ExactNumber(1), q(1, 5)), Error); // irrational
}

TEST_CASE("property: solve_symmetric inverts (x+y, xy)") {
    std::mt19937_64 rng(0x5EED0204);
    std::uniform_int_distribution<long long> num(-100, 100);
    std::uniform_int_distribution<long long> den(1, 10);
    for (int i = 0; i < 10000; ++i) {
        ExactNumber x(num(rng), den(rng));
        ExactNumber y(num(rng), den(rng));
        auto [hi, lo] = solve_symmetric(x + y, x * y);
        REQUIRE(hi == std::max(x, y));
        REQUIRE(lo == std::min(x, y));
    }
}

TEST_CASE("rational roots of polynomials") {
    CHECK(rational_roots({ExactNumber(1), ExactNumber(0), ExactNumber(-4),
                          ExactNumber(-48)}) ==
          std::vector<ExactNumber>{ExactNumber(4)});
    // 6t^2 - 5t + 1 = (3t - 1)(2t - 1)
    CHECK(rational_roots({ExactNumber(6), ExactNumber(-5), ExactNumber(1)}) ==
          std::vector<ExactNumber>{q(1, 3), q(1, 2)});
    // t^2 - 2 has no rational root.
    CHECK(rational_roots({ExactNumber(1), ExactNumber(0), ExactNumber(-2)}).empty());
    // Zero roots are stripped first: t^3 - 4t^2 = t^2 (t - 4).
    CHECK(rational_roots({ExactNumber(1), ExactNumber(-4), ExactNumber(0),
                          ExactNumber(0)}) ==
          std::vector<ExactNumber>{ExactNumber(0), ExactNumber(4)});
    CHECK_THROWS_AS(rational_roots({ExactNumber(1)}), Error);
    CHECK_THROWS_AS(rational_roots({ExactNumber(0), ExactNumber(1)}), Error);
}

TEST_CASE("property: rational_roots recovers planted roots") {
    std::mt19937_64 rng(0x5EED0205);
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 6);
    for (int i = 0; i < 10000; ++i) {
        ExactNumber r1(num(rng), den(rng)), r2(num(rng), den(rng)),
            r3(num(rng), den(rng));
        // (t - r1)(t - r2)(t - r3), expanded.
        std::vector<ExactNumber> coeffs{
            ExactNumber(1), -(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3,
            -(r1 * r2 * r3)};
        std::vector<ExactNumber> expected{r1, r2, r3};
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()),
                       expected.end());
        REQUIRE(rational_roots(coeffs) == expected);
    }
}
