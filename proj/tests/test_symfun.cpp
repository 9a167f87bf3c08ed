#include "fatness/symfun.hpp"
#include "fatness/unipoly.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace fatness;

namespace {

UniPoly at_e1_plus_te2(const MultiPoly& p)
{
    std::vector<UniPoly> coords(static_cast<std::size_t>(p.variable_count()), UniPoly());
    coords[0] = UniPoly::constant(1);
    if (coords.size() > 1)
        coords[1] = UniPoly::monomial(1);
    return p.substitute_univariate(coords);
}

MultiPoly random_symmetric(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, 4);
    MultiPoly p(n);
    for (int i = 0; i < 3; ++i) {
        auto lambda = enumerate_km(deg(rng), n);
        std::uniform_int_distribution<std::size_t> pick(0, lambda.size() - 1);
        p += schur(lambda[pick(rng)], n) * Rational(coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("elementary and complete symmetric polynomials")
{
    CHECK(complete_h(0, 5) == MultiPoly::constant(5, 1));
    MultiPoly s1 = elementary_sigma(1, 2), s2 = elementary_sigma(2, 2);
    CHECK(complete_h(2, 2) == s1 * s1 - s2);
    CHECK(elementary_sigma(3, 2).is_zero());
    auto d = vandermonde(2);
    CHECK(d * d == s1 * s1 - Rational(4) * s2);
}

TEST_CASE("three Schur routes agree on K_m for m <= 8, n <= 4")
{
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 8; ++m)
            for (const auto& lambda : enumerate_km(m, n)) {
                MultiPoly bi = schur(lambda, n, SchurRoute::Bialternant);
                CHECK(bi == schur(lambda, n, SchurRoute::JacobiTrudiH));
                CHECK(bi == schur(lambda, n, SchurRoute::JacobiTrudiSigma));
                CHECK(is_symmetric(bi));
            }
}

TEST_CASE("alternant antisymmetry under S_3")
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> e(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> mu{e(rng), e(rng), e(rng)};
        MultiPoly a = alternant(mu, 3);
        std::vector<int> perm{0, 1, 2};
        do {
            std::vector<int> moved(3);
            for (int i = 0; i < 3; ++i)
                moved[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            int inversions = (perm[0] > perm[1]) + (perm[0] > perm[2]) + (perm[1] > perm[2]);
            CHECK(alternant(moved, 3) == a * Rational(inversions % 2 ? -1 : 1));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("recurrence sum (-1)^j sigma_j h_{r-j} = 0")
{
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 12; ++r) {
            MultiPoly acc(n);
            for (int j = 0; j <= r; ++j) {
                MultiPoly term = elementary_sigma(j, n) * complete_h(r - j, n);
                acc += j % 2 ? -term : term;
            }
            CHECK(acc.is_zero());
        }
}

TEST_CASE("two-variable identity for h_m in sigma_1 and the discriminant")
{
    ClassBasis basis(ClassFamily::Sigma, 2, false, "x");
    SymExpr s1 = SymExpr::generator(basis, 0), s2 = SymExpr::generator(basis, 1);
    SymExpr disc = s1 * s1 - Rational(4) * s2;
    for (int m = 0; m <= 12; ++m) {
        SymExpr rhs = SymExpr::zero(basis);
        for (int j = 0; 2 * j <= m; ++j)
            rhs += Rational(binomial(m + 1, 2 * j + 1)) * s1.pow(m - 2 * j) * disc.pow(j);
        Integer two_m = 1;
        for (int i = 0; i < m; ++i)
            two_m *= 2;
        rhs = rhs * fraction(1, two_m);
        CHECK(express_in_sigma(complete_h(m, 2), 2) == rhs);
        CHECK(h_in_sigma(m, 2) == rhs);
        // (x1^{m+1} - x2^{m+1}) / (x1 - x2)
        MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
        CHECK(exact_divide(x1.pow(m + 1) - x2.pow(m + 1), x1 - x2) == rhs.realize());
    }
}

TEST_CASE("specializations of Schur polynomials")
{
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 8; ++m) {
            for (const auto& lambda : enumerate_km(m, n)) {
                MultiPoly s = schur(lambda, n);
                // column partition gives sigma_m, row partition gives h_m
                if (lambda.nonzero_parts() == m)
                    CHECK(s == elementary_sigma(m, n));
                if (lambda[0] == m)
                    CHECK(s == complete_h(m, n));
                // factor sigma_n^{lambda_n}
                if (lambda[n - 1] > 0) {
                    std::vector<int> reduced(lambda.parts());
                    for (auto& v : reduced)
                        v -= lambda[n - 1];
                    CHECK(s == elementary_sigma(n, n).pow(lambda[n - 1]) * schur(Partition(reduced), n));
                }
                // Jacobi-Trudi in h and in sigma over the conjugate
                CHECK(s == jacobi_trudi(lambda.parts(), n, [&](int k) { return complete_h(k, n); }));
                Partition c = conjugate(lambda, m);
                std::vector<int> cparts;
                for (int v : c.parts())
                    if (v > 0)
                        cparts.push_back(v);
                CHECK(s == jacobi_trudi(cparts, n, [&](int k) { return elementary_sigma(k, n); }));
                // value at e1
                std::vector<Rational> e1(static_cast<std::size_t>(n), Rational(0));
                e1[0] = 1;
                CHECK(s.evaluate(e1) == (lambda[0] == m ? 1 : 0));
                // value at e1 + t e2
                UniPoly want;
                if (n >= 2 && lambda.nonzero_parts() <= 2) {
                    int k = lambda[1];
                    for (int i = k; i <= m - k; ++i)
                        want += UniPoly::monomial(i);
                } else if (n == 1) {
                    want = UniPoly::constant(1);
                }
                CHECK(at_e1_plus_te2(s) == want);
            }
        }
}

TEST_CASE("express_in_sigma round-trips")
{
    std::mt19937 rng(41);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            MultiPoly p = random_symmetric(rng, n);
            CHECK(express_in_sigma(p, n).realize() == p);
        }
    MultiPoly x = MultiPoly::variable(2, 0);
    CHECK_THROWS_AS(express_in_sigma(x, 2), InvalidArgument);
    CHECK(!is_symmetric(x));
}

TEST_CASE("trace-zero reduction and squaring variables")
{
    MultiPoly s1 = elementary_sigma(1, 3);
    CHECK(reduce_trace_zero(s1).is_zero());
    MultiPoly x = MultiPoly::variable(2, 0);
    CHECK(square_variables(x + MultiPoly::variable(2, 1)) == x * x + MultiPoly::variable(2, 1).pow(2));
}
