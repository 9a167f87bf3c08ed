#include "fatness/multipoly.hpp"
#include "fatness/unipoly.hpp"

#include <doctest.h>

#include <random>

using namespace fatness;

namespace {

MultiPoly random_poly(std::mt19937& rng, int nvars, int max_degree, int terms)
{
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9), den(1, 4);
    MultiPoly p(nvars);
    for (int i = 0; i < terms; ++i) {
        Exponent e(static_cast<std::size_t>(nvars));
        for (auto& x : e)
            x = deg(rng);
        p.add_term(e, fraction(coef(rng), den(rng)));
    }
    return p;
}

std::vector<Rational> random_point(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> v(-5, 5), den(1, 3);
    std::vector<Rational> pt;
    for (int i = 0; i < n; ++i)
        pt.push_back(fraction(v(rng), den(rng)));
    return pt;
}

UniPoly random_unipoly(std::mt19937& rng, int degree)
{
    std::uniform_int_distribution<int> coef(-6, 6);
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i)
        c.push_back(coef(rng));
    return UniPoly(c);
}

}  // namespace

TEST_CASE("graded lex order and canonical storage")
{
    GradedLexLess less;
    CHECK(less({1, 0}, {0, 2}));
    CHECK(less({0, 1}, {1, 0}));
    MultiPoly p(2);
    p.add_term({1, 0}, 3);
    p.add_term({1, 0}, -3);
    CHECK(p.is_zero());
    p.add_term({2, 1}, 1);
    p.add_term({0, 3}, 2);
    CHECK(p.leading_term().first == Exponent{2, 1});
    CHECK(p.total_degree() == 3);
    CHECK(p.is_homogeneous());
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_poly(rng, 3, 3, 4), b = random_poly(rng, 3, 3, 4), c = random_poly(rng, 3, 2, 3);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
        auto pt = random_point(rng, 3);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK(a.pow(3) == a * a * a);
    }
}

TEST_CASE("exact division recovers the quotient")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_poly(rng, 2, 3, 4), d = random_poly(rng, 2, 2, 3);
        if (d.is_zero())
            continue;
        CHECK(exact_divide(a * d, d) == a);
        auto r = divide(a, d);
        CHECK(r.quotient * d + r.remainder == a);
    }
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    CHECK_THROWS_AS(exact_divide(x + y, x), DivisionNotExact);
}

TEST_CASE("records round-trip")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_poly(rng, 3, 4, 5);
        CHECK(parse_records(to_records(p), 3) == p);
    }
    CHECK_THROWS_AS(parse_records("1/2 1 x", 2), ParseError);
}

TEST_CASE("proportionality")
{
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    auto p = x * x + y;
    CHECK(proportionality(p * Rational(-3, 2), p) == Rational(-3, 2));
    CHECK(!proportionality(p, x * x - y));
    CHECK(proportionality(MultiPoly(2), MultiPoly(2)) == Rational(1));
}

TEST_CASE("Bareiss determinant matches cofactor expansion")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix m(3, std::vector<MultiPoly>(3));
        for (auto& row : m)
            for (auto& e : row)
                e = random_poly(rng, 2, 1, 2);
        MultiPoly cof = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        CHECK(determinant(m, 2) == cof);
    }
}

TEST_CASE("substitution, permutation and embedding")
{
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    auto p = x * x * y + Rational(2) * y;
    std::vector<int> swap{1, 0};
    CHECK(p.permute(swap) == y * y * x + Rational(2) * x);
    std::vector<MultiPoly> vals{x + y, x - y};
    CHECK(p.substitute(vals) == (x + y).pow(2) * (x - y) + Rational(2) * (x - y));
    auto e = p.embed(4, 2);
    CHECK(e.variable_count() == 4);
    CHECK(e.coefficient({0, 0, 2, 1}) == 1);
    std::vector<UniPoly> t{UniPoly::linear(1, 1), UniPoly::linear(1, -1)};
    UniPoly u = p.substitute_univariate(t);
    CHECK(u.evaluate(Rational(3)) == p.evaluate(std::vector<Rational>{4, -2}));
}

TEST_CASE("univariate arithmetic")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_unipoly(rng, 4), b = random_unipoly(rng, 2);
        if (b.is_zero())
            continue;
        auto d = divide(a, b);
        CHECK(d.quotient * b + d.remainder == a);
        CHECK(d.remainder.degree() < b.degree());
        auto g = gcd(a * b, b);
        CHECK(g == b.monic());
        if (a.coefficient(0) != 0)
            CHECK(a.reversed().reversed() == a);
        CHECK(a.reflected().evaluate(Rational(2)) == a.evaluate(Rational(-2)));
    }
}

TEST_CASE("squarefree decomposition")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_unipoly(rng, 2), g = random_unipoly(rng, 1);
        if (f.degree() < 1 || g.degree() < 1)
            continue;
        UniPoly p = f * g.pow(3);
        auto parts = squarefree_decomposition(p);
        UniPoly prod = UniPoly::constant(1);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            CHECK(gcd(parts[i], parts[i].derivative()).degree() <= 0);
            prod = prod * parts[i].pow(static_cast<int>(i + 1));
        }
        CHECK(prod.monic() == p.monic());
    }
}
