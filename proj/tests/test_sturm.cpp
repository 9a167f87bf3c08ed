#include "fatness/sturm.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace fatness;

namespace {

struct Planted {
    UniPoly poly;
    std::vector<std::pair<Rational, int>> roots;  // distinct root, multiplicity
};

// Product of (t - r)^mult over distinct rationals times an optional root-free quadratic.
Planted planted(std::mt19937& rng)
{
    std::uniform_int_distribution<int> count(0, 4), num(-12, 12), den(1, 4), mult(1, 3), coin(0, 1);
    std::set<Rational> chosen;
    int k = count(rng);
    while (static_cast<int>(chosen.size()) < k)
        chosen.insert(fraction(num(rng), den(rng)));
    Planted out{UniPoly::constant(fraction(num(rng) == 0 ? 1 : 3, den(rng))), {}};
    for (const auto& r : chosen) {
        int e = mult(rng);
        out.poly = out.poly * UniPoly::linear(-r, 1).pow(e);
        out.roots.emplace_back(r, e);
    }
    if (coin(rng))
        out.poly = out.poly * UniPoly{Rational(2), Rational(1), Rational(1)};  // t^2 + t + 2
    return out;
}

}  // namespace

TEST_CASE("planted roots are counted and isolated")
{
    std::mt19937 rng(101);
    Rational precision(1, 1000000);
    for (int trial = 0; trial < 200; ++trial) {
        Planted p = planted(rng);
        CHECK(sturm_count(p.poly, Domain::real_line()) == static_cast<int>(p.roots.size()));
        auto enc = isolate_roots(p.poly, Domain::real_line(), precision);
        REQUIRE(enc.size() == p.roots.size());
        for (std::size_t i = 0; i < enc.size(); ++i) {
            CHECK(enc[i].lo <= p.roots[i].first);
            CHECK(p.roots[i].first <= enc[i].hi);
            CHECK(enc[i].width() <= precision);
            CHECK(enc[i].multiplicity == p.roots[i].second);
            if (i > 0)
                CHECK(enc[i - 1].hi < enc[i].lo);
        }
        // half lines split the count
        Rational cut = fraction(static_cast<int>(trial % 7) - 3, 2);
        int below = sturm_count(p.poly, Domain::at_most(cut));
        int above = sturm_count(p.poly, Domain(std::vector<Interval>{{Bound::at(cut, false), Bound::pos_inf()}}));
        CHECK(below + above == static_cast<int>(p.roots.size()));
    }
}

TEST_CASE("irrational roots")
{
    UniPoly p{Rational(-2), Rational(0), Rational(1)};  // t^2 - 2
    auto enc = isolate_roots(p, Domain::real_line(), Rational(1, 1000000000));
    REQUIRE(enc.size() == 2);
    CHECK(enc[1].lo * enc[1].lo <= 2);
    CHECK(enc[1].hi * enc[1].hi >= 2);
    CHECK(std::abs(enc[1].approx() - 1.41421356237) < 1e-9);
    CHECK(sturm_count(p, Domain::closed(0, 1)) == 0);
    CHECK(sturm_count(p, Domain::closed(1, 2)) == 1);
}

TEST_CASE("closed and open endpoints")
{
    UniPoly p = UniPoly::linear(-1, 1) * UniPoly::linear(1, 1);  // roots -1 and 1
    CHECK(sturm_count(p, Domain::closed(-1, 1)) == 2);
    CHECK(sturm_count(p, Domain(std::vector<Interval>{{Bound::at(-1, false), Bound::at(1, false)}})) == 0);
    CHECK(sturm_count(p, Domain::point(1)) == 1);
    CHECK(sturm_count(p, Domain::at_least(1)) == 1);
}

TEST_CASE("errors and degenerate input")
{
    CHECK_THROWS_AS(sturm_count(UniPoly(), Domain::real_line()), AllZero);
    CHECK(sturm_count(UniPoly::constant(3), Domain::real_line()) == 0);
    CHECK(isolate_roots(UniPoly::constant(-1), Domain::real_line(), Rational(1, 10)).empty());
}

TEST_CASE("simplest rational")
{
    CHECK(simplest_rational(Rational(3, 10), Rational(4, 10)) == Rational(1, 3));
    CHECK(simplest_rational(Rational(-7, 2), Rational(-3)) == -3);
    CHECK(simplest_rational(Rational(5, 7), Rational(5, 7)) == Rational(5, 7));
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> v(-1000, 1000);
    for (int trial = 0; trial < 100; ++trial) {
        Rational a = fraction(v(rng), 37), b = fraction(v(rng), 41);
        if (b < a)
            std::swap(a, b);
        Rational s = simplest_rational(a, b);
        CHECK(a <= s);
        CHECK(s <= b);
    }
}

TEST_CASE("domain membership")
{
    Domain d = Domain::at_most(0);
    CHECK(d.contains(-5));
    CHECK(d.contains(0));
    CHECK(!d.contains(Rational(1, 3)));
    CHECK(d.bounded_above());
    CHECK(!d.bounded_below());
    CHECK(Domain::real_line().contains(1000000));
}
