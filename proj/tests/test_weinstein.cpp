#include "fatness/symfun.hpp"
#include "fatness/weinstein.hpp"

#include <doctest.h>

#include <numeric>

using namespace fatness;

namespace {

const std::vector<GroupSpec> kClassical{
    {GroupFamily::U, 2}, {GroupFamily::U, 3},      {GroupFamily::SO_even, 2},
    {GroupFamily::SO_odd, 2}, {GroupFamily::Sp, 1}, {GroupFamily::Sp, 2},
};

/// Applies y_i -> sign_i * y_{perm(i)} to the y variables of an expanded form.
MultiPoly act_on_y(const MultiPoly& p, int ny, const std::vector<int>& perm, const std::vector<int>& signs)
{
    int total = p.variable_count();
    std::vector<MultiPoly> images;
    for (int i = 0; i < total; ++i) {
        if (i < ny)
            images.push_back(MultiPoly::variable(total, perm[static_cast<std::size_t>(i)]) *
                             Rational(signs[static_cast<std::size_t>(i)]));
        else
            images.push_back(MultiPoly::variable(total, i));
    }
    return p.substitute(images);
}

bool same_up_to_positive(const MultiPoly& a, const MultiPoly& b)
{
    auto c = proportionality(a, b);
    return c && *c > 0;
}

}  // namespace

TEST_CASE("Weyl sum agrees with the Schur expansion up to a positive constant")
{
    for (const auto& g : kClassical)
        for (int k = 0; k <= 6; ++k) {
            CAPTURE(g.name());
            CAPTURE(k);
            WeinsteinForm schur_form = q_schur_form(g, k), weyl = q_weyl_sum(g, k);
            if (schur_form.is_zero())
                CHECK(weyl.is_zero());
            else
                CHECK(positive_ratio(weyl, schur_form).has_value());
        }
}

TEST_CASE("class form agrees with the Schur expansion")
{
    for (const auto& g : std::vector<GroupSpec>{{GroupFamily::U, 2},
                                                {GroupFamily::U, 3},
                                                {GroupFamily::SO_even, 2},
                                                {GroupFamily::SO_odd, 2},
                                                {GroupFamily::Sp, 2}})
        for (int m : {2, 4}) {
            CAPTURE(g.name());
            CAPTURE(m);
            CHECK(positive_ratio(q_char_form(g, m), q_schur_form(g, m)).has_value());
        }
}

TEST_CASE("odd degrees vanish for orthogonal and symplectic groups")
{
    for (const auto& g : kClassical) {
        if (g.family == GroupFamily::U)
            continue;
        for (int k : {1, 3, 5})
            CHECK(q_schur_form(g, k).is_zero());
    }
    CHECK(!q_schur_form(GroupSpec{GroupFamily::U, 2}, 3).is_zero());
}

TEST_CASE("even degree forms are invariant under y -> -y and under the Weyl group")
{
    for (const auto& g : kClassical)
        for (int m : {2, 4}) {
            CAPTURE(g.name());
            MultiPoly p = q_schur_form(g, m).expand();
            int n = g.torus_variables();
            std::vector<int> id(static_cast<std::size_t>(n)), minus(static_cast<std::size_t>(n), -1),
                plus(static_cast<std::size_t>(n), 1);
            std::iota(id.begin(), id.end(), 0);
            CHECK(act_on_y(p, n, id, minus) == p);
            std::vector<int> perm = id;
            while (std::next_permutation(perm.begin(), perm.end()))
                CHECK(act_on_y(p, n, perm, plus) == p);
            if (g.family == GroupFamily::U)
                continue;
            for (int mask = 1; mask < (1 << n); ++mask) {
                std::vector<int> signs = plus;
                int flips = 0;
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i)) {
                        signs[static_cast<std::size_t>(i)] = -1;
                        ++flips;
                    }
                // SO(2n) only admits an even number of flips
                if (g.family == GroupFamily::SO_even && flips % 2 == 1)
                    continue;
                CHECK(act_on_y(p, n, id, signs) == p);
            }
        }
}

TEST_CASE("SU forms drop c1 on the x side")
{
    GroupSpec su3{GroupFamily::SU, 3};
    ClassBasis xb = su3.x_basis();
    REQUIRE(xb.find("c1").has_value());
    int c1 = *xb.find("c1");
    WeinsteinForm f = q_char_form(su3, 4);
    for (const auto& t : f.terms())
        for (const auto& [e, c] : t.x_part.poly().terms())
        {
            CHECK(xb.is_canonical(e));
            CHECK(e[static_cast<std::size_t>(c1)] == 0);
        }
}

TEST_CASE("U(2) degree 4 along (1+t, 1-t)")
{
    GroupSpec u2{GroupFamily::U, 2};
    std::vector<UniPoly> curve{UniPoly::linear(1, 1), UniPoly::linear(1, -1)};
    TFamily got = q_char_form(u2, 4).restrict(curve);
    ClassBasis b = got.basis;
    SymExpr c1 = SymExpr::generator(b, 0), c2 = SymExpr::generator(b, 1);
    SymExpr d = c1 * c1 - c2 * Rational(4);
    TFamily want(b);
    want.add(0, c1.pow(4) * Rational(5));
    want.add(2, c1.pow(2) * d * Rational(10));
    want.add(4, d.pow(2));
    CHECK(same_up_to_positive(got.flatten(), want.flatten()));
    for (int m : {2, 4, 6}) {
        TFamily generic = haar_normalized_form(u2, m).restrict(curve);
        CHECK(same_up_to_positive(generic.flatten(), q_u2_reduced(m).family.flatten()));
    }
}

TEST_CASE("SO(4) reduced family")
{
    CHECK(q_so4_reduced(4).coefficients == std::vector<Integer>{6, 20, 6});
    GroupSpec so4{GroupFamily::SO_even, 2};
    std::vector<UniPoly> curve{UniPoly::linear(1, 1), UniPoly::linear(1, -1)};
    for (int m : {2, 4, 6}) {
        TFamily generic = haar_normalized_form(so4, m).restrict(curve);
        CHECK(same_up_to_positive(generic.flatten(), q_so4_reduced(m).family.flatten()));
    }
}

TEST_CASE("special vectors for U(n)")
{
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m <= 4; ++m) {
            GroupSpec g{GroupFamily::U, n};
            WeinsteinForm f = haar_normalized_form(g, m);
            std::vector<UniPoly> ones(static_cast<std::size_t>(n), UniPoly::constant(1)), e1t = ones;
            ones[0] = UniPoly::linear(1, 1);
            for (std::size_t i = 0; i < e1t.size(); ++i)
                e1t[i] = i == 0 ? UniPoly::constant(1) : (i == 1 ? UniPoly::monomial(1) : UniPoly());
            CHECK(same_up_to_positive(f.restrict(ones).flatten(), q_special_un(SpecialCase::PerturbedOnes, n, m).flatten()));
            CHECK(same_up_to_positive(f.restrict(e1t).flatten(), q_special_un(SpecialCase::E1PlusTE2, n, m).flatten()));
            TFamily pert = q_special_un(SpecialCase::PerturbedOnes, n, m);
            CHECK(proportionality(pert.coefficient(0).poly(), q_special_un(SpecialCase::AllOnes, n, m).coefficient(0).poly())
                      .value_or(-1) > 0);
            TFamily line = q_special_un(SpecialCase::E1PlusTE2, n, m);
            CHECK(proportionality(line.coefficient(0).poly(), complete_in_classes(line.basis, m, n).poly()).value_or(-1) > 0);
            std::vector<Rational> e1(static_cast<std::size_t>(n), Rational(0));
            e1[0] = 1;
            CHECK(proportionality(f.at(e1).poly(), q_special_un(SpecialCase::E1, n, m).coefficient(0).poly()).value_or(-1) > 0);
        }
}

TEST_CASE("Sp(1) degree k is 2/(k+1) y^k p1^(k/2) up to normalization")
{
    GroupSpec sp1{GroupFamily::Sp, 1};
    WeinsteinForm f0 = q_schur_form(sp1, 0);
    for (int k = 2; k <= 8; k += 2) {
        WeinsteinForm f = q_schur_form(sp1, k);
        SymExpr at1 = f.at({Rational(1)});
        ClassBasis b = sp1.x_basis();
        SymExpr want = SymExpr::generator(b, 0).pow(k / 2) * fraction(2, k + 1);
        auto c = proportionality(at1.poly(), want.poly());
        auto c0 = proportionality(f0.at({Rational(1)}).poly(), SymExpr::constant(b, 2).poly());
        REQUIRE(c);
        REQUIRE(c0);
        CHECK(*c == *c0);
    }
}

TEST_CASE("circle times SO(3) along (1, t)")
{
    for (int m : {2, 4, 6}) {
        WeinsteinForm f = q_product(GroupSpec{GroupFamily::Torus, 1}, GroupSpec{GroupFamily::SO_odd, 1}, m);
        TFamily got = f.restrict({UniPoly::constant(1), UniPoly::monomial(1)});
        TFamily want(got.basis);
        SymExpr c = SymExpr::generator(got.basis, 0), p1 = SymExpr::generator(got.basis, 1);
        for (int j = 0; 2 * j <= m; ++j)
            want.add(2 * j, c.pow(m - 2 * j) * p1.pow(j) * (Rational(binomial(m, 2 * j)) * fraction(2, 2 * j + 1)));
        CHECK(same_up_to_positive(got.flatten(), want.flatten()));
    }
}

TEST_CASE("torus and G2 forms")
{
    SymExpr q = q_torus({Rational(1), Rational(2)}, 2);
    ClassBasis b = q.basis();
    SymExpr x1 = SymExpr::generator(b, 0), x2 = SymExpr::generator(b, 1);
    CHECK(q == (x1 + x2 * Rational(2)).pow(2));
    CHECK_THROWS_AS(q_torus({Rational(0), Rational(0)}, 2), ZeroVector);
    CHECK(q_torus_form(2, 3).at({Rational(1), Rational(2)}) == (x1 + x2 * Rational(2)).pow(3));
    CHECK(!q_g2(4).is_zero());
    CHECK_THROWS_AS(q_g2(3), InvalidArgument);
    CHECK_THROWS_AS(q_schur_form(GroupSpec{GroupFamily::G2, 2}, 2), UnsupportedGroup);
}

TEST_CASE("group parsing")
{
    CHECK(GroupSpec::parse("SO(5)") == GroupSpec{GroupFamily::SO_odd, 2});
    CHECK(GroupSpec::parse("SO(4)") == GroupSpec{GroupFamily::SO_even, 2});
    CHECK(GroupSpec::parse("U", 3) == GroupSpec{GroupFamily::U, 3});
    CHECK(GroupSpec::parse("G2").family == GroupFamily::G2);
    CHECK_THROWS_AS(GroupSpec::parse("E8", 8), InvalidArgument);
    CHECK(GroupSpec{GroupFamily::U, 3}.positive_roots() == 3);
    CHECK(GroupSpec{GroupFamily::Sp, 2}.lie_algebra_dimension() == 10);
}
