#include "fatness/lens.hpp"
#include "fatness/obstruction.hpp"
#include "fatness/sphere.hpp"
#include "fatness/su3.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace fatness;

namespace {

Rational random_rational(std::mt19937& rng, int range = 9)
{
    std::uniform_int_distribution<int> num(-range, range), den(1, 5);
    return fraction(num(rng), den(rng));
}

Rational rpow(const Rational& r, int e)
{
    Rational out = 1;
    for (int i = 0; i < e; ++i)
        out *= r;
    return out;
}

BundleData random_bundle(std::mt19937& rng, const std::vector<GroupSpec>& groups, int m)
{
    BundleData b(groups, m);
    for (const auto& e : b.top_monomials())
        b.set(e, random_rational(rng));
    return b;
}

/// Sign pattern of p on a dense sample of the domain including large |t|.
std::set<int> sampled_signs(const UniPoly& p, const Domain& d)
{
    std::set<int> signs;
    for (int i = -400; i <= 400; ++i) {
        Rational t = fraction(i, 20);
        if (d.contains(t))
            signs.insert(p.sign_at(t));
    }
    for (int big : {1000, 100000, -1000, -100000})
        if (d.contains(big))
            signs.insert(p.sign_at(big));
    return signs;
}

}  // namespace

TEST_CASE("bundle parsing and evaluation")
{
    BundleData b = BundleData::parse("group = U\nrank = 2\nm = 2\nc1^2 = 9\nc2 = 1\n");
    CHECK(b.m() == 2);
    CHECK(b.value({2, 0}) == 9);
    CHECK(BundleData::parse(b.to_text()).numbers() == b.numbers());
    BundleData missing(GroupSpec{GroupFamily::U, 2}, 2);
    missing.set("c2", 1);
    CHECK_THROWS_AS(missing.value({2, 0}), MissingClassNumber);
    CHECK_THROWS_AS(BundleData::parse("group = U\nrank = 2\nm = 2\nc1 = 1\n"), Error);
}

TEST_CASE("trichotomy agrees with the generic root count")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> half(1, 4), family(0, 1), zero(0, 9);
    int negative = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int m = 2 * half(rng), h = m / 2;
        Rational r = random_rational(rng), scale = zero(rng) == 0 ? Rational(0) : random_rational(rng);
        if (scale == 0 && zero(rng) < 5)
            scale = 1;
        CAPTURE(m);
        CAPTURE(r.get_str());
        CAPTURE(scale.get_str());
        bool u2 = family(rng) == 0;
        std::vector<Rational> v;
        Verdict cls;
        if (u2) {
            for (int j = 0; j <= h; ++j)
                v.push_back(rpow(r, h - j) * scale);
            cls = u2_case_analysis(bundle_from_u2_classes(m, v), r);
        } else {
            for (int j = 0; j <= h; ++j)
                v.push_back(rpow(r, j) * scale);
            cls = so4_case_analysis(bundle_from_so4_classes(m, v), r);
        }
        int expected = scale == 0 ? -1 : r == 0 ? 1 : r < 0 ? h : 0;
        CHECK(cls.orbit_count == expected);
        for (const auto& note : cls.notes)
            CHECK(note.find("closed form predicts") == std::string::npos);
        CHECK(cls.closed_form_nonvanishing == (expected == 0));
        CHECK(cls.nonvanishing() == (expected == 0));
        if (scale != 0 && r < 0) {
            ++negative;
            CHECK(static_cast<int>(cls.roots.size()) == m);
            for (const auto& root : cls.roots)
                CHECK(root.multiplicity == 1);
        }
    }
    CHECK(negative > 20);
}

TEST_CASE("inconsistent proportionality is rejected")
{
    CHECK_THROWS_AS(u2_case_analysis(bundle_from_u2_classes(4, {1, 2, 5}), Rational(2)), InconsistentProportionality);
}

TEST_CASE("8-dimensional criteria match the Sturm decision")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        Rational a = random_rational(rng, 6), b = random_rational(rng, 6), c = random_rational(rng, 6);
        Verdict u = check_fatness(bundle_from_u2_classes(4, {c, b, a}), OrbitCurve::rank2());
        CHECK(u.nonvanishing() == u2_dim8_criterion(a, b, c));
        Verdict s = check_fatness(bundle_from_so4_classes(4, {b, a, c}), OrbitCurve::rank2());
        CHECK(s.nonvanishing() == so4_dim8_criterion(a, b, c));
    }
}

TEST_CASE("decision soundness against dense sampling")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        GroupSpec g = trial % 2 ? GroupSpec{GroupFamily::U, 2} : GroupSpec{GroupFamily::SO_even, 2};
        BundleData b = random_bundle(rng, {g}, 4);
        OrbitCurve curve = OrbitCurve::rank2();
        Verdict v = check_fatness(b, curve);
        auto signs = sampled_signs(v.polynomial, curve.domain);
        if (v.nonvanishing()) {
            CHECK(signs.size() == 1);
            CHECK(signs.count(0) == 0);
            CHECK(v.polynomial.degree() == 4);
        } else if (!v.polynomial.is_zero()) {
            bool odd_root = false;
            for (const auto& r : v.roots)
                odd_root = odd_root || r.multiplicity % 2 == 1;
            if (odd_root)
                CHECK((signs.size() > 1 || signs.count(0) == 1));
            CHECK((!v.roots.empty() || v.polynomial.degree() < 4));
        }
    }
}

TEST_CASE("orbits pair t with -t and report infinity once")
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        BundleData b = random_bundle(rng, {GroupSpec{GroupFamily::U, 2}}, 4);
        Verdict v = check_fatness(b, OrbitCurve::rank2());
        if (v.polynomial.is_zero())
            continue;
        int nonneg = 0;
        for (const auto& r : v.roots)
            if (r.hi >= 0)
                ++nonneg;
        int infinity = 0;
        for (const auto& o : v.vanishing_orbits)
            infinity += o.at_infinity;
        CHECK(infinity == (v.polynomial.degree() < 4 ? 1 : 0));
        CHECK(v.orbit_count == nonneg + infinity);
    }
    // (c1^2 - 4 c2)^2 = 0: the leading coefficient vanishes
    Verdict v = check_fatness(bundle_from_u2_classes(4, {1, 1, 0}), OrbitCurve::rank2());
    int infinity = 0;
    for (const auto& o : v.vanishing_orbits)
        if (o.at_infinity) {
            ++infinity;
            CHECK(o.representative == std::vector<Rational>{1, -1});
        }
    CHECK(infinity == 1);
}

TEST_CASE("specialize is linear in the class numbers")
{
    std::mt19937 rng(13);
    for (const auto& g : std::vector<GroupSpec>{{GroupFamily::U, 2}, {GroupFamily::SO_even, 2}, {GroupFamily::Sp, 2}}) {
        WeinsteinForm f = standard_form({g}, 4);
        OrbitCurve curve = OrbitCurve::rank2();
        for (int trial = 0; trial < 5; ++trial) {
            BundleData a = random_bundle(rng, {g}, 4), b = random_bundle(rng, {g}, 4), sum({g}, 4);
            Rational lambda = random_rational(rng);
            for (const auto& e : sum.top_monomials())
                sum.set(e, a.value(e) + lambda * b.value(e));
            CHECK(specialize(f, sum, curve) == specialize(f, a, curve) + specialize(f, b, curve) * lambda);
        }
    }
    BundleData wrong(GroupSpec{GroupFamily::U, 2}, 2);
    CHECK_THROWS_AS(specialize(standard_form({GroupSpec{GroupFamily::U, 2}}, 4), wrong, OrbitCurve::rank2()),
                    DegreeMismatch);
}

TEST_CASE("orbit representatives")
{
    std::vector<GroupSpec> so4{{GroupFamily::SO_even, 2}};
    CHECK(canonical_orbit_representative(so4, {Rational(-3), Rational(3)}) == std::vector<Rational>{1, -1});
    std::vector<GroupSpec> u2{{GroupFamily::U, 2}};
    CHECK(canonical_orbit_representative(u2, {Rational(2), Rational(1, 2)}) == std::vector<Rational>{1, 4});
}

TEST_CASE("dimension restriction")
{
    CHECK(dimension_restriction(4, 3));
    CHECK(!dimension_restriction(4, 4));
    CHECK(dimension_restriction(8, 7));
    CHECK(!dimension_restriction(8, 10));
    CHECK(!dimension_restriction(16, 10));
    CHECK(dimension_restriction(16, 8));
    CHECK(!dimension_restriction(6, 2));
}

TEST_CASE("sphere bundle obstructions")
{
    // complex S^3 bundles: the closed form agrees with the Sturm path
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        BundleData b(GroupSpec{GroupFamily::U, 2}, 2);
        Rational c1sq = random_rational(rng), c2 = random_rational(rng);
        b.set("c1^2", c1sq);
        b.set("c2", c2);
        Verdict v = complex_sphere_check(b);
        CHECK(v.closed_form_nonvanishing.value() == v.nonvanishing());
        CHECK(complex_s3_closed_form(c1sq, c2) == v.nonvanishing());
    }
    // the complex family at t = 0 is h_m
    for (int n = 2; n <= 3; ++n)
        for (int m = 2; m <= 6; m += 2) {
            TFamily f = complex_sphere_family(n, m);
            auto c = proportionality(f.coefficient(0).poly(), complete_in_classes(f.basis, m, n).poly());
            CHECK(c.value_or(-1) > 0);
        }
    // octonionic S^7 bundles
    for (long k = -3; k <= 3; ++k) {
        OctonionicSphereBundle same{k, k};
        CHECK(real_sphere_check(same.real_data()).status == VerdictStatus::ObstructionViolated);
    }
    CHECK(real_sphere_check(OctonionicSphereBundle{2, 1}.real_data()).nonvanishing());
    CHECK(OctonionicSphereBundle{8, 4}.quaternionic_structure());
    CHECK(!OctonionicSphereBundle{6, 3}.complex_structure());
    CHECK(quaternionic_sphere_check(BundleData(GroupSpec{GroupFamily::Sp, 2}, 8)).status ==
          VerdictStatus::DimensionForbidden);
}

TEST_CASE("quaternionic families: corrected and shifted binomials")
{
    // one bracket scale per k; the two binomials agree only at n = 1
    for (int m = 2; m <= 8; m += 2) {
        CHECK(quaternionic_sphere_family(1, m).flatten() == quaternionic_sphere_family(1, m, true).flatten());
        auto c = proportionality(quaternionic_sphere_family(2, m).flatten(),
                                 quaternionic_sphere_family(2, m, true).flatten());
        if (m >= 4)
            CHECK(!c.has_value());
    }
    // at t = 0 the corrected family is a positive multiple of h_{m/2}
    for (int n = 2; n <= 3; ++n)
        for (int m = 2; m <= 8; m += 2) {
            TFamily f = quaternionic_sphere_family(n, m);
            auto c = proportionality(f.coefficient(0).poly(), h_pontrjagin(f.basis, m / 2, n).poly());
            CHECK(c.value_or(-1) > 0);
        }
}

TEST_CASE("Sp(n) x S closed form matches the product invariant")
{
    for (int n = 1; n <= 2; ++n)
        for (SKind kind : {SKind::Circle, SKind::Sp1})
            for (int m = 2; m <= 6; m += 2) {
                CAPTURE(n);
                CAPTURE(m);
                GroupSpec right = kind == SKind::Circle ? GroupSpec{GroupFamily::Torus, 1} : GroupSpec{GroupFamily::Sp, 1};
                TFamily generic = standard_form({GroupSpec{GroupFamily::Sp, n}, right}, m)
                                      .restrict(sp_times_s_curve(n).coordinates());
                auto c = proportionality(generic.flatten(), sp_times_s_closed_form(n, m, kind).flatten());
                CHECK(c.value_or(-1) > 0);
            }
}

TEST_CASE("lens bundles")
{
    for (int k = 0; k <= 12; ++k)
        CHECK(grassmannian_cbar(k) == grassmannian_cbar_closed_form(k));
    for (int m : {2, 4})
        for (long p = -4; p <= 4; ++p)
            for (long q = -4; q <= 4; ++q) {
                if (std::gcd(p, q) != 1 || p == q)
                    continue;
                ThresholdEnclosure th = lens_threshold(m, p, q);
                CHECK(th.lo <= th.hi);
                CHECK(th.hi - th.lo < Rational(1, 1000000));
                for (Rational r : {Rational(-3), Rational(-1, 3), Rational(-1, 50), Rational(1, 2)}) {
                    if (r >= th.lo && r <= th.hi)
                        continue;
                    std::vector<Rational> v;
                    for (int j = 0; j <= m / 2; ++j)
                        v.push_back(rpow(r, m / 2 - j));
                    LensReport rep = lens_check(p, q, bundle_from_u2_classes(m, v));
                    CAPTURE(p);
                    CAPTURE(q);
                    CAPTURE(r.get_str());
                    CHECK(rep.verdict.nonvanishing() == (r > th.hi));
                }
            }
    CHECK_THROWS_AS(lens_check(2, 4, bundle_from_u2_classes(2, {1, 1})), InvalidArgument);
}

TEST_CASE("SU(3) rows and roots")
{
    Su3Report rep = su3_analysis(Rational(1, 1000000000));
    Su3Rows ref = su3_reference_rows();
    for (int i = 0; i < 3; ++i)
        CHECK(rep.rows.rows[static_cast<std::size_t>(i)] == ref.rows[static_cast<std::size_t>(i)]);
    CHECK(rep.normalization > 0);
    CHECK(std::abs(rep.t0.approx() - 0.12920428618) < 1e-9);
    CHECK(std::abs(rep.r0.approx() - (-71 + 9 * std::sqrt(37.0)) / 54) < 1e-9);
    CHECK(std::abs(rep.r2.approx() - (-71 - 9 * std::sqrt(37.0)) / 54) < 1e-9);
    CHECK(std::abs(rep.r1.approx() - (15309 - std::sqrt(202479021.0)) / 21870) < 1e-9);
}
