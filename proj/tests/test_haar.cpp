#include "fatness/haar.hpp"

#include <doctest.h>

#include <cmath>

using namespace fatness;

namespace {

McConfig config(GroupSpec g, long samples, std::uint64_t seed = 42, int workers = 0)
{
    McConfig c;
    c.group = g;
    c.samples = samples;
    c.seed = seed;
    c.chunk_size = 5000;
    c.workers = workers;
    return c;
}

bool within(const McEstimate& e, double target) { return std::abs(e.estimate - target) < 4 * e.std_error; }

const std::vector<GroupSpec> kSampled{
    {GroupFamily::U, 2}, {GroupFamily::U, 3},      {GroupFamily::SO_even, 2},
    {GroupFamily::SO_odd, 1}, {GroupFamily::SO_odd, 2}, {GroupFamily::Sp, 1}, {GroupFamily::Sp, 2},
};

}  // namespace

TEST_CASE("splitmix64 reference values")
{
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(splitmix64(1) != splitmix64(2));
}

TEST_CASE("samples lie in the group")
{
    std::mt19937_64 rng(7);
    for (const auto& g : kSampled)
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::MatrixXcd m = haar_sample(g, rng);
            long n = m.rows();
            CHECK((m.adjoint() * m - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-10);
            if (g.family == GroupFamily::SO_even || g.family == GroupFamily::SO_odd) {
                CHECK(m.imag().norm() < 1e-12);
                CHECK(std::abs(m.determinant() - std::complex<double>(1)) < 1e-10);
            }
            if (g.family == GroupFamily::Sp) {
                long k = n / 2;
                Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(n, n);
                j.topRightCorner(k, k) = -Eigen::MatrixXcd::Identity(k, k);
                j.bottomLeftCorner(k, k) = Eigen::MatrixXcd::Identity(k, k);
                CHECK((m.transpose() * j * m - j).norm() < 1e-10);
            }
        }
}

TEST_CASE("torus elements are skew-Hermitian and orthonormal")
{
    for (const auto& g : kSampled) {
        int n = g.torus_variables();
        std::vector<double> e1(static_cast<std::size_t>(n), 0.0), e2 = e1;
        e1[0] = 1;
        Eigen::MatrixXcd t1 = torus_element(g, e1);
        CHECK((t1 + t1.adjoint()).norm() < 1e-12);
        Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(t1.rows(), t1.cols());
        CHECK(std::abs(adjoint_pairing(g, id, t1, t1) - 1) < 1e-12);
        if (n >= 2) {
            e2[1] = 1;
            CHECK(std::abs(adjoint_pairing(g, id, t1, torus_element(g, e2))) < 1e-12);
        }
    }
    CHECK_THROWS_AS(torus_element(GroupSpec{GroupFamily::U, 2}, {1.0}), InvalidArgument);
}

TEST_CASE("U(1) moments are exact")
{
    for (int k = 0; k <= 4; ++k) {
        McEstimate e = mc_q({2.0}, {3.0}, k, config(GroupSpec{GroupFamily::U, 1}, 1000));
        CHECK(e.estimate == doctest::Approx(std::pow(6.0, k)));
        CHECK(e.std_error < 1e-9 * std::pow(6.0, k) + 1e-12);
    }
}

TEST_CASE("SO(3) moments are 1/(2k+1)")
{
    for (int k = 1; k <= 3; ++k) {
        McEstimate e = mc_q({1.0}, {1.0}, 2 * k, config(GroupSpec{GroupFamily::SO_odd, 1}, 200000));
        CAPTURE(k);
        CHECK(within(e, 1.0 / (2 * k + 1)));
    }
}

TEST_CASE("odd moments vanish for orthogonal and symplectic groups")
{
    for (const auto& g : kSampled) {
        if (g.family == GroupFamily::U)
            continue;
        int n = g.torus_variables();
        std::vector<double> y(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            y[static_cast<std::size_t>(i)] = 1.0 + i;
            x[static_cast<std::size_t>(i)] = 2.0 - 0.5 * i;
        }
        for (int k : {1, 3}) {
            CAPTURE(g.name());
            McEstimate e = mc_q(y, x, k, config(g, 40000));
            CHECK(within(e, 0.0));
        }
    }
}

TEST_CASE("estimates do not depend on the worker count")
{
    GroupSpec g{GroupFamily::Sp, 2};
    McEstimate one = mc_q({1.0, 0.5}, {0.3, 1.0}, 4, config(g, 30000, 9, 1));
    McEstimate four = mc_q({1.0, 0.5}, {0.3, 1.0}, 4, config(g, 30000, 9, 4));
    CHECK(one.estimate == four.estimate);
    CHECK(one.std_error == four.std_error);
    McEstimate other_seed = mc_q({1.0, 0.5}, {0.3, 1.0}, 4, config(g, 30000, 10, 4));
    CHECK(other_seed.estimate != one.estimate);
}

TEST_CASE("adjoint invariance under the Weyl group")
{
    struct Case {
        GroupSpec g;
        std::vector<double> y, moved;
    };
    std::vector<Case> cases{
        {{GroupFamily::U, 2}, {1.0, 0.25}, {0.25, 1.0}},
        {{GroupFamily::SO_even, 2}, {1.0, 0.5}, {-1.0, -0.5}},
        {{GroupFamily::SO_odd, 2}, {1.0, 0.5}, {-0.5, 1.0}},
        {{GroupFamily::Sp, 2}, {1.0, 0.5}, {0.5, -1.0}},
    };
    std::vector<double> x{0.7, -0.2};
    std::vector<Rational> xq{fraction(7, 10), fraction(-1, 5)};
    for (const auto& c : cases) {
        CAPTURE(c.g.name());
        std::vector<Rational> yq;
        for (double v : c.y)
            yq.push_back(Rational(v));
        double exact = Rational(symbolic_q(c.g, yq, xq, 4) / symbolic_q(c.g, yq, xq, 0)).get_d();
        // both Weyl images estimate the same exact moment
        McEstimate a = mc_q(c.y, x, 4, config(c.g, 200000, 1));
        McEstimate b = mc_q(c.moved, x, 4, config(c.g, 200000, 2));
        CHECK(within(a, exact));
        CHECK(within(b, exact));
    }
}

TEST_CASE("ratio validation")
{
    McConfig u2 = config(GroupSpec{GroupFamily::U, 2}, 100000);
    std::vector<Rational> y{1, 0}, x{1, 2};
    RatioReport good = ratio_validate(y, x, 4, 2, u2);
    CHECK(good.pass);
    CHECK(!good.zero_zero);
    RatioReport bad = ratio_validate(y, x, 4, 2, u2, Rational(11, 10));
    CHECK(!bad.pass);
    // central direction: zero variance, exact agreement
    RatioReport central = ratio_validate({1, 1}, {1, 1}, 4, 2, u2);
    CHECK(central.pass);
    CHECK(central.symbolic_ratio == 4);

    McConfig so4 = config(GroupSpec{GroupFamily::SO_even, 2}, 50000);
    RatioReport odd = ratio_validate({1, 2}, {2, 1}, 3, 1, so4);
    CHECK(odd.zero_zero);
    CHECK(odd.pass);
    CHECK_THROWS_AS(ratio_validate({1, 2}, {2, 1}, 4, 1, so4), DegenerateDenominator);
}

TEST_CASE("symbolic values match simple closed forms")
{
    // SO(3): q^{2k} / q^0 = |y|^{2k} |x|^{2k} / (2k+1)
    GroupSpec so3{GroupFamily::SO_odd, 1};
    for (int k = 1; k <= 3; ++k)
        CHECK(symbolic_q(so3, {Rational(1)}, {Rational(1)}, 2 * k) / symbolic_q(so3, {Rational(1)}, {Rational(1)}, 0) ==
              fraction(1, 2 * k + 1));
    CHECK_THROWS_AS(mc_q({1.0}, {1.0}, 2, config(GroupSpec{GroupFamily::G2, 2}, 10)), UnsupportedGroup);
}
