#include "fatness/lens.hpp"

#include <mpfr.h>

#include <numeric>
#include <sstream>

namespace fatness {

namespace {

ClassBasis chern2()
{
    return ClassBasis(ClassFamily::Chern, 2);
}

Rational to_rational(const mpfr_t x)
{
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

}  // namespace

SymExpr grassmannian_cbar(int k)
{
    if (k < 0)
        throw InvalidArgument("cbar index must be non-negative");
    ClassBasis b = chern2();
    SymExpr c1 = SymExpr::generator(b, 0), c2 = SymExpr::generator(b, 1);
    SymExpr prev = SymExpr::zero(b), cur = SymExpr::constant(b, 1);
    for (int i = 1; i <= k; ++i) {
        SymExpr next = Rational(-1) * (c1 * cur) - c2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

SymExpr grassmannian_cbar_closed_form(int k)
{
    if (k < 0)
        throw InvalidArgument("cbar index must be non-negative");
    ClassBasis b = chern2();
    SymExpr c1 = SymExpr::generator(b, 0), c2 = SymExpr::generator(b, 1);
    SymExpr d = c1 * c1 - c2 * Rational(4);
    SymExpr sum = SymExpr::zero(b);
    for (int j = 0; 2 * j <= k; ++j)
        sum += c1.pow(k - 2 * j) * d.pow(j) * Rational(binomial(k + 1, 2 * j + 1));
    Rational scale = 1;
    for (int i = 0; i < k; ++i)
        scale *= Rational(-1, 2);
    return sum * scale;
}

ThresholdEnclosure lens_threshold(int m, long p, long q)
{
    if (m < 1 || p == q)
        throw InvalidArgument("threshold needs m >= 1 and p != q");
    const mpfr_prec_t prec = 200;  // well beyond 50 decimal digits
    ThresholdEnclosure out;
    Rational ratio = fraction(p + q, p - q);
    Rational slope2 = ratio * ratio;
    // -tan^2(pi / (2(m+1))) * slope2; tan is increasing on [0, pi/2)
    Rational bounds[2];
    for (int side = 0; side < 2; ++side) {
        mpfr_rnd_t rnd = side == 0 ? MPFR_RNDD : MPFR_RNDU;
        mpfr_t x, t;
        mpfr_inits2(prec, x, t, static_cast<mpfr_ptr>(nullptr));
        mpfr_const_pi(x, rnd);
        mpfr_div_ui(x, x, static_cast<unsigned long>(2 * (m + 1)), rnd);
        mpfr_tan(t, x, rnd);
        mpfr_sqr(t, t, rnd);
        bounds[side] = to_rational(t);
        mpfr_clears(x, t, static_cast<mpfr_ptr>(nullptr));
    }
    // every step is monotone in its input and rounded outward, so bounds[0] <= tan^2 <= bounds[1]
    out.lo = Rational(-bounds[1] * slope2);
    out.hi = Rational(-bounds[0] * slope2);
    mpfr_t mid;
    mpfr_init2(mid, prec);
    Rational center = Rational((out.lo + out.hi) / 2);
    mpfr_set_q(mid, center.get_mpq_t(), MPFR_RNDN);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.50Rg", mid);
    out.decimal = buf;
    mpfr_clear(mid);
    return out;
}

std::string LensReport::report() const
{
    std::ostringstream os;
    os << "lens fibre U(2)/S^1_{" << p << "," << q << "}\n";
    os << verdict.report();
    if (r)
        os << "r: " << r->get_str() << '\n';
    if (threshold)
        os << "threshold (display only): " << threshold->decimal << '\n';
    return os.str();
}

LensReport lens_check(long p, long q, const BundleData& bundle, const Rational& precision)
{
    if (bundle.groups().size() != 1 || bundle.group() != GroupSpec{GroupFamily::U, 2})
        throw InvalidArgument("lens bundles need U(2) data");
    if (bundle.m() % 2 != 0)
        throw InvalidArgument("lens check needs an even m");
    if (std::gcd(p, q) != 1)
        throw InvalidArgument("lens slope (p, q) must satisfy gcd(p, q) = 1");
    int m = bundle.m();
    LensReport rep;
    rep.p = p;
    rep.q = q;
    ReducedFamily fam = q_u2_reduced(m);
    UniPoly poly = fam.family.evaluate([&](const Exponent& e) { return bundle.value(e); });

    ClassBasis b = bundle.basis();
    SymExpr c1 = SymExpr::generator(b, 0), c2 = SymExpr::generator(b, 1);
    SymExpr d = c1 * c1 - c2 * Rational(4);
    Rational dm = bundle.evaluate(d.pow(m / 2));
    if (dm != 0) {
        Rational r = bundle.evaluate(c1.pow(2) * d.pow(m / 2 - 1)) / dm;
        bool proportional = true;
        Rational rp = 1;
        for (int j = m / 2; j >= 0; --j) {
            if (bundle.evaluate(c1.pow(m - 2 * j) * d.pow(j)) != rp * dm)
                proportional = false;
            rp *= r;
        }
        if (proportional)
            rep.r = r;
    }

    if (p == q) {
        if (p != 1 && p != -1)
            throw DegenerateSlope("p = q needs the normalized slope (1, 1)");
        OrbitCurve curve = OrbitCurve::rank2(Domain(std::vector<Interval>{}), true);
        rep.verdict = analyze_polynomial(poly, curve, m, bundle.groups(), precision);
        rep.verdict.notes.push_back("slope (1, 1): only (c1^2 - 4 c2)^(m/2) is tested");
        return rep;
    }
    Rational bound = abs(fraction(p + q, p - q));
    OrbitCurve curve = OrbitCurve::rank2(Domain::at_least(bound), true);
    rep.verdict = analyze_polynomial(poly, curve, m, bundle.groups(), precision);
    rep.verdict.notes.push_back("orbits t >= |(p+q)/(p-q)| = " + bound.get_str() + " and the limit (1, -1)");
    rep.threshold = lens_threshold(m, p, q);
    return rep;
}

}  // namespace fatness
