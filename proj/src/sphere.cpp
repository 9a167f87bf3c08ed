#include "fatness/sphere.hpp"

namespace fatness {

SymExpr h_pontrjagin(const ClassBasis& basis, int k, int rank)
{
    return complete_in_classes(basis, k, rank);
}

namespace {

Verdict violated_if_vanishing(Verdict v)
{
    if (!v.vanishing_orbits.empty())
        v.status = VerdictStatus::ObstructionViolated;
    return v;
}

bool pontrjagin_family(GroupFamily f)
{
    return f == GroupFamily::SO_even || f == GroupFamily::SO_odd || f == GroupFamily::O_even ||
           f == GroupFamily::O_odd;
}

std::vector<Rational> unit_vector(int n)
{
    std::vector<Rational> y(static_cast<std::size_t>(n), Rational(0));
    y[0] = 1;
    return y;
}

}  // namespace

Verdict real_sphere_check(const BundleData& bundle)
{
    if (bundle.groups().size() != 1 || !pontrjagin_family(bundle.group().family))
        throw InvalidArgument("real sphere bundles need an orthogonal structure group");
    if (bundle.m() % 2 != 0)
        throw InvalidArgument("real sphere obstruction needs an even m");
    int n = bundle.group().rank;
    SymExpr h = h_pontrjagin(bundle.basis(), bundle.m() / 2, n);
    UniPoly p = UniPoly::constant(bundle.evaluate(h));
    Verdict v = analyze_polynomial(p, OrbitCurve::constant(unit_vector(n)), 0, bundle.groups(), Rational(1));
    if (p.is_zero())
        v.vanishing_orbits.front().representative = unit_vector(n);
    v.notes.push_back("h_" + std::to_string(bundle.m() / 2) + " = " + h.to_string());
    return violated_if_vanishing(v);
}

TFamily complex_sphere_family(int n, int m)
{
    return q_special_un(SpecialCase::E1PlusTE2, n, m);
}

bool complex_s3_closed_form(const Rational& c1_squared, const Rational& c2)
{
    if (c2 == 0)
        return c1_squared != 0;
    Rational s = c1_squared / c2;
    return s < 1 || s > 4;
}

Verdict complex_sphere_check(const BundleData& bundle, const Rational& precision)
{
    if (bundle.groups().size() != 1 || bundle.group().family != GroupFamily::U || bundle.group().rank < 2)
        throw InvalidArgument("complex sphere bundles need a U(n) structure group with n >= 2");
    if (bundle.m() % 2 != 0)
        throw InvalidArgument("complex sphere obstruction needs an even m");
    int n = bundle.group().rank, m = bundle.m();
    UniPoly p = complex_sphere_family(n, m).evaluate([&](const Exponent& e) { return bundle.value(e); });
    OrbitCurve curve = OrbitCurve::e1_plus_te2(n, Domain::at_most(0));
    Verdict v = violated_if_vanishing(analyze_polynomial(p, curve, m, bundle.groups(), precision));
    if (n == 2 && m == 2) {
        Rational c1sq = bundle.value({2, 0}), c2 = bundle.value({0, 1});
        v.closed_form_nonvanishing = complex_s3_closed_form(c1sq, c2);
        v.notes.push_back(c2 == 0 ? std::string("c2 = 0")
                                  : "c1^2 = s c2 with s = " + Rational(c1sq / c2).get_str() +
                                        "; the closed form passes iff s < 1 or s > 4");
    }
    return v;
}

TFamily quaternionic_sphere_family(int n, int m, bool shifted_binomial)
{
    if (n < 1 || m < 0 || m % 2 != 0)
        throw InvalidArgument("quaternionic family needs n >= 1 and even m");
    ClassBasis basis(ClassFamily::Pontrjagin, n);
    TFamily out(basis);
    int h2 = m / 2;
    if (n == 1) {
        out.add(0, SymExpr::generator(basis, 0).pow(h2));
        return out;
    }
    auto h = [&](int k) { return h_pontrjagin(basis, k, n); };
    int top = shifted_binomial ? m + 4 * n - 6 : m + 4 * n - 4;
    for (int k = 0; 2 * k <= h2; ++k) {
        SymExpr bracket = h(h2 - k) * h(k) - h(h2 - k + 1) * h(k - 1);
        bracket = bracket * Rational(binomial(top, 2 * n + 2 * k - 3));
        for (int s = k; s <= h2 - k; ++s)
            out.add(2 * s, bracket);
    }
    return out;
}

Verdict quaternionic_sphere_check(const BundleData& bundle, const Rational& precision)
{
    if (bundle.groups().size() != 1 || bundle.group().family != GroupFamily::Sp)
        throw InvalidArgument("quaternionic sphere bundles need an Sp(n) structure group");
    if (bundle.m() % 2 != 0)
        throw InvalidArgument("quaternionic sphere obstruction needs an even m");
    int n = bundle.group().rank, m = bundle.m();
    if (n >= 2 && !dimension_restriction(2L * m, 10)) {
        Verdict v;
        v.status = VerdictStatus::DimensionForbidden;
        v.notes.push_back("an sp(2)-fat subspace of dimension 10 is impossible over a base of dimension " +
                          std::to_string(2 * m));
        return v;
    }
    UniPoly p = quaternionic_sphere_family(n, m).evaluate([&](const Exponent& e) { return bundle.value(e); });
    OrbitCurve curve = n == 1 ? OrbitCurve::constant({1}) : OrbitCurve::e1_plus_te2(n, Domain::real_line());
    curve.symmetry = OrbitSymmetry::Negation;
    return violated_if_vanishing(analyze_polynomial(p, curve, m, bundle.groups(), precision));
}

OrbitCurve sp_times_s_curve(int n)
{
    if (n < 1)
        throw InvalidArgument("Sp(n) needs n >= 1");
    std::vector<Rational> base(static_cast<std::size_t>(n + 1), Rational(0)), slope = base;
    base[0] = 1;
    if (n >= 2)
        slope[1] = -1;
    base[static_cast<std::size_t>(n)] = -1;
    slope[static_cast<std::size_t>(n)] = 1;
    return OrbitCurve{std::move(base), std::move(slope), Domain::closed(0, 1), false, OrbitSymmetry::None};
}

TFamily sp_times_s_closed_form(int n, int m, SKind kind)
{
    if (n < 1 || m < 0 || m % 2 != 0)
        throw InvalidArgument("Sp(n) x S family needs n >= 1 and even m");
    GroupSpec left{GroupFamily::Sp, n};
    GroupSpec right = kind == SKind::Circle ? GroupSpec{GroupFamily::Torus, 1} : GroupSpec{GroupFamily::Sp, 1};
    ClassBasis basis = ClassBasis::product(left.x_basis(), right.x_basis());
    int roff = basis.generator_offset(1);
    SymExpr w = kind == SKind::Circle ? SymExpr::generator(basis, roff).pow(2) : SymExpr::generator(basis, roff);
    auto h = [&](int k) { return h_pontrjagin(basis, k, n); };
    UniPoly tm1 = UniPoly::linear(-1, 1);
    TFamily out(basis);
    for (int i = 0; 2 * i <= m; ++i) {
        int deg = m - 2 * i, half = deg / 2;
        Rational outer(binomial(m, 2 * i));
        if (kind == SKind::Sp1)
            outer /= 2 * i + 1;
        std::vector<std::pair<UniPoly, SymExpr>> pieces;
        if (n == 1) {
            // Haar-normalized Sp(1) invariant at e1: p1^(deg/2) / (deg + 1)
            pieces.emplace_back(UniPoly::constant(fraction(1, deg + 1)), SymExpr::generator(basis, 0).pow(half));
        } else {
            // Haar normalization of the Sp(n) factor at degree deg
            Rational norm = fraction(factorial(2 * n - 1) * factorial(2 * n - 3) * factorial(deg), factorial(deg + 4 * n - 4));
            for (int k = 0; 2 * k <= half; ++k) {
                SymExpr bracket = h(half - k) * h(k) - h(half - k + 1) * h(k - 1);
                std::vector<Rational> ts(static_cast<std::size_t>(2 * (half - k) + 1), Rational(0));
                for (int s = k; s <= half - k; ++s)
                    ts[static_cast<std::size_t>(2 * s)] = 1;
                pieces.emplace_back(UniPoly(ts) * (norm * Rational(binomial(deg + 4 * n - 4, 2 * n + 2 * k - 3))),
                                    bracket);
            }
        }
        UniPoly factor = tm1.pow(2 * i) * outer;
        for (const auto& [tp, cls] : pieces) {
            UniPoly full = factor * tp;
            for (int d = 0; d <= full.degree(); ++d)
                if (full.coefficient(d) != 0)
                    out.add(d, w.pow(i) * cls * full.coefficient(d));
        }
    }
    return out;
}

Verdict sp_times_s_check(const BundleData& bundle, SKind kind, const Rational& precision)
{
    const auto& g = bundle.groups();
    bool ok = g.size() == 2 && g[0].family == GroupFamily::Sp &&
              (kind == SKind::Circle ? (g[1].family == GroupFamily::Torus && g[1].rank == 1)
                                     : (g[1].family == GroupFamily::Sp && g[1].rank == 1));
    if (!ok)
        throw InvalidArgument("Sp(n) x S check needs a product bundle Sp(n) x " +
                              std::string(kind == SKind::Circle ? "S^1" : "Sp(1)"));
    if (bundle.m() % 2 != 0)
        throw InvalidArgument("Sp(n) x S obstruction needs an even m");
    OrbitCurve curve = sp_times_s_curve(g[0].rank);
    UniPoly p = specialize(standard_form(g, bundle.m()), bundle, curve);
    return violated_if_vanishing(analyze_polynomial(p, curve, bundle.m(), g, precision));
}

BundleData OctonionicSphereBundle::real_data() const
{
    BundleData d(GroupSpec{GroupFamily::SO_even, 4}, 4);
    d.set("p1^2", 0);
    d.set("p2", p2());
    d.set("e", euler());
    return d;
}

}  // namespace fatness
