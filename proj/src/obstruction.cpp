#include "fatness/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fatness {

std::vector<UniPoly> OrbitCurve::coordinates() const
{
    std::vector<UniPoly> out;
    for (std::size_t i = 0; i < base.size(); ++i)
        out.push_back(UniPoly::linear(base[i], slope[i]));
    return out;
}

std::vector<Rational> OrbitCurve::at(const Rational& t) const
{
    std::vector<Rational> out;
    for (std::size_t i = 0; i < base.size(); ++i)
        out.push_back(Rational(base[i] + t * slope[i]));
    return out;
}

std::string OrbitCurve::describe() const
{
    std::ostringstream os;
    os << "y(t) = (";
    for (std::size_t i = 0; i < base.size(); ++i)
        os << (i ? ", " : "") << UniPoly::linear(base[i], slope[i]).to_string();
    os << "), t in " << domain.to_string();
    if (includes_infinity_orbit)
        os << " plus the limit orbit at infinity";
    return os.str();
}

OrbitCurve OrbitCurve::rank2(Domain domain, bool infinity)
{
    return OrbitCurve{{1, 1}, {1, -1}, std::move(domain), infinity, OrbitSymmetry::Negation};
}

OrbitCurve OrbitCurve::su3()
{
    return OrbitCurve{{1, 0, -1}, {0, 1, -1}, Domain::closed(0, 1), false, OrbitSymmetry::Reciprocal};
}

OrbitCurve OrbitCurve::constant(std::vector<Rational> y)
{
    std::vector<Rational> zero(y.size(), Rational(0));
    return OrbitCurve{std::move(y), std::move(zero), Domain::point(0), false, OrbitSymmetry::None};
}

OrbitCurve OrbitCurve::e1_plus_te2(int n, Domain domain)
{
    if (n < 2)
        throw InvalidArgument("e1 + t e2 needs at least two coordinates");
    std::vector<Rational> b(static_cast<std::size_t>(n), Rational(0)), s = b;
    b[0] = 1;
    s[1] = 1;
    return OrbitCurve{std::move(b), std::move(s), std::move(domain), false, OrbitSymmetry::None};
}

std::string to_string(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::NonvanishingEverywhere:
        return "NonvanishingEverywhere";
    case VerdictStatus::VanishesOnOrbits:
        return "VanishesOnOrbits";
    case VerdictStatus::ObstructionViolated:
        return "ObstructionViolated";
    case VerdictStatus::DimensionForbidden:
        return "DimensionForbidden";
    }
    return "?";
}

namespace {

std::string vector_string(const std::vector<Rational>& y)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < y.size(); ++i)
        os << (i ? ", " : "") << y[i].get_str();
    os << ')';
    return os.str();
}

}  // namespace

std::string Verdict::report() const
{
    std::ostringstream os;
    os << "status: " << to_string(status) << '\n';
    if (!polynomial.is_zero() || status != VerdictStatus::DimensionForbidden)
        os << "polynomial: " << polynomial.to_string() << '\n';
    if (!domain.parts().empty())
        os << "domain: " << domain.to_string() << '\n';
    if (classification)
        os << "case: " << classification << '\n';
    for (const auto& r : roots)
        os << "root: " << r.to_string() << '\n';
    os << "vanishing orbits: " << orbit_count << '\n';
    for (const auto& o : vanishing_orbits) {
        os << "orbit: ";
        if (o.whole_curve)
            os << "every parameter";
        else if (o.at_infinity)
            os << "t -> infinity";
        else
            os << "t = " << o.parameter.to_string();
        if (!o.representative.empty())
            os << "  y = " << vector_string(o.representative);
        if (o.members.size() > 1) {
            os << "  (identified with";
            for (std::size_t i = 1; i < o.members.size(); ++i)
                os << ' ' << o.members[i].to_string();
            os << ')';
        }
        os << '\n';
    }
    for (const auto& n : notes)
        os << "note: " << n << '\n';
    return os.str();
}

WeinsteinForm standard_form(const std::vector<GroupSpec>& groups, int m)
{
    if (groups.size() == 2)
        return q_product(groups[0], groups[1], m);
    if (groups.size() != 1)
        throw InvalidArgument("a form needs one group or a product of two");
    const GroupSpec& g = groups[0];
    if (g.family == GroupFamily::G2)
        return q_g2(m);
    return haar_normalized_form(g, m);
}

UniPoly specialize(const WeinsteinForm& form, const BundleData& bundle, const OrbitCurve& curve)
{
    if (form.degree() != bundle.m())
        throw DegreeMismatch("form degree " + std::to_string(form.degree()) + " does not match m = " +
                             std::to_string(bundle.m()));
    if (!(form.x_basis() == bundle.basis()))
        throw InvalidArgument("form and bundle use different characteristic classes");
    TFamily family = form.restrict(curve.coordinates());
    return family.evaluate([&](const Exponent& e) { return bundle.value(e); });
}

namespace {

bool domain_symmetric(const Domain& d)
{
    const auto& parts = d.parts();
    std::size_t n = parts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Interval& a = parts[i];
        const Interval& b = parts[n - 1 - i];
        auto mirror = [](const Bound& x) {
            if (x.kind == Bound::Kind::NegInf)
                return Bound::pos_inf();
            if (x.kind == Bound::Kind::PosInf)
                return Bound::neg_inf();
            return Bound::at(-x.value, x.closed);
        };
        Bound lo = mirror(b.hi), hi = mirror(b.lo);
        auto same = [](const Bound& x, const Bound& y) {
            return x.kind == y.kind && (!x.finite() || (x.value == y.value && x.closed == y.closed));
        };
        if (!same(a.lo, lo) || !same(a.hi, hi))
            return false;
    }
    return true;
}

Rational midpoint(const RootEnclosure& r)
{
    return Rational((r.lo + r.hi) / 2);
}

std::vector<std::vector<Rational>> block_images(const GroupSpec& g, const std::vector<Rational>& y)
{
    int n = static_cast<int>(y.size());
    std::vector<std::vector<Rational>> out;
    bool perms = g.family != GroupFamily::Torus;
    bool any_flip = g.family == GroupFamily::SO_odd || g.family == GroupFamily::O_odd || g.family == GroupFamily::Sp ||
                    g.family == GroupFamily::O_even;
    bool even_flip = g.family == GroupFamily::SO_even;
    bool global_flip = g.family == GroupFamily::G2;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            int flips = __builtin_popcount(static_cast<unsigned>(mask));
            bool ok = mask == 0 || any_flip || (even_flip && flips % 2 == 0) ||
                      (global_flip && mask == (1 << n) - 1);
            if (!ok)
                continue;
            std::vector<Rational> im(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                Rational v = y[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
                im[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? Rational(-v) : v;
            }
            out.push_back(std::move(im));
        }
        if (!perms)
            break;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

std::vector<Rational> canonical_orbit_representative(const std::vector<GroupSpec>& groups, std::vector<Rational> y)
{
    if (std::all_of(y.begin(), y.end(), [](const Rational& v) { return v == 0; }))
        throw ZeroVector();
    Integer l = 1, g = 0;
    for (const auto& v : y)
        l = lcm(l, Integer(v.get_den()));
    for (auto& v : y) {
        v *= l;
        g = gcd(g, Integer(abs(v.get_num())));
    }
    for (auto& v : y)
        v /= g;
    std::size_t total = 0;
    for (const auto& gr : groups)
        total += static_cast<std::size_t>(gr.torus_variables());
    if (total != y.size())
        return y;
    std::vector<std::vector<Rational>> images{{}};
    std::size_t off = 0;
    for (const auto& gr : groups) {
        auto n = static_cast<std::size_t>(gr.torus_variables());
        std::vector<Rational> block(y.begin() + static_cast<long>(off), y.begin() + static_cast<long>(off + n));
        std::vector<std::vector<Rational>> next;
        for (const auto& head : images)
            for (const auto& b : block_images(gr, block)) {
                auto v = head;
                v.insert(v.end(), b.begin(), b.end());
                next.push_back(std::move(v));
            }
        images = std::move(next);
        off += n;
    }
    std::optional<std::vector<Rational>> best, best_any;
    for (const auto& im : images) {
        if (!best_any || im < *best_any)
            best_any = im;
        if (im[0] > 0 && (!best || im < *best))
            best = im;
    }
    return best ? *best : *best_any;
}

Verdict analyze_polynomial(const UniPoly& p, const OrbitCurve& curve, int formal_degree,
                           const std::vector<GroupSpec>& groups, const Rational& precision)
{
    Verdict v;
    v.polynomial = p;
    v.domain = curve.domain;
    if (p.is_zero()) {
        v.status = VerdictStatus::VanishesOnOrbits;
        v.orbit_count = -1;
        VanishingOrbit o;
        o.whole_curve = true;
        v.vanishing_orbits.push_back(o);
        v.notes.push_back("the invariant vanishes identically along " + curve.describe());
        return v;
    }
    if (p.degree() > formal_degree)
        throw InvalidArgument("specialized polynomial exceeds the formal degree");
    v.roots = isolate_roots(p, curve.domain, precision);
    std::sort(v.roots.begin(), v.roots.end(),
              [](const RootEnclosure& a, const RootEnclosure& b) { return midpoint(a) < midpoint(b); });

    auto make_orbit = [&](const RootEnclosure& r) {
        VanishingOrbit o;
        o.parameter = r;
        o.members.push_back(r);
        if (r.exact()) {
            auto y = curve.at(r.lo);
            if (std::any_of(y.begin(), y.end(), [](const Rational& x) { return x != 0; }))
                o.representative = canonical_orbit_representative(groups, y);
        }
        return o;
    };

    bool grouped = false;
    if (curve.symmetry == OrbitSymmetry::Negation && p == p.reflected() && domain_symmetric(curve.domain)) {
        std::vector<RootEnclosure> neg, nonneg;
        for (const auto& r : v.roots)
            (r.exact() ? r.lo >= 0 : midpoint(r) > 0) ? nonneg.push_back(r) : neg.push_back(r);
        std::size_t zero = (!nonneg.empty() && nonneg.front().exact() && nonneg.front().lo == 0) ? 1 : 0;
        if (neg.size() + zero == nonneg.size()) {
            grouped = true;
            for (std::size_t i = 0; i < nonneg.size(); ++i) {
                VanishingOrbit o = make_orbit(nonneg[i]);
                if (i >= zero)
                    o.members.push_back(neg[neg.size() - 1 - (i - zero)]);
                v.vanishing_orbits.push_back(std::move(o));
            }
            if (!neg.empty())
                v.notes.push_back("parameters t and -t give the same adjoint orbit; t >= 0 representatives shown");
        }
    }
    if (!grouped)
        for (const auto& r : v.roots)
            v.vanishing_orbits.push_back(make_orbit(r));
    if (curve.symmetry == OrbitSymmetry::Reciprocal)
        v.notes.push_back("t and 1/t parametrize the same orbit; the domain is a fundamental domain");

    if (curve.includes_infinity_orbit && p.coefficient(formal_degree) == 0) {
        VanishingOrbit o;
        o.at_infinity = true;
        o.representative = canonical_orbit_representative(groups, curve.slope);
        v.vanishing_orbits.push_back(std::move(o));
    }
    for (const auto& r : v.roots)
        if (r.multiplicity > 1)
            v.notes.push_back("root " + r.to_string() + " is repeated; orbits are counted once");
    v.orbit_count = static_cast<int>(v.vanishing_orbits.size());
    v.status = v.vanishing_orbits.empty() ? VerdictStatus::NonvanishingEverywhere : VerdictStatus::VanishesOnOrbits;
    return v;
}

Verdict check_fatness(const BundleData& bundle, const OrbitCurve& curve, const Rational& precision)
{
    WeinsteinForm form = standard_form(bundle.groups(), bundle.m());
    UniPoly p = specialize(form, bundle, curve);
    return analyze_polynomial(p, curve, bundle.m(), bundle.groups(), precision);
}

bool dimension_restriction(long base_dim, long fat_subspace_dim)
{
    if (base_dim < 1)
        throw InvalidArgument("base dimension must be positive");
    long e = 0;
    while (base_dim % 2 == 0) {
        base_dim /= 2;
        ++e;
    }
    long b = e / 4, c = e % 4;
    return fat_subspace_dim <= (1L << c) + 8 * b - 1;
}

namespace {

void require_group(const BundleData& bundle, GroupFamily f, int rank, const char* what)
{
    if (bundle.groups().size() != 1 || bundle.group().family != f || bundle.group().rank != rank)
        throw InvalidArgument(std::string(what) + " needs a single " + GroupSpec{f, rank}.name() + " bundle");
    if (bundle.m() % 2 != 0)
        throw InvalidArgument(std::string(what) + " needs an even m");
}

Verdict closed_form_cross_check(const BundleData& bundle, char cls, const Rational& precision)
{
    int m = bundle.m();
    int expected = cls == 'a' ? -1 : cls == 'b' ? 1 : cls == 'c' ? m / 2 : 0;
    Verdict v = check_fatness(bundle, OrbitCurve::rank2(), precision);
    v.classification = cls;
    v.closed_form_nonvanishing = cls == 'd';
    if (v.orbit_count != expected)
        v.notes.push_back("closed form predicts " + std::to_string(expected) + " vanishing orbits, Sturm found " +
                          std::to_string(v.orbit_count));
    return v;
}

Rational rpow(const Rational& r, int e)
{
    Rational out = 1;
    for (int i = 0; i < e; ++i)
        out *= r;
    return out;
}

}  // namespace

Verdict u2_case_analysis(const BundleData& bundle, const Rational& r, const Rational& precision)
{
    require_group(bundle, GroupFamily::U, 2, "u2_case_analysis");
    int m = bundle.m(), h = m / 2;
    const ClassBasis& b = bundle.basis();
    SymExpr c1 = SymExpr::generator(b, 0), c2 = SymExpr::generator(b, 1);
    SymExpr d = c1 * c1 - c2 * Rational(4);
    Rational dm = bundle.evaluate(d.pow(h));
    for (int j = 0; j <= h; ++j) {
        Rational lhs = bundle.evaluate(c1.pow(m - 2 * j) * d.pow(j));
        if (lhs != rpow(r, h - j) * dm)
            throw InconsistentProportionality("c1^2 = r (c1^2 - 4 c2) fails on c1^" + std::to_string(m - 2 * j) +
                                         " (c1^2 - 4 c2)^" + std::to_string(j));
    }
    char cls = dm == 0 ? 'a' : r == 0 ? 'b' : r < 0 ? 'c' : 'd';
    return closed_form_cross_check(bundle, cls, precision);
}

Verdict so4_case_analysis(const BundleData& bundle, const Rational& r, const Rational& precision)
{
    require_group(bundle, GroupFamily::SO_even, 2, "so4_case_analysis");
    int h = bundle.m() / 2;
    const ClassBasis& b = bundle.basis();
    SymExpr p1 = SymExpr::generator(b, 0), e = SymExpr::generator(b, 2);
    SymExpr lo = p1 - e * Rational(2), hi = p1 + e * Rational(2);
    Rational am = bundle.evaluate(lo.pow(h));
    for (int j = 0; j <= h; ++j) {
        Rational lhs = bundle.evaluate(lo.pow(h - j) * hi.pow(j));
        if (lhs != rpow(r, j) * am)
            throw InconsistentProportionality("p1 + 2e = r (p1 - 2e) fails on (p1-2e)^" + std::to_string(h - j) +
                                         " (p1+2e)^" + std::to_string(j));
    }
    char cls = am == 0 ? 'a' : r == 0 ? 'b' : r < 0 ? 'c' : 'd';
    return closed_form_cross_check(bundle, cls, precision);
}

bool u2_dim8_criterion(const Rational& a, const Rational& b, const Rational& c)
{
    if (5 * b * b < a * c)
        return true;
    return a != 0 && b != 0 && c != 0 && sgn(a) == sgn(b) && sgn(b) == sgn(c);
}

bool so4_dim8_criterion(const Rational& x, const Rational& y, const Rational& z)
{
    if (25 * x * x < 9 * y * z)
        return true;
    return x != 0 && y != 0 && z != 0 && sgn(x) == sgn(y) && sgn(y) == sgn(z);
}

BundleData bundle_from_u2_classes(int m, const std::vector<Rational>& v)
{
    if (m % 2 != 0 || static_cast<int>(v.size()) != m / 2 + 1)
        throw InvalidArgument("U(2) class data needs m even and m/2 + 1 values");
    BundleData data(GroupSpec{GroupFamily::U, 2}, m);
    // c1^(m-2k) c2^k = 4^-k sum_i binom(k,i) (-1)^i c1^(m-2i) D^i
    for (int k = 0; k <= m / 2; ++k) {
        Rational s = 0;
        for (int i = 0; i <= k; ++i)
            s += Rational(binomial(k, i)) * (i % 2 ? -1 : 1) * v[static_cast<std::size_t>(i)];
        data.set(Exponent{m - 2 * k, k}, Rational(s / Rational(Integer(1) << (2 * k))));
    }
    return data;
}

BundleData bundle_from_so4_classes(int m, const std::vector<Rational>& w)
{
    if (m % 2 != 0 || static_cast<int>(w.size()) != m / 2 + 1)
        throw InvalidArgument("SO(4) class data needs m even and m/2 + 1 values");
    BundleData data(GroupSpec{GroupFamily::SO_even, 2}, m);
    // p1 = (A+B)/2, e = (B-A)/4 with A = p1 - 2e, B = p1 + 2e; p2 = e^2
    for (const auto& mono : data.top_monomials()) {
        int a = mono[0], s = 2 * mono[1] + mono[2];
        Rational val = 0;
        for (int i = 0; i <= a; ++i)
            for (int l = 0; l <= s; ++l) {
                int j = i + l;
                Rational c = Rational(binomial(a, i) * binomial(s, l)) * ((s - l) % 2 ? -1 : 1);
                val += c * w[static_cast<std::size_t>(j)];
            }
        val /= Rational(Integer(1) << (a + 2 * s));
        data.set(mono, val);
    }
    return data;
}

bool normal_reduction_check(const GroupSpec& left, const GroupSpec& right, int m, const BundleData& bundle)
{
    WeinsteinForm form = q_product(left, right, m);
    if (!(form.x_basis() == bundle.basis()) || bundle.m() != m)
        throw InvalidArgument("bundle data does not match the product " + left.name() + " x " + right.name());
    int total = form.y_basis().torus_variable_count();
    int nl = left.torus_variables();
    std::vector<MultiPoly> subst;
    for (int i = 0; i < total; ++i)
        subst.push_back(i < nl ? MultiPoly(total) : MultiPoly::variable(total, i));
    MultiPoly acc(total);
    for (const auto& t : form.terms()) {
        MultiPoly y = t.y_part.realize().substitute(subst);
        if (y.is_zero())
            continue;
        acc += y * (t.coefficient * bundle.evaluate(t.x_part));
    }
    return acc.is_zero();
}

}  // namespace fatness
