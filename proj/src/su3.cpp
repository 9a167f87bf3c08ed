#include "fatness/su3.hpp"

namespace fatness {

namespace {

UniPoly palindrome(std::initializer_list<long> half)
{
    std::vector<Rational> c(half.begin(), half.end());
    for (int i = static_cast<int>(half.size()) - 2; i >= 0; --i)
        c.push_back(c[static_cast<std::size_t>(i)]);
    return UniPoly(std::move(c));
}

struct Candidate {
    std::vector<Rational> base;
    std::vector<Rational> slope;
};

std::vector<Candidate> candidates()
{
    // trace-zero lines through the Weyl chamber, preferred one first
    return {
        {{1, 0, -1}, {0, 1, -1}},
        {{0, 1, -1}, {1, 0, -1}},
        {{1, -1, 0}, {0, 1, -1}},
        {{1, 0, -1}, {-1, 2, -1}},
    };
}

const std::vector<Exponent>& row_monomials()
{
    static const std::vector<Exponent> m{{0, 8, 0}, {0, 5, 2}, {0, 2, 4}};
    return m;
}

std::optional<Su3Report> try_candidate(const WeinsteinForm& form, const Candidate& c)
{
    OrbitCurve curve{c.base, c.slope, Domain::closed(0, 1), false, OrbitSymmetry::Reciprocal};
    TFamily fam = form.restrict(curve.coordinates());
    std::array<UniPoly, 3> rows;
    for (std::size_t i = 0; i < 3; ++i) {
        const Exponent& mono = row_monomials()[i];
        rows[i] = fam.evaluate([&](const Exponent& e) { return Rational(e == mono ? 1 : 0); });
    }
    // sigma_2(y(t))^2 divides every row; divide it out exactly when possible
    UniPoly s2;
    {
        auto y = curve.coordinates();
        s2 = y[0] * y[1] + y[0] * y[2] + y[1] * y[2];
    }
    UniPoly s4 = s2 * s2;
    for (auto& r : rows) {
        auto d = divide(r, s4);
        if (!d.remainder.is_zero())
            return std::nullopt;
        r = d.quotient;
    }
    Su3Rows ref = su3_reference_rows();
    std::optional<Rational> ratio;
    for (std::size_t i = 0; i < 3; ++i) {
        const UniPoly& a = ref.rows[i];
        const UniPoly& b = rows[i];
        if (a.degree() != b.degree())
            return std::nullopt;
        for (int k = 0; k <= a.degree(); ++k) {
            if ((a.coefficient(k) == 0) != (b.coefficient(k) == 0))
                return std::nullopt;
            if (a.coefficient(k) == 0)
                continue;
            Rational q = a.coefficient(k) / b.coefficient(k);
            if (!ratio)
                ratio = q;
            else if (*ratio != q)
                return std::nullopt;
        }
    }
    if (!ratio || *ratio <= 0)
        return std::nullopt;
    Su3Report rep;
    rep.curve = curve;
    rep.normalization = *ratio;
    for (std::size_t i = 0; i < 3; ++i)
        rep.rows.rows[i] = rows[i] * *ratio;
    return rep;
}

/// The root of a(t) on [0, 1] where r_-(t) = (-b - sqrt(b^2 - 4ac)) / 2a blows up, i.e. where b > 0.
RootEnclosure singular_root(const UniPoly& a, const UniPoly& b, const Rational& precision)
{
    std::vector<RootEnclosure> hits;
    for (const auto& r : isolate_roots(a, Domain::closed(0, 1), precision)) {
        if (sturm_count(b, Domain::closed(r.lo, r.hi)) != 0)
            throw Error("b(t) vanishes next to a root of a(t); refine the precision");
        if (b.sign_at(Rational((r.lo + r.hi) / 2)) > 0)
            hits.push_back(r);
    }
    if (hits.size() != 1)
        throw Error("expected one singularity of r_-(t) in [0, 1], found " + std::to_string(hits.size()));
    return hits.front();
}

}  // namespace

Su3Rows su3_reference_rows()
{
    Su3Rows r;
    r.rows[0] = palindrome({511, 3066, 8814, 15965, 21798, 25128, 26583});
    r.rows[1] = palindrome({1917, 11502, -15876, -184815, -498150, -757188, -834867});
    r.rows[2] = UniPoly{1, -7, -6, 2, 1} * UniPoly{1, 11, 21, 11, 1} * UniPoly{1, 2, -6, -7, 1} * Rational(729);
    return r;
}

UniPoly su3_ratio_polynomial(const Su3Rows& rows, const Rational& r)
{
    return rows.rows[0] + rows.rows[1] * r + rows.rows[2] * Rational(r * r);
}

Su3Report su3_analysis(const Rational& precision)
{
    WeinsteinForm form = haar_normalized_form(GroupSpec{GroupFamily::SU, 3}, 16);
    std::optional<Su3Report> rep;
    std::size_t index = 0;
    auto cands = candidates();
    for (; index < cands.size() && !rep; ++index)
        rep = try_candidate(form, cands[index]);
    if (!rep)
        throw ParametrizationUnconfirmed("no trace-zero line reproduces the reference SU(3) rows");
    if (index > 1)
        rep->notes.push_back("preferred parametrization failed; confirmed fallback candidate " + std::to_string(index));
    rep->notes.push_back("parametrization " + rep->curve.describe() + " confirmed; rows divided by (1 + t + t^2)^2");

    const auto& rows = rep->rows.rows;
    Domain unit = Domain::closed(0, 1);
    rep->t0 = singular_root(rows[2], rows[1], precision);
    // r-quadratics at the endpoints t = 0 and t = 1
    UniPoly at0{rows[0].evaluate(Rational(0)), rows[1].evaluate(Rational(0)), rows[2].evaluate(Rational(0))};
    UniPoly at1{rows[0].evaluate(Rational(1)), rows[1].evaluate(Rational(1)), rows[2].evaluate(Rational(1))};
    auto roots0 = isolate_roots(at0, Domain::real_line(), precision);
    auto roots1 = isolate_roots(at1, Domain::real_line(), precision);
    if (roots0.size() != 2 || roots1.size() != 2)
        throw Error("endpoint quadratics do not have two real roots");
    rep->r2 = roots0[0];
    rep->r0 = roots0[1];
    rep->r1 = roots1[0];
    UniPoly disc = rows[1] * rows[1] - rows[2] * rows[0] * Rational(4);
    rep->discriminant_roots = isolate_roots(disc, unit, precision);
    return *rep;
}

Su3Report su3_analysis(const BundleData& bundle, const Rational& precision)
{
    if (bundle.groups().size() != 1 || bundle.group() != GroupSpec{GroupFamily::SU, 3} || bundle.m() != 16)
        throw InvalidArgument("SU(3) analysis needs SU(3) data over a 32-dimensional base");
    Su3Report rep = su3_analysis(precision);
    UniPoly p;
    for (std::size_t i = 0; i < 3; ++i)
        p += rep.rows.rows[i] * bundle.value(row_monomials()[i]);
    rep.verdict = analyze_polynomial(p, rep.curve, 16, bundle.groups(), precision);
    return rep;
}

Su3Report su3_analysis_ratio(const Rational& r, const Rational& precision)
{
    Su3Report rep = su3_analysis(precision);
    UniPoly p = su3_ratio_polynomial(rep.rows, r);
    rep.verdict = analyze_polynomial(p, rep.curve, 16, {GroupSpec{GroupFamily::SU, 3}}, precision);
    rep.verdict->notes.push_back("c3^2 = r c2^3 with r = " + r.get_str() + "; values in units of c2^8");
    return rep;
}

}  // namespace fatness
