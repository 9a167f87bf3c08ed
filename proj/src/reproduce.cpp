#include "fatness/reproduce.hpp"

#include "fatness/lens.hpp"
#include "fatness/sphere.hpp"
#include "fatness/su3.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace fatness {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> split_words(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s)
{
    std::vector<Rational> out;
    for (const auto& w : split_words(s))
        out.push_back(parse_rational(w));
    return out;
}

Fixture Fixture::parse(const std::string& text, std::string name)
{
    Fixture f;
    f.name_ = std::move(name);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::string c = trim(line.substr(hash + 1));
            if (!c.empty() && trim(line.substr(0, hash)).empty() && f.entries_.empty())
                f.comments_.push_back(c);
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos || trim(line.substr(0, eq)).empty())
            throw ParseError("fixture line " + std::to_string(lineno) + ": expected 'key = value'");
        f.entries_.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return f;
}

Fixture Fixture::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot read fixture '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse(os.str(), path);
}

bool Fixture::has(const std::string& key) const
{
    for (const auto& [k, v] : entries_)
        if (k == key)
            return true;
    return false;
}

std::vector<std::string> Fixture::all(const std::string& key) const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_)
        if (k == key)
            out.push_back(v);
    return out;
}

std::string Fixture::text(const std::string& key) const
{
    auto v = all(key);
    if (v.size() != 1)
        throw ParseError("fixture " + name_ + ": key '" + key + "' must appear exactly once");
    return v.front();
}

std::vector<std::pair<std::string, std::string>> Fixture::with_prefix(const std::string& prefix) const
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : entries_)
        if (e.first.rfind(prefix, 0) == 0)
            out.push_back(e);
    return out;
}

Rational Fixture::rational(const std::string& key) const
{
    return parse_rational(text(key));
}

std::vector<Rational> Fixture::rationals(const std::string& key) const
{
    return parse_rational_list(text(key));
}

bool CaseReport::pass() const
{
    for (const auto& c : checks)
        if (!c.ok)
            return false;
    return !checks.empty();
}

std::string CaseReport::report() const
{
    std::ostringstream os;
    os << "case " << name << '\n';
    for (const auto& d : description)
        os << "  " << d << '\n';
    for (const auto& c : checks) {
        os << (c.ok ? "  ok    " : "  FAIL  ") << c.label;
        if (!c.detail.empty())
            os << ": " << c.detail;
        os << '\n';
    }
    os << "result: " << (pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

namespace {

std::string verdict_word(const Verdict& v)
{
    if (v.nonvanishing())
        return "fat-possible";
    if (v.status == VerdictStatus::DimensionForbidden)
        return "forbidden";
    return "obstructed";
}

std::string join(const std::vector<Rational>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
}

struct Context {
    Fixture fx;
    std::string data_dir;
    CaseReport rep;

    void check(std::string label, bool ok, std::string detail = {})
    {
        rep.checks.push_back({std::move(label), ok, std::move(detail)});
    }
    BundleData bundle() const { return BundleData::from_file(data_dir + "/bundles/" + fx.text("bundle")); }
};

/// Positive rational c with a = c * b.
std::optional<Rational> positive_multiple(const UniPoly& a, const UniPoly& b)
{
    if (a.degree() != b.degree() || b.is_zero())
        return std::nullopt;
    Rational c = a.leading() / b.leading();
    if (c <= 0 || !(a == b * c))
        return std::nullopt;
    return c;
}

/// Decimal places written in a fixture number; its rounding half-unit.
Rational half_unit(const std::string& decimal)
{
    auto dot = decimal.find('.');
    long places = dot == std::string::npos ? 0 : static_cast<long>(decimal.size() - dot - 1);
    Integer ten = 1;
    for (long i = 0; i < places; ++i)
        ten *= 10;
    return Rational(1, 2) / Rational(ten);
}

Rational decimal_value(const std::string& decimal)
{
    auto dot = decimal.find('.');
    if (dot == std::string::npos)
        return parse_rational(decimal);
    std::string digits = decimal.substr(0, dot) + decimal.substr(dot + 1);
    Integer ten = 1;
    for (std::size_t i = dot + 1; i < decimal.size(); ++i)
        ten *= 10;
    return fraction(Integer(digits, 10), ten);
}

void case_u2_dim8(Context& c)
{
    GroupSpec u2{GroupFamily::U, 2};
    TFamily got = standard_form({u2}, 4).restrict(OrbitCurve::rank2().coordinates());
    TFamily want(got.basis);
    for (const auto& [key, value] : c.fx.with_prefix("family.t"))
        want.add(std::stoi(key.substr(8)), parse_class_expression(got.basis, value));
    auto ratio = proportionality(got.flatten(), want.flatten());
    c.check("family along (1+t, 1-t)", ratio && *ratio > 0,
            ratio ? "constant " + ratio->get_str() : "not proportional");
    for (const auto& s : c.fx.all("sample")) {
        auto w = split_words(s);
        Rational a = parse_rational(w.at(0)), b = parse_rational(w.at(1)), cc = parse_rational(w.at(2));
        Verdict v = check_fatness(bundle_from_u2_classes(4, {cc, b, a}), OrbitCurve::rank2());
        bool crit = u2_dim8_criterion(a, b, cc);
        c.check("sample a=" + w[0] + " b=" + w[1] + " c=" + w[2],
                verdict_word(v) == w.at(3) && crit == (w[3] == "fat-possible"),
                "sturm " + verdict_word(v) + ", criterion " + (crit ? "fat-possible" : "obstructed"));
    }
}

void case_so4_dim8(Context& c)
{
    ReducedFamily fam = q_so4_reduced(4);
    UniPoly got, want(c.fx.rationals("coefficients"));
    std::vector<Rational> coeffs;
    for (const auto& z : fam.coefficients)
        coeffs.push_back(Rational(z));
    got = UniPoly(coeffs);
    auto ratio = positive_multiple(got, want);
    c.check("coefficients of t^0, t^2, t^4", ratio.has_value(), "computed " + join(coeffs));
    for (const auto& s : c.fx.all("sample")) {
        auto w = split_words(s);
        Rational x = parse_rational(w.at(0)), y = parse_rational(w.at(1)), z = parse_rational(w.at(2));
        Verdict v = check_fatness(bundle_from_so4_classes(4, {y, x, z}), OrbitCurve::rank2());
        bool crit = so4_dim8_criterion(x, y, z);
        c.check("sample x=" + w[0] + " y=" + w[1] + " z=" + w[2],
                verdict_word(v) == w.at(3) && crit == (w[3] == "fat-possible"),
                "sturm " + verdict_word(v) + ", criterion " + (crit ? "fat-possible" : "obstructed"));
    }
}

void case_su3_dim32(Context& c)
{
    Su3Report rep = su3_analysis(c.fx.rational("precision"));
    c.rep.description.push_back("curve " + rep.curve.describe());
    std::vector<std::pair<std::string, UniPoly>> rows;
    for (const auto& [key, value] : c.fx.with_prefix("row.c"))
        rows.emplace_back(key.substr(4), UniPoly(parse_rational_list(value)));
    UniPoly third = UniPoly::constant(c.fx.rational("row3.scale"));
    for (const auto& f : c.fx.all("row3.factor"))
        third = third * UniPoly(parse_rational_list(f));
    rows.emplace_back("c3^4 (factored)", third);
    for (std::size_t i = 0; i < rows.size() && i < 3; ++i)
        c.check("row " + rows[i].first, rep.rows.rows[i] == rows[i].second);
    Rational max_width = c.fx.rational("max_width");
    auto enclosure = [&](const std::string& key, const RootEnclosure& r) {
        std::string stored = c.fx.text(key);
        Rational err = abs(Rational((r.lo + r.hi) / 2 - decimal_value(stored)));
        // agreement to the stored digits or to the required width, whichever is coarser
        bool ok = r.width() <= max_width && err <= std::max(half_unit(stored), max_width) + r.width();
        std::ostringstream diff;
        diff << r.to_string() << " vs " << stored << ", difference " << err.get_d();
        c.check(key + " enclosure", ok, diff.str());
        if (c.fx.has(key + ".closed")) {
            auto q = c.fx.rationals(key + ".closed");
            double closed = (q.at(0).get_d() + q.at(1).get_d() * std::sqrt(q.at(2).get_d())) / q.at(3).get_d();
            bool in = std::abs(r.approx() - closed) <= r.width().get_d() + 1e-12;
            c.check(key + " closed form", in, "(" + q[0].get_str() + " + " + q[1].get_str() + " sqrt(" +
                                                  q[2].get_str() + ")) / " + q[3].get_str());
        }
    };
    enclosure("t0", rep.t0);
    enclosure("r0", rep.r0);
    enclosure("r1", rep.r1);
    enclosure("r2", rep.r2);
}

void case_sphere_table(Context& c)
{
    ClassBasis basis(ClassFamily::Pontrjagin, 4);
    for (const auto& [key, value] : c.fx.with_prefix("h.")) {
        int k = std::stoi(key.substr(2));
        SymExpr got = h_pontrjagin(basis, k, 4);
        c.check("dim B = " + std::to_string(4 * k), got == parse_class_expression(basis, value),
                "h_" + std::to_string(k) + " = " + got.to_string());
    }
}

void case_cp4_tangent(Context& c)
{
    Verdict v = complex_sphere_check(c.bundle());
    UniPoly reference(c.fx.rationals("reference"));
    c.rep.description.push_back("computed polynomial " + v.polynomial.to_string());
    auto ratio = positive_multiple(v.polynomial, reference);
    if (!ratio)
        ratio = positive_multiple(-v.polynomial, reference);
    c.check("proportional to the reference polynomial", ratio.has_value(),
            ratio ? "constant " + ratio->get_str() : "reference " + reference.to_string());
    Domain window = Domain::closed(c.fx.rational("roots.lo"), c.fx.rational("roots.hi"));
    int count = v.polynomial.is_zero() ? -1 : sturm_count(v.polynomial, window);
    c.check("distinct roots in " + window.to_string(), count == std::stoi(c.fx.text("roots.count")),
            std::to_string(count));
    c.check("verdict", verdict_word(v) == c.fx.text("verdict"), verdict_word(v));
}

void case_cp2_s3(Context& c)
{
    for (const auto& s : c.fx.all("sample")) {
        auto w = split_words(s);
        Rational c1sq = parse_rational(w.at(0)), c2 = parse_rational(w.at(1));
        BundleData b(GroupSpec{GroupFamily::U, 2}, 2);
        b.set("c1^2", c1sq);
        b.set("c2", c2);
        Verdict v = complex_sphere_check(b);
        bool closed = complex_s3_closed_form(c1sq, c2);
        c.check("(c1^2, c2) = (" + w[0] + ", " + w[1] + ")",
                verdict_word(v) == w.at(2) && closed == v.nonvanishing(),
                "sturm " + verdict_word(v) + ", closed form " + (closed ? "fat-possible" : "obstructed"));
    }
}

void case_s7_over_s8(Context& c)
{
    for (const auto& s : c.fx.all("real")) {
        auto w = split_words(s);
        OctonionicSphereBundle b{std::stol(w.at(0)), std::stol(w.at(1))};
        Verdict v = real_sphere_check(b.real_data());
        c.check("real (k, l) = (" + w[0] + ", " + w[1] + ")", verdict_word(v) == w.at(2),
                verdict_word(v) + ", p2 = " + b.p2().get_str() + ", e = " + b.euler().get_str());
    }
    long base = std::stol(c.fx.text("base_dim")), fat = std::stol(c.fx.text("fat_dim"));
    c.check("dimension restriction", !dimension_restriction(base, fat),
            "dim B = " + std::to_string(base) + ", dim V = " + std::to_string(fat));
    for (const auto& s : c.fx.all("quaternionic")) {
        auto w = split_words(s);
        OctonionicSphereBundle b{std::stol(w.at(0)), std::stol(w.at(1))};
        bool structure = b.quaternionic_structure();
        Verdict v = quaternionic_sphere_check(BundleData(GroupSpec{GroupFamily::Sp, 2}, base / 2));
        c.check("quaternionic (k, l) = (" + w[0] + ", " + w[1] + ")", structure && verdict_word(v) == w.at(2),
                std::string(structure ? "" : "no quaternionic structure, ") + verdict_word(v));
    }
}

void case_lens(Context& c)
{
    int kmax = std::stoi(c.fx.text("cbar.max"));
    bool cbar_ok = true;
    for (int k = 0; k <= kmax; ++k)
        cbar_ok = cbar_ok && grassmannian_cbar(k) == grassmannian_cbar_closed_form(k);
    c.check("cbar recursion equals closed form for k <= " + std::to_string(kmax), cbar_ok);

    int m = std::stoi(c.fx.text("m"));
    if (m != 2 || c.fx.text("rule") != "pq-positive")
        throw ParseError("lens fixture supports m = 2 with rule pq-positive");
    Rational r = c.fx.rational("r"), coeff = c.fx.rational("threshold.coefficient");
    BundleData data = bundle_from_u2_classes(2, {r, 1});
    long grid = std::stol(c.fx.text("grid"));
    int checked = 0, mismatched = 0, threshold_bad = 0;
    std::string first_bad;
    for (long p = -grid; p <= grid; ++p)
        for (long q = -grid; q <= grid; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            ++checked;
            LensReport rep = lens_check(p, q, data);
            bool want = p * q > 0;
            if (rep.verdict.nonvanishing() != want) {
                ++mismatched;
                if (first_bad.empty())
                    first_bad = "(" + std::to_string(p) + ", " + std::to_string(q) + ")";
            }
            if (p != q) {
                ThresholdEnclosure th = lens_threshold(m, p, q);
                Rational slope = fraction(p + q, p - q);
                Rational exact = coeff * slope * slope;
                if (!(th.lo <= exact && exact <= th.hi))
                    ++threshold_bad;
            }
        }
    c.check("verdict fat-possible iff pq > 0", mismatched == 0,
            std::to_string(checked) + " pairs" + (first_bad.empty() ? "" : ", first mismatch " + first_bad));
    c.check("threshold coefficient " + coeff.get_str() + " for m = 2", threshold_bad == 0,
            std::to_string(threshold_bad) + " enclosures miss");
}

void case_g2_so4(Context& c)
{
    BundleData b = c.bundle();
    Verdict v = check_fatness(b, OrbitCurve::rank2());
    auto ratio = positive_multiple(v.polynomial, UniPoly(c.fx.rationals("polynomial")));
    c.check("invariant along (1+t, 1-t)", ratio.has_value(), v.polynomial.to_string());
    auto roots = c.fx.rationals("roots");
    bool roots_ok = v.roots.size() == roots.size();
    for (const auto& want : roots) {
        bool found = false;
        for (const auto& r : v.roots)
            found = found || (r.lo <= want && want <= r.hi);
        roots_ok = roots_ok && found;
    }
    c.check("certified roots", roots_ok, join(roots));
    std::vector<std::vector<Rational>> reps;
    for (const auto& o : v.vanishing_orbits)
        reps.push_back(o.representative);
    bool orbits_ok = reps.size() == c.fx.all("orbit").size();
    for (const auto& o : c.fx.all("orbit")) {
        auto want = parse_rational_list(o);
        bool found = false;
        for (const auto& got : reps)
            found = found || got == want;
        orbits_ok = orbits_ok && found;
    }
    std::string shown;
    for (const auto& r : reps)
        shown += (shown.empty() ? "" : " ") + join(r);
    c.check("vanishing orbits", orbits_ok, shown);
    Verdict cls = so4_case_analysis(b, c.fx.rational("r"));
    c.check("case analysis with r = " + c.fx.text("r"), cls.orbit_count == std::stoi(c.fx.text("orbit_count")),
            std::string("case ") + cls.classification + ", " + std::to_string(cls.orbit_count) + " orbits");
    c.check("verdict", verdict_word(v) == c.fx.text("verdict"), verdict_word(v));
}

void case_hp2_sp2(Context& c)
{
    BundleData b = c.bundle();
    Rational h2 = b.evaluate(h_pontrjagin(b.basis(), 2, b.group().rank));
    c.check("h2 = p1^2 - p2", h2 == c.fx.rational("h2"), h2.get_str());
    Verdict v = real_sphere_check(b);
    c.check("verdict", verdict_word(v) == c.fx.text("verdict"), verdict_word(v));
}

const std::map<std::string, std::function<void(Context&)>>& registry()
{
    static const std::map<std::string, std::function<void(Context&)>> cases{
        {"u2-dim8", case_u2_dim8},
        {"so4-dim8", case_so4_dim8},
        {"su3-dim32", case_su3_dim32},
        {"sphere-table", case_sphere_table},
        {"cp4-tangent", case_cp4_tangent},
        {"cp2-s3-bundles", case_cp2_s3},
        {"s7-over-s8", case_s7_over_s8},
        {"lens-grassmannian", case_lens},
        {"g2-so4", case_g2_so4},
        {"hp2-sp2", case_hp2_sp2},
    };
    return cases;
}

}  // namespace

const std::vector<std::string>& reproduce_cases()
{
    static const std::vector<std::string> names{"u2-dim8",    "so4-dim8",       "su3-dim32",  "sphere-table",
                                                "cp4-tangent", "cp2-s3-bundles", "s7-over-s8", "lens-grassmannian",
                                                "g2-so4",     "hp2-sp2"};
    return names;
}

std::string default_data_dir()
{
    if (const char* env = std::getenv("FATCHECK_DATA_DIR"); env && *env)
        return env;
    return FATCHECK_DATA_DIR;
}

CaseReport run_reproduce(const std::string& name, const std::string& data_dir)
{
    auto it = registry().find(name);
    if (it == registry().end())
        throw UnknownCase("unknown reproduce case '" + name + "'");
    Context c{Fixture::load(data_dir + "/reproduce/" + name + ".txt"), data_dir, {}};
    c.rep.name = name;
    c.rep.description = c.fx.comments();
    it->second(c);
    return c.rep;
}

}  // namespace fatness
