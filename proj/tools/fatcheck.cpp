#include "fatness/haar.hpp"
#include "fatness/lens.hpp"
#include "fatness/reproduce.hpp"
#include "fatness/sphere.hpp"
#include "fatness/su3.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <regex>

using namespace fatness;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_violated = 1;
constexpr int exit_input = 2;

std::vector<Rational> parse_vector(const std::string& text)
{
    std::string s = text;
    for (char& c : s)
        if (c == ',' || c == '(' || c == ')')
            c = ' ';
    auto v = parse_rational_list(s);
    if (v.empty())
        throw ParseError("empty coordinate list '" + text + "'");
    return v;
}

/// Accepts a/b, integers and decimals such as 1e-12.
Rational parse_precision(const std::string& s)
{
    Rational q;
    if (s.find_first_of("eE.") != std::string::npos) {
        std::size_t used = 0;
        double d = std::stod(s, &used);
        if (used != s.size())
            throw ParseError("bad precision '" + s + "'");
        q = Rational(d);
    } else {
        q = parse_rational(s);
    }
    if (q <= 0)
        throw InvalidArgument("precision must be positive");
    return q;
}

std::vector<GroupSpec> parse_groups(const std::string& group, int rank, bool su, const std::string& group2, int rank2)
{
    GroupSpec g = GroupSpec::parse(group, rank);
    if (su) {
        if (g.family != GroupFamily::U)
            throw InvalidArgument("--su only applies to U(n)");
        g.family = GroupFamily::SU;
    }
    std::vector<GroupSpec> groups{g};
    if (!group2.empty())
        groups.push_back(GroupSpec::parse(group2, rank2));
    return groups;
}

int torus_dimension(const std::vector<GroupSpec>& groups)
{
    int n = 0;
    for (const auto& g : groups)
        n += g.torus_variables();
    return n;
}

/// Curve used for "full" and the parameter-domain keywords.
OrbitCurve default_curve(const std::vector<GroupSpec>& groups, Domain domain, bool full)
{
    int n = torus_dimension(groups);
    const GroupSpec& g = groups.front();
    if (groups.size() == 1 && (g.family == GroupFamily::G2 || (g.family == GroupFamily::SU && g.rank == 3))) {
        if (!full)
            throw InvalidArgument("SU(3) and G2 use the fixed curve (1, t, -1-t) on [0, 1]; use --domain full");
        return OrbitCurve::su3();
    }
    if (groups.size() == 1 && g.family == GroupFamily::SU && g.rank == 2 && full)
        return OrbitCurve::constant({1, -1});
    if (n == 1 && full)
        return OrbitCurve::constant({1});
    if (n != 2)
        throw InvalidArgument("curve keywords need two torus coordinates; use --domain \"orbit y\"");
    bool unbounded = !domain.bounded_above() || !domain.bounded_below();
    return OrbitCurve::rank2(std::move(domain), unbounded);
}

/// Parameter domains shared by check and roots; nullopt for other keywords.
std::optional<Domain> parse_parameter_domain(const std::string& spec)
{
    static const std::regex le(R"(^t\s*<=\s*(\S+)$)"), ge(R"(^t\s*>=\s*(\S+)$)"),
        interval(R"(^interval\s+([^,\s]+)\s*,\s*(\S+)$)");
    std::smatch m;
    if (spec == "full")
        return Domain::real_line();
    if (std::regex_match(spec, m, le))
        return Domain::at_most(parse_rational(m[1]));
    if (std::regex_match(spec, m, ge))
        return Domain::at_least(parse_rational(m[1]));
    if (std::regex_match(spec, m, interval)) {
        Rational a = parse_rational(m[1]), b = parse_rational(m[2]);
        if (a > b)
            throw InvalidArgument("interval needs a <= b");
        return Domain::closed(a, b);
    }
    return std::nullopt;
}

int verdict_exit(const Verdict& v)
{
    return v.nonvanishing() ? exit_pass : exit_violated;
}

struct InvariantOptions {
    std::string group;
    int rank = 0;
    bool su = false;
    std::string group2;
    int rank2 = 0;
    int m = 0;
    std::string orbit;
    std::string curve;
    std::string format = "text";
};

int run_invariant(const InvariantOptions& o)
{
    auto groups = parse_groups(o.group, o.rank, o.su, o.group2, o.rank2);
    WeinsteinForm form = standard_form(groups, o.m);
    bool records = o.format == "records";
    if (!o.orbit.empty()) {
        SymExpr e = form.at(parse_vector(o.orbit));
        std::cout << (records ? to_records(e.poly()) : e.to_string() + "\n");
        return exit_pass;
    }
    if (!o.curve.empty()) {
        OrbitCurve c = o.curve == "su3" ? OrbitCurve::su3() : OrbitCurve::rank2();
        TFamily f = form.restrict(c.coordinates());
        if (records) {
            std::cout << to_records(f.flatten());
        } else {
            std::cout << "curve: " << c.describe() << '\n';
            for (int i = 0; i <= f.degree(); ++i)
                if (!f.coefficient(i).is_zero())
                    std::cout << "t^" << i << ": " << f.coefficient(i).to_string() << '\n';
        }
        return exit_pass;
    }
    std::cout << (records ? to_records(form.expand()) : form.to_string());
    return exit_pass;
}

struct CheckOptions {
    std::string file;
    std::string domain = "full";
    std::string precision;
};

int run_check(const CheckOptions& o)
{
    BundleData b = BundleData::from_file(o.file);
    Rational precision = o.precision.empty() ? default_precision() : parse_precision(o.precision);
    static const std::regex lens(R"(^lens\s+(-?\d+)\s+(-?\d+)$)"), orbit(R"(^orbit\s+(.+)$)");
    std::smatch m;
    Verdict v;
    if (o.domain == "sphere-real") {
        v = real_sphere_check(b);
    } else if (o.domain == "sphere-complex") {
        v = complex_sphere_check(b, precision);
    } else if (o.domain == "sphere-quat") {
        v = quaternionic_sphere_check(b, precision);
    } else if (std::regex_match(o.domain, m, lens)) {
        LensReport rep = lens_check(std::stol(m[1]), std::stol(m[2]), b, precision);
        std::cout << rep.report();
        return verdict_exit(rep.verdict);
    } else if (std::regex_match(o.domain, m, orbit)) {
        v = check_fatness(b, OrbitCurve::constant(parse_vector(m[1])), precision);
    } else if (auto d = parse_parameter_domain(o.domain)) {
        const GroupSpec& g = b.group();
        if (b.groups().size() == 1 && g.family == GroupFamily::SU && g.rank == 3 && b.m() == 16 && o.domain == "full") {
            Su3Report rep = su3_analysis(b, precision);
            v = *rep.verdict;
        } else {
            v = check_fatness(b, default_curve(b.groups(), *d, o.domain == "full"), precision);
        }
    } else {
        throw InvalidArgument("unknown domain '" + o.domain + "'");
    }
    std::cout << v.report();
    return verdict_exit(v);
}

struct RootsOptions {
    std::string coeffs;
    std::string domain = "full";
    std::string precision;
};

int run_roots(const RootsOptions& o)
{
    auto desc = parse_vector(o.coeffs);
    UniPoly p(std::vector<Rational>(desc.rbegin(), desc.rend()));
    auto d = parse_parameter_domain(o.domain);
    if (!d)
        throw InvalidArgument("roots accepts full, t<=Q, t>=Q or \"interval a,b\"");
    Rational precision = o.precision.empty() ? default_precision() : parse_precision(o.precision);
    std::cout << "polynomial: " << p.to_string() << '\n' << "domain: " << d->to_string() << '\n';
    if (p.is_zero()) {
        std::cout << "identically zero\n";
        return exit_violated;
    }
    auto roots = isolate_roots(p, *d, precision);
    for (const auto& r : roots)
        std::cout << "root: " << r.to_string() << "  ~ " << r.approx() << '\n';
    std::cout << "distinct roots: " << roots.size() << '\n';
    return roots.empty() ? exit_pass : exit_violated;
}

int run_reproduce_verb(const std::string& name, const std::string& data_dir)
{
    std::vector<std::string> names = name == "all" ? reproduce_cases() : std::vector<std::string>{name};
    bool ok = true;
    for (const auto& n : names) {
        CaseReport rep = run_reproduce(n, data_dir.empty() ? default_data_dir() : data_dir);
        std::cout << rep.report();
        ok = ok && rep.pass();
    }
    return ok ? exit_pass : exit_violated;
}

struct OracleOptions {
    std::string group;
    int rank = 0;
    std::string y, x;
    int k1 = 0, k2 = 0;
    long samples = 1000000;
    std::uint64_t seed = 0;
    long chunk = 10000;
    int workers = 0;
    std::string corrupt;
};

int run_oracle(const OracleOptions& o)
{
    McConfig cfg;
    cfg.group = GroupSpec::parse(o.group, o.rank);
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.chunk_size = o.chunk;
    cfg.workers = o.workers;
    Rational corrupt = o.corrupt.empty() ? Rational(1) : parse_rational(o.corrupt);
    RatioReport rep = ratio_validate(parse_vector(o.y), parse_vector(o.x), o.k1, o.k2, cfg, corrupt);
    std::cout << rep.report();
    return rep.pass ? exit_pass : exit_violated;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Weinstein invariants and fatness obstructions"};
    app.require_subcommand(1);

    InvariantOptions inv;
    auto* invariant = app.add_subcommand("invariant", "print the invariant polynomial of a group");
    invariant->add_option("--group", inv.group, "T, U, SO, SO_odd, O, Sp, G2 or a name such as SO(5)")->required();
    invariant->add_option("--rank", inv.rank, "rank when the group token has no size");
    invariant->add_flag("--su", inv.su, "special unitary group");
    invariant->add_option("--group2", inv.group2, "second factor of a product group");
    invariant->add_option("--rank2", inv.rank2, "rank of the second factor");
    invariant->add_option("--m", inv.m, "half the base dimension")->required()->check(CLI::NonNegativeNumber);
    auto* orbit_opt = invariant->add_option("--orbit", inv.orbit, "torus point y, comma separated");
    invariant->add_option("--curve", inv.curve, "rank2 or su3")
        ->check(CLI::IsMember({"rank2", "su3"}))
        ->excludes(orbit_opt);
    invariant->add_option("--format", inv.format)->check(CLI::IsMember({"text", "records"}));

    CheckOptions chk;
    auto* check = app.add_subcommand("check", "decide whether a bundle's invariant can be nonvanishing");
    check->add_option("bundle", chk.file, "bundle file")->required();
    check->add_option("--domain", chk.domain,
                      "full | t<=Q | t>=Q | \"interval a,b\" | \"orbit y\" | sphere-real | sphere-complex | "
                      "sphere-quat | \"lens p q\"");
    check->add_option("--precision", chk.precision, "root enclosure width");

    RootsOptions rts;
    auto* roots = app.add_subcommand("roots", "certified real roots of a univariate polynomial");
    roots->add_option("--coeffs", rts.coeffs, "coefficients, highest degree first")->required();
    roots->add_option("--domain", rts.domain, "full | t<=Q | t>=Q | \"interval a,b\"");
    roots->add_option("--precision", rts.precision, "root enclosure width");

    std::string case_name, data_dir;
    auto* reproduce = app.add_subcommand("reproduce", "recompute a worked example and compare with its fixture");
    reproduce->add_option("case", case_name, "case name or all")->required();
    reproduce->add_option("--data-dir", data_dir, "directory holding reproduce/ and bundles/");

    OracleOptions orc;
    auto* oracle = app.add_subcommand("oracle", "Monte Carlo check of a ratio of invariants");
    oracle->add_option("--group", orc.group, "U, SO, SO_odd, Sp or a name such as SO(3)")->required();
    oracle->add_option("--rank", orc.rank);
    oracle->add_option("--y", orc.y)->required();
    oracle->add_option("--x", orc.x)->required();
    oracle->add_option("--k1", orc.k1)->required();
    oracle->add_option("--k2", orc.k2)->required();
    oracle->add_option("--samples", orc.samples);
    oracle->add_option("--seed", orc.seed)->required();
    oracle->add_option("--chunk", orc.chunk);
    oracle->add_option("--workers", orc.workers);
    oracle->add_option("--corrupt", orc.corrupt)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_pass : exit_input;
    }

    try {
        if (*invariant)
            return run_invariant(inv);
        if (*check)
            return run_check(chk);
        if (*roots)
            return run_roots(rts);
        if (*reproduce)
            return run_reproduce_verb(case_name, data_dir);
        if (*oracle)
            return run_oracle(orc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
