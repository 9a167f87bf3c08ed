#include "fatness/obstruction.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace fatness {

namespace {

ClassBasis basis_for(const std::vector<GroupSpec>& groups)
{
    if (groups.empty() || groups.size() > 2)
        throw InvalidArgument("a bundle needs one group or a product of two");
    ClassBasis b = groups[0].x_basis();
    if (groups.size() == 2)
        b = ClassBasis::product(b, groups[1].x_basis());
    return b;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        int r = std::stoi(v, &used);
        if (used != v.size())
            throw ParseError("");
        return r;
    } catch (const std::exception&) {
        throw ParseError("header '" + key + "' needs an integer, got '" + v + "'");
    }
}

}  // namespace

BundleData::BundleData(std::vector<GroupSpec> groups, int m) : groups_(std::move(groups)), m_(m), basis_(basis_for(groups_))
{
    if (m < 1)
        throw InvalidArgument("bundle base half-dimension m must be positive");
}

void BundleData::set(const Exponent& monomial, const Rational& value)
{
    if (!basis_.is_canonical(monomial))
        throw InvalidArgument("monomial " + monomial_string(basis_, monomial) + " is not in reduced form");
    if (basis_.degree(monomial) != m_)
        throw DegreeMismatch("monomial " + monomial_string(basis_, monomial) + " has degree " +
                             std::to_string(basis_.degree(monomial)) + ", expected " + std::to_string(m_));
    numbers_[monomial] = value;
}

void BundleData::set(const std::string& monomial, const Rational& value)
{
    set(parse_monomial(basis_, monomial), value);
}

Rational BundleData::value(const Exponent& monomial) const
{
    auto it = numbers_.find(monomial);
    if (it == numbers_.end())
        throw MissingClassNumber(monomial_string(basis_, monomial));
    return it->second;
}

Rational BundleData::evaluate(const SymExpr& e) const
{
    if (!(e.basis() == basis_))
        throw InvalidArgument("expression does not use the bundle's classes");
    return e.evaluate([this](const Exponent& x) {
        if (basis_.degree(x) != m_)
            throw DegreeMismatch("monomial " + monomial_string(basis_, x) + " is not of top degree " +
                                 std::to_string(m_));
        return value(x);
    });
}

std::vector<Exponent> BundleData::top_monomials() const
{
    std::vector<Exponent> out;
    int g = basis_.generator_count();
    Exponent e(static_cast<std::size_t>(g), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == g) {
            if (left == 0 && basis_.is_canonical(e))
                out.push_back(e);
            return;
        }
        int d = basis_.degree(i);
        for (int k = 0; k * d <= left; ++k) {
            e[static_cast<std::size_t>(i)] = k;
            rec(i + 1, left - k * d);
        }
        e[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, m_);
    return out;
}

BundleData BundleData::parse(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::map<std::string, std::string> header;
    std::vector<std::pair<int, std::string>> classes;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key=value' or 'monomial = number'");
        std::string key = trim(line.substr(0, eq));
        if (key == "group" || key == "rank" || key == "m" || key == "su" || key == "group2" || key == "rank2" ||
            key == "su2") {
            if (header.count(key))
                throw ParseError("line " + std::to_string(lineno) + ": duplicate header '" + key + "'");
            header[key] = trim(line.substr(eq + 1));
        } else {
            classes.emplace_back(lineno, line);
        }
    }
    for (const char* k : {"group", "m"})
        if (!header.count(k))
            throw ParseError(std::string("missing header '") + k + "'");
    auto make_group = [&](const std::string& gk, const std::string& rk, const std::string& sk) {
        int rank = header.count(rk) ? parse_int(rk, header[rk]) : 0;
        GroupSpec g = GroupSpec::parse(header[gk], rank);
        if (header.count(sk)) {
            const std::string& v = header[sk];
            if (v != "true" && v != "false")
                throw ParseError("header '" + sk + "' must be true or false");
            if (v == "true") {
                if (g.family != GroupFamily::U && g.family != GroupFamily::SU)
                    throw ParseError("su=true only applies to unitary groups");
                g.family = GroupFamily::SU;
            }
        }
        return g;
    };
    std::vector<GroupSpec> groups{make_group("group", "rank", "su")};
    if (header.count("group2"))
        groups.push_back(make_group("group2", "rank2", "su2"));
    BundleData data(groups, parse_int("m", header["m"]));
    for (const auto& [ln, l] : classes) {
        auto eq = l.find('=');
        std::string mono = trim(l.substr(0, eq)), val = trim(l.substr(eq + 1));
        std::string where = "line " + std::to_string(ln) + ": ";
        Exponent e;
        try {
            e = parse_monomial(data.basis_, mono);
        } catch (const ParseError& err) {
            throw ParseError(where + err.what());
        }
        if (!data.basis_.is_canonical(e))
            throw ParseError(where + "monomial '" + mono + "' is not reduced (e^2 or c1 under su)");
        if (data.has(e))
            throw ParseError(where + "duplicate monomial '" + mono + "'");
        Rational v;
        try {
            v = parse_rational(val);
        } catch (const Error&) {
            throw ParseError(where + "bad number '" + val + "'");
        }
        try {
            data.set(e, v);
        } catch (const DegreeMismatch& err) {
            throw DegreeMismatch(where + err.what());
        }
    }
    return data;
}

BundleData BundleData::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot read bundle file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse(os.str());
}

std::string BundleData::to_text() const
{
    std::ostringstream os;
    auto header = [&](const GroupSpec& g, const std::string& suffix) {
        bool su = g.family == GroupFamily::SU;
        std::string fam;
        switch (g.family) {
        case GroupFamily::Torus: fam = "T"; break;
        case GroupFamily::U:
        case GroupFamily::SU: fam = "U"; break;
        case GroupFamily::SO_even: fam = "SO_even"; break;
        case GroupFamily::SO_odd: fam = "SO_odd"; break;
        case GroupFamily::O_even: fam = "O_even"; break;
        case GroupFamily::O_odd: fam = "O_odd"; break;
        case GroupFamily::Sp: fam = "Sp"; break;
        case GroupFamily::G2: fam = "G2"; break;
        }
        os << "group" << suffix << '=' << fam << '\n';
        os << "rank" << suffix << '=' << g.rank << '\n';
        if (su)
            os << "su" << suffix << "=true\n";
    };
    header(groups_[0], "");
    if (groups_.size() == 2)
        header(groups_[1], "2");
    os << "m=" << m_ << '\n';
    for (const auto& [e, v] : numbers_)
        os << monomial_string(basis_, e) << " = " << v.get_str() << '\n';
    return os.str();
}

}  // namespace fatness
