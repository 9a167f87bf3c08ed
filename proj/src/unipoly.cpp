#include "fatness/unipoly.hpp"

#include <sstream>

namespace fatness {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients)
{
    trim();
}

UniPoly UniPoly::constant(const Rational& c)
{
    return UniPoly({c});
}

UniPoly UniPoly::monomial(int degree, const Rational& c)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Rational& a, const Rational& b)
{
    return UniPoly({a, b});
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational UniPoly::coefficient(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::evaluate(const Rational& t) const
{
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * t + *it;
    return r;
}

double UniPoly::evaluate(double t) const
{
    double r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * t + it->get_d();
    return r;
}

UniPoly UniPoly::derivative() const
{
    std::vector<Rational> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v.push_back(coeffs_[i] * static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * (Rational(1) / leading());
}

UniPoly UniPoly::primitive() const
{
    if (is_zero())
        return *this;
    Integer den = 1, num = 0;
    for (const auto& c : coeffs_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : coeffs_) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    Rational scale(den, num);
    scale.canonicalize();
    if (leading() < 0)
        scale = -scale;
    return *this * scale;
}

UniPoly UniPoly::reflected() const
{
    auto v = coeffs_;
    for (std::size_t i = 1; i < v.size(); i += 2)
        v[i] = -v[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::reversed() const
{
    return UniPoly(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

UniPoly UniPoly::pow(int e) const
{
    UniPoly r = constant(1), b = *this;
    while (e > 0) {
        if (e & 1)
            r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    return *this += -o;
}

UniPoly& UniPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

UniPoly UniPoly::operator-() const
{
    return *this * Rational(-1);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coefficient(i);
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = a == 1 && i > 0;
        if (!unit)
            os << a.get_str();
        if (i > 0) {
            os << (unit ? "" : "*") << var;
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

UniDivision divide(const UniPoly& p, const UniPoly& d)
{
    if (d.is_zero())
        throw InvalidArgument("univariate division by zero");
    std::vector<Rational> rem = p.coefficients();
    int dd = d.degree();
    if (p.degree() < dd)
        return {UniPoly{}, p};
    std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dd + 1));
    Rational lead = d.leading();
    for (int i = p.degree(); i >= dd; --i) {
        Rational c = rem[static_cast<std::size_t>(i)] / lead;
        if (c == 0)
            continue;
        quo[static_cast<std::size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= c * d.coefficient(j);
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divide(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p)
{
    if (p.degree() <= 0)
        return {};
    std::vector<UniPoly> out;
    UniPoly d = p.derivative();
    UniPoly a = gcd(p, d);
    UniPoly b = divide(p, a).quotient;
    UniPoly c = divide(d, a).quotient;
    UniPoly e = c - b.derivative();
    while (b.degree() > 0) {
        UniPoly g = gcd(b, e);
        out.push_back(g);
        b = divide(b, g).quotient;
        c = divide(e, g).quotient;
        e = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() <= 0)
        out.pop_back();
    return out;
}

}  // namespace fatness
