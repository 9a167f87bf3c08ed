#include "fatness/multipoly.hpp"

#include "fatness/unipoly.hpp"

#include <numeric>
#include <sstream>

namespace fatness {

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const
{
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    return a < b;
}

MultiPoly::MultiPoly(int variable_count) : nvars_(variable_count)
{
    if (variable_count < 0)
        throw InvalidArgument("negative variable count");
}

MultiPoly MultiPoly::constant(int variable_count, const Rational& c)
{
    MultiPoly p(variable_count);
    p.add_term(Exponent(static_cast<std::size_t>(variable_count), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int variable_count, int index)
{
    if (index < 0 || index >= variable_count)
        throw InvalidArgument("variable index out of range");
    Exponent e(static_cast<std::size_t>(variable_count), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(Exponent e, const Rational& c)
{
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational MultiPoly::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const
{
    if (terms_.empty())
        throw InvalidArgument("degree of the zero polynomial is undefined");
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const auto& lo = terms_.begin()->first;
    return std::accumulate(lo.begin(), lo.end(), 0) == total_degree();
}

const MultiPoly::TermMap::value_type& MultiPoly::leading_term() const
{
    if (terms_.empty())
        throw InvalidArgument("leading term of the zero polynomial");
    return *terms_.rbegin();
}

void MultiPoly::add_term(const Exponent& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != nvars_)
        throw InvalidArgument("exponent length does not match variable count");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    if (o.nvars_ != nvars_)
        throw InvalidArgument("variable count mismatch in addition");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    if (o.nvars_ != nvars_)
        throw InvalidArgument("variable count mismatch in subtraction");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw InvalidArgument("variable count mismatch in multiplication");
    MultiPoly r(a.nvars_);
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o)
{
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    return *this * Rational(-1);
}

MultiPoly MultiPoly::pow(int e) const
{
    if (e < 0)
        throw InvalidArgument("negative power");
    MultiPoly r = constant(nvars_, 1), b = *this;
    while (e > 0) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const
{
    if (static_cast<int>(point.size()) != nvars_)
        throw InvalidArgument("evaluation point has wrong dimension");
    Rational r = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                t *= point[i];
        r += t;
    }
    return r;
}

namespace {

// powers[i][k] = values[i]^k, built lazily.
template <class T, class One>
T substitute_impl(const MultiPoly& p, std::span<const T> values, One one)
{
    int n = p.variable_count();
    if (static_cast<int>(values.size()) != n)
        throw InvalidArgument("substitution has wrong number of values");
    std::vector<std::vector<T>> powers(static_cast<std::size_t>(n));
    auto power = [&](int i, int k) -> const T& {
        auto& row = powers[static_cast<std::size_t>(i)];
        if (row.empty())
            row.push_back(one());
        while (static_cast<int>(row.size()) <= k)
            row.push_back(row.back() * values[static_cast<std::size_t>(i)]);
        return row[static_cast<std::size_t>(k)];
    };
    T result = one() * Rational(0);
    for (const auto& [e, c] : p.terms()) {
        T term = one() * c;
        for (int i = 0; i < n; ++i)
            if (e[static_cast<std::size_t>(i)] > 0)
                term = term * power(i, e[static_cast<std::size_t>(i)]);
        result += term;
    }
    return result;
}

}  // namespace

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> values) const
{
    int target = values.empty() ? 0 : values.front().variable_count();
    for (const auto& v : values)
        if (v.variable_count() != target)
            throw InvalidArgument("substituted values must share a variable count");
    if (values.empty()) {
        if (nvars_ != 0)
            throw InvalidArgument("substitution has wrong number of values");
        return *this;
    }
    return substitute_impl<MultiPoly>(*this, values, [target] { return MultiPoly::constant(target, 1); });
}

UniPoly MultiPoly::substitute_univariate(std::span<const UniPoly> values) const
{
    return substitute_impl<UniPoly>(*this, values, [] { return UniPoly::constant(1); });
}

MultiPoly MultiPoly::embed(int total, int offset) const
{
    if (offset < 0 || offset + nvars_ > total)
        throw InvalidArgument("embedding out of range");
    MultiPoly r(total);
    Exponent e(static_cast<std::size_t>(total), 0);
    for (const auto& [ex, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < nvars_; ++i)
            e[static_cast<std::size_t>(offset + i)] = ex[static_cast<std::size_t>(i)];
        r.add_term(e, c);
    }
    return r;
}

MultiPoly MultiPoly::permute(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != nvars_)
        throw InvalidArgument("permutation has wrong size");
    MultiPoly r(nvars_);
    Exponent e(static_cast<std::size_t>(nvars_));
    for (const auto& [ex, c] : terms_) {
        for (int i = 0; i < nvars_; ++i)
            e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = ex[static_cast<std::size_t>(i)];
        r.add_term(e, c);
    }
    return r;
}

int MultiPoly::partial_degree(const Exponent& e, int begin, int end)
{
    int d = 0;
    for (int i = begin; i < end; ++i)
        d += e[static_cast<std::size_t>(i)];
    return d;
}

DivisionResult divide(const MultiPoly& p, const MultiPoly& d)
{
    if (d.is_zero())
        throw InvalidArgument("division by the zero polynomial");
    if (p.variable_count() != d.variable_count())
        throw InvalidArgument("variable count mismatch in division");
    const auto& [lead_e, lead_c] = d.leading_term();
    MultiPoly q(p.variable_count()), r(p.variable_count()), work = p;
    Exponent diff(lead_e.size());
    while (!work.is_zero()) {
        auto [e, c] = work.leading_term();
        bool divisible = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            diff[i] = e[i] - lead_e[i];
            if (diff[i] < 0)
                divisible = false;
        }
        if (divisible) {
            MultiPoly t = MultiPoly::monomial(diff, c / lead_c);
            q += t;
            work -= t * d;
        } else {
            r.add_term(e, c);
            work.add_term(e, -c);
        }
    }
    return {std::move(q), std::move(r)};
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d)
{
    auto [q, r] = divide(p, d);
    if (!r.is_zero())
        throw DivisionNotExact(std::move(r));
    return q;
}

std::string to_records(const MultiPoly& p)
{
    std::ostringstream os;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        os << it->second.get_num().get_str() << '/' << it->second.get_den().get_str();
        for (int x : it->first)
            os << ' ' << x;
        os << '\n';
    }
    return os.str();
}

MultiPoly parse_records(const std::string& text, int variable_count)
{
    MultiPoly p(variable_count);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string coeff;
        if (!(ls >> coeff))
            continue;
        Exponent e;
        int x;
        while (ls >> x) {
            if (x < 0)
                throw ParseError("negative exponent on record line " + std::to_string(lineno));
            e.push_back(x);
        }
        if (!ls.eof())
            throw ParseError("malformed exponent on record line " + std::to_string(lineno));
        if (static_cast<int>(e.size()) != variable_count)
            throw ParseError("record line " + std::to_string(lineno) + " has " + std::to_string(e.size()) +
                             " exponents, expected " + std::to_string(variable_count));
        Rational c = parse_rational(coeff);
        if (c == 0)
            throw ParseError("zero coefficient on record line " + std::to_string(lineno));
        if (p.coefficient(e) != 0)
            throw ParseError("duplicate exponent on record line " + std::to_string(lineno));
        p.add_term(e, c);
    }
    return p;
}

std::string to_string(const MultiPoly& p, std::span<const std::string> names)
{
    if (static_cast<int>(names.size()) != p.variable_count())
        throw InvalidArgument("wrong number of variable names");
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        bool need_star = false;
        if (a != 1 || !has_var) {
            os << a.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            os << (need_star ? "*" : "") << names[i];
            if (e[i] > 1)
                os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::optional<Rational> proportionality(const MultiPoly& a, const MultiPoly& b)
{
    if (a.variable_count() != b.variable_count() || a.term_count() != b.term_count())
        return std::nullopt;
    if (a.is_zero())
        return Rational(1);
    std::optional<Rational> ratio;
    auto ia = a.terms().begin();
    for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ib, ++ia) {
        if (ia->first != ib->first)
            return std::nullopt;
        Rational r = ia->second / ib->second;
        if (ratio && *ratio != r)
            return std::nullopt;
        ratio = r;
    }
    return ratio;
}

MultiPoly determinant(PolyMatrix m, int variable_count)
{
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw InvalidArgument("determinant of a non-square matrix");
    if (n == 0)
        return MultiPoly::constant(variable_count, 1);
    MultiPoly prev = MultiPoly::constant(variable_count, 1);
    int sign_flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k].is_zero())
                ++swap;
            if (swap == n)
                return MultiPoly(variable_count);
            std::swap(m[k], m[swap]);
            sign_flip = -sign_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return m[n - 1][n - 1] * Rational(sign_flip);
}

}  // namespace fatness
