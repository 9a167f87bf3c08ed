#include "fatness/weinstein.hpp"

#include "fatness/symfun.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace fatness {

int GroupSpec::positive_roots() const
{
    int n = rank;
    switch (family) {
    case GroupFamily::Torus:
        return 0;
    case GroupFamily::U:
    case GroupFamily::SU:
        return n * (n - 1) / 2;
    case GroupFamily::SO_even:
    case GroupFamily::O_even:
        return n * (n - 1);
    case GroupFamily::SO_odd:
    case GroupFamily::O_odd:
    case GroupFamily::Sp:
        return n * n;
    case GroupFamily::G2:
        return 6;
    }
    return 0;
}

int GroupSpec::epsilon() const
{
    return (family == GroupFamily::O_even || family == GroupFamily::SO_even) ? 0 : 1;
}

bool GroupSpec::even_only() const
{
    switch (family) {
    case GroupFamily::SO_odd:
    case GroupFamily::O_even:
    case GroupFamily::O_odd:
    case GroupFamily::Sp:
    case GroupFamily::G2:
        return true;
    case GroupFamily::SO_even:
        return rank % 2 == 0;
    default:
        return false;
    }
}

int GroupSpec::lie_algebra_dimension() const
{
    int n = rank;
    switch (family) {
    case GroupFamily::Torus:
        return n;
    case GroupFamily::U:
        return n * n;
    case GroupFamily::SU:
        return n * n - 1;
    case GroupFamily::SO_even:
    case GroupFamily::O_even:
        return n * (2 * n - 1);
    case GroupFamily::SO_odd:
    case GroupFamily::O_odd:
    case GroupFamily::Sp:
        return n * (2 * n + 1);
    case GroupFamily::G2:
        return 14;
    }
    return 0;
}

std::string GroupSpec::name() const
{
    std::string n = std::to_string(rank);
    switch (family) {
    case GroupFamily::Torus:
        return "T^" + n;
    case GroupFamily::U:
        return "U(" + n + ")";
    case GroupFamily::SU:
        return "SU(" + n + ")";
    case GroupFamily::SO_even:
        return "SO(" + std::to_string(2 * rank) + ")";
    case GroupFamily::SO_odd:
        return "SO(" + std::to_string(2 * rank + 1) + ")";
    case GroupFamily::O_even:
        return "O(" + std::to_string(2 * rank) + ")";
    case GroupFamily::O_odd:
        return "O(" + std::to_string(2 * rank + 1) + ")";
    case GroupFamily::Sp:
        return "Sp(" + n + ")";
    case GroupFamily::G2:
        return "G2";
    }
    return "?";
}

ClassBasis GroupSpec::y_basis() const
{
    switch (family) {
    case GroupFamily::Torus:
        return ClassBasis(ClassFamily::Coordinates, rank, false, "y");
    case GroupFamily::U:
        return ClassBasis(ClassFamily::Sigma, rank, false, "y");
    case GroupFamily::SU:
        return ClassBasis(ClassFamily::Sigma, rank, true, "y");
    case GroupFamily::SO_even:
        return ClassBasis(ClassFamily::SigmaSquaresEuler, rank, false, "y");
    case GroupFamily::G2:
        return ClassBasis(ClassFamily::Sigma, 3, true, "y");
    default:
        return ClassBasis(ClassFamily::SigmaSquares, rank, false, "y");
    }
}

ClassBasis GroupSpec::x_basis() const
{
    switch (family) {
    case GroupFamily::Torus:
        return ClassBasis(ClassFamily::TorusChern, rank);
    case GroupFamily::U:
        return ClassBasis(ClassFamily::Chern, rank);
    case GroupFamily::SU:
        return ClassBasis(ClassFamily::Chern, rank, true);
    case GroupFamily::SO_even:
        return ClassBasis(ClassFamily::PontrjaginEuler, rank);
    case GroupFamily::G2:
        return ClassBasis(ClassFamily::G2Classes, 3);
    default:
        return ClassBasis(ClassFamily::Pontrjagin, rank);
    }
}

GroupSpec GroupSpec::parse(const std::string& token_in, int rank)
{
    std::string token;
    for (char c : token_in)
        if (!std::isspace(static_cast<unsigned char>(c)))
            token.push_back(c);
    static const std::regex named(R"(^(T\^|U|SU|SO|O|Sp)\((\d+)\)$)");
    std::smatch mt;
    if (std::regex_match(token, mt, named)) {
        std::string fam = mt[1];
        int v = std::stoi(mt[2]);
        if (v < 1)
            throw InvalidArgument("group size must be positive in '" + token_in + "'");
        if (fam == "SO" || fam == "O") {
            if (v < 2)
                throw InvalidArgument("orthogonal group needs dimension >= 2");
            bool even = v % 2 == 0;
            GroupFamily f = fam == "SO" ? (even ? GroupFamily::SO_even : GroupFamily::SO_odd)
                                        : (even ? GroupFamily::O_even : GroupFamily::O_odd);
            return GroupSpec{f, v / 2};
        }
        token = fam == "T^" ? "T" : fam;
        rank = v;
    } else if (token == "G2" || token == "g2") {
        return GroupSpec{GroupFamily::G2, 2};
    }
    static const std::map<std::string, GroupFamily> families{
        {"T", GroupFamily::Torus},         {"Torus", GroupFamily::Torus},     {"U", GroupFamily::U},
        {"SU", GroupFamily::SU},           {"SO", GroupFamily::SO_even},      {"SO_even", GroupFamily::SO_even},
        {"SO_odd", GroupFamily::SO_odd},   {"O", GroupFamily::O_even},        {"O_even", GroupFamily::O_even},
        {"O_odd", GroupFamily::O_odd},     {"Sp", GroupFamily::Sp},
    };
    auto it = families.find(token);
    if (it == families.end())
        throw InvalidArgument("unknown group family '" + token_in + "'");
    if (rank < 1)
        throw InvalidArgument("group " + token_in + " needs a positive rank");
    return GroupSpec{it->second, rank};
}

int TFamily::degree() const
{
    for (int i = static_cast<int>(coefficients.size()) - 1; i >= 0; --i)
        if (!coefficients[static_cast<std::size_t>(i)].is_zero())
            return i;
    return -1;
}

SymExpr TFamily::coefficient(int i) const
{
    if (i < 0 || i >= static_cast<int>(coefficients.size()))
        return SymExpr::zero(basis);
    return coefficients[static_cast<std::size_t>(i)];
}

void TFamily::add(int power, const SymExpr& value)
{
    while (static_cast<int>(coefficients.size()) <= power)
        coefficients.push_back(SymExpr::zero(basis));
    coefficients[static_cast<std::size_t>(power)] += value;
}

TFamily TFamily::scaled(const Rational& c) const
{
    TFamily out(basis);
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        out.add(static_cast<int>(i), coefficients[i] * c);
    return out;
}

UniPoly TFamily::evaluate(const std::function<Rational(const Exponent&)>& monomial_value) const
{
    std::vector<Rational> v;
    for (const auto& c : coefficients)
        v.push_back(c.evaluate(monomial_value));
    return UniPoly(std::move(v));
}

MultiPoly TFamily::flatten() const
{
    int g = basis.generator_count();
    MultiPoly out(g + 1);
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        for (const auto& [e, c] : coefficients[i].poly().terms()) {
            Exponent f{static_cast<int>(i)};
            f.insert(f.end(), e.begin(), e.end());
            out.add_term(f, c);
        }
    return out;
}

std::string TFamily::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const auto& c = coefficients[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        os << (first ? "" : " + ") << '(' << c.to_string() << ')';
        if (i > 0)
            os << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return first ? "0" : os.str();
}

WeinsteinForm::WeinsteinForm(std::vector<GroupSpec> groups, int degree, ClassBasis y_basis, ClassBasis x_basis)
    : groups_(std::move(groups)), degree_(degree), y_basis_(std::move(y_basis)), x_basis_(std::move(x_basis))
{
}

void WeinsteinForm::add_term(const Rational& coefficient, const SymExpr& y, const SymExpr& x, std::string label)
{
    if (!(y.basis() == y_basis_) || !(x.basis() == x_basis_))
        throw InvalidArgument("form term does not match the form's bases");
    if (coefficient == 0 || y.is_zero() || x.is_zero())
        return;
    if (!x.is_homogeneous() || x.degree() != degree_)
        throw InvalidArgument("form term x-side is not homogeneous of the form degree");
    terms_.push_back(FormTerm{coefficient, y, x, std::move(label)});
}

WeinsteinForm WeinsteinForm::scaled(const Rational& c) const
{
    WeinsteinForm out = *this;
    for (auto& t : out.terms_)
        t.coefficient *= c;
    if (c == 0)
        out.terms_.clear();
    return out;
}

MultiPoly WeinsteinForm::expand() const
{
    int ny = y_basis_.torus_variable_count(), nx = x_basis_.torus_variable_count();
    MultiPoly out(ny + nx);
    for (const auto& t : terms_)
        out += t.y_part.realize().embed(ny + nx, 0) * t.x_part.realize().embed(ny + nx, ny) * t.coefficient;
    return out;
}

namespace {

bool trace_zero_block(const BasisBlock& b)
{
    return b.su || b.family == ClassFamily::G2Classes;
}

MultiPoly reduce_block(const MultiPoly& p, int offset, int n)
{
    int total = p.variable_count();
    std::vector<MultiPoly> values;
    for (int i = 0; i < total; ++i)
        values.push_back(MultiPoly::variable(total, i));
    MultiPoly last(total);
    for (int i = offset; i < offset + n - 1; ++i)
        last -= MultiPoly::variable(total, i);
    values[static_cast<std::size_t>(offset + n - 1)] = last;
    return p.substitute(values);
}

}  // namespace

MultiPoly WeinsteinForm::comparison_polynomial() const
{
    MultiPoly p = expand();
    int ny = y_basis_.torus_variable_count();
    for (std::size_t b = 0; b < y_basis_.blocks().size(); ++b)
        if (trace_zero_block(y_basis_.blocks()[b]))
            p = reduce_block(p, y_basis_.torus_offset(static_cast<int>(b)), y_basis_.blocks()[b].rank);
    for (std::size_t b = 0; b < x_basis_.blocks().size(); ++b)
        if (trace_zero_block(x_basis_.blocks()[b]))
            p = reduce_block(p, ny + x_basis_.torus_offset(static_cast<int>(b)), x_basis_.blocks()[b].rank);
    return p;
}

TFamily WeinsteinForm::restrict(const std::vector<UniPoly>& coords) const
{
    if (static_cast<int>(coords.size()) != y_basis_.torus_variable_count())
        throw InvalidArgument("curve dimension " + std::to_string(coords.size()) + " does not match " +
                              std::to_string(y_basis_.torus_variable_count()) + " torus coordinates");
    TFamily out(x_basis_);
    for (const auto& t : terms_) {
        UniPoly yt = t.y_part.realize().substitute_univariate(coords) * t.coefficient;
        for (int i = 0; i <= yt.degree(); ++i)
            if (yt.coefficient(i) != 0)
                out.add(i, t.x_part * yt.coefficient(i));
    }
    return out;
}

SymExpr WeinsteinForm::at(const std::vector<Rational>& y) const
{
    std::vector<UniPoly> coords;
    for (const auto& v : y)
        coords.push_back(UniPoly::constant(v));
    return restrict(coords).coefficient(0);
}

std::string WeinsteinForm::to_string() const
{
    std::ostringstream os;
    for (const auto& t : terms_)
        os << "y:" << t.y_part.to_string() << " x:" << t.x_part.to_string() << " coeff:" << t.coefficient.get_str()
           << '\n';
    return os.str();
}

std::optional<Rational> positive_ratio(const WeinsteinForm& a, const WeinsteinForm& b)
{
    auto r = proportionality(a.comparison_polynomial(), b.comparison_polynomial());
    if (!r || *r <= 0)
        return std::nullopt;
    return r;
}

namespace {

/// det(g_{parts_i + j - i}) using generators offset.. offset+n-1 of the basis.
SymExpr class_det(const ClassBasis& basis, const std::vector<int>& parts, int n, int offset = 0)
{
    int g = basis.generator_count();
    auto gen = [&](int k) {
        if (k > n)
            return MultiPoly(g);
        return MultiPoly::variable(g, offset + k - 1);
    };
    return SymExpr(basis, jacobi_trudi(parts, g, gen));
}

/// S_lambda in the first n generators via det(h_{lambda_i + j - i}), n x n.
class SchurClasses {
public:
    SchurClasses(ClassBasis basis, int n) : basis_(std::move(basis)), n_(n) {}

    SymExpr operator()(const Partition& lambda)
    {
        int g = basis_.generator_count();
        while (static_cast<int>(h_.size()) <= lambda.largest() + n_)
            h_.push_back(complete_in_classes(basis_, static_cast<int>(h_.size()), n_).poly());
        PolyMatrix m(static_cast<std::size_t>(n_), std::vector<MultiPoly>(static_cast<std::size_t>(n_), MultiPoly(g)));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                int idx = (i < lambda.length() ? lambda[i] : 0) + j - i;
                if (idx >= 0)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h_[static_cast<std::size_t>(idx)];
            }
        return SymExpr(basis_, determinant(std::move(m), g));
    }

private:
    ClassBasis basis_;
    int n_;
    std::vector<MultiPoly> h_;
};

std::vector<int> conjugate_parts(const Partition& lambda)
{
    return conjugate(lambda, std::max(1, lambda.largest())).parts();
}

}  // namespace

SymExpr complete_in_classes(const ClassBasis& basis, int k, int n, int first_generator)
{
    std::vector<SymExpr> h{SymExpr::constant(basis, 1)};
    for (int r = 1; r <= k; ++r) {
        SymExpr acc = SymExpr::zero(basis);
        for (int j = 1; j <= std::min(r, n); ++j) {
            SymExpr term = SymExpr::generator(basis, first_generator + j - 1) * h[static_cast<std::size_t>(r - j)];
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        h.push_back(acc);
    }
    if (k < 0)
        return SymExpr::zero(basis);
    return h[static_cast<std::size_t>(k)];
}

WeinsteinForm q_schur_form(const GroupSpec& group, int k)
{
    if (group.family == GroupFamily::Torus || group.family == GroupFamily::G2)
        throw UnsupportedGroup(group.name() + " has a dedicated invariant operation");
    if (k < 0)
        throw InvalidArgument("invariant degree must be non-negative");
    int n = group.rank;
    ClassBasis yb = group.y_basis(), xb = group.x_basis();
    SchurClasses sy(yb, n), sx(xb, n);
    WeinsteinForm form({group}, k, yb, xb);
    Integer kf = factorial(k);
    if (group.family == GroupFamily::U || group.family == GroupFamily::SU) {
        for (const auto& lambda : enumerate_km(k, n))
            form.add_term(fraction(kf, shifted_factorial(lambda, 1, 0)), sy(lambda), sx(lambda),
                          "lambda=" + lambda.to_string());
        return form;
    }
    if (k % 2 == 0)
        for (const auto& lambda : enumerate_km(k / 2, n))
            form.add_term(fraction(kf, shifted_factorial(lambda, 2, group.epsilon())), sy(lambda), sx(lambda),
                          "lambda=" + lambda.to_string());
    if (group.family == GroupFamily::SO_even && (k - n) >= 0 && (k - n) % 2 == 0) {
        SymExpr ey = SymExpr::generator(yb, n), ex = SymExpr::generator(xb, n);
        for (const auto& lambda : enumerate_km((k - n) / 2, n))
            form.add_term(fraction(kf, shifted_factorial(lambda, 2, 1)), ey * sy(lambda), ex * sx(lambda),
                          "euler lambda=" + lambda.to_string());
    }
    return form;
}

WeinsteinForm haar_normalized_form(const GroupSpec& group, int k)
{
    if (group.family == GroupFamily::Torus)
        return q_torus_form(group.rank, k);
    WeinsteinForm zero = q_schur_form(group, 0);
    Rational c0 = zero.terms().front().coefficient;
    return q_schur_form(group, k).scaled(1 / c0);
}

WeinsteinForm q_char_form(const GroupSpec& group, int m)
{
    if (group.family == GroupFamily::G2)
        throw UnsupportedGroup("G2 invariants come from q_g2");
    if (group.family == GroupFamily::Torus)
        return q_torus_form(group.rank, m);
    if (m < 0)
        throw InvalidArgument("invariant degree must be non-negative");
    int n = group.rank;
    ClassBasis yb = group.y_basis(), xb = group.x_basis();
    WeinsteinForm form({group}, m, yb, xb);
    if (group.family == GroupFamily::U || group.family == GroupFamily::SU) {
        for (const auto& lambda : enumerate_km_conjugate(m, n))
            form.add_term(Rational(shifted_factorial(complement(lambda, n), 1, 0)), class_det(yb, lambda.parts(), n),
                          class_det(xb, lambda.parts(), n), "lambda'=" + lambda.to_string());
        return form;
    }
    if (m % 2 != 0)
        return form;
    int half = m / 2;
    if (group.family != GroupFamily::SO_even) {
        for (const auto& lambda : enumerate_km_conjugate(half, n))
            form.add_term(Rational(shifted_factorial(complement(lambda, n), 2, group.epsilon())),
                          class_det(yb, lambda.parts(), n), class_det(xb, lambda.parts(), n),
                          "lambda'=" + lambda.to_string());
        return form;
    }
    Integer first_den = shifted_factorial(Partition::zero(half + n), 2, 0);
    for (const auto& lambda : enumerate_km_conjugate(half, n))
        form.add_term(fraction(shifted_factorial(complement(lambda, n), 2, 0), first_den),
                      class_det(yb, lambda.parts(), n), class_det(xb, lambda.parts(), n),
                      "lambda'=" + lambda.to_string());
    if (m - n >= 0 && (m - n) % 2 == 0) {
        int q = (m - n) / 2;
        Integer second_den = shifted_factorial(Partition::zero(q + n), 2, 1);
        SymExpr ey = SymExpr::generator(yb, n), ex = SymExpr::generator(xb, n);
        for (const auto& lambda : enumerate_km_conjugate(q, n))
            form.add_term(fraction(shifted_factorial(complement(lambda, n), 2, 1), second_den),
                          ey * class_det(yb, lambda.parts(), n), ex * class_det(xb, lambda.parts(), n),
                          "euler lambda'=" + lambda.to_string());
    }
    return form;
}

SymExpr q_torus(const std::vector<Rational>& y, int m)
{
    if (y.empty() || std::all_of(y.begin(), y.end(), [](const Rational& v) { return v == 0; }))
        throw ZeroVector();
    ClassBasis basis(ClassFamily::TorusChern, static_cast<int>(y.size()));
    SymExpr lin = SymExpr::zero(basis);
    for (std::size_t i = 0; i < y.size(); ++i)
        lin += SymExpr::generator(basis, static_cast<int>(i)) * y[i];
    return lin.pow(m);
}

WeinsteinForm q_torus_form(int n, int m)
{
    GroupSpec group{GroupFamily::Torus, n};
    ClassBasis yb = group.y_basis(), xb = group.x_basis();
    WeinsteinForm form({group}, m, yb, xb);
    // (sum y_i c_i)^m expanded; the y side uses the same exponent as the x side
    MultiPoly lin(2 * n);
    for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(2 * n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        e[static_cast<std::size_t>(n + i)] = 1;
        lin.add_term(e, 1);
    }
    MultiPoly full = lin.pow(m);
    for (const auto& [e, c] : full.terms()) {
        Exponent ey(e.begin(), e.begin() + n), ex(e.begin() + n, e.end());
        form.add_term(c, SymExpr(yb, MultiPoly::monomial(ey)), SymExpr(xb, MultiPoly::monomial(ex)));
    }
    return form;
}

WeinsteinForm q_product(const GroupSpec& left, const GroupSpec& right, int m)
{
    if (left.family == GroupFamily::G2 || right.family == GroupFamily::G2)
        throw UnsupportedGroup("product invariants need classical or torus factors");
    if (m < 0)
        throw InvalidArgument("invariant degree must be non-negative");
    ClassBasis yb = ClassBasis::product(left.y_basis(), right.y_basis());
    ClassBasis xb = ClassBasis::product(left.x_basis(), right.x_basis());
    int right_block = static_cast<int>(left.y_basis().blocks().size());
    WeinsteinForm form({left, right}, m, yb, xb);
    for (int i = 0; i <= m; ++i) {
        WeinsteinForm a = haar_normalized_form(left, i);
        WeinsteinForm b = haar_normalized_form(right, m - i);
        Rational binom(binomial(m, i));
        for (const auto& ta : a.terms())
            for (const auto& tb : b.terms())
                form.add_term(binom * ta.coefficient * tb.coefficient,
                              ta.y_part.embed(yb, 0) * tb.y_part.embed(yb, right_block),
                              ta.x_part.embed(xb, 0) * tb.x_part.embed(xb, right_block),
                              "i=" + std::to_string(i));
    }
    return form;
}

namespace {

void compositions(int n, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = total; v >= 0; --v) {
        cur.push_back(v);
        compositions(n, total - v, cur, out);
        cur.pop_back();
    }
}

int perm_sign(const std::vector<int>& p)
{
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                s = -s;
    return s;
}

}  // namespace

WeinsteinForm q_weyl_sum(const GroupSpec& group, int k)
{
    GroupFamily f = group.family;
    bool unitary = f == GroupFamily::U || f == GroupFamily::SU;
    if (!unitary && f != GroupFamily::SO_even && f != GroupFamily::SO_odd && f != GroupFamily::Sp)
        throw UnsupportedGroup("no explicit Weyl sum for " + group.name());
    int n = group.rank, r = group.positive_roots();
    if (n > 4 || k + r > 24)
        throw ComplexityLimit("Weyl sum for " + group.name() + " in degree " + std::to_string(k) + " is too large");
    // Weyl group elements as (permutation, sign pattern)
    std::vector<std::pair<std::vector<int>, std::vector<int>>> weyl;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            int flips = __builtin_popcount(static_cast<unsigned>(mask));
            if (unitary && mask != 0)
                continue;
            if (f == GroupFamily::SO_even && flips % 2 != 0)
                continue;
            std::vector<int> signs(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
            weyl.emplace_back(perm, signs);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    int total = 2 * n;
    MultiPoly rhs(total);
    std::vector<std::vector<int>> mus;
    std::vector<int> cur;
    compositions(n, k + r, cur, mus);
    Integer kf = factorial(k);
    for (const auto& mu : mus) {
        Integer mf = 1;
        for (int v : mu)
            mf *= factorial(v);
        Exponent e(static_cast<std::size_t>(total), 0);
        for (int i = 0; i < n; ++i)
            e[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)];
        for (const auto& [p, s] : weyl) {
            // (wx)_i = s_i x_{p(i)}, det(w) = sign(p) prod s_i
            int coeff = perm_sign(p);
            for (int i = 0; i < n; ++i) {
                int si = s[static_cast<std::size_t>(i)];
                if (si < 0 && mu[static_cast<std::size_t>(i)] % 2 == 0)
                    coeff = -coeff;  // det contributes -1, power contributes +1
                e[static_cast<std::size_t>(n + i)] = 0;
            }
            for (int i = 0; i < n; ++i)
                e[static_cast<std::size_t>(n + p[static_cast<std::size_t>(i)])] += mu[static_cast<std::size_t>(i)];
            rhs.add_term(e, fraction(kf * coeff, mf));
        }
    }
    auto pi = [&](int offset) {
        MultiPoly base = unitary ? vandermonde(n) : square_variables(vandermonde(n));
        if (f == GroupFamily::SO_odd)
            base *= elementary_sigma(n, n);
        if (f == GroupFamily::Sp)
            base *= elementary_sigma(n, n) * Rational(Integer(1) << n);
        return base.embed(total, offset);
    };
    MultiPoly q = exact_divide(exact_divide(rhs, pi(0)), pi(n));

    ClassBasis yb(ClassFamily::Coordinates, n, false, "y"), xb(ClassFamily::Coordinates, n, false, "x");
    WeinsteinForm form({group}, k, yb, xb);
    // collect by y monomial so each term is y^a (x polynomial)
    std::map<Exponent, MultiPoly> by_y;
    for (const auto& [e, c] : q.terms()) {
        Exponent ey(e.begin(), e.begin() + n), ex(e.begin() + n, e.end());
        auto it = by_y.try_emplace(ey, MultiPoly(n)).first;
        it->second.add_term(ex, c);
    }
    for (const auto& [ey, xp] : by_y)
        form.add_term(1, SymExpr(yb, MultiPoly::monomial(ey)), SymExpr(xb, xp));
    return form;
}

WeinsteinForm q_g2(int m)
{
    if (m < 0 || m % 2 != 0)
        throw InvalidArgument("G2 invariants need an even degree");
    GroupSpec g2{GroupFamily::G2, 2};
    ClassBasis sig(ClassFamily::Sigma, 3, true, "s");
    ClassBasis yb = g2.y_basis(), xb = g2.x_basis();
    Integer mf = factorial(m);
    // generators in the pair ring: sig1(y), sig2(y), sig3(y), sig1(s), sig2(s), sig3(s)
    MultiPoly aggregate(6), divided(6);
    auto bilinear = [&](const std::vector<int>& conj) {
        MultiPoly s = SymExpr(sig, jacobi_trudi(conj, 3, [](int k) {
                                   return k > 3 ? MultiPoly(3) : MultiPoly::variable(3, k - 1);
                               })).poly();
        return s.embed(6, 0) * s.embed(6, 3);
    };
    for (const auto& lambda : enumerate_km(m + 3, 3)) {
        Rational c = fraction(2 * mf, shifted_factorial(lambda, 1, 0));
        if (lambda[2] >= 1) {
            Partition reduced({lambda[0] - 1, lambda[1] - 1, lambda[2] - 1});
            divided += bilinear(conjugate_parts(reduced)) * c;
        } else {
            aggregate += bilinear(conjugate_parts(lambda)) * c;
        }
    }
    if (!aggregate.is_zero()) {
        Exponent e(6, 0);
        e[2] = 1;
        e[5] = 1;
        divided += exact_divide(aggregate, MultiPoly::monomial(e));
    }
    WeinsteinForm form({g2}, m, yb, xb);
    std::map<Exponent, MultiPoly> by_y;
    for (const auto& [e, c] : divided.terms()) {
        if (e[0] != 0 || e[3] != 0)
            throw InvalidArgument("G2 reduction left a sigma_1 term");
        if (e[5] % 2 != 0)
            throw DivisionNotExact(divided);
        Exponent ey{0, e[1], e[2]}, ex{e[4], e[5] / 2};
        auto it = by_y.try_emplace(ey, MultiPoly(2)).first;
        it->second.add_term(ex, c);
    }
    for (const auto& [ey, xp] : by_y)
        form.add_term(1, SymExpr(yb, MultiPoly::monomial(ey)), SymExpr(xb, xp));
    return form;
}

ReducedFamily q_u2_reduced(int m)
{
    if (m < 0 || m % 2 != 0)
        throw InvalidArgument("q_u2_reduced needs an even degree");
    ClassBasis basis(ClassFamily::Chern, 2);
    SymExpr c1 = SymExpr::generator(basis, 0), c2 = SymExpr::generator(basis, 1);
    SymExpr d = c1 * c1 - c2 * Rational(4);
    ReducedFamily out{{}, TFamily(basis)};
    for (int j = 0; j <= m / 2; ++j) {
        Integer b = binomial(m + 1, 2 * j + 1);
        out.coefficients.push_back(b);
        out.family.add(2 * j, c1.pow(m - 2 * j) * d.pow(j) * Rational(b));
    }
    return out;
}

ReducedFamily q_so4_reduced(int m)
{
    if (m < 0 || m % 2 != 0)
        throw InvalidArgument("q_so4_reduced needs an even degree");
    ClassBasis basis(ClassFamily::PontrjaginEuler, 2);
    SymExpr p1 = SymExpr::generator(basis, 0), e = SymExpr::generator(basis, 2);
    SymExpr a = p1 - e * Rational(2), b = p1 + e * Rational(2);
    ReducedFamily out{{}, TFamily(basis)};
    for (int j = 0; j <= m / 2; ++j) {
        Integer c = binomial(m + 2, 2 * j + 1);
        out.coefficients.push_back(c);
        out.family.add(2 * j, a.pow(m / 2 - j) * b.pow(j) * Rational(c));
    }
    return out;
}

TFamily q_special_un(SpecialCase which, int n, int m)
{
    if (n < 1 || m < 0)
        throw InvalidArgument("q_special_un needs n >= 1 and m >= 0");
    ClassBasis basis(ClassFamily::Chern, n);
    TFamily out(basis);
    auto h = [&](int k) { return complete_in_classes(basis, k, n); };
    SymExpr c1 = SymExpr::generator(basis, 0);
    switch (which) {
    case SpecialCase::AllOnes:
        out.add(0, c1.pow(m));
        break;
    case SpecialCase::E1:
        out.add(0, h(m));
        break;
    case SpecialCase::PerturbedOnes:
        for (int k = 0; k <= m; ++k)
            out.add(k, c1.pow(m - k) * h(k) * Rational(binomial(m + n - 1, n + k - 1)));
        break;
    case SpecialCase::E1PlusTE2:
        if (n < 2)
            throw InvalidArgument("e1 + t e2 needs n >= 2");
        for (int k = 0; 2 * k <= m; ++k) {
            SymExpr bracket = h(k) * h(m - k) - h(k - 1) * h(m - k + 1);
            bracket = bracket * Rational(binomial(m + 2 * n - 3, n + k - 2));
            for (int i = k; i <= m - k; ++i)
                out.add(i, bracket);
        }
        break;
    }
    return out;
}

}  // namespace fatness
