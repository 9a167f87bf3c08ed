#include "fatness/symexpr.hpp"

#include "fatness/symfun.hpp"

#include <algorithm>
#include <cctype>

namespace fatness {

namespace {

std::string sigma_name(int i, const std::string& var, bool squared)
{
    std::string s = "sig" + std::to_string(i);
    if (var.empty())
        return s;
    return s + "(" + var + (squared ? "^2" : "") + ")";
}

bool has_euler(ClassFamily f)
{
    return f == ClassFamily::SigmaSquaresEuler || f == ClassFamily::PontrjaginEuler;
}

}  // namespace

ClassBasis::ClassBasis(ClassFamily family, int rank, bool su, std::string var)
{
    if (rank < 1)
        throw InvalidArgument("class basis rank must be positive");
    if (family == ClassFamily::G2Classes && rank != 3)
        throw InvalidArgument("G2 classes live over three torus variables");
    append(BasisBlock{family, rank, su, std::move(var), ""}, false);
}

void ClassBasis::append(const BasisBlock& block_in, bool prime_on_collision)
{
    BasisBlock block = block_in;
    int n = block.rank;
    std::vector<std::string> names;
    std::vector<int> degrees;
    switch (block.family) {
    case ClassFamily::Sigma:
        for (int i = 1; i <= n; ++i) {
            names.push_back(sigma_name(i, block.var, false));
            degrees.push_back(i);
        }
        break;
    case ClassFamily::SigmaSquares:
    case ClassFamily::SigmaSquaresEuler:
        for (int i = 1; i <= n; ++i) {
            names.push_back(sigma_name(i, block.var, true));
            degrees.push_back(2 * i);
        }
        if (block.family == ClassFamily::SigmaSquaresEuler) {
            names.push_back("e(" + (block.var.empty() ? std::string("x") : block.var) + ")");
            degrees.push_back(n);
        }
        break;
    case ClassFamily::Complete:
        for (int i = 1; i <= n; ++i) {
            names.push_back("h" + std::to_string(i));
            degrees.push_back(i);
        }
        break;
    case ClassFamily::Chern:
        for (int i = 1; i <= n; ++i) {
            names.push_back("c" + std::to_string(i));
            degrees.push_back(i);
        }
        break;
    case ClassFamily::Pontrjagin:
    case ClassFamily::PontrjaginEuler:
        for (int i = 1; i <= n; ++i) {
            names.push_back("p" + std::to_string(i));
            degrees.push_back(2 * i);
        }
        if (block.family == ClassFamily::PontrjaginEuler) {
            names.push_back("e");
            degrees.push_back(n);
        }
        break;
    case ClassFamily::TorusChern:
        for (int i = 1; i <= n; ++i) {
            names.push_back("c" + std::to_string(i));
            degrees.push_back(1);
        }
        break;
    case ClassFamily::Coordinates:
        for (int i = 1; i <= n; ++i) {
            names.push_back((block.var.empty() ? std::string("x") : block.var) + std::to_string(i));
            degrees.push_back(1);
        }
        break;
    case ClassFamily::G2Classes:
        names = {"sig2(s)", "sig3(s^2)"};
        degrees = {2, 6};
        break;
    }
    if (prime_on_collision) {
        bool collide = std::any_of(names.begin(), names.end(), [&](const std::string& s) {
            return std::find(names_.begin(), names_.end(), s + block.tag) != names_.end();
        });
        while (collide) {
            block.tag += "'";
            collide = std::any_of(names.begin(), names.end(), [&](const std::string& s) {
                return std::find(names_.begin(), names_.end(), s + block.tag) != names_.end();
            });
        }
    }
    gen_offset_.push_back(generator_count());
    torus_offset_.push_back(torus_vars_);
    for (std::size_t i = 0; i < names.size(); ++i) {
        names_.push_back(names[i] + block.tag);
        degrees_.push_back(degrees[i]);
        block_index_.push_back(static_cast<int>(blocks_.size()));
    }
    torus_vars_ += n;
    blocks_.push_back(block);
}

ClassBasis ClassBasis::product(const ClassBasis& left, const ClassBasis& right)
{
    ClassBasis out = left;
    for (const auto& b : right.blocks_)
        out.append(b, true);
    return out;
}

std::optional<int> ClassBasis::find(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

int ClassBasis::degree(const Exponent& e) const
{
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += e[i] * degrees_[i];
    return d;
}

MultiPoly ClassBasis::realize_generator(int g) const
{
    int b = block_of(g);
    const BasisBlock& block = blocks_[static_cast<std::size_t>(b)];
    int i = g - generator_offset(b);  // zero based inside the block
    int n = block.rank;
    MultiPoly local(n);
    switch (block.family) {
    case ClassFamily::Sigma:
    case ClassFamily::Chern:
        local = elementary_sigma(i + 1, n);
        break;
    case ClassFamily::SigmaSquares:
    case ClassFamily::Pontrjagin:
        local = square_variables(elementary_sigma(i + 1, n));
        break;
    case ClassFamily::SigmaSquaresEuler:
    case ClassFamily::PontrjaginEuler:
        // orientation convention e = -x1...xn on both sides; torus expansions of forms do not depend on it
        local = i < n ? square_variables(elementary_sigma(i + 1, n)) : elementary_sigma(n, n) * Rational(-1);
        break;
    case ClassFamily::Complete:
        local = complete_h(i + 1, n);
        break;
    case ClassFamily::TorusChern:
    case ClassFamily::Coordinates:
        local = MultiPoly::variable(n, i);
        break;
    case ClassFamily::G2Classes:
        local = i == 0 ? elementary_sigma(2, 3) : elementary_sigma(3, 3).pow(2);
        break;
    }
    return local.embed(torus_vars_, torus_offset(b));
}

bool ClassBasis::is_canonical(const Exponent& e) const
{
    if (static_cast<int>(e.size()) != generator_count())
        return false;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const auto& block = blocks_[b];
        int off = gen_offset_[b];
        if (block.su && e[static_cast<std::size_t>(off)] > 0)
            return false;
        if (has_euler(block.family) && e[static_cast<std::size_t>(off + block.rank)] > 1)
            return false;
    }
    return true;
}

MultiPoly ClassBasis::canonicalize(const MultiPoly& p) const
{
    if (p.variable_count() != generator_count())
        throw InvalidArgument("expression does not match the class basis");
    bool clean = true;
    for (const auto& [e, c] : p.terms())
        if (!is_canonical(e)) {
            clean = false;
            break;
        }
    if (clean)
        return p;
    MultiPoly out(generator_count());
    for (const auto& [e0, c] : p.terms()) {
        Exponent e = e0;
        bool dropped = false;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            const auto& block = blocks_[b];
            auto off = static_cast<std::size_t>(gen_offset_[b]);
            if (block.su && e[off] > 0)
                dropped = true;
            if (has_euler(block.family)) {
                auto ei = off + static_cast<std::size_t>(block.rank);
                auto pn = ei - 1;
                e[pn] += e[ei] / 2;
                e[ei] %= 2;
            }
        }
        if (!dropped)
            out.add_term(e, c);
    }
    return out;
}

SymExpr::SymExpr(ClassBasis basis, const MultiPoly& poly) : basis_(std::move(basis)), poly_(basis_.canonicalize(poly)) {}

SymExpr SymExpr::zero(const ClassBasis& basis)
{
    return SymExpr(basis, MultiPoly(basis.generator_count()));
}

SymExpr SymExpr::constant(const ClassBasis& basis, const Rational& c)
{
    return SymExpr(basis, MultiPoly::constant(basis.generator_count(), c));
}

SymExpr SymExpr::generator(const ClassBasis& basis, int index)
{
    return SymExpr(basis, MultiPoly::variable(basis.generator_count(), index));
}

bool SymExpr::is_homogeneous() const
{
    if (poly_.is_zero())
        return true;
    int d = basis_.degree(poly_.terms().begin()->first);
    for (const auto& [e, c] : poly_.terms())
        if (basis_.degree(e) != d)
            return false;
    return true;
}

int SymExpr::degree() const
{
    if (poly_.is_zero() || !is_homogeneous())
        throw InvalidArgument("degree needs a nonzero homogeneous expression");
    return basis_.degree(poly_.terms().begin()->first);
}

SymExpr& SymExpr::operator+=(const SymExpr& o)
{
    if (!(basis_ == o.basis_))
        throw InvalidArgument("class basis mismatch");
    poly_ += o.poly_;
    return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o)
{
    if (!(basis_ == o.basis_))
        throw InvalidArgument("class basis mismatch");
    poly_ -= o.poly_;
    return *this;
}

SymExpr operator*(const SymExpr& a, const SymExpr& b)
{
    if (!(a.basis_ == b.basis_))
        throw InvalidArgument("class basis mismatch");
    return SymExpr(a.basis_, a.poly_ * b.poly_);
}

SymExpr operator*(SymExpr a, const Rational& c)
{
    a.poly_ *= c;
    return a;
}

SymExpr SymExpr::pow(int e) const
{
    SymExpr r = constant(basis_, 1), b = *this;
    while (e > 0) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

MultiPoly SymExpr::realize() const
{
    std::vector<MultiPoly> gens;
    for (int g = 0; g < basis_.generator_count(); ++g)
        gens.push_back(basis_.realize_generator(g));
    if (gens.empty())
        return MultiPoly::constant(basis_.torus_variable_count(), poly_.coefficient({}));
    return poly_.substitute(gens);
}

SymExpr SymExpr::embed(const ClassBasis& product, int first_block) const
{
    int offset = product.generator_offset(first_block);
    return SymExpr(product, poly_.embed(product.generator_count(), offset));
}

SymExpr SymExpr::substitute(const ClassBasis& target, const std::vector<SymExpr>& images) const
{
    std::vector<MultiPoly> polys;
    for (const auto& im : images) {
        if (!(im.basis() == target))
            throw InvalidArgument("substitution images must live in the target basis");
        polys.push_back(im.poly());
    }
    return SymExpr(target, poly_.substitute(polys));
}

Rational SymExpr::evaluate(const std::function<Rational(const Exponent&)>& monomial_value) const
{
    Rational r = 0;
    for (const auto& [e, c] : poly_.terms())
        r += c * monomial_value(e);
    return r;
}

std::string SymExpr::to_string() const
{
    return fatness::to_string(poly_, basis_.names());
}

std::string monomial_string(const ClassBasis& basis, const Exponent& e)
{
    return fatness::to_string(MultiPoly::monomial(e), basis.names());
}

namespace {

std::string strip(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool looks_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return all_digits(s);
    return all_digits(s.substr(0, slash)) && all_digits(s.substr(slash + 1));
}

void accumulate_factor(const ClassBasis& basis, const std::string& tok, Exponent& e)
{
    std::string name = tok;
    int power = 1;
    auto caret = tok.rfind('^');
    if (caret != std::string::npos && tok.back() != ')' && all_digits(tok.substr(caret + 1))) {
        name = tok.substr(0, caret);
        power = std::stoi(tok.substr(caret + 1));
    }
    auto idx = basis.find(name);
    if (!idx)
        throw ParseError("unknown generator '" + name + "'");
    e[static_cast<std::size_t>(*idx)] += power;
}

}  // namespace

Exponent parse_monomial(const ClassBasis& basis, const std::string& text)
{
    Exponent e(static_cast<std::size_t>(basis.generator_count()), 0);
    std::string s = strip(text);
    if (s == "1")
        return e;
    if (s.empty())
        throw ParseError("empty monomial");
    for (const auto& part : split_top(s, '*')) {
        std::string tok = strip(part);
        if (tok.empty())
            throw ParseError("empty factor in monomial '" + text + "'");
        accumulate_factor(basis, tok, e);
    }
    return e;
}

SymExpr parse_class_expression(const ClassBasis& basis, const std::string& text)
{
    MultiPoly p(basis.generator_count());
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw ParseError("empty expression");
    // split into signed terms at top-level + and -, skipping exponent contexts
    std::vector<std::pair<int, std::string>> terms;
    int depth = 0, sgn = 1;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if ((c == '+' || c == '-') && depth == 0 && (i == 0 || s[i - 1] != '^')) {
            if (!cur.empty())
                terms.emplace_back(sgn, cur);
            else if (i != 0)
                throw ParseError("dangling operator in '" + text + "'");
            cur.clear();
            sgn = c == '-' ? -1 : 1;
            continue;
        }
        cur.push_back(c);
    }
    if (cur.empty())
        throw ParseError("dangling operator in '" + text + "'");
    terms.emplace_back(sgn, cur);
    for (const auto& [sg, term] : terms) {
        Rational coeff = sg;
        Exponent e(static_cast<std::size_t>(basis.generator_count()), 0);
        for (const auto& part : split_top(term, '*')) {
            if (part.empty())
                throw ParseError("empty factor in '" + text + "'");
            if (looks_rational(part))
                coeff *= parse_rational(part);
            else
                accumulate_factor(basis, part, e);
        }
        p.add_term(e, coeff);
    }
    return SymExpr(basis, p);
}

}  // namespace fatness
