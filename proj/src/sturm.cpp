#include "fatness/sturm.hpp"

#include <cstdlib>
#include <sstream>

namespace fatness {

bool Interval::contains(const Rational& t) const
{
    if (lo.finite() && (t < lo.value || (t == lo.value && !lo.closed)))
        return false;
    if (hi.finite() && (t > hi.value || (t == hi.value && !hi.closed)))
        return false;
    return true;
}

std::string Interval::to_string() const
{
    std::ostringstream os;
    os << (lo.finite() && lo.closed ? '[' : '(') << (lo.finite() ? lo.value.get_str() : "-inf") << ", "
       << (hi.finite() ? hi.value.get_str() : "+inf") << (hi.finite() && hi.closed ? ']' : ')');
    return os.str();
}

namespace {

// lo < hi as positions; equal finite values are allowed for a closed point.
bool well_formed(const Interval& iv)
{
    if (iv.lo.kind == Bound::Kind::PosInf || iv.hi.kind == Bound::Kind::NegInf)
        return false;
    if (iv.lo.finite() && iv.hi.finite()) {
        if (iv.lo.value > iv.hi.value)
            return false;
        if (iv.lo.value == iv.hi.value)
            return iv.lo.closed && iv.hi.closed;
    }
    return true;
}

// true when a ends at or before b starts with no shared point
bool before(const Interval& a, const Interval& b)
{
    if (!a.hi.finite() || !b.lo.finite())
        return false;
    if (a.hi.value < b.lo.value)
        return true;
    return a.hi.value == b.lo.value && !(a.hi.closed && b.lo.closed);
}

}  // namespace

Domain::Domain(std::vector<Interval> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (!well_formed(parts_[i]))
            throw InvalidArgument("malformed interval " + parts_[i].to_string());
        if (i > 0 && !before(parts_[i - 1], parts_[i]))
            throw InvalidArgument("domain intervals must be disjoint and sorted");
    }
}

Domain Domain::real_line()
{
    return Domain({Interval{Bound::neg_inf(), Bound::pos_inf()}});
}

Domain Domain::closed(const Rational& a, const Rational& b)
{
    return Domain({Interval{Bound::at(a, true), Bound::at(b, true)}});
}

Domain Domain::at_least(const Rational& a)
{
    return Domain({Interval{Bound::at(a, true), Bound::pos_inf()}});
}

Domain Domain::at_most(const Rational& b)
{
    return Domain({Interval{Bound::neg_inf(), Bound::at(b, true)}});
}

bool Domain::contains(const Rational& t) const
{
    for (const auto& iv : parts_)
        if (iv.contains(t))
            return true;
    return false;
}

bool Domain::bounded_above() const
{
    return !parts_.empty() && parts_.back().hi.finite();
}

bool Domain::bounded_below() const
{
    return !parts_.empty() && parts_.front().lo.finite();
}

std::string Domain::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? " u " : "") << parts_[i].to_string();
    return parts_.empty() ? "{}" : os.str();
}

std::string RootEnclosure::to_string() const
{
    std::ostringstream os;
    if (exact())
        os << lo.get_str();
    else
        os << '[' << lo.get_str() << ", " << hi.get_str() << "] ~ " << approx();
    if (multiplicity > 1)
        os << " (multiplicity " << multiplicity << ')';
    return os.str();
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p)
{
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = divide(chain[chain.size() - 2], chain.back()).remainder;
        if (r.is_zero())
            break;
        chain.push_back(-r);
    }
    if (chain.back().is_zero())
        chain.pop_back();
    return chain;
}

// Sign of q just right (dir=+1) or left (dir=-1) of a: first nonzero Taylor term.
int one_sided_sign(const UniPoly& q, const Rational& a, int dir)
{
    UniPoly d = q;
    for (int k = 0; !d.is_zero(); ++k) {
        int s = d.sign_at(a);
        if (s != 0)
            return (dir < 0 && k % 2 == 1) ? -s : s;
        d = d.derivative();
    }
    return 0;
}

int sign_at_infinity(const UniPoly& q, int dir)
{
    int s = sgn(q.leading());
    return (dir < 0 && q.degree() % 2 == 1) ? -s : s;
}

int variations(const std::vector<int>& signs)
{
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

// Variations at an infinitesimal offset from a bound, toward the interior.
int variations_at(const std::vector<UniPoly>& chain, const Bound& b, int inward)
{
    std::vector<int> signs;
    for (const auto& q : chain) {
        if (b.kind == Bound::Kind::NegInf)
            signs.push_back(sign_at_infinity(q, -1));
        else if (b.kind == Bound::Kind::PosInf)
            signs.push_back(sign_at_infinity(q, +1));
        else
            signs.push_back(one_sided_sign(q, b.value, inward));
    }
    return variations(signs);
}

// Roots strictly between the bounds.
int open_count(const std::vector<UniPoly>& chain, const Bound& lo, const Bound& hi)
{
    if (lo.finite() && hi.finite() && lo.value >= hi.value)
        return 0;
    return variations_at(chain, lo, +1) - variations_at(chain, hi, -1);
}

int interval_count(const std::vector<UniPoly>& chain, const UniPoly& p, const Interval& iv)
{
    if (iv.lo.finite() && iv.hi.finite() && iv.lo.value == iv.hi.value)
        return p.sign_at(iv.lo.value) == 0 ? 1 : 0;
    int c = open_count(chain, iv.lo, iv.hi);
    if (iv.lo.finite() && iv.lo.closed && p.sign_at(iv.lo.value) == 0)
        ++c;
    if (iv.hi.finite() && iv.hi.closed && p.sign_at(iv.hi.value) == 0)
        ++c;
    return c;
}

void check_nonzero(const UniPoly& p)
{
    if (p.is_zero())
        throw AllZero();
}

// All roots lie strictly inside (-B, B).
Rational cauchy_bound(const UniPoly& p)
{
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coefficient(i) / p.leading());
        if (r > m)
            m = r;
    }
    return m + 1;
}

}  // namespace

int sturm_count(const UniPoly& p, const Domain& domain)
{
    check_nonzero(p);
    if (p.degree() == 0)
        return 0;
    auto chain = sturm_chain(p);
    int total = 0;
    for (const auto& iv : domain.parts())
        total += interval_count(chain, p, iv);
    return total;
}

Rational simplest_rational(const Rational& lo_in, const Rational& hi_in)
{
    if (lo_in > hi_in)
        throw InvalidArgument("simplest_rational needs lo <= hi");
    if (lo_in <= 0 && hi_in >= 0)
        return 0;
    if (hi_in < 0)
        return -simplest_rational(-hi_in, -lo_in);
    // continued-fraction walk on positive [lo, hi]
    Rational lo = lo_in, hi = hi_in;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl) == lo)
        return lo;
    if (Rational(fl + 1) <= hi)
        return Rational(fl + 1);
    Rational inner = simplest_rational(1 / (hi - fl), 1 / (lo - fl));
    return fl + 1 / inner;
}

namespace {

struct Isolator {
    const UniPoly& p;
    const std::vector<UniPoly>& chain;
    Rational precision;
    std::vector<RootEnclosure> out;

    void refine(Rational a, Rational b)
    {
        // exactly one root in (a, b), none at the ends
        while (b - a > precision) {
            Rational mid = (a + b) / 2;
            if (p.sign_at(mid) == 0) {
                out.push_back({mid, mid, 1});
                return;
            }
            if (open_count(chain, Bound::at(a, false), Bound::at(mid, false)) == 1)
                b = mid;
            else
                a = mid;
        }
        Rational s = simplest_rational(a, b);
        if (p.sign_at(s) == 0)
            out.push_back({s, s, 1});
        else
            out.push_back({a, b, 1});
    }

    void split(const Rational& a, const Rational& b)
    {
        int c = open_count(chain, Bound::at(a, false), Bound::at(b, false));
        if (c == 0)
            return;
        if (c == 1) {
            refine(a, b);
            return;
        }
        Rational mid = (a + b) / 2;
        split(a, mid);
        if (p.sign_at(mid) == 0)
            out.push_back({mid, mid, 1});
        split(mid, b);
    }
};

}  // namespace

std::vector<RootEnclosure> isolate_roots(const UniPoly& p, const Domain& domain, const Rational& precision)
{
    check_nonzero(p);
    if (precision <= 0)
        throw InvalidArgument("precision must be positive");
    if (p.degree() == 0)
        return {};
    auto chain = sturm_chain(p);
    Rational bound = cauchy_bound(p);
    Isolator iso{p, chain, precision, {}};
    for (const auto& iv : domain.parts()) {
        if (iv.lo.finite() && iv.hi.finite() && iv.lo.value == iv.hi.value) {
            if (p.sign_at(iv.lo.value) == 0)
                iso.out.push_back({iv.lo.value, iv.lo.value, 1});
            continue;
        }
        Rational a = iv.lo.finite() ? iv.lo.value : -bound;
        Rational b = iv.hi.finite() ? iv.hi.value : bound;
        if (iv.lo.finite() && iv.lo.closed && p.sign_at(a) == 0)
            iso.out.push_back({a, a, 1});
        if (a < b)
            iso.split(a, b);
        if (iv.hi.finite() && iv.hi.closed && p.sign_at(b) == 0)
            iso.out.push_back({b, b, 1});
    }
    // multiplicities from the squarefree decomposition
    auto factors = squarefree_decomposition(p);
    for (auto& r : iso.out) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto& f = factors[i];
            if (f.degree() <= 0)
                continue;
            bool hit = r.exact() ? f.sign_at(r.lo) == 0
                                 : sturm_count(f, Domain({Interval{Bound::at(r.lo, false), Bound::at(r.hi, false)}})) > 0;
            if (hit) {
                r.multiplicity = static_cast<int>(i) + 1;
                break;
            }
        }
    }
    return iso.out;
}

Rational default_precision()
{
    if (const char* env = std::getenv("FATCHECK_PRECISION")) {
        std::string s(env);
        try {
            if (s.find_first_of("eE.") != std::string::npos) {
                double d = std::stod(s);
                if (d > 0) {
                    Rational q(d);
                    return q;
                }
            } else {
                Rational q = parse_rational(s);
                if (q > 0)
                    return q;
            }
        } catch (const std::exception&) {
        }
        throw InvalidArgument("FATCHECK_PRECISION must be a positive number, got '" + s + "'");
    }
    return Rational(1, 1000000000);
}

}  // namespace fatness
