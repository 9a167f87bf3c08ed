#pragma once

#include "fatness/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fatness {

struct AllZero : Error {
    AllZero() : Error("polynomial is identically zero") {}
};

struct Bound {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rational value;
    bool closed = false;  // ignored for infinite bounds

    static Bound neg_inf() { return {Kind::NegInf, 0, false}; }
    static Bound pos_inf() { return {Kind::PosInf, 0, false}; }
    static Bound at(const Rational& v, bool closed) { return {Kind::Finite, v, closed}; }
    bool finite() const { return kind == Kind::Finite; }
};

struct Interval {
    Bound lo;
    Bound hi;

    bool contains(const Rational& t) const;
    std::string to_string() const;
};

/// Disjoint, sorted union of intervals.
class Domain {
public:
    Domain() = default;
    explicit Domain(std::vector<Interval> parts);

    static Domain real_line();
    static Domain closed(const Rational& a, const Rational& b);
    static Domain at_least(const Rational& a);
    static Domain at_most(const Rational& b);
    static Domain point(const Rational& a) { return closed(a, a); }

    const std::vector<Interval>& parts() const { return parts_; }
    bool contains(const Rational& t) const;
    bool bounded_above() const;
    bool bounded_below() const;
    std::string to_string() const;

private:
    std::vector<Interval> parts_;
};

/// Isolating interval [lo, hi]; lo == hi marks an exact rational root.
struct RootEnclosure {
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    double approx() const { return Rational((lo + hi) / 2).get_d(); }
    std::string to_string() const;
};

/// Distinct real roots of p in the domain.
int sturm_count(const UniPoly& p, const Domain& domain);
std::vector<RootEnclosure> isolate_roots(const UniPoly& p, const Domain& domain, const Rational& precision);

/// Default 1e-9, or FATCHECK_PRECISION when set.
Rational default_precision();

/// Stern-Brocot simplest fraction in [lo, hi].
Rational simplest_rational(const Rational& lo, const Rational& hi);

}  // namespace fatness
