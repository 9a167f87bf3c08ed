#pragma once

#include "fatness/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fatness {

class UniPoly;

using Exponent = std::vector<int>;

/// Graded lexicographic: total degree first, then lexicographic.
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

struct DivisionNotExact;

/// Sparse polynomial over Q. Terms are kept in ascending graded-lex order;
/// no stored coefficient is zero.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational, GradedLexLess>;

    explicit MultiPoly(int variable_count = 0);

    static MultiPoly constant(int variable_count, const Rational& c);
    static MultiPoly variable(int variable_count, int index);
    static MultiPoly monomial(Exponent e, const Rational& c = 1);

    int variable_count() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Exponent& e) const;

    /// Undefined for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    /// Largest exponent in graded-lex order; requires nonzero.
    const TermMap::value_type& leading_term() const;

    void add_term(const Exponent& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(int e) const;

    Rational evaluate(std::span<const Rational> point) const;
    /// Replaces variable i by values[i]; all values share one variable count.
    MultiPoly substitute(std::span<const MultiPoly> values) const;
    UniPoly substitute_univariate(std::span<const UniPoly> values) const;
    /// Places this polynomial's variables at positions offset.. of a ring with total variables.
    MultiPoly embed(int total, int offset) const;
    /// Permutes variables: variable i goes to position perm[i].
    MultiPoly permute(std::span<const int> perm) const;

    /// Variables' degree-sum restricted to [begin, end) for one exponent.
    static int partial_degree(const Exponent& e, int begin, int end);

private:
    int nvars_;
    TermMap terms_;
};

struct DivisionNotExact : Error {
    DivisionNotExact(MultiPoly remainder_)
        : Error("polynomial division is not exact"), remainder(std::move(remainder_))
    {
    }
    MultiPoly remainder;
};

struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};

/// Multivariate division by leading terms in graded-lex order.
DivisionResult divide(const MultiPoly& p, const MultiPoly& d);
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d);

/// Newline separated records "num/den e1 ... ek", leading term first.
std::string to_records(const MultiPoly& p);
MultiPoly parse_records(const std::string& text, int variable_count);

/// Human readable form with the given variable names.
std::string to_string(const MultiPoly& p, std::span<const std::string> names);

/// Returns c with a = c * b, or nothing when a and b are not proportional.
/// Both zero gives 1.
std::optional<Rational> proportionality(const MultiPoly& a, const MultiPoly& b);

/// Square matrix of polynomials sharing one variable count.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Fraction-free Gaussian elimination (Bareiss).
MultiPoly determinant(PolyMatrix m, int variable_count);

}  // namespace fatness
