#pragma once

#include "fatness/rational.hpp"

#include <string>
#include <vector>

namespace fatness {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);
    UniPoly(std::initializer_list<Rational> coefficients);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(int degree, const Rational& c = 1);
    /// a + b t
    static UniPoly linear(const Rational& a, const Rational& b);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int i) const;
    Rational leading() const;

    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;
    int sign_at(const Rational& t) const { return sgn(evaluate(t)); }

    UniPoly derivative() const;
    UniPoly monic() const;
    /// Scaled to coprime integer coefficients with positive leading coefficient.
    UniPoly primitive() const;
    /// p(-t)
    UniPoly reflected() const;
    /// t^deg p(1/t)
    UniPoly reversed() const;
    UniPoly pow(int e) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);
    UniPoly operator-() const;
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct UniDivision {
    UniPoly quotient;
    UniPoly remainder;
};

UniDivision divide(const UniPoly& p, const UniPoly& d);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun decomposition: factors[i] is squarefree, coprime to the others, and
/// p = c * prod factors[i]^(i+1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

}  // namespace fatness
