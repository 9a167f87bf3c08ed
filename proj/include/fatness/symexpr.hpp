#pragma once

#include "fatness/multipoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fatness {

/// Generator families. Degrees are polynomial degrees in the torus variables
/// (a class in H^{2d} has degree d).
enum class ClassFamily {
    Sigma,              // sigma_i(z), degree i
    SigmaSquares,       // sigma_i(z^2), degree 2i
    SigmaSquaresEuler,  // sigma_i(z^2) and e(z) = -sigma_n(z); e(z)^2 = sigma_n(z^2)
    Complete,           // h_i(z), degree i
    Chern,              // c_i, realized as sigma_i(x)
    Pontrjagin,         // p_i, realized as sigma_i(x^2)
    PontrjaginEuler,    // p_i and e = -x1...xn; e^2 = p_n
    TorusChern,         // c_i of the circle factors, realized as x_i, degree 1
    Coordinates,        // the torus coordinates themselves
    G2Classes,          // sigma_2(s), sigma_3(s^2) over three variables with s1+s2+s3 = 0
};

struct BasisBlock {
    ClassFamily family;
    int rank;
    bool su = false;  // drops the first generator
    std::string var;  // torus variable shown in Sigma-type names
    std::string tag;  // appended to every generator name
    friend bool operator==(const BasisBlock&, const BasisBlock&) = default;
};

/// Ordered generators of a (possibly product) ring of invariant classes.
class ClassBasis {
public:
    ClassBasis() = default;
    ClassBasis(ClassFamily family, int rank, bool su = false, std::string var = "x");

    /// Right block names get a prime when they collide with left names.
    static ClassBasis product(const ClassBasis& left, const ClassBasis& right);

    const std::vector<BasisBlock>& blocks() const { return blocks_; }
    int generator_count() const { return static_cast<int>(names_.size()); }
    int torus_variable_count() const { return torus_vars_; }
    const std::vector<std::string>& names() const { return names_; }
    int degree(int generator) const { return degrees_[static_cast<std::size_t>(generator)]; }
    int block_of(int generator) const { return block_index_[static_cast<std::size_t>(generator)]; }
    int generator_offset(int block) const { return gen_offset_[static_cast<std::size_t>(block)]; }
    int torus_offset(int block) const { return torus_offset_[static_cast<std::size_t>(block)]; }
    std::optional<int> find(const std::string& name) const;

    /// Weighted degree of a generator monomial.
    int degree(const Exponent& e) const;
    /// The generator as a polynomial in all torus variables of the basis.
    MultiPoly realize_generator(int generator) const;

    /// No SU-dropped generator and Euler exponent at most one.
    bool is_canonical(const Exponent& e) const;
    MultiPoly canonicalize(const MultiPoly& p) const;

    friend bool operator==(const ClassBasis& a, const ClassBasis& b) { return a.blocks_ == b.blocks_; }

private:
    void append(const BasisBlock& block, bool prime_on_collision);

    std::vector<BasisBlock> blocks_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<int> block_index_;
    std::vector<int> gen_offset_;
    std::vector<int> torus_offset_;
    int torus_vars_ = 0;
};

/// Polynomial in the generators of a ClassBasis, kept canonical.
class SymExpr {
public:
    SymExpr() = default;
    SymExpr(ClassBasis basis, const MultiPoly& poly);

    static SymExpr zero(const ClassBasis& basis);
    static SymExpr constant(const ClassBasis& basis, const Rational& c);
    static SymExpr generator(const ClassBasis& basis, int index);

    const ClassBasis& basis() const { return basis_; }
    const MultiPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    /// All monomials of one weighted degree; true for zero.
    bool is_homogeneous() const;
    /// Weighted degree; requires a nonzero homogeneous expression.
    int degree() const;

    SymExpr& operator+=(const SymExpr& o);
    SymExpr& operator-=(const SymExpr& o);
    friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
    friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
    friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
    friend SymExpr operator*(SymExpr a, const Rational& c);
    friend SymExpr operator*(const Rational& c, SymExpr a) { return std::move(a) * c; }
    friend bool operator==(const SymExpr& a, const SymExpr& b)
    {
        return a.basis_ == b.basis_ && a.poly_ == b.poly_;
    }
    SymExpr pow(int e) const;

    MultiPoly realize() const;
    /// Places this expression as block offset.. of a product basis.
    SymExpr embed(const ClassBasis& product, int first_block) const;
    /// Replaces generator i by images[i]; images share one basis.
    SymExpr substitute(const ClassBasis& target, const std::vector<SymExpr>& images) const;
    Rational evaluate(const std::function<Rational(const Exponent&)>& monomial_value) const;

    std::string to_string() const;

private:
    ClassBasis basis_;
    MultiPoly poly_;
};

std::string monomial_string(const ClassBasis& basis, const Exponent& e);
/// Parses "c1^2*c2" style monomials; "1" is the empty monomial.
Exponent parse_monomial(const ClassBasis& basis, const std::string& text);
/// Parses sums like "p1^2 - 3*p1*p2 + 1/2*p4".
SymExpr parse_class_expression(const ClassBasis& basis, const std::string& text);

}  // namespace fatness
