#pragma once

#include "fatness/partitions.hpp"
#include "fatness/symexpr.hpp"
#include "fatness/unipoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fatness {

enum class GroupFamily { Torus, U, SU, SO_even, SO_odd, O_even, O_odd, Sp, G2 };

struct GroupSpec {
    GroupFamily family;
    int rank;

    /// Number of positive roots r.
    int positive_roots() const;
    /// 0 for O(2n), 1 for SO(2n+1), O(2n+1), Sp(n).
    int epsilon() const;
    /// Forms vanish in odd degree.
    bool even_only() const;
    int lie_algebra_dimension() const;
    int torus_variables() const { return family == GroupFamily::G2 ? 3 : rank; }
    std::string name() const;

    ClassBasis y_basis() const;
    ClassBasis x_basis() const;

    /// Family token ("U", "SO", "SO_odd", "Sp", "T", "G2", ...) plus rank, or a
    /// name such as "SO(5)" with rank 0.
    static GroupSpec parse(const std::string& token, int rank = 0);

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct FormTerm {
    Rational coefficient;
    SymExpr y_part;
    SymExpr x_part;
    std::string label;
};

/// Coefficients of t^i over one class basis.
struct TFamily {
    ClassBasis basis;
    std::vector<SymExpr> coefficients;

    TFamily() = default;
    explicit TFamily(ClassBasis b) : basis(std::move(b)) {}

    /// -1 when every coefficient vanishes.
    int degree() const;
    bool is_zero() const { return degree() < 0; }
    SymExpr coefficient(int i) const;
    void add(int power, const SymExpr& value);
    TFamily scaled(const Rational& c) const;
    UniPoly evaluate(const std::function<Rational(const Exponent&)>& monomial_value) const;
    /// Variable 0 is t, then the generators.
    MultiPoly flatten() const;
    std::string to_string() const;
};

class WeinsteinForm {
public:
    WeinsteinForm() = default;
    WeinsteinForm(std::vector<GroupSpec> groups, int degree, ClassBasis y_basis, ClassBasis x_basis);

    const std::vector<GroupSpec>& groups() const { return groups_; }
    const GroupSpec& group() const { return groups_.front(); }
    int degree() const { return degree_; }
    const ClassBasis& y_basis() const { return y_basis_; }
    const ClassBasis& x_basis() const { return x_basis_; }
    const std::vector<FormTerm>& terms() const { return terms_; }

    void add_term(const Rational& coefficient, const SymExpr& y, const SymExpr& x, std::string label = {});
    WeinsteinForm scaled(const Rational& c) const;

    /// Torus polynomial in (y variables, x variables).
    MultiPoly expand() const;
    /// expand() with trace-zero blocks reduced; the basis of every equality test.
    MultiPoly comparison_polynomial() const;
    bool is_zero() const { return comparison_polynomial().is_zero(); }

    /// Substitutes y_i = coords[i](t).
    TFamily restrict(const std::vector<UniPoly>& coords) const;
    SymExpr at(const std::vector<Rational>& y) const;

    std::string to_string() const;

private:
    std::vector<GroupSpec> groups_;
    int degree_ = 0;
    ClassBasis y_basis_;
    ClassBasis x_basis_;
    std::vector<FormTerm> terms_;
};

/// c > 0 with a = c * b on comparison polynomials.
std::optional<Rational> positive_ratio(const WeinsteinForm& a, const WeinsteinForm& b);

WeinsteinForm q_schur_form(const GroupSpec& group, int k);
WeinsteinForm q_char_form(const GroupSpec& group, int m);
/// Scaled so that the degree-zero form is 1, i.e. the Haar average.
WeinsteinForm haar_normalized_form(const GroupSpec& group, int k);
SymExpr q_torus(const std::vector<Rational>& y, int m);
WeinsteinForm q_torus_form(int n, int m);
WeinsteinForm q_product(const GroupSpec& left, const GroupSpec& right, int m);
WeinsteinForm q_weyl_sum(const GroupSpec& group, int k);
WeinsteinForm q_g2(int m);

struct ReducedFamily {
    std::vector<Integer> coefficients;  // coefficient of t^{2j}
    TFamily family;
};
ReducedFamily q_u2_reduced(int m);
ReducedFamily q_so4_reduced(int m);

enum class SpecialCase { AllOnes, E1, PerturbedOnes, E1PlusTE2 };
TFamily q_special_un(SpecialCase c, int n, int m);

/// det(g_{j-i+1})_{1<=i,j<=k} in the first n generators of a basis, g_i = 0 for i > n.
SymExpr complete_in_classes(const ClassBasis& basis, int k, int n, int first_generator = 0);

}  // namespace fatness
