#pragma once

#include "fatness/sturm.hpp"
#include "fatness/weinstein.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fatness {

struct MissingClassNumber : Error {
    explicit MissingClassNumber(std::string monomial_)
        : Error("missing class number for " + monomial_), monomial(std::move(monomial_))
    {
    }
    std::string monomial;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct InconsistentProportionality : Error {
    using Error::Error;
};

/// Characteristic numbers of a bundle over a 2m-dimensional base.
class BundleData {
public:
    BundleData() = default;
    BundleData(std::vector<GroupSpec> groups, int m);
    explicit BundleData(const GroupSpec& group, int m) : BundleData(std::vector<GroupSpec>{group}, m) {}

    /// Line-oriented "key=value" header followed by "monomial = rational" lines.
    static BundleData parse(const std::string& text);
    static BundleData from_file(const std::string& path);

    const std::vector<GroupSpec>& groups() const { return groups_; }
    const GroupSpec& group() const { return groups_.front(); }
    int m() const { return m_; }
    const ClassBasis& basis() const { return basis_; }
    const std::map<Exponent, Rational>& numbers() const { return numbers_; }

    void set(const Exponent& monomial, const Rational& value);
    void set(const std::string& monomial, const Rational& value);
    bool has(const Exponent& monomial) const { return numbers_.count(monomial) > 0; }
    /// Throws MissingClassNumber when absent.
    Rational value(const Exponent& monomial) const;
    Rational evaluate(const SymExpr& e) const;

    /// Every canonical generator monomial of degree m.
    std::vector<Exponent> top_monomials() const;
    std::string to_text() const;

private:
    std::vector<GroupSpec> groups_;
    int m_ = 0;
    ClassBasis basis_;
    std::map<Exponent, Rational> numbers_;
};

enum class OrbitSymmetry { None, Negation, Reciprocal };

/// y(t) = base + t * slope over a parameter domain.
struct OrbitCurve {
    std::vector<Rational> base;
    std::vector<Rational> slope;
    Domain domain;
    bool includes_infinity_orbit = false;
    OrbitSymmetry symmetry = OrbitSymmetry::None;

    std::vector<UniPoly> coordinates() const;
    std::vector<Rational> at(const Rational& t) const;
    std::string describe() const;

    /// (1+t, 1-t) with the (1,-1) orbit at infinity.
    static OrbitCurve rank2(Domain domain = Domain::real_line(), bool infinity = true);
    /// (1, t, -1-t) on [0, 1].
    static OrbitCurve su3();
    static OrbitCurve constant(std::vector<Rational> y);
    /// e1 + t e2 in n coordinates.
    static OrbitCurve e1_plus_te2(int n, Domain domain);
};

enum class VerdictStatus { NonvanishingEverywhere, VanishesOnOrbits, ObstructionViolated, DimensionForbidden };
std::string to_string(VerdictStatus s);

struct VanishingOrbit {
    RootEnclosure parameter;
    bool at_infinity = false;
    bool whole_curve = false;
    std::vector<Rational> representative;  // set for exact parameters and the infinity orbit
    std::vector<RootEnclosure> members;     // parameters identified with this orbit
};

struct Verdict {
    VerdictStatus status = VerdictStatus::NonvanishingEverywhere;
    std::vector<VanishingOrbit> vanishing_orbits;
    /// Distinct vanishing orbits; -1 when the polynomial is identically zero.
    int orbit_count = 0;
    UniPoly polynomial;
    Domain domain;
    std::vector<RootEnclosure> roots;
    char classification = 0;
    std::optional<bool> closed_form_nonvanishing;
    std::vector<std::string> notes;

    bool nonvanishing() const { return status == VerdictStatus::NonvanishingEverywhere; }
    std::string report() const;
};

/// Haar-normalized invariant of degree m for a group or a two-factor product.
WeinsteinForm standard_form(const std::vector<GroupSpec>& groups, int m);

UniPoly specialize(const WeinsteinForm& form, const BundleData& bundle, const OrbitCurve& curve);

/// Roots of p on the curve's domain grouped into orbits.
Verdict analyze_polynomial(const UniPoly& p, const OrbitCurve& curve, int formal_degree,
                           const std::vector<GroupSpec>& groups, const Rational& precision);

Verdict check_fatness(const BundleData& bundle, const OrbitCurve& curve, const Rational& precision = default_precision());

/// Radon-Hurwitz bound for a fat subspace of dimension v over a base of dimension base_dim.
bool dimension_restriction(long base_dim, long fat_subspace_dim);

/// Weyl images with positive first entry; returns the lexicographically smallest
/// primitive integer representative.
std::vector<Rational> canonical_orbit_representative(const std::vector<GroupSpec>& groups, std::vector<Rational> y);

Verdict u2_case_analysis(const BundleData& bundle, const Rational& r, const Rational& precision = default_precision());
Verdict so4_case_analysis(const BundleData& bundle, const Rational& r, const Rational& precision = default_precision());

/// a = D^2, b = c1^2 D, c = c1^4 with D = c1^2 - 4 c2.
bool u2_dim8_criterion(const Rational& a, const Rational& b, const Rational& c);
/// x = (p1-2e)(p1+2e), y = (p1-2e)^2, z = (p1+2e)^2.
bool so4_dim8_criterion(const Rational& x, const Rational& y, const Rational& z);

/// U(2) data from v[j] = c1^(m-2j) (c1^2 - 4 c2)^j.
BundleData bundle_from_u2_classes(int m, const std::vector<Rational>& v);
/// SO(4) data from w[j] = (p1-2e)^(m/2-j) (p1+2e)^j.
BundleData bundle_from_so4_classes(int m, const std::vector<Rational>& w);

/// True iff every invariant at y = (0, y2) evaluates to zero on the data.
bool normal_reduction_check(const GroupSpec& left, const GroupSpec& right, int m, const BundleData& bundle);

}  // namespace fatness
