#pragma once

#include "fatness/obstruction.hpp"

namespace fatness {

/// det(p_{j-i+1}) of size k over the bundle's first rank generators.
SymExpr h_pontrjagin(const ClassBasis& basis, int k, int rank);

Verdict real_sphere_check(const BundleData& bundle);

/// Left side of the complex obstruction, a polynomial in t over Chern classes.
TFamily complex_sphere_family(int n, int m);
Verdict complex_sphere_check(const BundleData& bundle, const Rational& precision = default_precision());
/// n = m = 2: c1^2 = s c2 passes iff s < 1 or s > 4 (c2 = 0 counts as s infinite).
bool complex_s3_closed_form(const Rational& c1_squared, const Rational& c2);

/// Quaternionic family in t; shifted_binomial uses binom(m+4n-6, .) in place of binom(m+4n-4, .), which is not Weyl-sum consistent; kept for comparison.
TFamily quaternionic_sphere_family(int n, int m, bool shifted_binomial = false);
Verdict quaternionic_sphere_check(const BundleData& bundle, const Rational& precision = default_precision());

enum class SKind { Circle, Sp1 };

/// (e1 - t e2, t - 1) on [0, 1]; for n = 1 the left part is e1.
OrbitCurve sp_times_s_curve(int n);
/// Closed form of the Sp(n) x S invariant along sp_times_s_curve.
TFamily sp_times_s_closed_form(int n, int m, SKind kind);
Verdict sp_times_s_check(const BundleData& bundle, SKind kind, const Rational& precision = default_precision());

/// S^7 bundles over S^8 glued by (u, v) -> (u, u^k v u^l).
struct OctonionicSphereBundle {
    long k;
    long l;

    Rational p2() const { return 6 * (k - l); }
    Rational euler() const { return k + l; }
    bool complex_structure() const { return k == 2 * l && l % 2 == 0; }
    bool quaternionic_structure() const { return complex_structure() && l % 4 == 0; }
    /// SO(8) data over the 8-dimensional base.
    BundleData real_data() const;
};

}  // namespace fatness
