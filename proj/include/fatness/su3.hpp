#pragma once

#include "fatness/obstruction.hpp"

#include <array>
#include <optional>

namespace fatness {

struct ParametrizationUnconfirmed : Error {
    using Error::Error;
};

/// Rows of the SU(3) invariant over a 32-dimensional base, indexed by the
/// monomials c2^8, c2^5 c3^2, c2^2 c3^4.
struct Su3Rows {
    std::array<UniPoly, 3> rows;
};

/// The reference table the synthesized rows must match up to a positive constant.
Su3Rows su3_reference_rows();

struct Su3Report {
    OrbitCurve curve;
    Su3Rows rows;                 // synthesized, divided by (1 + t + t^2)^2 and rescaled to the reference
    Rational normalization;       // reference = normalization * synthesized (after the division)
    RootEnclosure t0;             // root of the c3^4 row in [0, 1] where the c2^5 c3^2 row is positive
    RootEnclosure r0, r1, r2;
    std::vector<RootEnclosure> discriminant_roots;  // of b^2 - 4ac on [0, 1]
    std::optional<Verdict> verdict;
    std::vector<std::string> notes;
};

/// Synthesizes the rows along candidate parametrizations and confirms one against
/// the reference; throws ParametrizationUnconfirmed when none matches.
Su3Report su3_analysis(const Rational& precision = default_precision());
/// Adds a verdict for concrete data (m = 16, SU(3)).
Su3Report su3_analysis(const BundleData& bundle, const Rational& precision = default_precision());
/// Adds a verdict for c3^2 = r c2^3, using a(t) r^2 + b(t) r + c(t) on [0, 1].
Su3Report su3_analysis_ratio(const Rational& r, const Rational& precision = default_precision());

/// a(t) r^2 + b(t) r + c(t) at fixed r.
UniPoly su3_ratio_polynomial(const Su3Rows& rows, const Rational& r);

}  // namespace fatness
