#pragma once

#include "fatness/obstruction.hpp"

#include <optional>
#include <string>

namespace fatness {

struct DegenerateSlope : Error {
    using Error::Error;
};

/// Chern classes of the complementary bundle over the Grassmannian of 2-planes,
/// by the recursion cbar_k = -c1 cbar_{k-1} - c2 cbar_{k-2}.
SymExpr grassmannian_cbar(int k);
/// (-1/2)^k sum_j binom(k+1, 2j+1) c1^(k-2j) (c1^2 - 4 c2)^j
SymExpr grassmannian_cbar_closed_form(int k);

/// Rational enclosure of -((1 - cos(pi/(m+1))) / (1 + cos(pi/(m+1)))) ((p+q)/(p-q))^2
/// from 50-digit directed-rounding arithmetic. Display and cross-checks only.
struct ThresholdEnclosure {
    Rational lo;
    Rational hi;
    std::string decimal;
};
ThresholdEnclosure lens_threshold(int m, long p, long q);

struct LensReport {
    long p = 0;
    long q = 0;
    Verdict verdict;
    std::optional<ThresholdEnclosure> threshold;
    std::optional<Rational> r;  // c1^2 = r (c1^2 - 4 c2) when the data are proportional
    std::string report() const;
};

/// Partial fatness for the lens fibre U(2)/S^1_{p,q}; gcd(p, q) = 1.
LensReport lens_check(long p, long q, const BundleData& bundle, const Rational& precision = default_precision());

}  // namespace fatness
