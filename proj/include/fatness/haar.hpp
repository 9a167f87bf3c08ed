#pragma once

#include "fatness/weinstein.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fatness {

struct DegenerateDenominator : Error {
    using Error::Error;
};

struct McConfig {
    GroupSpec group{GroupFamily::U, 1};
    long samples = 1000000;
    std::uint64_t seed = 1;
    long chunk_size = 10000;
    /// 0 picks the hardware concurrency; results do not depend on it.
    int workers = 0;
};

/// Haar-random element in the defining representation; Sp(n) uses its complex
/// 2n x 2n embedding [[A, -conj(B)], [B, conj(A)]].
Eigen::MatrixXcd haar_sample(const GroupSpec& group, std::mt19937_64& rng);

/// Torus element for coordinates y in the defining representation.
Eigen::MatrixXcd torus_element(const GroupSpec& group, const std::vector<double>& y);

/// <Ad_g(Y), X> with the torus coordinates orthonormal.
double adjoint_pairing(const GroupSpec& group, const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& y,
                       const Eigen::MatrixXcd& x);

struct McEstimate {
    double estimate = 0;
    double std_error = 0;
    long samples = 0;
};

/// Sample mean of <Ad_g(y), x>^k over Haar-random g.
McEstimate mc_q(const std::vector<double>& y, const std::vector<double>& x, int k, const McConfig& config);

struct RatioReport {
    bool pass = false;
    bool zero_zero = false;
    McEstimate numerator;
    McEstimate denominator;
    double mc_ratio = 0;
    double ratio_error = 0;
    Rational symbolic_ratio;
    std::string report() const;
};

/// Symbolic q^k(y, x) from the bilinear Schur expansion.
Rational symbolic_q(const GroupSpec& group, const std::vector<Rational>& y, const std::vector<Rational>& x, int k);

/// Compares mc(k1)/mc(k2) to the symbolic ratio within four standard errors.
/// corrupt_factor multiplies the symbolic numerator (negative-control hook).
RatioReport ratio_validate(const std::vector<Rational>& y, const std::vector<Rational>& x, int k1, int k2,
                           const McConfig& config, const Rational& corrupt_factor = 1);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace fatness
