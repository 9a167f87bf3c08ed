#pragma once

#include "fatness/rational.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace fatness {

/// Non-increasing sequence of non-negative integers of fixed context length.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    static Partition zero(int length);

    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const;
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    /// Number of nonzero parts.
    int nonzero_parts() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of m with at most n parts, reverse-lexicographic.
std::vector<Partition> enumerate_km(int m, int n);

/// Partitions of m into m parts each at most n (the set K'_m).
std::vector<Partition> enumerate_km_conjugate(int m, int n);

Partition conjugate(const Partition& lambda, int target_length);

Partition rho(int n);

/// n - lambda := (n - lambda_m, ..., n - lambda_1).
Partition complement(const Partition& lambda, int n);

/// prod_i (scale * (lambda + rho)_i + offset)!
Integer shifted_factorial(const Partition& lambda, int scale, int offset);

}  // namespace fatness
