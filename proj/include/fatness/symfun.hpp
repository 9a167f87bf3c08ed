#pragma once

#include "fatness/multipoly.hpp"
#include "fatness/partitions.hpp"
#include "fatness/symexpr.hpp"

#include <functional>
#include <vector>

namespace fatness {

MultiPoly elementary_sigma(int i, int n);
MultiPoly complete_h(int m, int n);

/// det(x_i^{mu_j}) for a sequence mu of length n (not necessarily sorted).
MultiPoly alternant(const std::vector<int>& mu, int n);
MultiPoly vandermonde(int n);

enum class SchurRoute { Bialternant, JacobiTrudiH, JacobiTrudiSigma };

MultiPoly schur(const Partition& lambda, int n, SchurRoute route = SchurRoute::Bialternant);

/// det(g(lambda_i + j - i)) with g(0) = 1 and g(k) = 0 for k < 0 applied
/// before calling g.
MultiPoly jacobi_trudi(const std::vector<int>& lambda, int variable_count,
                       const std::function<MultiPoly(int)>& g);

SymExpr h_in_sigma(int m, int n);
SymExpr express_in_sigma(const MultiPoly& p, int n);
bool is_symmetric(const MultiPoly& p);

/// x_n := -(x_1 + ... + x_{n-1})
MultiPoly reduce_trace_zero(const MultiPoly& p);
/// x_i := x_i^2 for every variable.
MultiPoly square_variables(const MultiPoly& p);

}  // namespace fatness
