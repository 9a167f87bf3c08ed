#include "fatness/symfun.hpp"

#include <algorithm>
#include <numeric>

namespace fatness {

namespace {

void each_subset(int n, int k, int start, Exponent& cur, MultiPoly& out)
{
    if (k == 0) {
        out.add_term(cur, 1);
        return;
    }
    for (int i = start; i <= n - k; ++i) {
        cur[static_cast<std::size_t>(i)] = 1;
        each_subset(n, k - 1, i + 1, cur, out);
        cur[static_cast<std::size_t>(i)] = 0;
    }
}

void each_composition(int n, int pos, int remaining, Exponent& cur, MultiPoly& out)
{
    if (pos == n - 1) {
        cur[static_cast<std::size_t>(pos)] = remaining;
        out.add_term(cur, 1);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[static_cast<std::size_t>(pos)] = v;
        each_composition(n, pos + 1, remaining - v, cur, out);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
}

int permutation_sign(const std::vector<int>& perm)
{
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                s = -s;
    return s;
}

}  // namespace

MultiPoly elementary_sigma(int i, int n)
{
    MultiPoly out(n);
    if (i < 0 || i > n)
        return out;
    Exponent cur(static_cast<std::size_t>(n), 0);
    each_subset(n, i, 0, cur, out);
    return out;
}

MultiPoly complete_h(int m, int n)
{
    MultiPoly out(n);
    if (m < 0)
        return out;
    Exponent cur(static_cast<std::size_t>(n), 0);
    each_composition(n, 0, m, cur, out);
    return out;
}

MultiPoly alternant(const std::vector<int>& mu, int n)
{
    if (static_cast<int>(mu.size()) != n)
        throw InvalidArgument("alternant needs one exponent per variable");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    MultiPoly out(n);
    Exponent e(static_cast<std::size_t>(n));
    do {
        // term prod_i x_i^{mu_{perm(i)}}
        for (int i = 0; i < n; ++i)
            e[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        out.add_term(e, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MultiPoly vandermonde(int n)
{
    return alternant(rho(n).parts(), n);
}

MultiPoly jacobi_trudi(const std::vector<int>& lambda, int variable_count, const std::function<MultiPoly(int)>& g)
{
    std::size_t l = lambda.size();
    PolyMatrix m(l, std::vector<MultiPoly>(l, MultiPoly(variable_count)));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            int idx = lambda[i] + static_cast<int>(j) - static_cast<int>(i);
            if (idx == 0)
                m[i][j] = MultiPoly::constant(variable_count, 1);
            else if (idx > 0)
                m[i][j] = g(idx);
        }
    return determinant(std::move(m), variable_count);
}

MultiPoly schur(const Partition& lambda, int n, SchurRoute route)
{
    if (lambda.nonzero_parts() > n)
        throw InvalidArgument("Schur polynomial " + lambda.to_string() + " has more parts than variables");
    std::vector<int> lam(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < std::min(n, lambda.length()); ++i)
        lam[static_cast<std::size_t>(i)] = lambda[i];
    switch (route) {
    case SchurRoute::Bialternant: {
        Partition r = rho(n);
        std::vector<int> mu(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            mu[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + r[i];
        auto [q, rem] = divide(alternant(mu, n), vandermonde(n));
        if (!rem.is_zero())
            throw DivisionNotExact(rem);
        return q;
    }
    case SchurRoute::JacobiTrudiH:
        return jacobi_trudi(lam, n, [n](int k) { return complete_h(k, n); });
    case SchurRoute::JacobiTrudiSigma: {
        int len = std::max(1, lam.empty() ? 0 : lam.front());
        Partition conj = conjugate(Partition(lam), len);
        return jacobi_trudi(conj.parts(), n, [n](int k) { return elementary_sigma(k, n); });
    }
    }
    throw InvalidArgument("unknown Schur route");
}

SymExpr h_in_sigma(int m, int n)
{
    ClassBasis basis(ClassFamily::Sigma, n, false, "x");
    std::vector<SymExpr> h{SymExpr::constant(basis, 1)};
    for (int r = 1; r <= m; ++r) {
        SymExpr acc = SymExpr::zero(basis);
        for (int j = 1; j <= std::min(r, n); ++j) {
            SymExpr term = SymExpr::generator(basis, j - 1) * h[static_cast<std::size_t>(r - j)];
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        h.push_back(acc);
    }
    if (m < 0)
        return SymExpr::zero(basis);
    return h[static_cast<std::size_t>(m)];
}

bool is_symmetric(const MultiPoly& p)
{
    int n = p.variable_count();
    if (n <= 1)
        return true;
    std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < n; ++i)
        cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    return p.permute(swap) == p && p.permute(cycle) == p;
}

SymExpr express_in_sigma(const MultiPoly& p, int n)
{
    if (p.variable_count() != n)
        throw InvalidArgument("express_in_sigma: variable count mismatch");
    if (!is_symmetric(p))
        throw InvalidArgument("express_in_sigma: polynomial is not symmetric");
    ClassBasis basis(ClassFamily::Sigma, n, false, "x");
    std::vector<MultiPoly> sigmas;
    for (int i = 1; i <= n; ++i)
        sigmas.push_back(elementary_sigma(i, n));
    MultiPoly work = p, result(n);
    while (!work.is_zero()) {
        auto [e, c] = work.leading_term();
        // leading exponent of a symmetric polynomial is non-increasing
        Exponent g(static_cast<std::size_t>(n));
        MultiPoly prod = MultiPoly::constant(n, c);
        for (int i = 0; i < n; ++i) {
            int next = i + 1 < n ? e[static_cast<std::size_t>(i + 1)] : 0;
            g[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] - next;
            if (g[static_cast<std::size_t>(i)] < 0)
                throw InvalidArgument("express_in_sigma: non-symmetric leading term");
            if (g[static_cast<std::size_t>(i)] > 0)
                prod *= sigmas[static_cast<std::size_t>(i)].pow(g[static_cast<std::size_t>(i)]);
        }
        result.add_term(g, c);
        work -= prod;
    }
    return SymExpr(basis, result);
}

MultiPoly reduce_trace_zero(const MultiPoly& p)
{
    int n = p.variable_count();
    if (n < 2)
        throw InvalidArgument("reduce_trace_zero needs at least two variables");
    std::vector<MultiPoly> values;
    MultiPoly last(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        values.push_back(MultiPoly::variable(n - 1, i));
        last -= values.back();
    }
    values.push_back(last);
    return p.substitute(values);
}

MultiPoly square_variables(const MultiPoly& p)
{
    MultiPoly out(p.variable_count());
    for (const auto& [e, c] : p.terms()) {
        Exponent d = e;
        for (auto& x : d)
            x *= 2;
        out.add_term(d, c);
    }
    return out;
}

}  // namespace fatness
