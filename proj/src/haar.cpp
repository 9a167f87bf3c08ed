#include "fatness/haar.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <sstream>
#include <thread>

namespace fatness {

using cd = std::complex<double>;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

void require_sampled(const GroupSpec& g)
{
    switch (g.family) {
    case GroupFamily::U:
    case GroupFamily::SO_even:
    case GroupFamily::SO_odd:
    case GroupFamily::Sp:
        if (g.rank > 4)
            throw UnsupportedGroup("Monte Carlo oracle supports rank at most 4");
        return;
    default:
        throw UnsupportedGroup("no Haar sampler for " + g.name());
    }
}

int matrix_size(const GroupSpec& g)
{
    switch (g.family) {
    case GroupFamily::SO_even:
    case GroupFamily::Sp:
        return 2 * g.rank;
    case GroupFamily::SO_odd:
        return 2 * g.rank + 1;
    default:
        return g.rank;
    }
}

Eigen::MatrixXcd sample_unitary(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> z;
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = cd(z(rng), z(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    const auto& r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        cd d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

Eigen::MatrixXcd sample_special_orthogonal(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> z;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = z(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    const auto& r = qr.matrixQR();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0)
            q.col(j) = -q.col(j);
    // right multiplication by a reflection maps Haar on O^-(n) to Haar on SO(n)
    if (q.determinant() < 0)
        q.col(0) = -q.col(0);
    return q.cast<cd>();
}

/// Quaternionic Gram-Schmidt in the complex embedding: column j is (a; b), its
/// quaternionic partner (-conj(b); conj(a)) sits in column n + j.
Eigen::MatrixXcd sample_symplectic(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> z;
    Eigen::MatrixXcd g(2 * n, 2 * n);
    auto partner = [n](const Eigen::VectorXcd& v) {
        Eigen::VectorXcd w(2 * n);
        w.head(n) = -v.tail(n).conjugate();
        w.tail(n) = v.head(n).conjugate();
        return w;
    };
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXcd v(2 * n);
        for (int i = 0; i < 2 * n; ++i)
            v(i) = cd(z(rng), z(rng));
        for (int i = 0; i < j; ++i) {
            v -= g.col(i) * g.col(i).dot(v);
            v -= g.col(n + i) * g.col(n + i).dot(v);
        }
        v /= v.norm();
        g.col(j) = v;
        g.col(n + j) = partner(v);
    }
    return g;
}

}  // namespace

Eigen::MatrixXcd haar_sample(const GroupSpec& group, std::mt19937_64& rng)
{
    require_sampled(group);
    switch (group.family) {
    case GroupFamily::U:
        return sample_unitary(group.rank, rng);
    case GroupFamily::Sp:
        return sample_symplectic(group.rank, rng);
    default:
        return sample_special_orthogonal(matrix_size(group), rng);
    }
}

Eigen::MatrixXcd torus_element(const GroupSpec& group, const std::vector<double>& y)
{
    require_sampled(group);
    if (static_cast<int>(y.size()) != group.rank)
        throw InvalidArgument("torus coordinates need " + std::to_string(group.rank) + " entries");
    int n = group.rank, size = matrix_size(group);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(size, size);
    const cd i(0, 1);
    for (int k = 0; k < n; ++k) {
        double v = y[static_cast<std::size_t>(k)];
        switch (group.family) {
        case GroupFamily::U:
            m(k, k) = i * v;
            break;
        case GroupFamily::Sp:
            m(k, k) = i * v;
            m(n + k, n + k) = -i * v;
            break;
        default:
            m(2 * k, 2 * k + 1) = -v;
            m(2 * k + 1, 2 * k) = v;
            break;
        }
    }
    return m;
}

double adjoint_pairing(const GroupSpec& group, const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& y,
                       const Eigen::MatrixXcd& x)
{
    double scale = group.family == GroupFamily::U ? 1.0 : 0.5;
    Eigen::MatrixXcd ad = g * y * g.adjoint();
    // Re tr(A^* B) = sum of Re(conj(a_ij) b_ij)
    return scale * (ad.conjugate().cwiseProduct(x)).sum().real();
}

namespace {

struct Sums {
    double s1 = 0, s2 = 0, t1 = 0, t2 = 0, st = 0;
};

/// Runs every chunk once and returns per-chunk sums of f and g = pairing^k1, pairing^k2.
std::vector<Sums> run_chunks(const std::vector<double>& y, const std::vector<double>& x, int k1, int k2,
                             const McConfig& cfg)
{
    require_sampled(cfg.group);
    if (cfg.samples < 2 || cfg.chunk_size < 1)
        throw InvalidArgument("Monte Carlo needs at least two samples and a positive chunk size");
    Eigen::MatrixXcd ym = torus_element(cfg.group, y), xm = torus_element(cfg.group, x);
    long chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
    std::vector<Sums> out(static_cast<std::size_t>(chunks));
    std::atomic<long> next{0};
    auto work = [&] {
        for (long c = next++; c < chunks; c = next++) {
            std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(c))));
            long count = std::min(cfg.chunk_size, cfg.samples - c * cfg.chunk_size);
            Sums s;
            for (long i = 0; i < count; ++i) {
                double a = adjoint_pairing(cfg.group, haar_sample(cfg.group, rng), ym, xm);
                double f = std::pow(a, k1), h = std::pow(a, k2);
                s.s1 += f;
                s.s2 += f * f;
                s.t1 += h;
                s.t2 += h * h;
                s.st += f * h;
            }
            out[static_cast<std::size_t>(c)] = s;
        }
    };
    int workers = cfg.workers > 0 ? cfg.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<long>(workers, chunks));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    return out;
}

Sums reduce(const std::vector<Sums>& chunks)
{
    Sums total;
    for (const auto& c : chunks) {
        total.s1 += c.s1;
        total.s2 += c.s2;
        total.t1 += c.t1;
        total.t2 += c.t2;
        total.st += c.st;
    }
    return total;
}

McEstimate estimate(double sum, double sumsq, long n)
{
    double mean = sum / static_cast<double>(n);
    double var = (sumsq / static_cast<double>(n) - mean * mean) * static_cast<double>(n) / static_cast<double>(n - 1);
    return McEstimate{mean, std::sqrt(std::max(var, 0.0) / static_cast<double>(n)), n};
}

/// Zero-variance estimates (central directions, U(1)) are compared up to rounding.
bool within_4_sigma(double value, double target, double sigma)
{
    double rounding = 1e-9 * std::max(1.0, std::abs(target));
    return std::abs(value - target) <= 4 * sigma + rounding;
}

std::vector<double> to_double(const std::vector<Rational>& v)
{
    std::vector<double> out;
    for (const auto& q : v)
        out.push_back(q.get_d());
    return out;
}

}  // namespace

McEstimate mc_q(const std::vector<double>& y, const std::vector<double>& x, int k, const McConfig& config)
{
    if (k < 0)
        throw InvalidArgument("moment order must be non-negative");
    Sums s = reduce(run_chunks(y, x, k, k, config));
    return estimate(s.s1, s.s2, config.samples);
}

Rational symbolic_q(const GroupSpec& group, const std::vector<Rational>& y, const std::vector<Rational>& x, int k)
{
    WeinsteinForm form = q_schur_form(group, k);
    std::vector<Rational> point = y;
    point.insert(point.end(), x.begin(), x.end());
    if (static_cast<int>(point.size()) != form.expand().variable_count())
        throw InvalidArgument("coordinates do not match the group rank");
    return form.expand().evaluate(point);
}

std::string RatioReport::report() const
{
    std::ostringstream os;
    os.precision(8);
    os << (pass ? "PASS" : "FAIL") << '\n';
    os << "mc numerator: " << numerator.estimate << " +- " << numerator.std_error << '\n';
    os << "mc denominator: " << denominator.estimate << " +- " << denominator.std_error << '\n';
    if (zero_zero) {
        os << "symbolic numerator vanishes; zero-zero convention applied\n";
    } else {
        os << "mc ratio: " << mc_ratio << " +- " << ratio_error << '\n';
        os << "symbolic ratio: " << symbolic_ratio.get_str() << " ~ " << symbolic_ratio.get_d() << '\n';
    }
    return os.str();
}

RatioReport ratio_validate(const std::vector<Rational>& y, const std::vector<Rational>& x, int k1, int k2,
                           const McConfig& config, const Rational& corrupt_factor)
{
    if (k1 < 0 || k2 < 0)
        throw InvalidArgument("moment orders must be non-negative");
    Rational a = Rational(symbolic_q(config.group, y, x, k1) * corrupt_factor);
    Rational b = symbolic_q(config.group, y, x, k2);
    RatioReport rep;
    if (b == 0 && a != 0)
        throw DegenerateDenominator("symbolic q^" + std::to_string(k2) + " vanishes at the chosen (y, x)");
    Sums s = reduce(run_chunks(to_double(y), to_double(x), k1, k2, config));
    long n = config.samples;
    rep.numerator = estimate(s.s1, s.s2, n);
    rep.denominator = estimate(s.t1, s.t2, n);
    if (a == 0) {
        // zero-zero convention: a vanishing symbolic side must be matched by an MC mean within 4 sigma of zero
        rep.zero_zero = true;
        rep.pass = within_4_sigma(rep.numerator.estimate, 0, rep.numerator.std_error);
        if (b == 0)
            rep.pass = rep.pass && within_4_sigma(rep.denominator.estimate, 0, rep.denominator.std_error);
        return rep;
    }
    rep.symbolic_ratio = a / b;
    double m1 = rep.numerator.estimate, m2 = rep.denominator.estimate;
    double dn = static_cast<double>(n);
    double v1 = s.s2 / dn - m1 * m1, v2 = s.t2 / dn - m2 * m2, cov = s.st / dn - m1 * m2;
    rep.mc_ratio = m1 / m2;
    double r = rep.mc_ratio;
    // delta method for the ratio of two correlated means
    double var = (v1 - 2 * r * cov + r * r * v2) / (m2 * m2) / (dn - 1);
    rep.ratio_error = std::sqrt(std::max(var, 0.0));
    rep.pass = within_4_sigma(rep.mc_ratio, rep.symbolic_ratio.get_d(), rep.ratio_error);
    return rep;
}

}  // namespace fatness
