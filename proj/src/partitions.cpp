#include "fatness/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace fatness {

Integer factorial(long n)
{
    if (n < 0)
        throw InvalidArgument("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational fraction(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw InvalidArgument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t')
            s.push_back(c);
    if (s.empty())
        throw ParseError("empty rational");
    if (s.front() == '+')
        s.erase(s.begin());
    auto ok = [](const std::string& part) {
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!ok(num) || !ok(den) || den[0] == '-')
        throw ParseError("malformed rational '" + text + "'");
    Integer d(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + text + "'");
    Rational q{Integer(num), d};
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw InvalidArgument("negative part in partition");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgument("partition parts must be non-increasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::zero(int length)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(length), 0));
}

int Partition::degree() const
{
    int d = 0;
    for (int p : parts_)
        d += p;
    return d;
}

int Partition::nonzero_parts() const
{
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

namespace {

void fill(std::vector<int>& cur, int pos, int remaining, int cap, int max_part, std::vector<Partition>& out)
{
    int n = static_cast<int>(cur.size());
    if (pos == n) {
        if (remaining == 0)
            out.emplace_back(cur);
        return;
    }
    int top = std::min(remaining, cap);
    for (int v = top; v >= 0; --v) {
        if (v * (n - pos) < remaining)
            break;
        if (v > max_part)
            continue;
        cur[static_cast<std::size_t>(pos)] = v;
        fill(cur, pos + 1, remaining - v, v, max_part, out);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::vector<Partition> enumerate_km(int m, int n)
{
    if (n < 1)
        throw InvalidArgument("enumerate_km needs n >= 1");
    std::vector<Partition> out;
    if (m < 0)
        return out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    fill(cur, 0, m, m, m, out);
    return out;
}

std::vector<Partition> enumerate_km_conjugate(int m, int n)
{
    std::vector<Partition> out;
    if (m < 0)
        return out;
    std::vector<int> cur(static_cast<std::size_t>(m), 0);
    fill(cur, 0, m, m, n, out);
    return out;
}

Partition conjugate(const Partition& lambda, int target_length)
{
    if (target_length < lambda.largest())
        throw InvalidArgument("conjugate: target length " + std::to_string(target_length) +
                              " is smaller than the largest part " + std::to_string(lambda.largest()));
    std::vector<int> out(static_cast<std::size_t>(target_length), 0);
    for (int i = 1; i <= target_length; ++i) {
        int c = 0;
        for (int p : lambda.parts())
            if (p >= i)
                ++c;
        out[static_cast<std::size_t>(i - 1)] = c;
    }
    return Partition(std::move(out));
}

Partition rho(int n)
{
    if (n < 1)
        throw InvalidArgument("rho needs n >= 1");
    std::vector<int> out;
    for (int i = n - 1; i >= 0; --i)
        out.push_back(i);
    return Partition(std::move(out));
}

Partition complement(const Partition& lambda, int n)
{
    std::vector<int> out;
    for (int i = lambda.length() - 1; i >= 0; --i) {
        if (lambda[i] > n)
            throw InvalidArgument("complement: part exceeds n");
        out.push_back(n - lambda[i]);
    }
    return Partition(std::move(out));
}

Integer shifted_factorial(const Partition& lambda, int scale, int offset)
{
    Integer r = 1;
    int n = lambda.length();
    for (int i = 0; i < n; ++i)
        r *= factorial(static_cast<long>(scale) * (lambda[i] + (n - 1 - i)) + offset);
    return r;
}

}  // namespace fatness
