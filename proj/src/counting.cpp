#include "baxterlab/counting.hpp"
#include <algorithm>

namespace baxterlab {

BigInt binomial(long n, long k)
{
    if (k < 0 || k > n || n < 0)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n)
{
    require(n >= 0, errc::domain_error, "factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt exact_div(const BigInt &a, const BigInt &b)
{
    require(b != 0, errc::domain_error, "division by zero");
    require(mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0, errc::domain_error,
            "non-integral intermediate result");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt catalan(long n)
{
    require(n >= 0, errc::domain_error, "catalan needs n >= 0");
    return exact_div(binomial(2 * n, n), BigInt(n + 1));
}

BigInt narayana(long n, long k)
{
    require(n >= 1 && k >= 1 && k <= n, errc::domain_error, "narayana needs 1 <= k <= n");
    return exact_div(binomial(n, k) * binomial(n, k - 1), BigInt(n));
}

BigInt theta(long k, long l)
{
    require(k >= 0 && l >= 0, errc::domain_error, "theta needs k,l >= 0");
    long n = k + l;
    BigInt a = exact_div(2 * binomial(n, k) * binomial(n + 1, k) * binomial(n + 2, k),
                         BigInt(k + 1) * BigInt(k + 1) * BigInt(k + 2));
    BigInt b = exact_div(2 * factorial(n) * factorial(n + 1) * factorial(n + 2),
                         factorial(k) * factorial(k + 1) * factorial(k + 2) *
                             factorial(l) * factorial(l + 1) * factorial(l + 2));
    BigInt c = exact_div(2 * binomial(n + 2, k) * binomial(n + 2, k + 1) * binomial(n + 2, k + 2),
                         BigInt(n + 1) * BigInt(n + 2) * BigInt(n + 2));
    require(a == b && b == c, errc::internal_contradiction,
            "theta closed forms disagree");
    return a;
}

BigInt baxter(long n)
{
    require(n >= 1, errc::domain_error, "baxter needs n >= 1");
    BigInt s = 0;
    for (long k = 0; k <= n - 1; ++k)
        s += theta(k, n - 1 - k);
    return s;
}

BigInt path_count(Point a, Point b, PathConstraint constraint)
{
    long dx = b.x - a.x, dy = b.y - a.y;
    if (dx < 0 || dy < 0)
        return 0;
    if (constraint == PathConstraint::none)
        return binomial(dx + dy, dx);
    // weakly below the diagonal: reflect across y = x + 1
    if (a.y > a.x || b.y > b.x)
        return 0;
    return binomial(dx + dy, dx) - binomial(dx + dy, b.x - a.y + 1);
}

BigInt gessel_viennot(const std::vector<Point> &starts, const std::vector<Point> &ends,
                      PathConstraint constraint)
{
    require(starts.size() == ends.size() && !starts.empty(), errc::domain_error,
            "need equally many starts and ends");
    size_t n = starts.size();
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = path_count(starts[i], ends[j], constraint);
    // fraction-free Gaussian elimination (Bareiss)
    BigInt det = 1, prev = 1;
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (size_t r = c + 1; r < n; ++r)
            for (size_t j = c + 1; j < n; ++j)
                m[r][j] = exact_div(m[r][j] * m[c][c] - m[r][c] * m[c][j], prev);
        prev = m[c][c];
    }
    det = m[n - 1][n - 1];
    return sign > 0 ? det : BigInt(-det);
}

namespace {

const std::vector<Point> kTripleStarts = {{0, 2}, {1, 1}, {2, 0}};

// A symmetric triple is determined by its half below the symmetry center;
// the half is a non-intersecting triple with P2 ending at the center and
// P1, P3 ending r steps away along the cut line.
BigInt theta_sym_even(long kappa, long lambda)
{
    BigInt acc = 0;
    for (long r = 1; r <= std::min(kappa, lambda) + 1; ++r)
        acc += gessel_viennot(kTripleStarts,
                              {{kappa + 1 - r, lambda + 1 + r},
                               {kappa + 1, lambda + 1},
                               {kappa + 1 + r, lambda + 1 - r}});
    return acc;
}

// k = 2*kappa+1, l = 2*lambda: the halves end with a half-step whose
// direction is forced; discarding it leaves two endpoint families, for the
// cut distance m = 2r and m = 2r+1.
BigInt theta_sym_mixed(long kappa, long lambda)
{
    BigInt acc = 0;
    for (long r = 1; r <= std::min(kappa + 1, lambda + 1); ++r)
        acc += gessel_viennot(kTripleStarts,
                              {{kappa + 1 - r, lambda + 1 + r},
                               {kappa + 1, lambda + 1},
                               {kappa + 1 + r, lambda + 1 - r}});
    for (long r = 1; r <= std::min(kappa + 1, lambda); ++r)
        acc += gessel_viennot(kTripleStarts,
                              {{kappa + 1 - r, lambda + 1 + r},
                               {kappa + 1, lambda + 1},
                               {kappa + 2 + r, lambda - r}});
    return acc;
}

// The closed form printed for the even/even case; kept as a cross-check.
BigInt theta_sym_even_closed(long kappa, long lambda)
{
    long s = kappa + lambda;
    BigInt acc = 0;
    for (long r = 1; r <= std::min(kappa, lambda) + 1; ++r) {
        BigInt num = 2 * BigInt(r) * r * r;
        acc += num * binomial(s + 2, kappa - r + 1) * binomial(s + 2, kappa + r + 1);
    }
    BigInt den = BigInt(s + 1) * BigInt(s + 2) * BigInt(s + 2);
    return exact_div(acc * binomial(s + 2, kappa + 1), den);
}

} // namespace

BigInt theta_symmetric(long k, long l)
{
    require(k >= 0 && l >= 0, errc::domain_error, "theta_symmetric needs k,l >= 0");
    BigInt v;
    if (k % 2 == 1 && l % 2 == 1) {
        v = 0;
    } else if (k % 2 == 0 && l % 2 == 0) {
        v = theta_sym_even(k / 2, l / 2);
        require(v == theta_sym_even_closed(k / 2, l / 2), errc::internal_contradiction,
                "symmetric count forms disagree");
    } else if (k % 2 == 1) {
        v = theta_sym_mixed((k - 1) / 2, l / 2);
    } else {
        // the symmetric families are stable under swapping coordinates
        v = theta_sym_mixed((l - 1) / 2, k / 2);
    }
    return v;
}

BigInt schnyder_count(long n)
{
    require(n >= 0, errc::domain_error, "schnyder_count needs n >= 0");
    BigInt a = catalan(n + 2) * catalan(n) - catalan(n + 1) * catalan(n + 1);
    BigInt b = exact_div(6 * factorial(2 * n) * factorial(2 * n + 2),
                         factorial(n) * factorial(n + 1) * factorial(n + 2) * factorial(n + 3));
    require(a == b, errc::internal_contradiction, "schnyder count forms disagree");
    return a;
}

BigInt alternating_baxter_count(long m)
{
    require(m >= 1, errc::domain_error, "alternating_baxter_count needs m >= 1");
    if ((m + 1) % 2 == 0) {
        long k = (m + 1) / 2;
        return catalan(k - 1) * catalan(k);
    }
    long k = (m + 2) / 2;
    return catalan(k - 1) * catalan(k - 1);
}

} // namespace baxterlab
