#pragma once

#include <gmpxx.h>

#include <vector>

#include "baxterlab/error.hpp"
#include "baxterlab/paths.hpp"

namespace baxterlab {

using BigInt = mpz_class;

// Binomial with out-of-range lower index evaluating to 0.
BigInt binomial(long n, long k);
BigInt factorial(long n);

// Exact division; aborts on any non-integral intermediate result.
BigInt exact_div(const BigInt &a, const BigInt &b);

BigInt catalan(long n);
BigInt narayana(long n, long k);

// Number of twin binary pairs with k+1 left and l+1 right leaves; evaluated
// in all three printed closed forms and cross-asserted.
BigInt theta(long k, long l);

// Baxter number B_n = sum_k theta(k, n-1-k).
BigInt baxter(long n);

enum class PathConstraint { none, below_diagonal };

// Determinant of the Gessel-Viennot path-count matrix for the given start
// and end points (compatible ordering assumed).
BigInt gessel_viennot(const std::vector<Point> &starts, const std::vector<Point> &ends,
                      PathConstraint constraint = PathConstraint::none);

// Number of paths from a to b; below_diagonal counts only paths avoiding
// y > x, via the reflection principle.
BigInt path_count(Point a, Point b, PathConstraint constraint);

// Symmetric triple count, by the parity cases of k and l.
BigInt theta_symmetric(long k, long l);

// V_n = C_{n+2} C_n - C_{n+1}^2: Schnyder woods on triangulations with n+3
// vertices.  Both printed forms evaluated and cross-asserted.
BigInt schnyder_count(long n);

// Alternating Baxter permutations of [m].
BigInt alternating_baxter_count(long m);

} // namespace baxterlab
