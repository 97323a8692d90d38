#pragma once

#include <vector>

#include "cauchykit/partition.hpp"
#include "cauchykit/rational.hpp"

namespace cauchykit {

using PointVector = std::vector<Rational>;

/// Throws RepeatedPoints when two entries coincide.
void require_distinct(const PointVector& xs);

/// det(x_i^(n-j)) = prod_{i<j} (x_i - x_j). This sign convention is fixed
/// project-wide; the bialternant uses the same layout top and bottom, so
/// Schur values do not depend on it.
Rational vandermonde(const PointVector& xs);

/// Jacobi bialternant: s_lambda(xs) = det(x_i^(lambda_j + n - j)) / vandermonde(xs).
/// Returns 0 when l(lambda) > n; throws RepeatedPoints on coinciding entries.
Rational bialternant(const Partition& lambda, const PointVector& xs);

/// Schur value by exhaustive semistandard-tableau enumeration. Definitionally
/// independent of any determinant; meant for small shapes (|lambda| <= ~10, n <= 4).
Rational ssyt_schur_oracle(const Partition& lambda, const PointVector& xs);

} // namespace cauchykit
