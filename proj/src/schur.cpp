#include "cauchykit/schur.hpp"

#include "cauchykit/errors.hpp"
#include "cauchykit/matrix.hpp"

namespace cauchykit {

void require_distinct(const PointVector& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) throw RepeatedPoints();
}

Rational vandermonde(const PointVector& xs) {
    Rational v(1);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            v *= xs[i] - xs[j];
    return v;
}

Rational bialternant(const Partition& lambda, const PointVector& xs) {
    require_distinct(xs);
    const int n = static_cast<int>(xs.size());
    if (lambda.length() > n) return Rational(0);

    MatrixQ num(n);
    std::vector<int> expo = staircase(lambda, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            num.at(i, j) = xs[static_cast<std::size_t>(i)].pow(static_cast<unsigned long>(expo[static_cast<std::size_t>(j)]));
    return det_exact(num) / vandermonde(xs);
}

namespace {

// Column-strict, row-weak filling with entries in 1..n, visited row by row.
// cells[r][c] holds the entry placed at row r, column c.
void fill_cells(const std::vector<int>& shape, int n, int row, int col,
                std::vector<std::vector<int>>& cells, std::vector<int>& counts,
                const PointVector& xs, Rational& total) {
    int rows = static_cast<int>(shape.size());
    if (row == rows) {
        Rational mono(1);
        for (int v = 0; v < n; ++v)
            if (counts[static_cast<std::size_t>(v)] > 0)
                mono *= xs[static_cast<std::size_t>(v)].pow(static_cast<unsigned long>(counts[static_cast<std::size_t>(v)]));
        total += mono;
        return;
    }
    if (col == shape[static_cast<std::size_t>(row)]) {
        fill_cells(shape, n, row + 1, 0, cells, counts, xs, total);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
    if (row > 0 && col < shape[static_cast<std::size_t>(row - 1)])
        lo = std::max(lo, cells[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
    for (int v = lo; v <= n; ++v) {
        cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        ++counts[static_cast<std::size_t>(v - 1)];
        fill_cells(shape, n, row, col + 1, cells, counts, xs, total);
        --counts[static_cast<std::size_t>(v - 1)];
    }
}

} // namespace

Rational ssyt_schur_oracle(const Partition& lambda, const PointVector& xs) {
    const int n = static_cast<int>(xs.size());
    if (lambda.length() > n) return Rational(0); // a column would need > n strictly increasing entries
    if (lambda.length() == 0) return Rational(1);

    std::vector<std::vector<int>> cells;
    for (int p : lambda.parts()) cells.emplace_back(static_cast<std::size_t>(p), 0);
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    Rational total(0);
    fill_cells(lambda.parts(), n, 0, 0, cells, counts, xs, total);
    return total;
}

} // namespace cauchykit
