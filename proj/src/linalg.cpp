#include "altknot/linalg.hpp"

namespace altknot {

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
    using detail::Fraction;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw std::invalid_argument("solve_integer: size mismatch");
    std::vector<std::vector<Fraction>> m(rows, std::vector<Fraction>(cols + 1));
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m[i][j] = Fraction(a(i, j));
        m[i][cols] = Fraction(b(i));
    }
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) return std::nullopt;  // rank deficient
        std::swap(m[p], m[r]);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Fraction f = m[i][c] / m[r][c];
            for (Eigen::Index j = c; j <= cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < cols) return std::nullopt;
    for (Eigen::Index i = r; i < rows; ++i)
        if (!m[i][cols].is_zero()) return std::nullopt;
    IntVector x(cols);
    for (Eigen::Index i = 0; i < cols; ++i) {
        Fraction v = m[i][cols] / m[i][i];
        if (v.den != 1) return std::nullopt;
        x(i) = detail::narrow(v.num);
    }
    return x;
}

}  // namespace altknot
