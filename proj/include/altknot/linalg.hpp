#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace altknot {

using Integer = std::int64_t;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

namespace detail {

using Wide = __int128;

inline Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

inline Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Integer narrow(Wide x) {
    if (x > std::numeric_limits<Integer>::max() || x < std::numeric_limits<Integer>::min())
        throw OverflowError("integer overflow in exact arithmetic");
    return static_cast<Integer>(x);
}

// reduced fraction, denominator > 0
struct Fraction {
    Wide num = 0;
    Wide den = 1;

    Fraction() = default;
    Fraction(Wide n) : num(n), den(1) {}
    Fraction(Wide n, Wide d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Wide g = wide_gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        static const Wide limit = Wide(1) << 100;
        if (wide_abs(num) > limit || den > limit) throw OverflowError("fraction overflow");
    }

    bool is_zero() const { return num == 0; }
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        Wide g = wide_gcd(a.den, b.den);
        return Fraction(a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return a + Fraction(-b.num, b.den);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        Wide g1 = wide_gcd(a.num, b.den), g2 = wide_gcd(b.num, a.den);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return Fraction((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num == 0) throw std::domain_error("division by zero");
        return a * Fraction(b.den, b.num);
    }
};

}  // namespace detail

// Fraction-free Gaussian elimination with row pivoting.
template <typename Derived>
Integer determinant(const Eigen::MatrixBase<Derived>& m) {
    using detail::Wide;
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;
    std::vector<Wide> a(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a[i * n + j] = static_cast<Wide>(m(i, j));
    Wide prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index p = k;
        while (p < n && a[p * n + k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (Eigen::Index j = 0; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Wide v = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                a[i * n + j] = v / prev;
                if (detail::wide_abs(a[i * n + j]) > (Wide(1) << 62))
                    throw OverflowError("determinant overflow");
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    return detail::narrow(sign * prev);
}

// det of the leading k x k block for k = 0..n (entry 0 is 1).
template <typename Derived>
std::vector<Integer> leading_minors(const Eigen::MatrixBase<Derived>& m) {
    std::vector<Integer> out{1};
    for (Eigen::Index k = 1; k <= m.rows(); ++k) out.push_back(determinant(m.topLeftCorner(k, k)));
    return out;
}

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    int signature() const { return positive - negative; }
};

// Exact inertia of a symmetric integer matrix by symmetric (congruence) elimination.
template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& m) {
    using detail::Fraction;
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inertia of non-square matrix");
    std::vector<std::vector<Fraction>> a(n, std::vector<Fraction>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (m(i, j) != m(j, i)) throw std::invalid_argument("inertia of non-symmetric matrix");
            a[i][j] = Fraction(static_cast<detail::Wide>(m(i, j)));
        }
    std::vector<int> alive(n);
    std::iota(alive.begin(), alive.end(), 0);
    Inertia out;
    while (!alive.empty()) {
        int piv = -1;
        for (int i : alive)
            if (!a[i][i].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) {
            int pi = -1, pj = -1;
            for (int i : alive)
                for (int j : alive)
                    if (i != j && !a[i][j].is_zero() && pi < 0) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                out.zero += static_cast<int>(alive.size());
                break;
            }
            // row/col pi += row/col pj makes the diagonal entry 2 a[pi][pj]
            for (int k : alive) a[pi][k] = a[pi][k] + a[pj][k];
            for (int k : alive) a[k][pi] = a[k][pi] + a[k][pj];
            piv = pi;
        }
        Fraction d = a[piv][piv];
        (d.sign() > 0 ? out.positive : out.negative)++;
        std::erase(alive, piv);
        for (int i : alive) {
            if (a[i][piv].is_zero()) continue;
            Fraction f = a[i][piv] / d;
            for (int j : alive) a[i][j] = a[i][j] - f * a[piv][j];
        }
    }
    return out;
}

template <typename Derived>
int signature(const Eigen::MatrixBase<Derived>& m) {
    return inertia(m).signature();
}

template <typename Derived>
bool is_positive_definite(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index k = 1; k <= m.rows(); ++k)
        if (determinant(m.topLeftCorner(k, k)) <= 0) return false;
    return true;
}

// Integer solution of a x = b when one exists and is unique (a has full column rank).
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

}  // namespace altknot
