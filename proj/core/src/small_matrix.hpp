#ifndef DEGREELAB_SMALL_MATRIX_HPP
#define DEGREELAB_SMALL_MATRIX_HPP

#include <algorithm>
#include <array>
#include <cmath>

namespace degreelab::detail {

using Mat3 = std::array<std::array<double, 3>, 3>;

inline Mat3 multiply(const Mat3& a, const Mat3& b, int rows, int mid, int cols) {
    Mat3 out{};
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            double s = 0.0;
            for (int m = 0; m < mid; ++m) s += a[r][m] * b[m][c];
            out[r][c] = s;
        }
    return out;
}

inline double frobenius(const Mat3& m, int rows, int cols) {
    double s = 0.0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) s += m[r][c] * m[r][c];
    return std::sqrt(s);
}

inline double determinant(const Mat3& m, int n) {
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Eigenvalues of a symmetric 3x3 by cyclic Jacobi rotations.
inline std::array<double, 3> symmetric_eigenvalues3(Mat3 a) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        const double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        const double diag = std::abs(a[0][0]) + std::abs(a[1][1]) + std::abs(a[2][2]);
        if (off <= 1e-15 * (diag + 1e-300)) break;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0) continue;
                const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                for (int i = 0; i < 3; ++i) {
                    const double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < 3; ++i) {
                    const double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
    }
    std::array<double, 3> ev{a[0][0], a[1][1], a[2][2]};
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

// Singular values (descending) of the leading rows x cols block.
inline std::array<double, 3> singular_values(const Mat3& m, int rows, int cols) {
    const int n = std::min(rows, cols);
    if (n <= 1) {
        double s = 0.0;
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) s += m[r][c] * m[r][c];
        return {std::sqrt(s), 0.0, 0.0};
    }
    if (n == 2 && rows == 2 && cols == 2) {
        const double e = 0.5 * (m[0][0] + m[1][1]), f = 0.5 * (m[0][0] - m[1][1]);
        const double g = 0.5 * (m[1][0] + m[0][1]), h = 0.5 * (m[1][0] - m[0][1]);
        const double q = std::sqrt(e * e + h * h), r = std::sqrt(f * f + g * g);
        return {q + r, std::abs(q - r), 0.0};
    }
    // general (incl. rectangular): eigenvalues of m^T m padded to 3x3
    Mat3 mtm{};
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j) {
            double s = 0.0;
            for (int r = 0; r < rows; ++r) s += m[r][i] * m[r][j];
            mtm[i][j] = s;
        }
    auto ev = symmetric_eigenvalues3(mtm);
    std::array<double, 3> sv{};
    for (int i = 0; i < n; ++i) sv[i] = std::sqrt(std::max(0.0, ev[i]));
    return sv;
}

} // namespace degreelab::detail

#endif
