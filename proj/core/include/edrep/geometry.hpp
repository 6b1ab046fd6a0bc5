#pragma once

#include <array>
#include <cmath>

namespace edrep {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 normalized() const { return *this / norm(); }
};

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    static Mat3 identity() {
        Mat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }

    // v w^T
    static Mat3 outer(const Vec3& v, const Vec3& w) {
        Mat3 r;
        const double a[3] = {v.x, v.y, v.z};
        const double b[3] = {w.x, w.y, w.z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
        return r;
    }

    // Rotation about a (not necessarily normalised) axis by angle (radians).
    static Mat3 rotation(const Vec3& axis, double angle) {
        const Vec3 u = axis.normalized();
        const double c = std::cos(angle), s = std::sin(angle);
        Mat3 r;
        r(0, 0) = c + u.x * u.x * (1 - c);
        r(0, 1) = u.x * u.y * (1 - c) - u.z * s;
        r(0, 2) = u.x * u.z * (1 - c) + u.y * s;
        r(1, 0) = u.y * u.x * (1 - c) + u.z * s;
        r(1, 1) = c + u.y * u.y * (1 - c);
        r(1, 2) = u.y * u.z * (1 - c) - u.x * s;
        r(2, 0) = u.z * u.x * (1 - c) - u.y * s;
        r(2, 1) = u.z * u.y * (1 - c) + u.x * s;
        r(2, 2) = c + u.z * u.z * (1 - c);
        return r;
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o(k, j);
                r(i, j) = s;
            }
        return r;
    }
    Mat3 operator*(double s) const {
        Mat3 r = *this;
        for (auto& row : r.m)
            for (auto& v : row) v *= s;
        return r;
    }
    Mat3 operator+(const Mat3& o) const {
        Mat3 r = *this;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) += o(i, j);
        return r;
    }
    Mat3 operator-(const Mat3& o) const {
        Mat3 r = *this;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) -= o(i, j);
        return r;
    }

    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = m[j][i];
        return r;
    }

    double trace() const { return m[0][0] + m[1][1] + m[2][2]; }

    double frobenius2() const {
        double s = 0.0;
        for (const auto& row : m)
            for (double v : row) s += v * v;
        return s;
    }

    double max_abs() const {
        double s = 0.0;
        for (const auto& row : m)
            for (double v : row) s = std::max(s, std::fabs(v));
        return s;
    }
};

} // namespace edrep
