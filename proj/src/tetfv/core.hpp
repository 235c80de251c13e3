#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tetfv {

// ---------------------------------------------------------------------------
// Small vector algebra
// ---------------------------------------------------------------------------

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

// Generic 5-component vector: conserved states, fluxes, residual rows.
using State5 = std::array<double, 5>;

inline State5 operator+(const State5& a, const State5& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]};
}
inline State5 operator-(const State5& a, const State5& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]};
}
inline State5 operator*(double s, const State5& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3], s * a[4]};
}
inline State5& operator+=(State5& a, const State5& b) {
    for (int i = 0; i < 5; ++i) a[i] += b[i];
    return a;
}
inline State5& operator-=(State5& a, const State5& b) {
    for (int i = 0; i < 5; ++i) a[i] -= b[i];
    return a;
}

// Per-node gradient block: one 3-vector per primitive variable.
using Grad5 = std::array<Vec3, 5>;

struct Mat5 {
    double a[5][5] = {};

    static Mat5 identity() {
        Mat5 m;
        for (int i = 0; i < 5; ++i) m.a[i][i] = 1.0;
        return m;
    }

    State5 apply(const State5& x) const {
        State5 y = {};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) y[i] += a[i][j] * x[j];
        return y;
    }

    Mat5& operator+=(const Mat5& o) {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) a[i][j] += o.a[i][j];
        return *this;
    }
    Mat5& operator-=(const Mat5& o) {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) a[i][j] -= o.a[i][j];
        return *this;
    }
    Mat5& operator*=(double s) {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) a[i][j] *= s;
        return *this;
    }
};

// ---------------------------------------------------------------------------
// Error types
// ---------------------------------------------------------------------------

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mesh topology or geometry defect (non-manifold face, degenerate cell, ...).
struct MeshError : Error {
    using Error::Error;
};

/// Invalid configuration: unknown keys, missing files, bad values.
struct ConfigError : Error {
    using Error::Error;
};

/// Nonpositive density or pressure encountered where a physical state is required.
struct UnrealizableStateError : Error {
    UnrealizableStateError(const std::string& where, double rho, double p)
        : Error(where + ": unrealizable state (rho=" + std::to_string(rho) +
                ", p=" + std::to_string(p) + ")"),
          rho(rho),
          p(p) {}
    double rho, p;
};

/// Nonlinear or linear solver breakdown.
struct SolverError : Error {
    using Error::Error;
};

}  // namespace tetfv
