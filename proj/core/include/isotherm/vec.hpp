#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

namespace isotherm {

// Coordinate vector in the conformal chart. Always carries three slots; the
// ambient dimension lives in ModelSpace / Grid, and unused trailing slots
// stay zero so norms and dot products are dimension-agnostic.
struct Vec {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec() = default;
  constexpr Vec(double x_, double y_, double z_ = 0.0) : x(x_), y(y_), z(z_) {}

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec operator+(const Vec& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec operator-(const Vec& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec operator-() const { return {-x, -y, -z}; }
  Vec operator*(double a) const { return {a * x, a * y, a * z}; }
  Vec operator/(double a) const { return {x / a, y / a, z / a}; }
  Vec& operator+=(const Vec& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
};

inline Vec operator*(double a, const Vec& v) { return v * a; }

inline double dot(const Vec& a, const Vec& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline double norm2(const Vec& v) { return dot(v, v); }
inline double norm(const Vec& v) { return std::sqrt(norm2(v)); }

inline Vec normalized(const Vec& v) {
  double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

inline std::ostream& operator<<(std::ostream& os, const Vec& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

}  // namespace isotherm
