#pragma once

#include <cmath>

namespace n2s {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

}  // namespace n2s
