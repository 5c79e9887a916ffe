#pragma once

#include <cmath>

namespace spinemorph {

// Image-space point in pixels. Origin is the top-left image corner,
// x grows rightwards, y grows downwards. Pixel (i, j) covers the unit
// square [i, i+1) x [j, j+1); its center sits at (i+0.5, j+0.5).
struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }

// 2-D affine map  x' = a*x + b*y + tx,  y' = c*x + d*y + ty.
struct Affine {
    double a = 1.0, b = 0.0, tx = 0.0;
    double c = 0.0, d = 1.0, ty = 0.0;

    Point apply(Point p) const {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }

    // Composition: (next.after(*this)).apply(p) == next.apply(this->apply(p)).
    Affine after(const Affine& first) const;
    Affine inverse() const;

    static Affine identity() { return {}; }
    static Affine translation(double dx, double dy) { return {1, 0, dx, 0, 1, dy}; }
    static Affine scaling(double sx, double sy, Point center = {0, 0});
    static Affine rotation_deg(double degrees, Point center = {0, 0});
    // Mirror about the vertical line through the horizontal canvas center,
    // mapping x -> (width - 1) - x so pixel index ranges are preserved.
    static Affine horizontal_flip(double width);
};

inline constexpr double kPi = 3.14159265358979323846;
inline double deg_to_rad(double d) { return d * (kPi / 180.0); }
inline double rad_to_deg(double r) { return r * (180.0 / kPi); }

// Unsigned angle between two non-zero vectors in [0, 180] degrees.
// Evaluated through atan2(|cross|, dot), which is well conditioned for
// near-parallel vectors where acos of the dot product loses precision.
double angle_between_deg(Point u, Point v);

} // namespace spinemorph
