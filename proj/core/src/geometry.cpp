#include "spinemorph/geometry.hpp"

#include "spinemorph/error.hpp"

namespace spinemorph {

Affine Affine::after(const Affine& f) const {
    Affine r;
    r.a = a * f.a + b * f.c;
    r.b = a * f.b + b * f.d;
    r.tx = a * f.tx + b * f.ty + tx;
    r.c = c * f.a + d * f.c;
    r.d = c * f.b + d * f.d;
    r.ty = c * f.tx + d * f.ty + ty;
    return r;
}

Affine Affine::inverse() const {
    const double det = a * d - b * c;
    if (det == 0.0)
        throw RuntimeError("affine map is singular, cannot invert");
    Affine r;
    r.a = d / det;
    r.b = -b / det;
    r.c = -c / det;
    r.d = a / det;
    r.tx = -(r.a * tx + r.b * ty);
    r.ty = -(r.c * tx + r.d * ty);
    return r;
}

Affine Affine::scaling(double sx, double sy, Point center) {
    Affine r;
    r.a = sx;
    r.d = sy;
    r.tx = center.x * (1.0 - sx);
    r.ty = center.y * (1.0 - sy);
    return r;
}

Affine Affine::rotation_deg(double degrees, Point center) {
    const double t = deg_to_rad(degrees);
    const double co = std::cos(t), si = std::sin(t);
    Affine r;
    r.a = co;
    r.b = -si;
    r.c = si;
    r.d = co;
    r.tx = center.x - co * center.x + si * center.y;
    r.ty = center.y - si * center.x - co * center.y;
    return r;
}

Affine Affine::horizontal_flip(double width) {
    Affine r;
    r.a = -1.0;
    r.tx = width - 1.0;
    return r;
}

double angle_between_deg(Point u, Point v) {
    const double c = std::fabs(cross(u, v));
    const double d = dot(u, v);
    if (c == 0.0 && d == 0.0)
        throw RuntimeError("angle between zero-length vectors is undefined");
    return rad_to_deg(std::atan2(c, d));
}

} // namespace spinemorph
