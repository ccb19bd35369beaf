#include "pluriperiod/octagon_export.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pluriperiod/errors.hpp"

namespace pluriperiod {

namespace {

// Half-plane to disk coordinates.
Complex to_disk(Complex z) { return (z - Complex(0, 1)) / (z + Complex(0, 1)); }

constexpr double kSize = 640.0;
constexpr double kScale = 280.0;  // disk radius in px

double px(double x) { return kSize / 2.0 + kScale * x; }
double py(double y) { return kSize / 2.0 - kScale * y; }  // SVG y grows downward

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Geodesic arc between disk points u, v: the circle through u and v
// orthogonal to the unit circle; degenerates to a chord through the origin.
std::string geodesic_path(Complex u, Complex v) {
    const double cross = u.real() * v.imag() - u.imag() * v.real();
    std::ostringstream s;
    s << "M " << fmt(px(u.real())) << ' ' << fmt(py(u.imag())) << ' ';
    if (std::abs(cross) < 1e-12) {  // collinear with the origin
        s << "L " << fmt(px(v.real())) << ' ' << fmt(py(v.imag()));
        return s.str();
    }
    // Solve 2 Re(conj(p) c) = |p|^2 + 1 for p = u, v.
    const double a11 = 2.0 * u.real(), a12 = 2.0 * u.imag();
    const double a21 = 2.0 * v.real(), a22 = 2.0 * v.imag();
    const double b1 = std::norm(u) + 1.0, b2 = std::norm(v) + 1.0;
    const double det = a11 * a22 - a12 * a21;
    const double cx = (b1 * a22 - b2 * a12) / det;
    const double cy = (a11 * b2 - a21 * b1) / det;
    const double r = std::sqrt(cx * cx + cy * cy - 1.0);
    // Short arc; the sweep flag flips because SVG y points down.
    const double ux = u.real() - cx, uy = u.imag() - cy;
    const double vx = v.real() - cx, vy = v.imag() - cy;
    const int sweep = (ux * vy - uy * vx) < 0.0 ? 1 : 0;
    s << "A " << fmt(kScale * r) << ' ' << fmt(kScale * r) << " 0 0 " << sweep << ' '
      << fmt(px(v.real())) << ' ' << fmt(py(v.imag()));
    return s.str();
}

std::string side_label(const GroupModel& G, const OctagonEdge& e) {
    const std::string base =
        G.gen_names[static_cast<std::size_t>(std::abs(e.pairing_letter)) - 1];
    return e.inverted ? base + "'" : base;
}

}  // namespace

std::string octagon_svg(const OctagonGroup& og) {
    const auto& oct = og.octagon;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
      << kSize << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    s << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "  <circle cx=\"" << fmt(kSize / 2) << "\" cy=\"" << fmt(kSize / 2) << "\" r=\""
      << fmt(kScale) << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

    std::vector<Complex> disk_vertices;
    disk_vertices.reserve(oct.vertices.size());
    for (const Complex z : oct.vertices) disk_vertices.push_back(to_disk(z));

    const std::size_t n = disk_vertices.size();
    for (std::size_t j = 0; j < n; ++j) {
        const Complex u = disk_vertices[j];
        const Complex v = disk_vertices[(j + 1) % n];
        s << "  <path d=\"" << geodesic_path(u, v)
          << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
        // Side label just inside the midpoint of the chord.
        const Complex mid = 0.82 * 0.5 * (u + v);
        s << "  <text x=\"" << fmt(px(mid.real())) << "\" y=\"" << fmt(py(mid.imag()))
          << "\" font-size=\"15\" text-anchor=\"middle\" fill=\"#1f4e9c\">"
          << side_label(*og.group, oct.edges[j]) << "</text>\n";
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Complex u = disk_vertices[j];
        const Complex out = 1.08 * u;
        s << "  <circle cx=\"" << fmt(px(u.real())) << "\" cy=\"" << fmt(py(u.imag()))
          << "\" r=\"3\" fill=\"#b02a2a\"/>\n";
        s << "  <text x=\"" << fmt(px(out.real())) << "\" y=\"" << fmt(py(out.imag()))
          << "\" font-size=\"14\" text-anchor=\"middle\" fill=\"#b02a2a\">v" << j
          << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string generators_csv(const GroupModel& G) {
    std::ostringstream s;
    s << "name,a,b,c,d\n";
    for (std::size_t i = 0; i < G.gens.size(); ++i) {
        const MoebiusMap& g = G.gens[i];
        s << G.gen_names[i] << ',' << fmt17(g.a) << ',' << fmt17(g.b) << ',' << fmt17(g.c)
          << ',' << fmt17(g.d) << '\n';
    }
    return s.str();
}

}  // namespace pluriperiod
