#include "slicedev/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace slicedev {

namespace {

struct Fit {
    double scale = 1.0;
    double ox = 0.0, oy = 0.0;  // world origin offset

    double x(double wx) const { return (wx - ox) * scale; }
    double y(double wy) const { return 512.0 - (wy - oy) * scale; }  // svg y points down
};

void emit_polyline(std::ostringstream& os, const Chain& chain, const Fit& fit,
                   const char* style) {
    os << "  <polyline fill=\"none\" " << style << " points=\"";
    char buf[64];
    for (const Vec2& p : chain.joints) {
        std::snprintf(buf, sizeof buf, "%.3f,%.3f ", fit.x(p.x), fit.y(p.y));
        os << buf;
    }
    os << "\"/>\n";
}

}  // namespace

std::string render_development_svg(const Development& dev, const Chain& section_chain,
                                   const ForbiddenDisk& disk) {
    double lo_x = disk.center.x - disk.radius, hi_x = disk.center.x + disk.radius;
    double lo_y = disk.center.y - disk.radius, hi_y = disk.center.y + disk.radius;
    for (const Chain* c : {&dev.chain, &section_chain})
        for (const Vec2& p : c->joints) {
            lo_x = std::min(lo_x, p.x);
            hi_x = std::max(hi_x, p.x);
            lo_y = std::min(lo_y, p.y);
            hi_y = std::max(hi_y, p.y);
        }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double margin = 0.06 * span;

    Fit fit;
    fit.scale = 512.0 / (span + 2.0 * margin);
    fit.ox = lo_x - margin - 0.5 * (span - (hi_x - lo_x));
    fit.oy = lo_y - margin - 0.5 * (span - (hi_y - lo_y));

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
          "viewBox=\"0 0 512 512\">\n";
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"#f3c6c6\" "
                  "stroke=\"#a00000\" stroke-width=\"1\"/>\n",
                  fit.x(disk.center.x), fit.y(disk.center.y),
                  std::max(disk.radius * fit.scale, 1.5));
    os << buf;
    emit_polyline(os, section_chain, fit,
                  "stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
    emit_polyline(os, dev.chain, fit, "stroke=\"#000000\" stroke-width=\"2\"");
    os << "</svg>\n";
    return os.str();
}

}  // namespace slicedev
