#include "evolab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace evolab::svg {

using geom::Vec2;

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double x) {
    // fixed decimals keep output byte-identical across runs
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

}  // namespace

std::string render(const std::vector<geom::Polygon>& polygons, const Options& opt) {
    if (polygons.empty()) throw EmptyInput("svg::render: no polygons");

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    std::vector<std::vector<Vec2>> verts;
    verts.reserve(polygons.size());
    for (const auto& P : polygons) {
        verts.push_back(P.vertices());
        for (const auto& v : verts.back()) {
            xmin = std::min(xmin, v.x());
            xmax = std::max(xmax, v.x());
            ymin = std::min(ymin, v.y());
            ymax = std::max(ymax, v.y());
        }
    }
    double w = xmax - xmin, h = ymax - ymin;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    double mx = 0.05 * w, my = 0.05 * h;
    xmin -= mx;
    xmax += mx;
    ymin -= my;
    ymax += my;
    w = xmax - xmin;
    h = ymax - ymin;
    double stroke = 0.004 * std::max(w, h);
    int height = static_cast<int>(std::lround(opt.width * h / w));

    // world y points up; flip into SVG coordinates
    auto sx = [&](double x) { return num(x - xmin); };
    auto sy = [&](double y) { return num(ymax - y); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h)
       << "\">\n";
    for (size_t k = 0; k < polygons.size(); ++k) {
        const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const auto& vs = verts[k];
        os << "<path d=\"";
        for (size_t i = 0; i < vs.size(); ++i)
            os << (i == 0 ? "M" : " L") << sx(vs[i].x()) << ' ' << sy(vs[i].y());
        os << " Z\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
           << num(stroke) << "\"/>\n";
        if (opt.vertex_markers) {
            for (const auto& v : vs)
                os << "<circle cx=\"" << sx(v.x()) << "\" cy=\"" << sy(v.y())
                   << "\" r=\"" << num(1.5 * stroke) << "\" fill=\"" << color << "\"/>\n";
        }
        if (opt.coorientation_arrows) {
            const auto& P = polygons[k];
            for (int i = 0; i < P.size(); ++i) {
                Vec2 a = vs[(i - 1 + P.size()) % P.size()];
                Vec2 b = vs[i];
                Vec2 mid = 0.5 * (a + b);
                Vec2 tip = mid + 0.04 * std::max(w, h) * P.line(i).normal();
                os << "<line x1=\"" << sx(mid.x()) << "\" y1=\"" << sy(mid.y())
                   << "\" x2=\"" << sx(tip.x()) << "\" y2=\"" << sy(tip.y())
                   << "\" stroke=\"" << color << "\" stroke-width=\"" << num(0.6 * stroke)
                   << "\"/>\n";
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace evolab::svg
