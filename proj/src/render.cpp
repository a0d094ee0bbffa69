#include "ratcat/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ratcat {

std::string fixed6(long long num, long long den) {
    bool neg = (num < 0) != (den < 0);
    unsigned long long n = num < 0 ? -num : num;
    unsigned long long d = den < 0 ? -den : den;
    unsigned long long scaled = (n * 1000000ULL + d / 2) / d;
    std::string out = neg && scaled ? "-" : "";
    out += std::to_string(scaled / 1000000ULL);
    std::string frac = std::to_string(scaled % 1000000ULL);
    return out + "." + std::string(6 - frac.size(), '0') + frac;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void line(std::ostringstream& os, const std::string& x1, const std::string& y1,
          const std::string& x2, const std::string& y2, const std::string& style) {
    os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
       << "\" " << style << "/>\n";
}

constexpr double cell = 40.0;
constexpr double margin = 20.0;

}  // namespace

std::string svg_dyck(const DyckPath& d, LaserChoice lasers) {
    long a = d.a(), b = d.b();
    double w = b * cell + 2 * margin, h = a * cell + 2 * margin;
    auto px = [&](double x) { return fmt(margin + x * cell); };
    auto py = [&](double y) { return fmt(margin + (a - y) * cell); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
       << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
    for (long x = 0; x <= b; ++x)
        line(os, px(x), py(0), px(x), py(a), "stroke=\"#dddddd\" stroke-width=\"1\"");
    for (long y = 0; y <= a; ++y)
        line(os, px(0), py(y), px(b), py(y), "stroke=\"#dddddd\" stroke-width=\"1\"");
    line(os, px(0), py(0), px(b), py(a),
         "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");

    os << "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" points=\"";
    Point p;
    os << fmt(margin + p.x * cell) << "," << fmt(margin + (a - p.y) * cell);
    for (char c : d.word()) {
        if (c == 'N')
            ++p.y;
        else
            ++p.x;
        os << " " << fmt(margin + p.x * cell) << "," << fmt(margin + (a - p.y) * cell);
    }
    os << "\"/>\n";

    if (lasers != LaserChoice::none) {
        PathStatistics st = statistics(d);
        const std::vector<Point>& sources =
            lasers == LaserChoice::all ? st.north_bottoms : st.valleys;
        for (const Point& s : sources) {
            Laser l = fire_laser(d, s);
            // endpoint abscissa is end_x_num / a; pixel coordinate kept exact
            long long num = l.end_x_num.convert_to<long long>();
            std::string ex = fixed6(num * 40 + 20 * a, a);
            line(os, px(s.x), py(s.y), ex, py(l.end_height),
                 "stroke=\"#cc2222\" stroke-width=\"1.5\"");
        }
    }
    os << "</svg>\n";
    return os.str();
}

namespace {

std::pair<double, double> polygon_vertex(long n, long k, double cx, double cy, double r) {
    // vertex k of n, labeled clockwise from the top
    double theta = M_PI / 2 - 2 * M_PI * (k - 1) / n;
    return {cx + r * std::cos(theta), cy - r * std::sin(theta)};
}

}  // namespace

std::string svg_dissection(const DyckPath& d) {
    long n = d.b() + 1;
    double r = 140, cx = 170, cy = 170;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"340\" height=\"340\" "
          "viewBox=\"0 0 340 340\">\n";
    os << "<polygon fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
    for (long k = 1; k <= n; ++k) {
        auto [x, y] = polygon_vertex(n, k, cx, cy, r);
        os << (k > 1 ? " " : "") << fmt(x) << "," << fmt(y);
    }
    os << "\"/>\n";
    for (const Diagonal& diag : facet_diagonals(d)) {
        auto [x1, y1] = polygon_vertex(n, diag.u, cx, cy, r);
        auto [x2, y2] = polygon_vertex(n, diag.v, cx, cy, r);
        line(os, fmt(x1), fmt(y1), fmt(x2), fmt(y2), "stroke=\"#cc2222\" stroke-width=\"1.5\"");
    }
    for (long k = 1; k <= n; ++k) {
        auto [x, y] = polygon_vertex(n, k, cx, cy, r + 14);
        os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
           << "\" font-size=\"12\" text-anchor=\"middle\">" << k << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_chords(const SetPartition& p) {
    long m = p.ground_size();
    double r = 140, cx = 170, cy = 170;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"340\" height=\"340\" "
          "viewBox=\"0 0 340 340\">\n";
    os << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(r)
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    for (const auto& block : p.blocks()) {
        if (block.size() == 1) continue;
        os << "<polygon fill=\"none\" stroke=\"#cc2222\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < block.size(); ++i) {
            auto [x, y] = polygon_vertex(m, block[i], cx, cy, r);
            os << (i > 0 ? " " : "") << fmt(x) << "," << fmt(y);
        }
        os << "\"/>\n";
    }
    for (long k = 1; k <= m; ++k) {
        auto [x, y] = polygon_vertex(m, k, cx, cy, r);
        os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
           << "\" r=\"3\" fill=\"#000000\"/>\n";
        auto [lx, ly] = polygon_vertex(m, k, cx, cy, r + 14);
        os << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
           << "\" font-size=\"12\" text-anchor=\"middle\">" << k << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ratcat
