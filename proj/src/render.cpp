#include "irrlat/render.hpp"

#include "irrlat/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace irrlat {

std::string emit_csv(const EhrhartSeries& series) {
    if (series.counts.empty()) throw DomainError("cannot emit an empty series");
    std::string out = "t,count\n";
    for (size_t t = 1; t <= series.t_max(); ++t) {
        out += std::to_string(t);
        out += ',';
        out += series.at(t).str();
        out += '\n';
    }
    return out;
}

EhrhartSeries parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || (line != "t,count" && line != "t,count\r"))
        throw ParseError("CSV series must start with header \"t,count\"");
    std::vector<Int> counts;
    size_t expected_t = 1;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("CSV line " + std::to_string(lineno) + " has no comma");
        Int t, v;
        try {
            t = Int(line.substr(0, comma));
            v = Int(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw ParseError("CSV line " + std::to_string(lineno) + " is not a pair of integers");
        }
        if (t != expected_t)
            throw ParseError("CSV line " + std::to_string(lineno) + ": expected t = " +
                             std::to_string(expected_t) + ", got " + t.str());
        if (v < 0) throw ParseError("CSV counts must be nonnegative");
        counts.push_back(std::move(v));
        ++expected_t;
    }
    if (counts.empty()) throw ParseError("CSV series has no rows");
    return {"csv", std::move(counts)};
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Frame {
    double min_x, max_x, min_y, max_y;
    double scale;
    double width, height;

    double px(double x) const { return (x - min_x) * scale; }
    double py(double y) const { return (max_y - y) * scale; }  // y grows upward in math
};

Frame make_frame(const Polygon& outline, int width_px) {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const Point& v : outline.vertices()) {
        double x = to_double(v.x);
        double y = to_double(v.y);
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    const double margin = 0.75;
    min_x -= margin;
    min_y -= margin;
    max_x += margin;
    max_y += margin;
    Frame f{min_x, max_x, min_y, max_y, 1.0, 0.0, 0.0};
    f.scale = width_px / (max_x - min_x);
    f.width = width_px;
    f.height = (max_y - min_y) * f.scale;
    return f;
}

// Paths walk the canonical corners; collinear vertices only get marker dots.
void path_for(std::string& svg, const Polygon& p, const Frame& f, const std::string& style) {
    svg += "  <path d=\"";
    auto edges = canonical_edges(p);
    for (size_t i = 0; i < edges.size(); ++i) {
        const Point& v = edges[i].segment.a;
        svg += i == 0 ? "M " : "L ";
        svg += fmt(f.px(to_double(v.x))) + " " + fmt(f.py(to_double(v.y))) + " ";
    }
    svg += "Z\" " + style + "/>\n";
}

void lattice_dots(std::string& svg, const Polygon& outline, const Frame& f) {
    PreparedPolygon prepared(outline);
    long long lo_x = f.min_x < 0 ? static_cast<long long>(f.min_x) - 1 : static_cast<long long>(f.min_x);
    long long hi_x = static_cast<long long>(f.max_x) + 1;
    long long lo_y = f.min_y < 0 ? static_cast<long long>(f.min_y) - 1 : static_cast<long long>(f.min_y);
    long long hi_y = static_cast<long long>(f.max_y) + 1;
    if ((hi_x - lo_x + 1) * (hi_y - lo_y + 1) > 40000) return;  // unreadable anyway
    for (long long y = lo_y; y <= hi_y; ++y) {
        for (long long x = lo_x; x <= hi_x; ++x) {
            bool in = prepared.contains(Int(x), Int(y));
            svg += "  <circle cx=\"" + fmt(f.px(double(x))) + "\" cy=\"" +
                   fmt(f.py(double(y))) + "\" r=\"" + (in ? "3.2" : "1.4") + "\" fill=\"" +
                   (in ? "#c0392b" : "#b0b0b0") + "\"/>\n";
        }
    }
}

std::string svg_document(const Polygon& outline, const std::vector<const Polygon*>& pieces,
                         const std::vector<const Segment*>& rays, const SvgOptions& options) {
    Polygon big = dilate(outline, options.dilation);
    Frame f = make_frame(big, options.width_px);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(f.width) +
           "\" height=\"" + fmt(f.height) + "\" viewBox=\"0 0 " + fmt(f.width) + " " +
           fmt(f.height) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (options.show_lattice) lattice_dots(svg, big, f);
    if (options.show_pieces) {
        for (const Polygon* piece : pieces) {
            Polygon pd = dilate(*piece, options.dilation);
            path_for(svg, pd, f,
                     "fill=\"none\" stroke=\"#7f8c8d\" stroke-width=\"1\" "
                     "stroke-dasharray=\"4 3\"");
        }
        for (const Segment* s : rays) {
            Point a = dilate(s->a, options.dilation);
            Point b = dilate(s->b, options.dilation);
            svg += "  <line x1=\"" + fmt(f.px(to_double(a.x))) + "\" y1=\"" +
                   fmt(f.py(to_double(a.y))) + "\" x2=\"" + fmt(f.px(to_double(b.x))) +
                   "\" y2=\"" + fmt(f.py(to_double(b.y))) +
                   "\" stroke=\"#7f8c8d\" stroke-width=\"1\" stroke-dasharray=\"2 3\"/>\n";
        }
    }
    path_for(svg, big, f,
             "fill=\"#2e86c1\" fill-opacity=\"0.15\" stroke=\"#1b4f72\" stroke-width=\"2\"");
    for (const Point& v : big.vertices()) {
        svg += "  <circle cx=\"" + fmt(f.px(to_double(v.x))) + "\" cy=\"" +
               fmt(f.py(to_double(v.y))) + "\" r=\"3.5\" fill=\"#1b4f72\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace

std::string emit_svg(const Polygon& p, const SvgOptions& options) {
    return svg_document(p, {}, {}, options);
}

std::string emit_svg(const AssembledPolygon& a, const SvgOptions& options) {
    std::vector<const Polygon*> pieces;
    pieces.reserve(a.pieces.size());
    for (const Polygon& piece : a.pieces) pieces.push_back(&piece);
    std::vector<const Segment*> rays;
    rays.reserve(a.shared_edges.size());
    for (const SharedEdge& e : a.shared_edges) rays.push_back(&e.segment);
    return svg_document(a.outer, pieces, rays, options);
}

}  // namespace irrlat
