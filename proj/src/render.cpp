#include "shc/render.hpp"

#include <sstream>

namespace shc {

namespace {

constexpr int kUnit = 20;  // pixels per lattice step in SVG

struct SvgBuilder {
    std::ostringstream out;
    int width = 0, height = 0;

    void open(int w, int h) {
        width = w;
        height = h;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
            << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    }
    void line(int x1, int y1, int x2, int y2, const char* stroke, int sw) {
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"" << stroke << "\" stroke-width=\"" << sw << "\"/>\n";
    }
    void dot(int x, int y, int r, const char* fill) {
        out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\" fill=\"" << fill
            << "\"/>\n";
    }
    void rect(int x, int y, int w, int h) {
        out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    void text(int x, int y, const std::string& s) {
        out << "  <text x=\"" << x << "\" y=\"" << y
            << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" << s
            << "</text>\n";
    }
    std::string close() {
        out << "</svg>\n";
        return out.str();
    }
};

// Draw one path with its origin mapped to pixel (x0, y0), y growing upwards.
void svg_path_polyline(SvgBuilder& svg, const Path& p, int x0, int y0) {
    auto h = p.heights();
    int prev_x = x0, prev_y = y0;
    for (int i = 1; i <= p.size(); ++i) {
        int x = x0 + i * kUnit;
        int y = y0 - h[static_cast<size_t>(i - 1)] * kUnit;
        svg.line(prev_x, prev_y, x, y, "black", 2);
        svg.dot(x, y, 2, "black");
        prev_x = x;
        prev_y = y;
    }
    svg.dot(x0, y0, 2, "black");
}

void svg_grid_dots(SvgBuilder& svg, int n, int ymin, int ymax, int x0, int y0) {
    for (int i = 0; i <= n; ++i)
        for (int y = ymin; y <= ymax; ++y) {
            if ((i + y) % 2 != 0) continue;  // lattice points reachable from the origin
            svg.dot(x0 + i * kUnit, y0 - y * kUnit, 1, "lightgray");
        }
}

std::string tikz_open() {
    return "\\documentclass{standalone}\n\\usepackage{tikz}\n\\begin{document}\n"
           "\\begin{tikzpicture}[scale=0.5]\n";
}

std::string tikz_close() { return "\\end{tikzpicture}\n\\end{document}\n"; }

void tikz_path_polyline(std::ostringstream& out, const Path& p, int yshift) {
    auto h = p.heights();
    out << "\\draw[thick] (0," << yshift << ")";
    for (int i = 1; i <= p.size(); ++i)
        out << " -- (" << i << "," << h[static_cast<size_t>(i - 1)] + yshift << ")";
    out << ";\n";
    out << "\\fill (0," << yshift << ") circle (3pt);\n";
    for (int i = 1; i <= p.size(); ++i)
        out << "\\fill (" << i << "," << h[static_cast<size_t>(i - 1)] + yshift
            << ") circle (3pt);\n";
}

}  // namespace

std::string render_path(const Path& p, FigureFormat fmt) {
    int n = p.size();
    int ymin = std::min(0, p.min_height());
    int ymax = 0;
    for (int h : p.heights()) ymax = std::max(ymax, h);
    if (fmt == FigureFormat::svg) {
        SvgBuilder svg;
        int margin = kUnit;
        svg.open(n * kUnit + 2 * margin, (ymax - ymin) * kUnit + 2 * margin);
        int x0 = margin, y0 = margin + ymax * kUnit;
        svg_grid_dots(svg, n, ymin, ymax, x0, y0);
        svg_path_polyline(svg, p, x0, y0);
        return svg.close();
    }
    std::ostringstream out;
    out << tikz_open();
    tikz_path_polyline(out, p, 0);
    out << tikz_close();
    return out.str();
}

std::string render_tableau(const ShiftedTableau& t, FigureFormat fmt) {
    const Shape& s = t.shape();
    int cols = s.empty() ? 0 : s.row_end(1);
    if (fmt == FigureFormat::svg) {
        SvgBuilder svg;
        int margin = kUnit / 2;
        svg.open(cols * kUnit + 2 * margin, s.rows() * kUnit + 2 * margin);
        for (int i = 1; i <= s.rows(); ++i)
            for (int j = s.row_begin(i); j <= s.row_end(i); ++j) {
                int x = margin + (j - 1) * kUnit;
                int y = margin + (i - 1) * kUnit;
                svg.rect(x, y, kUnit, kUnit);
                svg.text(x + kUnit / 2, y + kUnit / 2 + 4, std::to_string(t.at(i, j)));
            }
        return svg.close();
    }
    std::ostringstream out;
    out << tikz_open();
    for (int i = 1; i <= s.rows(); ++i)
        for (int j = s.row_begin(i); j <= s.row_end(i); ++j) {
            out << "\\draw (" << j - 1 << "," << -i << ") rectangle (" << j << "," << -(i - 1)
                << ");\n";
            out << "\\node at (" << 2 * j - 1 << "/2," << -(2 * i - 1) << "/2) {"
                << t.at(i, j) << "};\n";
        }
    out << tikz_close();
    return out.str();
}

std::string render_multichain(const Multichain& c, FigureFormat fmt) {
    int n = c.base_length();
    int gmin = 0, gmax = 0;
    for (const Path& p : c.paths()) {
        gmin = std::min(gmin, p.min_height());
        for (int h : p.heights()) gmax = std::max(gmax, h);
    }
    int band = gmax - gmin + 2;  // vertical room per stacked path
    if (fmt == FigureFormat::svg) {
        SvgBuilder svg;
        int margin = kUnit;
        int k = c.length();
        svg.open(n * kUnit + 2 * margin, (k + 1) * band * kUnit + 2 * margin);
        for (int idx = k; idx >= 0; --idx) {  // top element drawn first (highest)
            int slot = k - idx;
            int y0 = margin + (slot * band + gmax) * kUnit;
            svg_grid_dots(svg, n, gmin, gmax, margin, y0);
            svg_path_polyline(svg, c.at(idx), margin, y0);
        }
        return svg.close();
    }
    std::ostringstream out;
    out << tikz_open();
    int k = c.length();
    for (int idx = k; idx >= 0; --idx) {
        int slot = k - idx;
        tikz_path_polyline(out, c.at(idx), -slot * band);
    }
    out << tikz_close();
    return out.str();
}

}  // namespace shc
