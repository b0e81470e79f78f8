#ifndef SU11_IO_HPP
#define SU11_IO_HPP

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "su11/errors.hpp"

namespace su11 {

// CSV and SVG emission. CSV cells are rendered with %.17g so identical inputs
// produce identical bytes; every file starts with a "# schema <name>" line so
// readers can pin the column layout.

inline std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class csv_table {
public:
    csv_table(std::string schema, std::vector<std::string> header)
        : schema_(std::move(schema)), header_(std::move(header)) {}

    void add_row(const std::vector<double>& row) {
        if (row.size() != header_.size())
            throw io_error("csv_table: row width does not match the header");
        rows_.push_back(row);
    }

    std::string render() const {
        std::ostringstream out;
        out << "# schema " << schema_ << "\n";
        for (std::size_t i = 0; i < header_.size(); ++i)
            out << (i ? "," : "") << header_[i];
        out << "\n";
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << format_cell(row[i]);
            out << "\n";
        }
        return out.str();
    }

    void write(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw io_error("cannot open for writing: " + path);
        f << render();
        if (!f) throw io_error("write failed: " + path);
    }

    std::size_t n_rows() const { return rows_.size(); }
    const std::vector<std::string>& header() const { return header_; }

private:
    std::string schema_;
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

namespace svg {

struct series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

namespace detail {

inline void min_max(const std::vector<series>& all, double& xlo, double& xhi, double& ylo,
                    double& yhi) {
    xlo = ylo = 1e300;
    xhi = yhi = -1e300;
    for (const auto& s : all)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xlo = std::min(xlo, s.x[i]);
            xhi = std::max(xhi, s.x[i]);
            ylo = std::min(ylo, s.y[i]);
            yhi = std::max(yhi, s.y[i]);
        }
    if (xhi <= xlo) xhi = xlo + 1.0;
    if (yhi <= ylo) yhi = ylo + 1.0;
}

inline std::string color(int i) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    return palette[i % 8];
}

}  // namespace detail

// Plain polyline chart; one polyline per series plus a small legend.
inline std::string line_chart(const std::vector<series>& all, const std::string& title) {
    const int w = 720, h = 480, mg = 56;
    double xlo, xhi, ylo, yhi;
    detail::min_max(all, xlo, xhi, ylo, yhi);
    auto px = [&](double x) { return mg + (x - xlo) / (xhi - xlo) * (w - 2 * mg); };
    auto py = [&](double y) { return h - mg - (y - ylo) / (yhi - ylo) * (h - 2 * mg); };

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << w / 2 << "' y='24' text-anchor='middle' font-size='15'>" << title
        << "</text>\n";
    out << "<line x1='" << mg << "' y1='" << h - mg << "' x2='" << w - mg << "' y2='" << h - mg
        << "' stroke='black'/>\n";
    out << "<line x1='" << mg << "' y1='" << mg << "' x2='" << mg << "' y2='" << h - mg
        << "' stroke='black'/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = xlo + k * (xhi - xlo) / 4, yv = ylo + k * (yhi - ylo) / 4;
        out << "<text x='" << px(xv) << "' y='" << h - mg + 18
            << "' text-anchor='middle' font-size='11'>" << format_cell(xv).substr(0, 7)
            << "</text>\n";
        out << "<text x='" << mg - 6 << "' y='" << py(yv) + 4
            << "' text-anchor='end' font-size='11'>" << format_cell(yv).substr(0, 7) << "</text>\n";
    }
    int idx = 0;
    for (const auto& s : all) {
        out << "<polyline fill='none' stroke='" << detail::color(idx) << "' stroke-width='1.5' points='";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << px(s.x[i]) << "," << py(s.y[i]) << " ";
        out << "'/>\n";
        out << "<text x='" << w - mg + 4 << "' y='" << mg + 16 * idx << "' font-size='11' fill='"
            << detail::color(idx) << "'>" << s.name << "</text>\n";
        ++idx;
    }
    out << "</svg>\n";
    return out.str();
}

// Rectangular heatmap of a row-major grid; blue-white-red ramp over the range.
inline std::string heatmap(const std::vector<double>& values, int nx, int ny,
                           const std::string& title) {
    const int w = 640, h = 640, mg = 40;
    double lo = 1e300, hi = -1e300;
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi <= lo) hi = lo + 1.0;
    const double cw = static_cast<double>(w - 2 * mg) / nx;
    const double ch = static_cast<double>(h - 2 * mg) / ny;

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << w / 2 << "' y='24' text-anchor='middle' font-size='15'>" << title
        << "</text>\n";
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const double t = (values[static_cast<std::size_t>(i) * ny + j] - lo) / (hi - lo);
            int r, g, b;
            if (t < 0.5) {
                r = static_cast<int>(255 * 2 * t);
                g = static_cast<int>(255 * 2 * t);
                b = 255;
            } else {
                r = 255;
                g = static_cast<int>(255 * 2 * (1 - t));
                b = static_cast<int>(255 * 2 * (1 - t));
            }
            out << "<rect x='" << mg + i * cw << "' y='" << h - mg - (j + 1) * ch << "' width='"
                << cw + 0.5 << "' height='" << ch + 0.5 << "' fill='rgb(" << r << "," << g << ","
                << b << ")'/>\n";
        }
    out << "</svg>\n";
    return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw io_error("write failed: " + path);
}

}  // namespace svg

}  // namespace su11

#endif
