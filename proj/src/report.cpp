#include "qwalk/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace qwalk {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_histogram_csv(std::ostream& out,
                         const std::vector<std::pair<Position, double>>& rows) {
    out << "position,probability\n";
    for (const auto& [m, p] : rows) out << m << ',' << fmt12(p) << '\n';
}

void write_region_csv(std::ostream& out, const RegionMap& map) {
    out << "theta,phi";
    const size_t walks = map.nodes.empty() ? 0 : map.nodes.front().labels.size();
    for (size_t i = 1; i <= walks; ++i) out << ",label_w" << i;
    out << ",parrondo\n";
    for (const auto& node : map.nodes) {
        out << fmt12(node.theta) << ',' << fmt12(node.phi);
        for (Outcome l : node.labels) out << ',' << outcome_letter(l);
        out << ',' << (node.parrondo ? 1 : 0) << '\n';
    }
}

void write_persistence_csv(std::ostream& out, const PersistenceScan& scan) {
    out << 'n';
    const size_t walks = scan.rows.empty() ? 0 : scan.rows.front().payoffs.size();
    for (size_t i = 1; i <= walks; ++i) out << ",payoff_w" << i;
    out << ",parrondo\n";
    for (const auto& row : scan.rows) {
        out << row.n;
        for (double p : row.payoffs) out << ',' << fmt12(p);
        out << ',' << (row.parrondo ? 1 : 0) << '\n';
    }
}

void write_caps_csv(std::ostream& out, const std::vector<WalkCap>& caps) {
    out << "walk_index,nx,ny,nz,Omega,sense\n";
    for (const auto& cap : caps) {
        out << cap.walk_index << ',' << fmt12(cap.normal.x) << ',' << fmt12(cap.normal.y)
            << ',' << fmt12(cap.normal.z) << ','
            << (cap.omega_cap ? fmt12(*cap.omega_cap) : std::string("nan")) << ','
            << cap.sense << '\n';
    }
}

namespace {

const char* kPalette[16] = {"#4477aa", "#66ccee", "#228833", "#ccbb44",
                            "#ee6677", "#aa3377", "#bbbbbb", "#222255",
                            "#225555", "#225522", "#666633", "#663333",
                            "#555555", "#99ddff", "#ffaabb", "#44bb99"};

std::string svg_open(int width, int height) {
    std::ostringstream ss;
    ss << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
       << "\">\n";
    return ss.str();
}

}  // namespace

std::string histogram_svg(const std::vector<std::pair<Position, double>>& rows) {
    const int bar_h = 14;
    const int gap = 4;
    const int left = 70;
    const int width = 560;
    const int top = 20;
    const int height = top * 2 + static_cast<int>(rows.size()) * (bar_h + gap);
    double pmax = 0.0;
    for (const auto& [m, p] : rows) pmax = std::max(pmax, p);
    if (pmax <= 0.0) pmax = 1.0;

    std::ostringstream ss;
    ss << svg_open(left + width + 40, height);
    int y = top;
    for (const auto& [m, p] : rows) {
        const char* color = m < 0 ? "#cc3311" : (m > 0 ? "#117733" : "#000000");
        const double w = width * (p / pmax);
        ss << "<text x=\"" << left - 8 << "\" y=\"" << y + bar_h - 3
           << "\" text-anchor=\"end\" font-size=\"11\">" << m << "</text>";
        ss << "<rect x=\"" << left << "\" y=\"" << y << "\" width=\"" << fmt12(w)
           << "\" height=\"" << bar_h << "\" fill=\"" << color << "\"/>";
        ss << "<text x=\"" << left + w + 6 << "\" y=\"" << y + bar_h - 3
           << "\" font-size=\"10\">" << fmt12(p) << "</text>\n";
        y += bar_h + gap;
    }
    ss << "</svg>\n";
    return ss.str();
}

std::string region_svg(const RegionMap& map,
                       const std::vector<std::pair<std::string, CoinState>>& marks) {
    const int cell = std::max(1, 720 / std::max(map.n_phi, map.n_theta));
    const int left = 50;
    const int top = 30;
    const int plot_w = cell * map.n_phi;
    const int plot_h = cell * map.n_theta;

    std::map<std::string, int> color_of;
    for (const std::string& label : map.distinct_labels()) {
        const int idx = static_cast<int>(color_of.size());
        color_of[label] = idx % 16;
    }

    std::ostringstream ss;
    ss << svg_open(left + plot_w + 170, top + plot_h + 50);
    for (int j = 0; j < map.n_theta; ++j) {
        for (int k = 0; k < map.n_phi; ++k) {
            const auto& node = map.nodes[static_cast<size_t>(j) * map.n_phi + k];
            std::string key;
            for (Outcome l : node.labels) key.push_back(outcome_letter(l));
            ss << "<rect x=\"" << left + k * cell << "\" y=\"" << top + j * cell
               << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
               << kPalette[color_of[key]] << "\"/>";
        }
        ss << '\n';
    }
    // Legend, one swatch per label vector.
    int ly = top;
    for (const auto& [label, idx] : color_of) {
        ss << "<rect x=\"" << left + plot_w + 14 << "\" y=\"" << ly
           << "\" width=\"14\" height=\"14\" fill=\"" << kPalette[idx] << "\"/>";
        ss << "<text x=\"" << left + plot_w + 34 << "\" y=\"" << ly + 12
           << "\" font-size=\"12\">" << label << "</text>\n";
        ly += 20;
    }
    const double pi = std::numbers::pi;
    for (const auto& [text, state] : marks) {
        const BlochAngles ang = to_bloch(state);
        const double x = left + ang.phi / (2.0 * pi) * plot_w;
        const double y = top + ang.theta / pi * plot_h;
        ss << "<path d=\"M " << fmt12(x) << ' ' << fmt12(y - 7)
           << " l 2.1 4.4 4.9 0.6 -3.6 3.4 0.9 4.8 -4.3 -2.3 -4.3 2.3 0.9 -4.8 "
              "-3.6 -3.4 4.9 -0.6 z\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
    }
    ss << "<text x=\"" << left << "\" y=\"" << top + plot_h + 24
       << "\" font-size=\"12\">phi: 0 to 2*pi, theta: 0 to pi (top to bottom)</text>\n";
    ss << "</svg>\n";
    return ss.str();
}

std::string persistence_svg(const PersistenceScan& scan) {
    const int left = 60;
    const int top = 20;
    const int plot_w = 600;
    const int plot_h = 360;
    double lo = 0.0, hi = 0.0;
    for (const auto& row : scan.rows) {
        for (double p : row.payoffs) {
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
    }
    if (hi - lo < 1e-12) hi = lo + 1.0;
    const double n_lo = scan.rows.empty() ? 0.0 : static_cast<double>(scan.rows.front().n);
    const double n_hi = scan.rows.empty() ? 1.0 : static_cast<double>(scan.rows.back().n);
    const double n_span = std::max(1.0, n_hi - n_lo);

    auto xpos = [&](double n) { return left + (n - n_lo) / n_span * plot_w; };
    auto ypos = [&](double p) { return top + (hi - p) / (hi - lo) * plot_h; };

    std::ostringstream ss;
    ss << svg_open(left + plot_w + 120, top * 2 + plot_h + 30);
    ss << "<line x1=\"" << left << "\" y1=\"" << fmt12(ypos(0.0)) << "\" x2=\""
       << left + plot_w << "\" y2=\"" << fmt12(ypos(0.0))
       << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
    const size_t walks = scan.rows.empty() ? 0 : scan.rows.front().payoffs.size();
    for (size_t w = 0; w < walks; ++w) {
        ss << "<polyline fill=\"none\" stroke=\"" << kPalette[w % 16]
           << "\" stroke-width=\"2\" points=\"";
        for (const auto& row : scan.rows) {
            ss << fmt12(xpos(static_cast<double>(row.n))) << ','
               << fmt12(ypos(row.payoffs[w])) << ' ';
        }
        ss << "\"/>\n";
        ss << "<text x=\"" << left + plot_w + 10 << "\" y=\"" << top + 16 * (w + 1)
           << "\" font-size=\"12\" fill=\"" << kPalette[w % 16] << "\">walk " << w + 1
           << "</text>\n";
    }
    ss << "<text x=\"" << left << "\" y=\"" << top + plot_h + 26
       << "\" font-size=\"12\">payoff vs cycle count n (" << fmt12(lo) << " to "
       << fmt12(hi) << ")</text>\n";
    ss << "</svg>\n";
    return ss.str();
}

}  // namespace qwalk
