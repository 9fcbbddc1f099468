// Copyright 2026 The qsnn Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file svg.hpp
 * Minimal self-contained SVG line charts (axes, ticks, grid, legend). CSV
 * files are the authoritative artifacts; these charts exist for quick visual
 * inspection without a plotting stack.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsnn::report {

class LineChart {
  public:
    LineChart(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)),
          y_label_(std::move(y_label)) {}

    void add_series(std::string name, std::vector<double> xs,
                    std::vector<double> ys) {
        if (xs.size() != ys.size() || xs.empty()) {
            throw std::invalid_argument(
                "LineChart: series needs equal-length, non-empty x/y");
        }
        series_.push_back({std::move(name), std::move(xs), std::move(ys)});
    }

    std::string render() const {
        if (series_.empty()) {
            throw std::logic_error("LineChart: no series added");
        }
        double x_lo = series_[0].xs[0], x_hi = x_lo;
        double y_lo = series_[0].ys[0], y_hi = y_lo;
        for (const Series& s : series_) {
            for (double x : s.xs) { x_lo = std::min(x_lo, x); x_hi = std::max(x_hi, x); }
            for (double y : s.ys) { y_lo = std::min(y_lo, y); y_hi = std::max(y_hi, y); }
        }
        pad_range(x_lo, x_hi);
        pad_range(y_lo, y_hi);

        const double plot_w = kWidth - kLeft - kRight;
        const double plot_h = kHeight - kTop - kBottom;
        const auto px = [&](double x) {
            return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w;
        };
        const auto py = [&](double y) {
            return kTop + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;
        };

        std::ostringstream svg;
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
            << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
            << ' ' << kHeight << "\">\n";
        svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
            << "\" fill=\"white\"/>\n";
        svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" font-size=\"16\" "
               "text-anchor=\"middle\" font-family=\"sans-serif\">"
            << escape(title_) << "</text>\n";

        // gridlines and tick labels
        for (double t : ticks(x_lo, x_hi)) {
            const double x = px(t);
            svg << "<line x1=\"" << num(x) << "\" y1=\"" << kTop << "\" x2=\""
                << num(x) << "\" y2=\"" << kTop + plot_h
                << "\" stroke=\"#dddddd\"/>\n";
            svg << "<text x=\"" << num(x) << "\" y=\"" << kTop + plot_h + 18
                << "\" font-size=\"11\" text-anchor=\"middle\" "
                   "font-family=\"sans-serif\">"
                << num(t) << "</text>\n";
        }
        for (double t : ticks(y_lo, y_hi)) {
            const double y = py(t);
            svg << "<line x1=\"" << kLeft << "\" y1=\"" << num(y) << "\" x2=\""
                << kLeft + plot_w << "\" y2=\"" << num(y)
                << "\" stroke=\"#dddddd\"/>\n";
            svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(y + 4)
                << "\" font-size=\"11\" text-anchor=\"end\" "
                   "font-family=\"sans-serif\">"
                << num(t) << "</text>\n";
        }

        // axes
        svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h
            << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << kTop + plot_h
            << "\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\""
            << kLeft << "\" y2=\"" << kTop + plot_h
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\""
            << kHeight - 12
            << "\" font-size=\"13\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\">"
            << escape(x_label_) << "</text>\n";
        svg << "<text x=\"18\" y=\"" << kTop + plot_h / 2
            << "\" font-size=\"13\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" transform=\"rotate(-90 18 "
            << kTop + plot_h / 2 << ")\">" << escape(y_label_) << "</text>\n";

        // series
        for (std::size_t i = 0; i < series_.size(); ++i) {
            const Series& s = series_[i];
            svg << "<polyline fill=\"none\" stroke=\"" << color(i)
                << "\" stroke-width=\"1.8\" points=\"";
            for (std::size_t k = 0; k < s.xs.size(); ++k) {
                if (k) svg << ' ';
                svg << num(px(s.xs[k])) << ',' << num(py(s.ys[k]));
            }
            svg << "\"/>\n";
        }

        // legend
        double ly = kTop + 8;
        for (std::size_t i = 0; i < series_.size(); ++i, ly += 18) {
            const double lx = kLeft + plot_w - 150;
            svg << "<line x1=\"" << lx << "\" y1=\"" << num(ly) << "\" x2=\""
                << lx + 22 << "\" y2=\"" << num(ly) << "\" stroke=\""
                << color(i) << "\" stroke-width=\"2\"/>\n";
            svg << "<text x=\"" << lx + 28 << "\" y=\"" << num(ly + 4)
                << "\" font-size=\"12\" font-family=\"sans-serif\">"
                << escape(series_[i].name) << "</text>\n";
        }
        svg << "</svg>\n";
        return svg.str();
    }

    void write(const std::string& path) const {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << render();
    }

  private:
    struct Series {
        std::string name;
        std::vector<double> xs, ys;
    };

    static constexpr double kWidth = 800, kHeight = 480;
    static constexpr double kLeft = 72, kRight = 24, kTop = 48, kBottom = 56;

    static void pad_range(double& lo, double& hi) {
        if (lo == hi) {
            lo -= 0.5;
            hi += 0.5;
        } else {
            const double pad = 0.04 * (hi - lo);
            lo -= pad;
            hi += pad;
        }
    }

    /// Tick positions at a "nice" step (1/2/5 times a power of ten).
    static std::vector<double> ticks(double lo, double hi) {
        const double raw = (hi - lo) / 5.0;
        const double mag = std::pow(10.0, std::floor(std::log10(raw)));
        double step = mag;
        if (raw / mag >= 5.0) step = 5.0 * mag;
        else if (raw / mag >= 2.0) step = 2.0 * mag;
        std::vector<double> out;
        for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12 * step;
             t += step) {
            out.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
        }
        return out;
    }

    static std::string num(double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%g", v);
        return buf;
    }

    static const char* color(std::size_t i) {
        static constexpr const char* kPalette[] = {
            "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
        return kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    }

    static std::string escape(const std::string& s) {
        std::string out;
        out.reserve(s.size());
        for (char c : s) {
            switch (c) {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                default: out += c;
            }
        }
        return out;
    }

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

}  // namespace qsnn::report
