#include "tailkit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tailkit/format.hpp"

namespace tailkit {

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string{}; }

// Pixel coordinates; three decimals keep the file small and deterministic.
std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory for '" + path.string() + "': " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

void write_records_csv(std::ostream& out, std::vector<ExperimentRecord> records) {
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return a.n != b.n ? a.n < b.n : a.rep < b.rep;
    });
    out << kRecordCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.experiment << ',' << r.n << ',' << r.k << ',' << r.rep << ',' << r.seed << ','
            << opt(r.hausdorff) << ',' << (r.window_miss ? 1 : 0) << ',' << opt(r.ls_slope) << ','
            << opt(r.hill) << ',' << opt(r.km_ratio) << ',' << opt(r.concentration) << ','
            << format_double(r.runtime_ms) << '\n';
    }
}

std::string records_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream out;
    write_records_csv(out, records);
    return out.str();
}

void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path) {
    write_text_file(path, records_csv(records));
}

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summary) {
    out << "n,k,reps,window_misses,hausdorff_median,hausdorff_mean,hausdorff_q10,hausdorff_q90,"
           "ls_slope_mean,ls_slope_median,hill_mean,kM_ratio_mean,concentration_mean\n";
    for (const auto& s : summary) {
        out << s.n << ',' << s.k << ',' << s.replications << ',' << s.window_misses << ','
            << opt(s.hausdorff_median) << ',' << opt(s.hausdorff_mean) << ',' << opt(s.hausdorff_q10)
            << ',' << opt(s.hausdorff_q90) << ',' << opt(s.ls_slope_mean) << ','
            << opt(s.ls_slope_median) << ',' << opt(s.hill_mean) << ',' << opt(s.km_ratio_mean) << ','
            << opt(s.concentration_mean) << '\n';
    }
}

void emit_summary_csv(const std::vector<CellSummary>& summary, const std::filesystem::path& path) {
    std::ostringstream out;
    write_summary_csv(out, summary);
    write_text_file(path, out.str());
}

void emit_sample(std::span<const double> sample, const std::filesystem::path& path) {
    std::string text;
    for (double v : sample) {
        text += format_double(v);
        text += '\n';
    }
    write_text_file(path, text);
}

std::vector<double> read_sample(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::vector<double> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(parse_double(line));
        } catch (const std::invalid_argument& e) {
            throw IoError("'" + path.string() + "': " + e.what());
        }
    }
    return out;
}

void emit_point_set_csv(const PointSet& points, const std::filesystem::path& path) {
    std::ostringstream out;
    write_point_set_csv(out, points);
    write_text_file(path, out.str());
}

std::string render_svg(const PointSet& points, const LimitShape& shape, const Window& window,
                       std::string_view title, const PointSet* curve) {
    constexpr double kWidth = 640.0;
    constexpr double kHeight = 480.0;
    constexpr double kMargin = 48.0;
    const double span_x = window.x_hi > window.x_lo ? window.x_hi - window.x_lo : 1.0;
    const double span_y = window.y_hi > window.y_lo ? window.y_hi - window.y_lo : 1.0;
    auto sx = [&](double x) { return kMargin + (x - window.x_lo) / span_x * (kWidth - 2 * kMargin); };
    auto sy = [&](double y) {
        return kHeight - kMargin - (y - window.y_lo) / span_y * (kHeight - 2 * kMargin);
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) {
        out << "<text x=\"" << px(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
            << xml_escape(title) << "</text>\n";
    }
    // Axes along the bottom and left edges, labelled with the window bounds.
    out << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << px(sx(window.x_lo)) << "\" y1=\"" << px(sy(window.y_lo)) << "\" x2=\""
        << px(sx(window.x_hi)) << "\" y2=\"" << px(sy(window.y_lo)) << "\"/>\n"
        << "<line x1=\"" << px(sx(window.x_lo)) << "\" y1=\"" << px(sy(window.y_lo)) << "\" x2=\""
        << px(sx(window.x_lo)) << "\" y2=\"" << px(sy(window.y_hi)) << "\"/>\n"
        << "</g>\n"
        << "<g class=\"labels\" font-size=\"11\">\n"
        << "<text x=\"" << px(sx(window.x_lo)) << "\" y=\"" << px(sy(window.y_lo) + 16)
        << "\" text-anchor=\"middle\">" << format_double(window.x_lo) << "</text>\n"
        << "<text x=\"" << px(sx(window.x_hi)) << "\" y=\"" << px(sy(window.y_lo) + 16)
        << "\" text-anchor=\"middle\">" << format_double(window.x_hi) << "</text>\n"
        << "<text x=\"" << px(sx(window.x_lo) - 6) << "\" y=\"" << px(sy(window.y_lo))
        << "\" text-anchor=\"end\">" << format_double(window.y_lo) << "</text>\n"
        << "<text x=\"" << px(sx(window.x_lo) - 6) << "\" y=\"" << px(sy(window.y_hi))
        << "\" text-anchor=\"end\">" << format_double(window.y_hi) << "</text>\n"
        << "</g>\n";
    out << "<rect class=\"window\" x=\"" << px(sx(window.x_lo)) << "\" y=\"" << px(sy(window.y_hi))
        << "\" width=\"" << px(sx(window.x_hi) - sx(window.x_lo)) << "\" height=\""
        << px(sy(window.y_lo) - sy(window.y_hi))
        << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";

    if (curve != nullptr) {
        out << "<polyline class=\"reference\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& p : *curve) {
            if (!window.contains(p)) continue;
            out << (first ? "" : " ") << px(sx(p.x)) << ',' << px(sy(p.y));
            first = false;
        }
        out << "\"/>\n";
    } else if (const auto seg = clip_shape(shape, window)) {
        out << "<line class=\"reference\" x1=\"" << px(sx(seg->start.x)) << "\" y1=\""
            << px(sy(seg->start.y)) << "\" x2=\"" << px(sx(seg->end.x)) << "\" y2=\""
            << px(sy(seg->end.y)) << "\" data-x1=\"" << format_double(seg->start.x) << "\" data-y1=\""
            << format_double(seg->start.y) << "\" data-x2=\"" << format_double(seg->end.x)
            << "\" data-y2=\"" << format_double(seg->end.y)
            << "\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";
    }

    out << "<g class=\"points\" fill=\"steelblue\" fill-opacity=\"0.6\">\n";
    for (const auto& p : points) {
        if (!window.contains(p)) continue;
        out << "<circle cx=\"" << px(sx(p.x)) << "\" cy=\"" << px(sy(p.y)) << "\" r=\"1.5\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

void emit_svg(const PointSet& points, const LimitShape& shape, const Window& window,
              const std::filesystem::path& path, std::string_view title, const PointSet* curve) {
    write_text_file(path, render_svg(points, shape, window, title, curve));
}

}  // namespace tailkit
