#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tailkit/qqsets.hpp"
#include "tailkit/runner.hpp"
#include "tailkit/setmetrics.hpp"

namespace tailkit {

/// File system failure, with the offending path in the message (CLI exit
/// code 2).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kRecordCsvHeader =
    "experiment,n,k,rep,seed,hausdorff,window_miss,ls_slope,hill,kM_ratio,concentration,runtime_ms";

/// Header plus one row per record, sorted by (n, rep). Reals carry 17
/// significant digits; absent values are empty fields.
void write_records_csv(std::ostream& out, std::vector<ExperimentRecord> records);
std::string records_csv(const std::vector<ExperimentRecord>& records);
void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path);

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summary);
void emit_summary_csv(const std::vector<CellSummary>& summary, const std::filesystem::path& path);

/// One value per line, 17 significant digits.
void emit_sample(std::span<const double> sample, const std::filesystem::path& path);
std::vector<double> read_sample(const std::filesystem::path& path);

void emit_point_set_csv(const PointSet& points, const std::filesystem::path& path);

/// Standalone SVG of the points inside the window, the window border, axes
/// with end labels, and the reference drawn as the clipped shape (a <line>
/// carrying its data coordinates in data-x1/-y1/-x2/-y2) or, when `curve` is
/// given, as a polyline through the curve points inside the window.
std::string render_svg(const PointSet& points, const LimitShape& shape, const Window& window,
                       std::string_view title = {}, const PointSet* curve = nullptr);

void emit_svg(const PointSet& points, const LimitShape& shape, const Window& window,
              const std::filesystem::path& path, std::string_view title = {},
              const PointSet* curve = nullptr);

/// Writes `content` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace tailkit
