#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "voigtice/faddeeva.hpp"
#include "voigtice/oracle.hpp"
#include "voigtice/weideman.hpp"

// Relative-error maps of an engine against the reference oracle:
//   delta_re = |(Re[w] - Re[w_ref]) / Re[w_ref]|   (and likewise for Im),
// stored as log10 values on a rectangular grid.

namespace voigtice {

enum class AxisScale { linear, log };

struct AxisSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
    AxisScale scale = AxisScale::linear;

    void validate() const;
    // Cell-center sample positions: both endpoints are excluded by a
    // half-step (in log space for log scale), matching the open-interval
    // domain statements the default grids implement.
    std::vector<double> centers() const;
};

struct GridSpec {
    AxisSpec x, y;

    void validate() const;
    // Format: "x:lin:0:15:200,y:log:1e-4:15:200"
    static GridSpec parse(const std::string& text);
    std::string to_string() const;
};

enum class Engine { ice, weideman };

const char* engine_name(Engine e);

struct PartSummary {
    double max_log10;
    double p99_log10;    // nearest-rank 99th percentile
    double median_log10;
    int excluded;        // cells where |part of w_ref| underflows 1e-300
};

struct ErrorMap {
    GridSpec grid;
    Engine engine = Engine::ice;
    std::vector<double> xs, ys;
    // row-major [y][x]; excluded cells hold NaN, exact matches -inf
    std::vector<double> log10_delta_re, log10_delta_im;
    PartSummary summary_re{}, summary_im{};

    double at_re(int iy, int ix) const { return log10_delta_re[static_cast<std::size_t>(iy) * xs.size() + ix]; }
    double at_im(int iy, int ix) const { return log10_delta_im[static_cast<std::size_t>(iy) * xs.size() + ix]; }
};

PartSummary summarize(const std::vector<double>& log10_values);

/// Evaluates the engine on the grid against w_ref. Oracle integrity
/// failures propagate (no partial results).
ErrorMap compute_error_map(const GridSpec& grid, Engine engine, const ExpansionParams& params,
                           int weideman_terms = 16);

/// Same, but reuses precomputed oracle values (row-major, grid-shaped); lets
/// several engines share one oracle pass.
ErrorMap compute_error_map_with_oracle(const GridSpec& grid, Engine engine,
                                       const ExpansionParams& params, int weideman_terms,
                                       const std::vector<std::complex<double>>& oracle_values);

std::vector<std::complex<double>> oracle_grid(const GridSpec& grid);

// CSV layout: first row is empty corner + x values, each following row is
// the y value + cells, 17 significant digits, comma separated, '\n' rows.
void write_map_csv(const std::filesystem::path& path, const std::vector<double>& xs,
                   const std::vector<double>& ys, const std::vector<double>& cells);

struct CsvMap {
    std::vector<double> xs, ys, cells;
};
CsvMap read_map_csv(const std::filesystem::path& path);

struct Thresholds {
    std::optional<double> re;  // linear relative-error bounds, e.g. 1e-12
    std::optional<double> im;
};

/// True iff every configured threshold holds (max measured error below it).
bool thresholds_hold(const ErrorMap& map, const Thresholds& t);

std::string summary_text(const ErrorMap& map, const Thresholds& t);

} // namespace voigtice
