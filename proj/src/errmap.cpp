#include "voigtice/errmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace voigtice {

namespace {

constexpr double kUnderflowFloor = 1e-300;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double rel_log10(double approx, double ref, int& excluded) {
    if (std::abs(ref) < kUnderflowFloor) {
        ++excluded;
        return std::numeric_limits<double>::quiet_NaN();
    }
    return std::log10(std::abs((approx - ref) / ref));
}

} // namespace

void AxisSpec::validate() const {
    if (!(min < max)) throw std::invalid_argument("AxisSpec: min < max required");
    if (count < 2) throw std::invalid_argument("AxisSpec: count >= 2 required");
    if (scale == AxisScale::log && !(min > 0.0))
        throw std::invalid_argument("AxisSpec: log scale requires min > 0");
    if (!std::isfinite(min) || !std::isfinite(max))
        throw std::invalid_argument("AxisSpec: bounds must be finite");
}

std::vector<double> AxisSpec::centers() const {
    validate();
    std::vector<double> out(count);
    if (scale == AxisScale::linear) {
        const double w = (max - min) / count;
        for (int i = 0; i < count; ++i) out[i] = min + (i + 0.5) * w;
    } else {
        const double l0 = std::log10(min), l1 = std::log10(max);
        const double w = (l1 - l0) / count;
        for (int i = 0; i < count; ++i) out[i] = std::pow(10.0, l0 + (i + 0.5) * w);
    }
    return out;
}

void GridSpec::validate() const {
    x.validate();
    y.validate();
}

GridSpec GridSpec::parse(const std::string& text) {
    // "x:lin:0:15:200,y:log:1e-4:15:200"
    auto parse_axis = [](const std::string& part, char expect) -> AxisSpec {
        std::istringstream in(part);
        std::string name, scale, smin, smax, scount;
        if (!std::getline(in, name, ':') || !std::getline(in, scale, ':') ||
            !std::getline(in, smin, ':') || !std::getline(in, smax, ':') ||
            !std::getline(in, scount))
            throw std::invalid_argument("grid: expected '<axis>:<lin|log>:<min>:<max>:<count>', got '" + part + "'");
        if (name.size() != 1 || name[0] != expect)
            throw std::invalid_argument(std::string("grid: expected axis '") + expect + "', got '" + name + "'");
        AxisSpec ax;
        if (scale == "lin") ax.scale = AxisScale::linear;
        else if (scale == "log") ax.scale = AxisScale::log;
        else throw std::invalid_argument("grid: scale must be 'lin' or 'log', got '" + scale + "'");
        try {
            std::size_t pos = 0;
            ax.min = std::stod(smin, &pos);
            if (pos != smin.size()) throw std::invalid_argument(smin);
            ax.max = std::stod(smax, &pos);
            if (pos != smax.size()) throw std::invalid_argument(smax);
            ax.count = std::stoi(scount, &pos);
            if (pos != scount.size()) throw std::invalid_argument(scount);
        } catch (const std::exception&) {
            throw std::invalid_argument("grid: malformed number in '" + part + "'");
        }
        ax.validate();
        return ax;
    };

    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("grid: expected 'x:...,y:...'");
    GridSpec g;
    g.x = parse_axis(text.substr(0, comma), 'x');
    g.y = parse_axis(text.substr(comma + 1), 'y');
    return g;
}

std::string GridSpec::to_string() const {
    auto axis = [](const AxisSpec& a, char name) {
        std::ostringstream out;
        out << name << ':' << (a.scale == AxisScale::linear ? "lin" : "log") << ':'
            << fmt17(a.min) << ':' << fmt17(a.max) << ':' << a.count;
        return out.str();
    };
    return axis(x, 'x') + "," + axis(y, 'y');
}

const char* engine_name(Engine e) { return e == Engine::ice ? "ice" : "weideman"; }

PartSummary summarize(const std::vector<double>& v) {
    std::vector<double> finite_or_inf;
    finite_or_inf.reserve(v.size());
    int excluded = 0;
    for (double x : v) {
        if (std::isnan(x)) ++excluded;
        else finite_or_inf.push_back(x);
    }
    PartSummary s{};
    s.excluded = excluded;
    if (finite_or_inf.empty()) {
        s.max_log10 = s.p99_log10 = s.median_log10 = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    std::sort(finite_or_inf.begin(), finite_or_inf.end());
    const std::size_t n = finite_or_inf.size();
    s.max_log10 = finite_or_inf.back();
    auto rank = [&](double q) {
        std::size_t i = static_cast<std::size_t>(std::ceil(q * n));
        return finite_or_inf[std::min(n - 1, i == 0 ? 0 : i - 1)];
    };
    s.p99_log10 = rank(0.99);
    s.median_log10 = rank(0.50);
    return s;
}

std::vector<std::complex<double>> oracle_grid(const GridSpec& grid) {
    const auto xs = grid.x.centers();
    const auto ys = grid.y.centers();
    std::vector<std::complex<double>> out;
    out.reserve(xs.size() * ys.size());
    for (double y : ys)
        for (double x : xs)
            out.push_back(w_ref({x, y}).value);
    return out;
}

ErrorMap compute_error_map_with_oracle(const GridSpec& grid, Engine engine,
                                       const ExpansionParams& params, int weideman_terms,
                                       const std::vector<std::complex<double>>& oracle_values) {
    grid.validate();
    ErrorMap map;
    map.grid = grid;
    map.engine = engine;
    map.xs = grid.x.centers();
    map.ys = grid.y.centers();
    const std::size_t n = map.xs.size() * map.ys.size();
    if (oracle_values.size() != n)
        throw std::invalid_argument("compute_error_map: oracle grid size mismatch");
    map.log10_delta_re.resize(n);
    map.log10_delta_im.resize(n);

    const CoefficientSet coeffs(params);
    WeidemanCoefficients wc;
    if (engine == Engine::weideman) wc = build_weideman(weideman_terms);

    int excl_re = 0, excl_im = 0;
    std::size_t idx = 0;
    for (double y : map.ys) {
        for (double x : map.xs) {
            const std::complex<double> ref = oracle_values[idx];
            const std::complex<double> val = engine == Engine::ice
                                                 ? w({x, y}, coeffs)
                                                 : w_weideman({x, y}, wc);
            map.log10_delta_re[idx] = rel_log10(val.real(), ref.real(), excl_re);
            map.log10_delta_im[idx] = rel_log10(val.imag(), ref.imag(), excl_im);
            ++idx;
        }
    }
    map.summary_re = summarize(map.log10_delta_re);
    map.summary_im = summarize(map.log10_delta_im);
    return map;
}

ErrorMap compute_error_map(const GridSpec& grid, Engine engine, const ExpansionParams& params,
                           int weideman_terms) {
    return compute_error_map_with_oracle(grid, engine, params, weideman_terms, oracle_grid(grid));
}

void write_map_csv(const std::filesystem::path& path, const std::vector<double>& xs,
                   const std::vector<double>& ys, const std::vector<double>& cells) {
    if (cells.size() != xs.size() * ys.size())
        throw std::invalid_argument("write_map_csv: cell count mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_map_csv: cannot open " + path.string());
    for (double x : xs) out << ',' << fmt17(x);
    out << '\n';
    std::size_t idx = 0;
    for (double y : ys) {
        out << fmt17(y);
        for (std::size_t j = 0; j < xs.size(); ++j) out << ',' << fmt17(cells[idx++]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write_map_csv: write failed for " + path.string());
}

CsvMap read_map_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_map_csv: cannot open " + path.string());
    CsvMap map;
    std::string line;
    auto parse_cell = [&](const std::string& tok) {
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str()) throw std::runtime_error("read_map_csv: bad cell '" + tok + "'");
        return v;
    };
    if (!std::getline(in, line)) throw std::runtime_error("read_map_csv: empty file");
    {
        std::istringstream row(line);
        std::string tok;
        std::getline(row, tok, ','); // corner
        while (std::getline(row, tok, ',')) map.xs.push_back(parse_cell(tok));
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string tok;
        std::getline(row, tok, ',');
        map.ys.push_back(parse_cell(tok));
        while (std::getline(row, tok, ',')) map.cells.push_back(parse_cell(tok));
    }
    if (map.cells.size() != map.xs.size() * map.ys.size())
        throw std::runtime_error("read_map_csv: ragged matrix in " + path.string());
    return map;
}

bool thresholds_hold(const ErrorMap& map, const Thresholds& t) {
    bool ok = true;
    if (t.re) ok = ok && map.summary_re.max_log10 < std::log10(*t.re);
    if (t.im) ok = ok && map.summary_im.max_log10 < std::log10(*t.im);
    return ok;
}

std::string summary_text(const ErrorMap& map, const Thresholds& t) {
    std::ostringstream out;
    out << "engine: " << engine_name(map.engine) << '\n';
    out << "grid: " << map.grid.to_string() << '\n';
    out << "points: " << map.xs.size() * map.ys.size() << '\n';
    auto part = [&](const char* name, const PartSummary& s, const std::optional<double>& thr) {
        out << name << ": max_log10=" << fmt17(s.max_log10) << " p99_log10=" << fmt17(s.p99_log10)
            << " median_log10=" << fmt17(s.median_log10) << " excluded=" << s.excluded << '\n';
        if (thr) {
            bool ok = s.max_log10 < std::log10(*thr);
            out << name << "_threshold: " << fmt17(*thr) << " (log10=" << fmt17(std::log10(*thr))
                << ") -> " << (ok ? "pass" : "FAIL") << '\n';
        }
    };
    part("re", map.summary_re, t.re);
    part("im", map.summary_im, t.im);
    return out.str();
}

} // namespace voigtice
