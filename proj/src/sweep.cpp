#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lqw/experiment.hpp"

namespace lqw {

std::vector<int> SweepConfig::default_sides() {
    std::vector<int> sides;
    for (int s = 8; s <= 30; s += 2) sides.push_back(s);
    return sides;
}

EvolutionTrace evolve_with_window(RunConfig config) {
    constexpr int kMaxWidenings = 8;
    EvolutionTrace trace = evolve(config);
    for (int i = 0; i < kMaxWidenings && trace.peak_step == config.max_steps; ++i) {
        config.max_steps *= 2;
        trace = evolve(config);
    }
    return trace;
}

SweepResult run_sweep(const SweepConfig& config) {
    if (config.sides.empty() || config.presets.empty()) {
        throw std::invalid_argument("sweep needs at least one side and one preset");
    }
    struct Job {
        int side;
        WeightPreset preset;
        std::optional<SweepRecord> record;
        std::string error;
    };
    std::vector<Job> jobs;
    for (int side : config.sides)
        for (WeightPreset p : config.presets) jobs.push_back({side, p, std::nullopt, {}});

    int workers = config.jobs > 0 ? config.jobs
                                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min<int>(workers, static_cast<int>(jobs.size()));

    const auto njobs = static_cast<long>(jobs.size());
    // Each sweep cell owns its state; the kernels inside run serially.
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long i = 0; i < njobs; ++i) {
        Job& job = jobs[static_cast<std::size_t>(i)];
        try {
            const GridGeometry g(job.side);
            RunConfig run{make_cluster(g, config.k, config.anchor),
                          preset_weight(job.preset, g, config.k),
                          config.max_steps.value_or(default_max_steps(g)),
                          1,
                          config.marked_coin,
                          Backend::Serial};
            if (run.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
            run.record_stride = run.max_steps;
            const EvolutionTrace trace = evolve_with_window(run);
            job.record = SweepRecord{job.side,
                                     static_cast<long long>(g.cell_count()),
                                     config.k,
                                     job.preset,
                                     run.loop_weight,
                                     trace.peak_step,
                                     trace.peak_probability,
                                     trace.initial_probability};
        } catch (const std::exception& e) {
            job.error = e.what();
        }
    }

    SweepResult result;
    for (auto& job : jobs) {
        if (job.record)
            result.records.push_back(*job.record);
        else
            result.failures.push_back({job.side, job.preset, job.error});
    }
    return result;
}

std::vector<PresetComparison> compare_presets(const std::vector<SweepRecord>& records,
                                              WeightPreset baseline, WeightPreset candidate) {
    std::map<std::pair<int, int>, std::map<WeightPreset, const SweepRecord*>> by_instance;
    for (const auto& r : records) by_instance[{r.side, r.k}][r.preset] = &r;
    if (by_instance.empty()) throw std::invalid_argument("no records to compare");

    std::vector<PresetComparison> out;
    for (const auto& [key, presets] : by_instance) {
        auto base = presets.find(baseline);
        auto cand = presets.find(candidate);
        if (base == presets.end() || cand == presets.end()) {
            throw std::invalid_argument("side " + std::to_string(key.first) + ", k " +
                                        std::to_string(key.second) + " lacks preset " +
                                        std::string(to_string(base == presets.end() ? baseline
                                                                                    : candidate)));
        }
        out.push_back({key.first, key.second, baseline, candidate,
                       cand->second->peak_probability - base->second->peak_probability,
                       cand->second->peak_step - base->second->peak_step});
    }
    return out;
}

void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
    out << kSweepCsvHeader << '\n';
    char buf[256];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%d,%lld,%d,%s,%.17g,%d,%.17g,%.17g\n", r.side, r.n, r.k,
                      std::string(to_string(r.preset)).c_str(), r.loop_weight, r.peak_step,
                      r.peak_probability, r.initial_probability);
        out << buf;
    }
}

std::vector<SweepRecord> parse_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSweepCsvHeader) {
        throw std::invalid_argument("sweep CSV: missing or unexpected header");
    }
    std::vector<SweepRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        if (fields.size() != 8) {
            throw std::invalid_argument("sweep CSV line " + std::to_string(line_no) +
                                        ": expected 8 fields");
        }
        try {
            SweepRecord r;
            r.side = std::stoi(fields[0]);
            r.n = std::stoll(fields[1]);
            r.k = std::stoi(fields[2]);
            r.preset = parse_preset(fields[3]);
            r.loop_weight = std::stod(fields[4]);
            r.peak_step = std::stoi(fields[5]);
            r.peak_probability = std::stod(fields[6]);
            r.initial_probability = std::stod(fields[7]);
            records.push_back(r);
        } catch (const std::exception& e) {
            throw std::invalid_argument("sweep CSV line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("error writing " + path.string());
}

const char* preset_colour(WeightPreset p) {
    switch (p) {
        case WeightPreset::Zero: return "#1f4fd1";
        case WeightPreset::WongSingle: return "#d12a1f";
        case WeightPreset::QuarterInverse: return "#e08a00";
        case WeightPreset::Proposed: return "#1e9e3a";
    }
    return "#000000";
}

}  // namespace

void emit_csv(const std::vector<SweepRecord>& records, const std::filesystem::path& path) {
    if (records.empty()) throw std::invalid_argument("no sweep records to write");
    std::ostringstream out;
    write_sweep_csv(records, out);
    write_file(path, out.str());
}

std::string render_plot_svg(const std::vector<SweepRecord>& records) {
    if (records.empty()) throw std::invalid_argument("no sweep records to plot");

    constexpr double kPanelW = 420, kPanelH = 300, kMargin = 55, kGap = 70;
    constexpr double kWidth = 2 * (kPanelW + kMargin) + kGap, kHeight = kPanelH + 2 * kMargin + 30;

    auto [min_it, max_it] = std::minmax_element(
        records.begin(), records.end(), [](const auto& a, const auto& b) { return a.side < b.side; });
    const double x_lo = min_it->side, x_hi = std::max(max_it->side, min_it->side + 1);
    int max_step = 1;
    for (const auto& r : records) max_step = std::max(max_step, r.peak_step);
    const double step_hi = std::ceil(max_step * 1.1 / 10.0) * 10.0;

    std::map<WeightPreset, std::vector<const SweepRecord*>> series;
    for (const auto& r : records) series[r.preset].push_back(&r);
    for (auto& [p, rs] : series)
        std::sort(rs.begin(), rs.end(), [](auto* a, auto* b) { return a->side < b->side; });

    std::ostringstream svg;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "font-family=\"sans-serif\" font-size=\"12\">\n",
                  kWidth, kHeight);
    svg << buf << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    auto panel = [&](double left, const char* title, double y_hi, auto value_of, int y_ticks) {
        const double top = kMargin, bottom = kMargin + kPanelH;
        auto px = [&](double side) { return left + (side - x_lo) / (x_hi - x_lo) * kPanelW; };
        auto py = [&](double v) { return bottom - v / y_hi * kPanelH; };

        std::snprintf(buf, sizeof buf,
                      "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                      "stroke=\"black\"/>\n<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" "
                      "font-size=\"14\">%s</text>\n",
                      left, top, kPanelW, kPanelH, left + kPanelW / 2, top - 15, title);
        svg << buf;
        for (int i = 0; i <= y_ticks; ++i) {
            const double v = y_hi * i / y_ticks;
            std::snprintf(buf, sizeof buf,
                          "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#ddd\"/>\n"
                          "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%g</text>\n",
                          left, py(v), left + kPanelW, py(v), left - 6, py(v) + 4, v);
            svg << buf;
        }
        std::vector<int> sides;
        for (const auto& r : records) sides.push_back(r.side);
        std::sort(sides.begin(), sides.end());
        sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
        for (int s : sides) {
            std::snprintf(buf, sizeof buf,
                          "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%d</text>\n", px(s),
                          bottom + 16, s);
            svg << buf;
        }
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">grid side</text>\n",
                      left + kPanelW / 2, bottom + 34);
        svg << buf;
        for (const auto& [preset, rs] : series) {
            svg << "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" << preset_colour(preset)
                << "\" points=\"";
            for (const auto* r : rs) {
                std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(r->side), py(value_of(*r)));
                svg << buf;
            }
            svg << "\"/>\n";
            for (const auto* r : rs) {
                std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\"/>\n",
                              px(r->side), py(value_of(*r)), preset_colour(preset));
                svg << buf;
            }
        }
    };

    panel(kMargin, "peak marked probability", 1.0,
          [](const SweepRecord& r) { return r.peak_probability; }, 10);
    panel(2 * kMargin + kPanelW + kGap, "steps to peak", step_hi,
          [](const SweepRecord& r) { return static_cast<double>(r.peak_step); }, 5);

    double legend_x = kMargin;
    for (const auto& [preset, rs] : series) {
        std::snprintf(buf, sizeof buf,
                      "<rect x=\"%.1f\" y=\"%.1f\" width=\"14\" height=\"4\" fill=\"%s\"/>\n"
                      "<text x=\"%.1f\" y=\"%.1f\">%s</text>\n",
                      legend_x, kHeight - 22, preset_colour(preset), legend_x + 20, kHeight - 16,
                      std::string(to_string(preset)).c_str());
        svg << buf;
        legend_x += 110;
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_plot(const std::vector<SweepRecord>& records, const std::filesystem::path& path) {
    write_file(path, render_plot_svg(records));
}

}  // namespace lqw
