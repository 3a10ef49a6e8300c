#include "ascf/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ascf/format.hpp"

namespace ascf {

namespace {

constexpr char kTrajectoryHeader[] = "t,x,y,z";

double parse_field(const std::string& line, std::size_t& pos, bool last,
                   std::size_t line_no) {
    const std::size_t end = last ? line.size() : line.find(',', pos);
    if (end == std::string::npos) {
        throw std::runtime_error("trajectory CSV line " +
                                 std::to_string(line_no) +
                                 ": expected 4 comma-separated fields");
    }
    double value = 0.0;
    const char* first = line.data() + pos;
    const char* stop = line.data() + end;
    const auto res = std::from_chars(first, stop, value);
    if (res.ec != std::errc{} || res.ptr != stop) {
        throw std::runtime_error("trajectory CSV line " +
                                 std::to_string(line_no) +
                                 ": malformed number");
    }
    pos = end + 1;
    return value;
}

std::string scenario_line(const char* name, const ScenarioCondition& c) {
    return std::string("# ") + name + "=" + (c.holds ? "true" : "false") +
           " op1=" + format_double(c.op1) + " op2=" + format_double(c.op2) +
           "\n";
}

}  // namespace

std::size_t write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
    if (traj.samples.empty()) {
        throw std::invalid_argument("trajectory has no samples");
    }
    std::string buf = std::string(kTrajectoryHeader) + "\n";
    for (const auto& sample : traj.samples) {
        buf += format_double(sample.t);
        buf += ',';
        buf += format_double(sample.state.x);
        buf += ',';
        buf += format_double(sample.state.y);
        buf += ',';
        buf += format_double(sample.state.z);
        buf += '\n';
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("failed to write trajectory CSV");
    return buf.size();
}

std::vector<TrajectorySample> read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kTrajectoryHeader) {
        throw std::runtime_error("trajectory CSV: missing t,x,y,z header");
    }
    std::vector<TrajectorySample> samples;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t pos = 0;
        TrajectorySample sample;
        sample.t = parse_field(line, pos, false, line_no);
        sample.state.x = parse_field(line, pos, false, line_no);
        sample.state.y = parse_field(line, pos, false, line_no);
        sample.state.z = parse_field(line, pos, true, line_no);
        samples.push_back(sample);
    }
    return samples;
}

std::size_t write_equilibria_report(
    std::span<const EquilibriumPoint> points,
    std::span<const std::optional<StabilityVerdict>> verdicts,
    const ScenarioReport& scenario, std::ostream& out) {
    if (points.size() != verdicts.size()) {
        throw std::invalid_argument(
            "equilibria report: points and verdicts must align");
    }
    std::string buf = "label,x,y,z,valid,re1,im1,re2,im2,re3,im3,class\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const EquilibriumPoint& pt = points[i];
        buf += pt.label;
        for (double c : pt.coords) {
            buf += ',';
            buf += format_double(c);
        }
        buf += pt.valid ? ",true" : ",false";
        if (verdicts[i].has_value()) {
            for (const auto& lambda : verdicts[i]->eigenvalues) {
                buf += ',';
                buf += format_double(lambda.real());
                buf += ',';
                buf += format_double(lambda.imag());
            }
            buf += ',';
            buf += to_string(verdicts[i]->cls);
        } else {
            for (int k = 0; k < 6; ++k) buf += ",nan";
            buf += ",undefined";
        }
        buf += '\n';
    }
    buf += "# scenario\n";
    buf += scenario_line("scenario1", scenario.scenario1);
    buf += scenario_line("scenario2", scenario.scenario2);
    buf += scenario_line("scenario3", scenario.scenario3);
    buf += scenario_line("scenario4", scenario.scenario4);

    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("failed to write equilibria report");
    return buf.size();
}

}  // namespace ascf
