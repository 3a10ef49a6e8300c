#include "ascf/sweep_output.hpp"

#include <fstream>
#include <stdexcept>

#include "ascf/csv.hpp"
#include "ascf/format.hpp"
#include "ascf/svg.hpp"

namespace ascf {

namespace {

std::ofstream open_file(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() +
                                 " for writing");
    }
    return out;
}

std::string summary_row(const std::string& parameter, const SweepCell& cell) {
    const ConvergenceReport& rep = cell.convergence;
    std::string row = parameter;
    row += ',' + format_double(cell.value);
    row += ',' + format_double(cell.initial.x);
    row += ',' + format_double(cell.initial.y);
    row += ',' + format_double(cell.initial.z);
    row += rep.converged ? ",true" : ",false";
    row += ',' + format_double(rep.terminal_state.x);
    row += ',' + format_double(rep.terminal_state.y);
    row += ',' + format_double(rep.terminal_state.z);
    row += ',' + format_double(rep.terminal_speed);
    row += ',';
    row += rep.nearest ? rep.nearest->label : std::string("none");
    row += ',';
    row += rep.nearest ? format_double(rep.nearest->distance)
                       : std::string("nan");
    row += ',' + format_double(cell.mean_x);
    row += ',' + format_double(cell.mean_y);
    row += ',' + format_double(cell.mean_z);
    row += '\n';
    return row;
}

}  // namespace

std::vector<std::string> write_sweep_outputs(const SweepResult& result,
                                             const std::filesystem::path& dir,
                                             bool with_svg) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;

    {
        std::ofstream out = open_file(dir / "summary.csv");
        std::string buf =
            "parameter,value,x0,y0,z0,converged,terminal_x,terminal_y,"
            "terminal_z,terminal_speed,nearest,nearest_distance,"
            "mean_x,mean_y,mean_z\n";
        for (const SweepCell& cell : result.cells) {
            buf += summary_row(result.spec.parameter, cell);
        }
        out << buf;
        written.push_back("summary.csv");
    }

    {
        std::ofstream out = open_file(dir / "claims.csv");
        std::string buf = "claim,gating,holds,detail\n";
        for (const ClaimResult& claim : result.claims) {
            buf += claim.name;
            buf += claim.gating ? ",true" : ",false";
            buf += claim.holds ? ",true" : ",false";
            buf += ',' + claim.detail + '\n';
        }
        out << buf;
        written.push_back("claims.csv");
    }

    for (const SweepCell& cell : result.cells) {
        const std::string name = "cell_" + std::to_string(cell.value_index) +
                                 "_" + std::to_string(cell.state_index) +
                                 ".csv";
        std::ofstream out = open_file(dir / name);
        write_trajectory_csv(cell.trajectory, out);
        written.push_back(name);
    }

    if (with_svg) {
        const char* const coord_names[] = {"x", "y", "z"};
        for (int coord = 0; coord < 3; ++coord) {
            const std::vector<Series> series =
                sweep_plot_series(result, coord);
            const std::string name =
                std::string(coord_names[coord]) + "_vs_t.svg";
            std::ofstream out = open_file(dir / name);
            render_svg_plot(series, "t", coord_names[coord], out);
            written.push_back(name);
        }
    }
    return written;
}

}  // namespace ascf
