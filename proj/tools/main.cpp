#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indmatch/blockfn.hpp"
#include "indmatch/io.hpp"
#include "indmatch/matching.hpp"
#include "indmatch/persistence.hpp"
#include "indmatch/pipeline.hpp"

namespace {

using namespace indmatch;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("IoError", "cannot write '" + path + "'");
    return out;
}

// dtw input: rows of comma-separated reals, all of one width. Width 3 is
// read as poses (x, y, alpha) so the angle weight applies; anything else is
// compared with the Euclidean ground distance.
std::vector<std::vector<double>> load_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot open '" + path + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::string token;
        std::istringstream fields(line);
        while (std::getline(fields, token, ',')) {
            try {
                size_t used = 0;
                row.push_back(std::stod(token, &used));
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                fail("ParseError", "series CSV '" + path + "' line " + std::to_string(line_no) +
                                       ": bad number '" + token + "'");
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            fail("ParseError", "series CSV '" + path + "': ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail("EmptySeries", "series CSV '" + path + "' has no rows");
    return rows;
}

std::vector<Pose> as_poses(const std::vector<std::vector<double>>& rows) {
    std::vector<Pose> poses;
    poses.reserve(rows.size());
    for (const auto& row : rows) poses.push_back(make_pose(row[0], row[1], row[2]));
    return poses;
}

int run(int argc, char** argv) {
    CLI::App app{"0-dimensional persistent homology, induced matching distances and the "
                 "induced matching signal for multi-agent trajectories"};
    app.require_subcommand(1);

    // barcode
    std::string barcode_matrix;
    bool barcode_json = false;
    bool barcode_tmt = false;
    auto* barcode_cmd = app.add_subcommand("barcode", "Barcode of a dissimilarity matrix");
    barcode_cmd->add_option("matrix", barcode_matrix, "matrix text file")->required();
    barcode_cmd->add_flag("--json", barcode_json, "emit barcode JSON");
    barcode_cmd->add_flag("--tmt-json", barcode_tmt, "emit triplet merge tree JSON instead");

    // block
    std::string block_x, block_z, block_perm;
    bool block_json = false;
    auto* block_cmd = app.add_subcommand("block", "Induced block function of two matrices");
    block_cmd->add_option("matrixX", block_x, "source matrix text file")->required();
    block_cmd->add_option("matrixZ", block_z, "target matrix text file")->required();
    block_cmd->add_option("--perm", block_perm, "bijection file, one 1-based target per line");
    block_cmd->add_flag("--json", block_json, "emit block JSON");

    // distance
    std::string dist_x, dist_z, dist_perm;
    int dist_q = 1;
    bool dist_json = false;
    auto* dist_cmd = app.add_subcommand("distance", "Induced matching distance of two matrices");
    dist_cmd->add_option("matrixX", dist_x, "source matrix text file")->required();
    dist_cmd->add_option("matrixZ", dist_z, "target matrix text file")->required();
    dist_cmd->add_option("--q", dist_q, "exponent q >= 1")->capture_default_str();
    dist_cmd->add_option("--perm", dist_perm, "bijection file, one 1-based target per line");
    dist_cmd->add_flag("--json", dist_json, "emit the full matching as JSON");

    // wasserstein
    std::string wass_x, wass_z;
    int wass_q = 1;
    auto* wass_cmd =
        app.add_subcommand("wasserstein", "Sorted bijective q-Wasserstein value of two barcodes");
    wass_cmd->add_option("barcodeX", wass_x, "barcode JSON file")->required();
    wass_cmd->add_option("barcodeZ", wass_z, "barcode JSON file")->required();
    wass_cmd->add_option("--q", wass_q, "exponent q >= 1")->capture_default_str();

    // dtw
    std::string dtw_a, dtw_b;
    double dtw_angle_weight = 1.0;
    auto* dtw_cmd = app.add_subcommand("dtw", "Dynamic time warping distance of two series");
    dtw_cmd->add_option("seriesA", dtw_a, "CSV series file")->required();
    dtw_cmd->add_option("seriesB", dtw_b, "CSV series file")->required();
    dtw_cmd->add_option("--angle-weight", dtw_angle_weight, "weight of the wrapped angle column")
        ->capture_default_str();

    // signal
    std::string signal_input, signal_out;
    WindowConfig signal_cfg;
    auto* signal_cmd =
        app.add_subcommand("signal", "Induced matching signal of a trajectory dataset");
    signal_cmd->add_option("trajectories", signal_input, "trajectory CSV file")->required();
    signal_cmd->add_option("--samples", signal_cfg.sample_count, "poses per window")
        ->capture_default_str();
    signal_cmd->add_option("--intra-stride", signal_cfg.intra_stride, "steps between window poses")
        ->capture_default_str();
    signal_cmd->add_option("--lag", signal_cfg.compare_lag, "steps between compared frames")
        ->capture_default_str();
    signal_cmd->add_option("--q", signal_cfg.q, "exponent q >= 1")->capture_default_str();
    signal_cmd->add_option("--out", signal_out, "write the signal CSV here instead of stdout");

    // summarize
    std::vector<std::string> summarize_inputs;
    auto* summarize_cmd =
        app.add_subcommand("summarize", "Median and quartiles across signal CSVs");
    summarize_cmd->add_option("signals", summarize_inputs, "signal CSV files")
        ->required()
        ->expected(-1);

    // gen
    std::string gen_kind;
    int gen_agents = 10;
    int gen_steps = 900;
    uint64_t gen_seed = 0;
    auto* gen_cmd = app.add_subcommand("gen", "Synthetic fleet trajectories (CSV on stdout)");
    gen_cmd->add_option("--kind", gen_kind, "laned or jittery")->required();
    gen_cmd->add_option("--agents", gen_agents, "agent count")->capture_default_str();
    gen_cmd->add_option("--steps", gen_steps, "samples per trajectory")->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (barcode_cmd->parsed()) {
        const auto [tmt, barcode] = vr_zero_pers(load_matrix_file(barcode_matrix));
        if (barcode_tmt) {
            std::cout << tmt_to_json(tmt) << '\n';
        } else if (barcode_json) {
            std::cout << barcode_to_json(barcode) << '\n';
        } else {
            std::cout << "n " << barcode.n << '\n';
            for (const Bar& bar : barcode.bars)
                std::cout << format_double(bar.death) << ' ' << bar.multiplicity << '\n';
        }
    } else if (block_cmd->parsed()) {
        const DissimilaritySpace x = load_matrix_file(block_x);
        const DissimilaritySpace z = load_matrix_file(block_z);
        const PointBijection f =
            block_perm.empty() ? identity_bijection(x.n) : load_permutation_file(block_perm);
        const BlockFunction block =
            induced_block_function(vr_zero_pers(x).first, vr_zero_pers(z).first, f);
        if (block_json) {
            std::cout << block_to_json(block) << '\n';
        } else {
            for (const BlockEntry& e : block.entries)
                std::cout << format_double(e.a) << ' ' << format_double(e.b) << ' ' << e.count
                          << '\n';
        }
    } else if (dist_cmd->parsed()) {
        const DissimilaritySpace x = load_matrix_file(dist_x);
        const DissimilaritySpace z = load_matrix_file(dist_z);
        const PointBijection f =
            dist_perm.empty() ? identity_bijection(x.n) : load_permutation_file(dist_perm);
        const auto [tmt_x, barcode_x] = vr_zero_pers(x);
        const auto [tmt_z, barcode_z] = vr_zero_pers(z);
        const BlockFunction block = induced_block_function(tmt_x, tmt_z, f);
        const double distance = induced_matching_distance(block, dist_q);
        if (dist_json) {
            std::cout << matching_to_json(induced_matching(block, barcode_x, barcode_z), distance,
                                          dist_q)
                      << '\n';
        } else {
            std::cout << format_double(distance) << '\n';
        }
    } else if (wass_cmd->parsed()) {
        std::cout << format_double(sorted_wasserstein(load_barcode_json_file(wass_x),
                                                      load_barcode_json_file(wass_z), wass_q))
                  << '\n';
    } else if (dtw_cmd->parsed()) {
        const auto rows_a = load_series_csv(dtw_a);
        const auto rows_b = load_series_csv(dtw_b);
        if (rows_a.front().size() != rows_b.front().size())
            fail("LengthMismatch", "series of dimensions " +
                                       std::to_string(rows_a.front().size()) + " and " +
                                       std::to_string(rows_b.front().size()));
        const double distance =
            rows_a.front().size() == 3
                ? dtw_distance(as_poses(rows_a), as_poses(rows_b), dtw_angle_weight)
                : dtw_distance(rows_a, rows_b);
        std::cout << format_double(distance) << '\n';
    } else if (signal_cmd->parsed()) {
        const TrajectoryDataset dataset = load_trajectories_csv_file(signal_input);
        const SignalSeries signal = matching_signal(dataset.agents, signal_cfg);
        if (signal_out.empty()) {
            save_signal_csv(signal, std::cout);
        } else {
            std::ofstream out = open_output(signal_out);
            save_signal_csv(signal, out);
        }
    } else if (summarize_cmd->parsed()) {
        std::vector<SignalSeries> signals;
        signals.reserve(summarize_inputs.size());
        for (const std::string& path : summarize_inputs)
            signals.push_back(load_signal_csv_file(path));
        save_summary_csv(summarize_signals(signals), std::cout);
    } else if (gen_cmd->parsed()) {
        save_trajectories_csv(
            gen_synthetic(fleet_kind_from_string(gen_kind), gen_agents, gen_steps, gen_seed),
            std::cout);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const indmatch::Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << '\n';
        return 2;
    }
}
