#include "indmatch/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "indmatch/blockfn.hpp"
#include "indmatch/persistence.hpp"

namespace indmatch {

namespace {

void require_config(const WindowConfig& cfg) {
    if (cfg.sample_count < 2 || cfg.intra_stride < 1 || cfg.compare_lag < 1 || cfg.q < 1 ||
        cfg.angle_weight < 0.0)
        fail("InvalidConfig", "need sample_count >= 2, intra_stride >= 1, compare_lag >= 1, "
                              "q >= 1 and angle_weight >= 0");
}

int common_length(const std::vector<Trajectory>& trajectories) {
    if (trajectories.empty()) fail("EmptyInput", "no trajectories");
    const size_t length = trajectories.front().samples.size();
    for (const Trajectory& traj : trajectories)
        if (traj.samples.size() != length)
            fail("UnequalLengths", "trajectory '" + traj.agent + "' has " +
                                       std::to_string(traj.samples.size()) + " samples, expected " +
                                       std::to_string(length));
    if (length == 0) fail("EmptyInput", "trajectories have no samples");
    return static_cast<int>(length);
}

std::vector<Pose> window_at(const Trajectory& traj, const WindowConfig& cfg, int t) {
    std::vector<Pose> window;
    window.reserve(static_cast<size_t>(cfg.sample_count));
    for (int k = 0; k < cfg.sample_count; ++k)
        window.push_back(traj.samples[static_cast<size_t>(t - 1 + k * cfg.intra_stride)]);
    return window;
}

DissimilaritySpace frame_space_checked(const std::vector<Trajectory>& trajectories,
                                       const WindowConfig& cfg, int t, int length) {
    if (t < 1 || t > cfg.valid_frames(length))
        fail("FrameOutOfRange", "frame " + std::to_string(t) + " outside 1.." +
                                    std::to_string(cfg.valid_frames(length)));
    const int n = static_cast<int>(trajectories.size());
    std::vector<std::vector<Pose>> windows;
    windows.reserve(static_cast<size_t>(n));
    for (const Trajectory& traj : trajectories) windows.push_back(window_at(traj, cfg, t));

    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double value = dtw_distance(std::span<const Pose>(windows[i]),
                                              std::span<const Pose>(windows[j]), cfg.angle_weight);
            d[static_cast<size_t>(i) * n + j] = value;
            d[static_cast<size_t>(j) * n + i] = value;
        }
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (const Trajectory& traj : trajectories) labels.push_back(traj.agent);
    return validate_dissimilarity(n, std::move(d), std::move(labels));
}

} // namespace

int WindowConfig::valid_frames(int series_length) const {
    return std::max(0, series_length - window_extent());
}

int WindowConfig::signal_length(int series_length) const {
    return std::max(0, valid_frames(series_length) - compare_lag);
}

DissimilaritySpace frame_space(const std::vector<Trajectory>& trajectories,
                               const WindowConfig& cfg, int t) {
    require_config(cfg);
    return frame_space_checked(trajectories, cfg, t, common_length(trajectories));
}

SignalSeries matching_signal(const std::vector<Trajectory>& trajectories, const WindowConfig& cfg) {
    require_config(cfg);
    const int length = common_length(trajectories);
    const int frames = cfg.valid_frames(length);
    const int signal_len = cfg.signal_length(length);
    const PointBijection identity = identity_bijection(static_cast<int>(trajectories.size()));

    std::vector<TripletMergeTree> tmts;
    tmts.reserve(static_cast<size_t>(frames));
    for (int t = 1; t <= frames; ++t)
        tmts.push_back(vr_zero_pers(frame_space_checked(trajectories, cfg, t, length)).first);

    SignalSeries signal;
    signal.values.reserve(static_cast<size_t>(signal_len));
    for (int t = 1; t <= signal_len; ++t) {
        const BlockFunction block =
            induced_block_function(tmts[t - 1], tmts[t - 1 + cfg.compare_lag], identity);
        signal.values.push_back(SignalPoint{t, induced_matching_distance(block, cfg.q)});
    }
    return signal;
}

double percentile_sorted(const std::vector<double>& sorted, double p) {
    const size_t m = sorted.size();
    if (m == 1) return sorted[0];
    const double rank = p / 100.0 * static_cast<double>(m - 1);
    const size_t lo = static_cast<size_t>(rank);
    if (lo + 1 >= m) return sorted[m - 1];
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::vector<SummaryPoint> summarize_signals(const std::vector<SignalSeries>& signals) {
    if (signals.empty()) fail("EmptyInput", "no signals to summarize");
    const SignalSeries& first = signals.front();
    for (const SignalSeries& s : signals) {
        if (s.values.size() != first.values.size())
            fail("IndexMismatch", "signals of lengths " + std::to_string(s.values.size()) +
                                      " and " + std::to_string(first.values.size()));
        for (size_t k = 0; k < s.values.size(); ++k)
            if (s.values[k].t != first.values[k].t)
                fail("IndexMismatch", "frame index mismatch at position " + std::to_string(k));
    }

    std::vector<SummaryPoint> summary;
    summary.reserve(first.values.size());
    std::vector<double> column(signals.size());
    for (size_t k = 0; k < first.values.size(); ++k) {
        for (size_t s = 0; s < signals.size(); ++s) column[s] = signals[s].values[k].distance;
        std::sort(column.begin(), column.end());
        summary.push_back(SummaryPoint{first.values[k].t, percentile_sorted(column, 50.0),
                                       percentile_sorted(column, 25.0),
                                       percentile_sorted(column, 75.0)});
    }
    return summary;
}

} // namespace indmatch
