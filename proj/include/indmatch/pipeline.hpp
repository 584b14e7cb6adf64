#pragma once

#include <vector>

#include "indmatch/dtw.hpp"
#include "indmatch/matching.hpp"
#include "indmatch/types.hpp"

namespace indmatch {

/// Sliding-window parameters for the induced matching signal. A frame t
/// (1-based) is valid when t + (sample_count-1)*intra_stride fits in the
/// series; a signal index additionally needs t + compare_lag valid.
struct WindowConfig {
    int sample_count = 6;
    int intra_stride = 10;
    int compare_lag = 50;
    int q = 1;
    double angle_weight = 1.0;

    int window_extent() const { return (sample_count - 1) * intra_stride; }
    int valid_frames(int series_length) const;
    int signal_length(int series_length) const;
};

struct SignalPoint {
    int t = 0;
    double distance = 0.0;

    bool operator==(const SignalPoint&) const = default;
};

/// Induced matching distances indexed by frame, strictly increasing in t.
struct SignalSeries {
    std::vector<SignalPoint> values;

    bool operator==(const SignalSeries&) const = default;
};

struct SummaryPoint {
    int t = 0;
    double median = 0.0;
    double p25 = 0.0;
    double p75 = 0.0;
};

/// Dissimilarity space over the agents' pose windows at frame t: entry
/// (i, j) is the DTW distance between the windows of agents i and j.
/// Computed once per unordered pair and mirrored, so the matrix is exactly
/// symmetric.
DissimilaritySpace frame_space(const std::vector<Trajectory>& trajectories,
                               const WindowConfig& cfg, int t);

/// For each valid signal index t, the induced matching distance between the
/// barcodes of frame t and frame t+lag under the agent-identity bijection.
SignalSeries matching_signal(const std::vector<Trajectory>& trajectories, const WindowConfig& cfg);

/// Per-index median and quartiles across runs. Percentiles use linear
/// interpolation between closest ranks.
std::vector<SummaryPoint> summarize_signals(const std::vector<SignalSeries>& signals);

/// Linear-interpolation percentile of a sorted sample, p in [0, 100].
double percentile_sorted(const std::vector<double>& sorted, double p);

} // namespace indmatch
