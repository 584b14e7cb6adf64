#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "indmatch/blockfn.hpp"
#include "indmatch/matching.hpp"
#include "indmatch/pipeline.hpp"
#include "indmatch/types.hpp"

namespace indmatch {

/// Fleet of equal-length trajectories with unique agent identifiers.
/// `timestep` is carried as metadata only (seconds per sample).
struct TrajectoryDataset {
    std::vector<Trajectory> agents;
    double timestep = 0.1;

    bool operator==(const TrajectoryDataset&) const = default;
};

enum class FleetKind { laned, jittery };

FleetKind fleet_kind_from_string(const std::string& name);

/// Deterministic synthetic fleets in a 5 m x 3.5 m corridor whose ends are
/// connected (x wraps modulo 5).
///
///   laned   — agents start at seeded random poses, then settle into fixed
///             lanes with constant velocities, half leftward and half
///             rightward at 1.2 m/s; heading noise fades out linearly over a
///             burn-in.
///   jittery — agents keep randomly perturbing their heading every step at
///             the same speed, bouncing off the corridor walls.
///
/// The same seed always produces a bit-identical dataset; draws come from a
/// single std::mt19937_64 consumed in a fixed order.
TrajectoryDataset gen_synthetic(FleetKind kind, int n_agents, int length, uint64_t seed);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

// --- dissimilarity matrix text format: first line n, then n rows of n reals
DissimilaritySpace load_matrix_text(std::istream& in);
DissimilaritySpace load_matrix_file(const std::string& path);

// --- trajectory CSV: header "t,agent,x,y,alpha", t 1-based; every agent
// must cover every time index exactly once; alpha is normalized on load
TrajectoryDataset load_trajectories_csv(std::istream& in);
TrajectoryDataset load_trajectories_csv_file(const std::string& path);
void save_trajectories_csv(const TrajectoryDataset& dataset, std::ostream& out);

// --- permutation file: one 1-based target index per line
PointBijection load_permutation(std::istream& in);
PointBijection load_permutation_file(const std::string& path);

// --- signal CSV: header "t,distance"
SignalSeries load_signal_csv(std::istream& in);
SignalSeries load_signal_csv_file(const std::string& path);
void save_signal_csv(const SignalSeries& signal, std::ostream& out);

// --- summary CSV: header "t,median,p25,p75"
void save_summary_csv(const std::vector<SummaryPoint>& summary, std::ostream& out);

// --- JSON forms
std::string barcode_to_json(const Barcode& barcode);
Barcode barcode_from_json(const std::string& text);
Barcode load_barcode_json_file(const std::string& path);
std::string tmt_to_json(const TripletMergeTree& tmt);
std::string block_to_json(const BlockFunction& block);
std::string matching_to_json(const InducedMatching& matching, double distance, int q);

} // namespace indmatch
