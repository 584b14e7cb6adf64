#include "indmatch/io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace indmatch {

namespace {

constexpr double kCorridorLength = 5.0; // meters, x wraps at this length
constexpr double kCorridorWidth = 3.5;  // meters
constexpr double kSpeed = 1.2;          // meters per second
constexpr double kTimestep = 0.1;       // seconds per sample
constexpr int kSettleSteps = 700;       // laned noise fades to zero here
constexpr double kLanePull = 0.12;      // per-step fraction of the lane gap closed
constexpr double kTurnStep = 0.9;       // jittery max heading change per step (radians)

// Uniform double in [0, 1) built from the top 53 bits of one mt19937_64
// draw, so the stream is identical on every platform.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

double wrap_x(double x) {
    double w = std::fmod(x, kCorridorLength);
    if (w < 0.0) w += kCorridorLength;
    return w;
}

struct AgentState {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;
    double lane_y = 0.0;     // laned only
    double direction = 0.0;  // target heading: 0 or pi
    double noise = 0.0;      // bounded heading-noise walk in [-pi, pi]
};

TrajectoryDataset make_dataset(int n_agents, int length) {
    TrajectoryDataset dataset;
    dataset.timestep = kTimestep;
    dataset.agents.resize(static_cast<size_t>(n_agents));
    for (int i = 0; i < n_agents; ++i) {
        dataset.agents[i].agent = "a" + std::to_string(i + 1);
        dataset.agents[i].samples.reserve(static_cast<size_t>(length));
    }
    return dataset;
}

TrajectoryDataset gen_laned(int n_agents, int length, uint64_t seed) {
    std::mt19937_64 rng(seed);
    TrajectoryDataset dataset = make_dataset(n_agents, length);

    std::vector<AgentState> agents(static_cast<size_t>(n_agents));
    for (int i = 0; i < n_agents; ++i) {
        AgentState& a = agents[i];
        a.x = uniform(rng, 0.0, kCorridorLength);
        a.y = uniform(rng, 0.0, kCorridorWidth);
        a.noise = uniform(rng, -std::numbers::pi, std::numbers::pi);
        a.direction = i < (n_agents + 1) / 2 ? 0.0 : std::numbers::pi;
        a.lane_y = kCorridorWidth * (i + 0.5) / n_agents;
        a.heading = normalize_angle(a.direction + a.noise);
    }

    for (int step = 0; step < length; ++step) {
        const double fade =
            std::max(0.0, 1.0 - static_cast<double>(step) / kSettleSteps);
        for (int i = 0; i < n_agents; ++i) {
            AgentState& a = agents[i];
            dataset.agents[i].samples.push_back(make_pose(a.x, a.y, a.heading));
            // wandering heading noise that fades out as the fleet settles
            a.noise = std::clamp(a.noise + uniform(rng, -0.5, 0.5), -std::numbers::pi,
                                 std::numbers::pi);
            a.heading = normalize_angle(a.direction + fade * a.noise);
            a.x = wrap_x(a.x + kSpeed * kTimestep * std::cos(a.heading));
            a.y += kSpeed * kTimestep * std::sin(a.heading);
            a.y += (1.0 - fade) * kLanePull * (a.lane_y - a.y);
            a.y = std::clamp(a.y, 0.0, kCorridorWidth);
        }
    }
    return dataset;
}

TrajectoryDataset gen_jittery(int n_agents, int length, uint64_t seed) {
    std::mt19937_64 rng(seed);
    TrajectoryDataset dataset = make_dataset(n_agents, length);

    std::vector<AgentState> agents(static_cast<size_t>(n_agents));
    for (AgentState& a : agents) {
        a.x = uniform(rng, 0.0, kCorridorLength);
        a.y = uniform(rng, 0.0, kCorridorWidth);
        a.heading = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    }

    for (int step = 0; step < length; ++step) {
        for (int i = 0; i < n_agents; ++i) {
            AgentState& a = agents[i];
            dataset.agents[i].samples.push_back(make_pose(a.x, a.y, a.heading));
            a.heading = normalize_angle(a.heading + uniform(rng, -kTurnStep, kTurnStep));
            a.x = wrap_x(a.x + kSpeed * kTimestep * std::cos(a.heading));
            double y_next = a.y + kSpeed * kTimestep * std::sin(a.heading);
            if (y_next < 0.0 || y_next > kCorridorWidth) {
                a.heading = normalize_angle(-a.heading); // bounce off the wall
                y_next = std::clamp(y_next < 0.0 ? -y_next : 2.0 * kCorridorWidth - y_next, 0.0,
                                    kCorridorWidth);
            }
            a.y = y_next;
        }
    }
    return dataset;
}

} // namespace

TrajectoryDataset gen_synthetic(FleetKind kind, int n_agents, int length, uint64_t seed) {
    if (n_agents < 1) fail("SizeMismatch", "need at least one agent");
    if (length < 1) fail("SizeMismatch", "need at least one sample per trajectory");
    return kind == FleetKind::laned ? gen_laned(n_agents, length, seed)
                                    : gen_jittery(n_agents, length, seed);
}

} // namespace indmatch
