#include "indmatch/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace indmatch {

using nlohmann::json;

std::string format_double(double value) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, end);
}

namespace {

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot open '" + path + "'");
    return in;
}

double parse_double(const std::string& token, const std::string& context) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        fail("ParseError", context + ": bad number '" + token + "'");
    return value;
}

long parse_int(const std::string& token, const std::string& context) {
    long value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        fail("ParseError", context + ": bad integer '" + token + "'");
    return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

// strips a trailing '\r' so CRLF files load the same as LF files
bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

} // namespace

DissimilaritySpace load_matrix_text(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 1) fail("ParseError", "matrix file: expected a positive point count");
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    std::string token;
    for (long k = 0; k < static_cast<long>(n) * n; ++k) {
        if (!(in >> token)) fail("ParseError", "matrix file: expected " + std::to_string(n) + "x" +
                                                   std::to_string(n) + " entries");
        flat.push_back(parse_double(token, "matrix file"));
    }
    if (in >> token) fail("ParseError", "matrix file: trailing data '" + token + "'");
    return validate_dissimilarity(n, std::move(flat));
}

DissimilaritySpace load_matrix_file(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    return load_matrix_text(in);
}

TrajectoryDataset load_trajectories_csv(std::istream& in) {
    std::string line;
    if (!next_line(in, line) || line != "t,agent,x,y,alpha")
        fail("ParseError", "trajectory CSV: expected header 't,agent,x,y,alpha'");

    std::vector<std::string> order;                       // agents by first appearance
    std::map<std::string, std::map<long, Pose>> samples; // agent -> t -> pose
    size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        const std::string where = "trajectory CSV line " + std::to_string(line_no);
        if (fields.size() != 5) fail("ParseError", where + ": expected 5 fields");
        const long t = parse_int(fields[0], where);
        if (t < 1) fail("ParseError", where + ": time index must be >= 1");
        const std::string& agent = fields[1];
        if (agent.empty()) fail("ParseError", where + ": empty agent identifier");
        const Pose pose = make_pose(parse_double(fields[2], where), parse_double(fields[3], where),
                                    parse_double(fields[4], where));
        auto [it, fresh] = samples.try_emplace(agent);
        if (fresh) order.push_back(agent);
        if (!it->second.emplace(t, pose).second)
            fail("DuplicateSample", "agent '" + agent + "' repeats t=" + std::to_string(t));
    }
    if (order.empty()) fail("ParseError", "trajectory CSV: no samples");

    long max_t = 0;
    for (const auto& [agent, rows] : samples) max_t = std::max(max_t, rows.rbegin()->first);
    for (const std::string& agent : order)
        if (samples[agent].rbegin()->first != max_t)
            fail("UnequalLengths", "agent '" + agent + "' ends at t=" +
                                       std::to_string(samples[agent].rbegin()->first) +
                                       " while the dataset ends at t=" + std::to_string(max_t));

    TrajectoryDataset dataset;
    dataset.agents.reserve(order.size());
    for (const std::string& agent : order) {
        Trajectory traj{agent, {}};
        traj.samples.reserve(static_cast<size_t>(max_t));
        const auto& rows = samples[agent];
        for (long t = 1; t <= max_t; ++t) {
            auto it = rows.find(t);
            if (it == rows.end())
                fail("MissingSample", "agent '" + agent + "' lacks t=" + std::to_string(t));
            traj.samples.push_back(it->second);
        }
        dataset.agents.push_back(std::move(traj));
    }
    return dataset;
}

TrajectoryDataset load_trajectories_csv_file(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    return load_trajectories_csv(in);
}

void save_trajectories_csv(const TrajectoryDataset& dataset, std::ostream& out) {
    out << "t,agent,x,y,alpha\n";
    const size_t length = dataset.agents.empty() ? 0 : dataset.agents.front().samples.size();
    for (size_t t = 0; t < length; ++t)
        for (const Trajectory& traj : dataset.agents) {
            const Pose& p = traj.samples[t];
            out << (t + 1) << ',' << traj.agent << ',' << format_double(p.x) << ','
                << format_double(p.y) << ',' << format_double(p.alpha) << '\n';
        }
}

PointBijection load_permutation(std::istream& in) {
    std::vector<int> targets;
    std::string line;
    size_t line_no = 0;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        targets.push_back(static_cast<int>(
            parse_int(line, "permutation file line " + std::to_string(line_no))));
    }
    if (targets.empty()) fail("ParseError", "permutation file: no entries");
    return validate_bijection(std::move(targets));
}

PointBijection load_permutation_file(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    return load_permutation(in);
}

SignalSeries load_signal_csv(std::istream& in) {
    std::string line;
    if (!next_line(in, line) || line != "t,distance")
        fail("ParseError", "signal CSV: expected header 't,distance'");
    SignalSeries signal;
    size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        const std::string where = "signal CSV line " + std::to_string(line_no);
        if (fields.size() != 2) fail("ParseError", where + ": expected 2 fields");
        signal.values.push_back(SignalPoint{static_cast<int>(parse_int(fields[0], where)),
                                            parse_double(fields[1], where)});
    }
    return signal;
}

SignalSeries load_signal_csv_file(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    return load_signal_csv(in);
}

void save_signal_csv(const SignalSeries& signal, std::ostream& out) {
    out << "t,distance\n";
    for (const SignalPoint& point : signal.values)
        out << point.t << ',' << format_double(point.distance) << '\n';
}

void save_summary_csv(const std::vector<SummaryPoint>& summary, std::ostream& out) {
    out << "t,median,p25,p75\n";
    for (const SummaryPoint& point : summary)
        out << point.t << ',' << format_double(point.median) << ',' << format_double(point.p25)
            << ',' << format_double(point.p75) << '\n';
}

std::string barcode_to_json(const Barcode& barcode) {
    json bars = json::array();
    for (const Bar& bar : barcode.bars)
        bars.push_back({{"death", bar.death}, {"multiplicity", bar.multiplicity}});
    return json{{"n", barcode.n}, {"bars", bars}}.dump();
}

Barcode barcode_from_json(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::exception& e) {
        fail("ParseError", std::string("barcode JSON: ") + e.what());
    }
    try {
        Barcode barcode{parsed.at("n").get<int>(), {}};
        for (const json& bar : parsed.at("bars"))
            barcode.bars.push_back(
                Bar{bar.at("death").get<double>(), bar.at("multiplicity").get<int>()});
        double prev = -1.0;
        for (const Bar& bar : barcode.bars) {
            if (bar.death < 0.0 || bar.multiplicity < 1 || bar.death <= prev)
                fail("ParseError", "barcode JSON: bars must have non-negative strictly "
                                   "increasing deaths and positive multiplicities");
            prev = bar.death;
        }
        if (barcode.total_multiplicity() != barcode.n - 1)
            fail("ParseError", "barcode JSON: multiplicities must sum to n-1");
        return barcode;
    } catch (const json::exception& e) {
        fail("ParseError", std::string("barcode JSON: ") + e.what());
    }
}

Barcode load_barcode_json_file(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    std::ostringstream text;
    text << in.rdbuf();
    return barcode_from_json(text.str());
}

std::string tmt_to_json(const TripletMergeTree& tmt) {
    json triplets = json::array();
    for (const Triplet& t : tmt.triplets)
        triplets.push_back({{"j", t.j}, {"death", t.death}, {"elder", t.elder}});
    return json{{"triplets", triplets}}.dump();
}

std::string block_to_json(const BlockFunction& block) {
    json entries = json::array();
    for (const BlockEntry& e : block.entries)
        entries.push_back({{"a", e.a}, {"b", e.b}, {"count", e.count}});
    return json{{"entries", entries}}.dump();
}

std::string matching_to_json(const InducedMatching& matching, double distance, int q) {
    json pairs = json::array();
    for (const MatchPair& pair : matching.pairs)
        pairs.push_back({{"from", {pair.from.value, pair.from.copy}},
                         {"to", {pair.to.value, pair.to.copy}}});
    return json{{"pairs", pairs}, {"distance", distance}, {"q", q}}.dump();
}

FleetKind fleet_kind_from_string(const std::string& name) {
    if (name == "laned") return FleetKind::laned;
    if (name == "jittery") return FleetKind::jittery;
    fail("ParseError", "unknown fleet kind '" + name + "' (expected laned or jittery)");
}

} // namespace indmatch
