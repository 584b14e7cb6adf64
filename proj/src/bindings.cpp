#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "indmatch/blockfn.hpp"
#include "indmatch/dtw.hpp"
#include "indmatch/io.hpp"
#include "indmatch/matching.hpp"
#include "indmatch/persistence.hpp"
#include "indmatch/pipeline.hpp"
#include "indmatch/types.hpp"

namespace py = pybind11;
using namespace indmatch;

namespace {

std::vector<std::vector<double>> matrix_rows(const DissimilaritySpace& space) {
    std::vector<std::vector<double>> rows(static_cast<size_t>(space.n));
    for (int i = 0; i < space.n; ++i) {
        rows[i].reserve(static_cast<size_t>(space.n));
        for (int j = 0; j < space.n; ++j) rows[i].push_back(space.at(i, j));
    }
    return rows;
}

std::vector<std::vector<bool>> basis_rows(const std::vector<BitVector>& basis, int ambient) {
    std::vector<std::vector<bool>> rows;
    rows.reserve(basis.size());
    for (const BitVector& v : basis) {
        std::vector<bool> row(static_cast<size_t>(ambient));
        for (int k = 0; k < ambient; ++k) row[k] = v.test(k);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<BitVector> bits_from_rows(const std::vector<std::vector<bool>>& rows) {
    std::vector<BitVector> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        BitVector v(static_cast<int>(row.size()));
        for (size_t k = 0; k < row.size(); ++k)
            if (row[k]) v.set(static_cast<int>(k));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "0-dimensional persistent homology of dissimilarity spaces, induced block "
              "functions and matching distances, DTW, and the induced matching signal";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<DissimilaritySpace>(m, "DissimilaritySpace")
        .def_readonly("n", &DissimilaritySpace::n)
        .def_readonly("labels", &DissimilaritySpace::labels)
        .def("matrix", &matrix_rows)
        .def("at", [](const DissimilaritySpace& s, int i, int j) {
            if (i < 0 || j < 0 || i >= s.n || j >= s.n)
                throw py::index_error("matrix index out of range");
            return s.at(i, j);
        })
        .def("__repr__", [](const DissimilaritySpace& s) {
            return "DissimilaritySpace(n=" + std::to_string(s.n) + ")";
        });

    py::class_<Triplet>(m, "Triplet")
        .def_readonly("j", &Triplet::j)
        .def_readonly("death", &Triplet::death)
        .def_readonly("elder", &Triplet::elder)
        .def("__repr__", [](const Triplet& t) {
            return "Triplet(j=" + std::to_string(t.j) + ", death=" + format_double(t.death) +
                   ", elder=" + std::to_string(t.elder) + ")";
        });

    py::class_<TripletMergeTree>(m, "TripletMergeTree")
        .def_readonly("n", &TripletMergeTree::n)
        .def_readonly("triplets", &TripletMergeTree::triplets)
        .def("to_json", &tmt_to_json);

    py::class_<Bar>(m, "Bar")
        .def_readonly("death", &Bar::death)
        .def_readonly("multiplicity", &Bar::multiplicity)
        .def("__repr__", [](const Bar& b) {
            return "Bar(death=" + format_double(b.death) +
                   ", multiplicity=" + std::to_string(b.multiplicity) + ")";
        });

    py::class_<Barcode>(m, "Barcode")
        .def_readonly("n", &Barcode::n)
        .def_readonly("bars", &Barcode::bars)
        .def("expand", &Barcode::expand)
        .def("to_json", &barcode_to_json)
        .def("__eq__", [](const Barcode& a, const Barcode& b) { return a == b; });

    py::class_<PointBijection>(m, "PointBijection")
        .def(py::init([](std::vector<int> targets) {
            return validate_bijection(std::move(targets));
        }))
        .def_readonly("target", &PointBijection::target);

    py::class_<Pose>(m, "Pose")
        .def(py::init(&make_pose), py::arg("x"), py::arg("y"), py::arg("alpha"))
        .def_readonly("x", &Pose::x)
        .def_readonly("y", &Pose::y)
        .def_readonly("alpha", &Pose::alpha)
        .def("__repr__", [](const Pose& p) {
            return "Pose(" + format_double(p.x) + ", " + format_double(p.y) + ", " +
                   format_double(p.alpha) + ")";
        });

    py::class_<Trajectory>(m, "Trajectory")
        .def(py::init<std::string, std::vector<Pose>>(), py::arg("agent"), py::arg("samples"))
        .def_readonly("agent", &Trajectory::agent)
        .def_readonly("samples", &Trajectory::samples);

    py::class_<TrajectoryDataset>(m, "TrajectoryDataset")
        .def(py::init<std::vector<Trajectory>, double>(), py::arg("agents"),
             py::arg("timestep") = 0.1)
        .def_readonly("agents", &TrajectoryDataset::agents)
        .def_readonly("timestep", &TrajectoryDataset::timestep)
        .def("__eq__",
             [](const TrajectoryDataset& a, const TrajectoryDataset& b) { return a == b; });

    py::class_<BlockEntry>(m, "BlockEntry")
        .def_readonly("a", &BlockEntry::a)
        .def_readonly("b", &BlockEntry::b)
        .def_readonly("count", &BlockEntry::count)
        .def("__repr__", [](const BlockEntry& e) {
            return "BlockEntry(a=" + format_double(e.a) + ", b=" + format_double(e.b) +
                   ", count=" + std::to_string(e.count) + ")";
        });

    py::class_<BlockFunction>(m, "BlockFunction")
        .def_readonly("entries", &BlockFunction::entries)
        .def("value_at", &BlockFunction::value_at, py::arg("a"), py::arg("b"))
        .def("to_json", &block_to_json);

    py::class_<RepBar>(m, "RepBar")
        .def_readonly("value", &RepBar::value)
        .def_readonly("copy", &RepBar::copy);

    py::class_<MatchPair>(m, "MatchPair")
        .def_readonly("from_", &MatchPair::from)
        .def_readonly("to", &MatchPair::to);

    py::class_<InducedMatching>(m, "InducedMatching")
        .def_readonly("pairs", &InducedMatching::pairs);

    py::class_<WindowConfig>(m, "WindowConfig")
        .def(py::init([](int sample_count, int intra_stride, int compare_lag, int q,
                         double angle_weight) {
                 return WindowConfig{sample_count, intra_stride, compare_lag, q, angle_weight};
             }),
             py::arg("sample_count") = 6, py::arg("intra_stride") = 10,
             py::arg("compare_lag") = 50, py::arg("q") = 1, py::arg("angle_weight") = 1.0)
        .def_readonly("sample_count", &WindowConfig::sample_count)
        .def_readonly("intra_stride", &WindowConfig::intra_stride)
        .def_readonly("compare_lag", &WindowConfig::compare_lag)
        .def_readonly("q", &WindowConfig::q)
        .def_readonly("angle_weight", &WindowConfig::angle_weight)
        .def("valid_frames", &WindowConfig::valid_frames)
        .def("signal_length", &WindowConfig::signal_length);

    py::class_<SignalPoint>(m, "SignalPoint")
        .def_readonly("t", &SignalPoint::t)
        .def_readonly("distance", &SignalPoint::distance);

    py::class_<SignalSeries>(m, "SignalSeries")
        .def_readonly("values", &SignalSeries::values)
        .def("__len__", [](const SignalSeries& s) { return s.values.size(); });

    py::class_<SummaryPoint>(m, "SummaryPoint")
        .def_readonly("t", &SummaryPoint::t)
        .def_readonly("median", &SummaryPoint::median)
        .def_readonly("p25", &SummaryPoint::p25)
        .def_readonly("p75", &SummaryPoint::p75);

    m.def("validate_dissimilarity",
          py::overload_cast<const std::vector<std::vector<double>>&, std::vector<std::string>>(
              &validate_dissimilarity),
          py::arg("matrix"), py::arg("labels") = std::vector<std::string>{});
    m.def("identity_bijection", &identity_bijection, py::arg("n"));
    m.def("normalize_angle", &normalize_angle, py::arg("alpha"));

    m.def("vr_zero_pers", &vr_zero_pers, py::arg("space"),
          "Triplet merge tree and barcode of the Vietoris-Rips 1-skeleton");
    m.def(
        "kernel_basis",
        [](const TripletMergeTree& tmt, double a, const std::string& side) {
            if (side != "minus" && side != "plus")
                throw py::value_error("side must be 'minus' or 'plus'");
            return basis_rows(
                kernel_basis(tmt, a, side == "minus" ? KernelSide::minus : KernelSide::plus),
                tmt.n);
        },
        py::arg("tmt"), py::arg("a"), py::arg("side"));

    m.def(
        "gf2_span_dim",
        [](const std::vector<std::vector<bool>>& rows) { return gf2_span_dim(bits_from_rows(rows)); },
        py::arg("vectors"));

    m.def("induced_block_function", &induced_block_function, py::arg("tmt_x"), py::arg("tmt_z"),
          py::arg("f"));
    m.def("delta_shift", &delta_shift, py::arg("space"), py::arg("delta"));
    m.def("min_nonexpansive_delta", &min_nonexpansive_delta, py::arg("x"), py::arg("z"),
          py::arg("f"));

    m.def("induced_matching", &induced_matching, py::arg("block"), py::arg("bx"), py::arg("bz"));
    m.def("induced_matching_distance", &induced_matching_distance, py::arg("block"), py::arg("q"));
    m.def("sorted_wasserstein", &sorted_wasserstein, py::arg("bx"), py::arg("bz"), py::arg("q"));

    m.def("pose_ground_distance", &pose_ground_distance, py::arg("p"), py::arg("q"),
          py::arg("angle_weight") = 1.0);
    m.def(
        "dtw_distance",
        [](const std::vector<Pose>& s, const std::vector<Pose>& t, double angle_weight) {
            return dtw_distance(std::span<const Pose>(s), std::span<const Pose>(t), angle_weight);
        },
        py::arg("s"), py::arg("t"), py::arg("angle_weight") = 1.0);
    m.def(
        "dtw_distance_scalar",
        [](const std::vector<double>& s, const std::vector<double>& t) {
            return dtw_distance(std::span<const double>(s), std::span<const double>(t));
        },
        py::arg("s"), py::arg("t"));
    m.def("dtw_distance_vectors",
          py::overload_cast<const std::vector<std::vector<double>>&,
                            const std::vector<std::vector<double>>&>(&dtw_distance),
          py::arg("s"), py::arg("t"));

    m.def("frame_space", &frame_space, py::arg("trajectories"), py::arg("cfg"), py::arg("t"));
    m.def("matching_signal", &matching_signal, py::arg("trajectories"), py::arg("cfg"));
    m.def("summarize_signals", &summarize_signals, py::arg("signals"));

    m.def(
        "gen_synthetic",
        [](const std::string& kind, int n_agents, int length, uint64_t seed) {
            return gen_synthetic(fleet_kind_from_string(kind), n_agents, length, seed);
        },
        py::arg("kind"), py::arg("n_agents"), py::arg("length"), py::arg("seed"));
    m.def("load_trajectories_csv", &load_trajectories_csv_file, py::arg("path"));
    m.def(
        "save_trajectories_csv",
        [](const TrajectoryDataset& dataset, const std::string& path) {
            std::ofstream out(path);
            if (!out) fail("IoError", "cannot write '" + path + "'");
            save_trajectories_csv(dataset, out);
        },
        py::arg("dataset"), py::arg("path"));
    m.def("load_matrix_file", &load_matrix_file, py::arg("path"));
    m.def("barcode_from_json", &barcode_from_json, py::arg("text"));
}
