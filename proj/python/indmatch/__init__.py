"""0-dimensional persistent homology of dissimilarity spaces, induced block
functions and matching distances, dynamic time warping, and the induced
matching signal for multi-agent trajectories."""

from ._core import (
    Bar,
    Barcode,
    BlockEntry,
    BlockFunction,
    DissimilaritySpace,
    InducedMatching,
    MatchPair,
    PointBijection,
    Pose,
    RepBar,
    SignalPoint,
    SignalSeries,
    SummaryPoint,
    Trajectory,
    TrajectoryDataset,
    Triplet,
    TripletMergeTree,
    WindowConfig,
    barcode_from_json,
    delta_shift,
    dtw_distance,
    dtw_distance_scalar,
    dtw_distance_vectors,
    frame_space,
    gen_synthetic,
    gf2_span_dim,
    identity_bijection,
    induced_block_function,
    induced_matching,
    induced_matching_distance,
    kernel_basis,
    load_matrix_file,
    load_trajectories_csv,
    matching_signal,
    min_nonexpansive_delta,
    normalize_angle,
    pose_ground_distance,
    save_trajectories_csv,
    sorted_wasserstein,
    summarize_signals,
    validate_dissimilarity,
    vr_zero_pers,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
