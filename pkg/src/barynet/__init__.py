"""Barycentric neural networks and persistence-based losses for 1-D function fitting."""
from .bnn import (
    BaseConfiguration,
    CplfSegment,
    GlobalBNN,
    LocalBNN,
    activations,
    approximation_error,
    eval_global,
    eval_local,
    evaluate,
    from_base_config,
    to_segments,
)
from .data import ParseError, bundled_series, gen_sine, load_csv
from .geometry import (
    BarycentricCoordinates,
    Interval,
    Simplex,
    SingularSimplex,
    barycentric_coords,
    interval_coords,
)
from .losses import (
    LossKind,
    LossReport,
    SampleOutOfDomain,
    classical_loss,
    loss_gradient,
    predict_cloud,
    topo_loss,
)
from .persistence import (
    Barcode,
    DegenerateBarcode,
    EmptyInput,
    FunctionConsistencyViolation,
    PersistenceBar,
    PointCloudFunction,
    filter_top_k,
    lower_star_barcode,
    lwpe,
    persistent_entropy,
)
from .training import TrainConfig, TrainTrace, init_base_points, sgd_step, train

__version__ = "0.1.0"
