"""qcdiff: layer-by-layer state-vector simulation with difference
annotations, gate-expansion compilation, and pairwise qubit analytics."""

from .analytics import (
    HalfMatrix,
    PairStats,
    QubitStats,
    bar_length,
    concurrence,
    correlation,
    half_matrix,
    qubit_stats,
)
from .annotations import (
    AmplitudePartition,
    Butterfly,
    DualRotation,
    GridLayout,
    LayerAnnotation,
    Rotation,
    SwapPairs,
    Unsupported,
    affected_set,
    annotate_layer,
    apply_annotation,
    default_layout,
    even_odd_partition,
    layout_position,
    swap_layout_class,
)
from .circuit import (
    Circuit,
    Control,
    GateKind,
    GatePlacement,
    Layer,
    gate,
    gate_matrix,
    single_gate_circuit,
    swap,
)
from .engine import apply_layer, apply_placement, run_circuit
from .expansion import ExpansionMode, ExpansionResult, expand_circuit, expand_gate, verify_expansion
from .report import build_report, report_to_json
from .serialization import CircuitParseError, Violation, parse_circuit, serialize_circuit, validate
from .statevector import (
    DensityMatrix,
    NormDriftError,
    StateVector,
    apply_global_phase,
    apply_single_qubit_gate,
    apply_swap,
    init_basis_state,
    partial_trace_pair,
    partial_trace_single,
    state_from_amplitudes,
)

__version__ = "0.1.0"
