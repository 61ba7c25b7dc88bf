"""Generalized quantum search simulator with an NMR pulse-sequence path."""

from qgsearch._core import (
    Axis,
    IterationTrace,
    Pulse,
    PulseSequence,
    SearchConfig,
    Spin,
    SpinSystem,
    TraceStep,
    approx_step_size,
    compile_diffusion,
    compile_iteration,
    compile_oracle,
    compile_pseudopure,
    compile_rz_gadget,
    compile_walsh,
    diffusion_general,
    extract_rotation_angle,
    global_phase_fidelity,
    oracle_phase,
    parse_sequence_text,
    pulse_path,
    reference_hardware_error_percent,
    reference_trace,
    relative_error,
    round_decimals,
    search,
    thermal_state,
    walsh_hadamard,
    zero_phase,
)

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "IterationTrace",
    "Pulse",
    "PulseSequence",
    "SearchConfig",
    "Spin",
    "SpinSystem",
    "TraceStep",
    "approx_step_size",
    "compile_diffusion",
    "compile_iteration",
    "compile_oracle",
    "compile_pseudopure",
    "compile_rz_gadget",
    "compile_walsh",
    "diffusion_general",
    "extract_rotation_angle",
    "global_phase_fidelity",
    "oracle_phase",
    "parse_sequence_text",
    "pulse_path",
    "reference_hardware_error_percent",
    "reference_trace",
    "relative_error",
    "round_decimals",
    "search",
    "thermal_state",
    "walsh_hadamard",
    "zero_phase",
]
