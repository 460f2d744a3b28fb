"""Desk-scale numerical engine for nonlinear-field closed-form models:
hydrogenic spectra in the nonlinear Coulomb field, the Kratzer-form
pionic shell model of light nuclei, coherent/confinement root systems,
coherence-condition checks, and the exact wave/fluid profiles."""

__version__ = "0.1.0"

from .atomic import (
    AtomicModelParams,
    QuantumState,
    LiModelParams,
    binding_energy,
    transition_energy,
    li_level,
)
from .nuclei import (
    PionicField,
    ShellState,
    ShellConfiguration,
    level_table,
    configuration_energy,
    required_subtraction,
    open_states,
    enumerate_excitations,
    match_lines,
    chain_length,
)
from .refdata import builtin_reference, load_reference, compare_tables

__all__ = [
    "__version__",
    "AtomicModelParams", "QuantumState", "LiModelParams",
    "binding_energy", "transition_energy", "li_level",
    "PionicField", "ShellState", "ShellConfiguration",
    "level_table", "configuration_energy", "required_subtraction",
    "open_states", "enumerate_excitations", "match_lines", "chain_length",
    "builtin_reference", "load_reference", "compare_tables",
]
