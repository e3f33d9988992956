"""Winding-number gradings of decorated ordered set partitions and Ehrhart h*-vectors."""

from .ehrhart import (
    binomial,
    eulerian,
    hstar_from_counts,
    hstar_simplex,
    hstar_slice,
    lattice_count_slice,
    worpitzky_check,
)
from .partitions import (
    DecoratedOSP,
    FamilySpec,
    Kind,
    WindingData,
    count_admissible,
    enumerate_partitions,
    grading_histogram,
    is_admissible,
    modular_section,
    position_labels,
    trim,
    unwind,
    validate,
    winding_vector,
)
from .verify import SweepRange, VerificationReport, check_bijection_simplex, sweep, verify_instance

__version__ = "0.1.0"
