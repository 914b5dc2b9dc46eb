"""Bit-cell electrical models for crossbar memory technologies.

A cell's zero-bias conductance is set by its (input bit, weight level) pair
relative to the ON conductance g_on (input=1, weight=1).  Under sense-line
IR drop the cell current degrades through source degeneration of the access
transistor; the strength of that effect is what separates transistor-dominated
cells (8T SRAM read port, FeFET) from 1T-1R cells (ReRAM, SOT-MRAM), where the
memory resistor dominates and shields the transistor.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

import numpy as np

__all__ = [
    "CellTopology",
    "InputMode",
    "Degeneration",
    "TechnologyProfile",
    "CellState",
    "builtin_profiles",
    "get_profile",
    "ideal_profile",
    "cell_conductance",
    "cell_current",
]

# Default absolute scale: the ratios in the technology table are the only
# paper-backed numbers; R_ON = 20 kOhm keeps column currents in the uA range.
DEFAULT_G_ON = 50e-6
# Linearized source-degeneration defaults shared by the builtin profiles.
DEFAULT_V_SAT = 0.3
ALPHA_TRANSISTOR = 0.9
ALPHA_1T1R = 0.1
# Floor on the access-conductance factor; keeps every cell finite-resistive.
DEGENERATION_FLOOR = 1e-3


class CellTopology(enum.Enum):
    TRANSISTOR_DOMINATED = "transistor_dominated"
    ONE_T_ONE_R = "1t1r"


class InputMode(enum.Enum):
    G_INPUT = "g_input"  # input gates the cell conductance; drive rail stays at v_read
    D_INPUT = "d_input"  # input drives the cell terminal; In=0 ties it to 0 V


@dataclass(frozen=True)
class Degeneration:
    """Linearized series split of the cell resistance.

    A fraction ``alpha`` of the total cell resistance sits in the access
    transistor, whose conductance shrinks linearly with the source-node rise
    up to ``v_sat`` (floored so the cell never becomes an open circuit).
    """

    v_sat: float = DEFAULT_V_SAT
    alpha: float = ALPHA_TRANSISTOR
    floor: float = DEGENERATION_FLOOR

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.v_sat <= 0:
            raise ValueError("v_sat must be positive")
        if not 0.0 < self.floor <= 1.0:
            raise ValueError("floor must be in (0, 1]")

    def factor(self, v_source):
        """Access-conductance multiplier at a given source-node rise."""
        return np.maximum(self.floor, 1.0 - np.asarray(v_source, dtype=float) / self.v_sat)


@dataclass(frozen=True)
class TechnologyProfile:
    """Electrical parameters of one memory technology's bit-cell."""

    name: str
    g_on: float = DEFAULT_G_ON        # siemens at In=1, W=1
    ratio_hrs: float = 1e2            # R_HRS / R_ON  (In=1, W=0)
    ratio_off: float = 1e3            # R_OFF / R_ON  (In=0, any W)
    cell_height_gp: float = 1.0       # layout height in gate pitches
    topology: CellTopology = CellTopology.TRANSISTOR_DOMINATED
    degeneration: Degeneration = field(default_factory=Degeneration)
    max_levels: int = 2               # distinguishable weight levels per device
    input_mode: InputMode = InputMode.G_INPUT

    def __post_init__(self):
        if self.g_on <= 0:
            raise ValueError("g_on must be positive")
        if self.ratio_hrs <= 1 or self.ratio_off <= 1:
            raise ValueError("resistance ratios must exceed 1")
        if self.cell_height_gp <= 0:
            raise ValueError("cell_height_gp must be positive")
        if self.max_levels < 2:
            raise ValueError("max_levels must be at least 2")

    @property
    def g_hrs(self) -> float:
        return self.g_on / self.ratio_hrs

    @property
    def g_off(self) -> float:
        return self.g_on / self.ratio_off


@dataclass(frozen=True)
class CellState:
    """One cell's operating point: input bit and stored weight level."""

    input_bit: int
    weight_level: int
    bit_slice: int = 1

    def __post_init__(self):
        if self.input_bit not in (0, 1):
            raise ValueError("input_bit must be 0 or 1")
        if self.bit_slice not in (1, 2):
            raise ValueError("bit_slice must be 1 or 2")
        if not 0 <= self.weight_level < 2 ** self.bit_slice:
            raise ValueError(
                f"weight_level {self.weight_level} out of range for bit_slice {self.bit_slice}"
            )


def builtin_profiles() -> list[TechnologyProfile]:
    """The four technologies with their published resistance ratios and cell heights."""
    return [
        TechnologyProfile(
            name="sram8t",
            ratio_hrs=3.5e6,
            ratio_off=2.5e6,
            cell_height_gp=2,
            topology=CellTopology.TRANSISTOR_DOMINATED,
            degeneration=Degeneration(alpha=ALPHA_TRANSISTOR),
            max_levels=2,
        ),
        TechnologyProfile(
            name="fefet",
            ratio_hrs=66,
            ratio_off=3.8e2,
            cell_height_gp=1,
            topology=CellTopology.TRANSISTOR_DOMINATED,
            degeneration=Degeneration(alpha=ALPHA_TRANSISTOR),
            max_levels=4,
        ),
        TechnologyProfile(
            name="reram",
            ratio_hrs=38.3,
            ratio_off=3.5e3,
            cell_height_gp=1.5,
            topology=CellTopology.ONE_T_ONE_R,
            degeneration=Degeneration(alpha=ALPHA_1T1R),
            max_levels=4,
        ),
        TechnologyProfile(
            name="sot_mram",
            ratio_hrs=5,
            ratio_off=1.0e4,
            cell_height_gp=2,
            topology=CellTopology.ONE_T_ONE_R,
            degeneration=Degeneration(alpha=ALPHA_1T1R),
            max_levels=2,
        ),
    ]


def get_profile(name: str) -> TechnologyProfile:
    for profile in builtin_profiles():
        if profile.name == name:
            return profile
    known = ", ".join(p.name for p in builtin_profiles())
    raise KeyError(f"unknown technology {name!r} (known: {known})")


def ideal_profile(max_levels: int = 4, g_on: float = DEFAULT_G_ON) -> TechnologyProfile:
    """Non-ideality-free cell: no degeneration and vanishing OFF/HRS leakage.

    Ratios stay finite (1e12) so every conductance remains positive, but the
    leakage is far below one ADC step at any supported array size.
    """
    return TechnologyProfile(
        name="custom",
        g_on=g_on,
        ratio_hrs=1e12,
        ratio_off=1e12,
        cell_height_gp=1,
        topology=CellTopology.ONE_T_ONE_R,
        degeneration=Degeneration(alpha=0.0),
        max_levels=max_levels,
    )


def cell_conductance(profile: TechnologyProfile, state: CellState) -> float:
    """Zero-bias cell conductance for one (input, weight) pair.

    In=0 reads the OFF resistance regardless of weight; In=1 reads HRS for
    weight 0, and multi-level cells scale linearly with the stored level
    (weight k conducts k times the weight-1 cell).
    """
    if state.weight_level >= profile.max_levels:
        raise ValueError(
            f"weight_level {state.weight_level} needs >= {state.weight_level + 1} levels; "
            f"profile {profile.name!r} stores {profile.max_levels}"
        )
    if 2 ** state.bit_slice > profile.max_levels:
        raise ValueError(
            f"bit_slice {state.bit_slice} not supported by profile {profile.name!r}"
        )
    if state.input_bit == 0:
        return profile.g_off
    if state.weight_level == 0:
        return profile.g_hrs
    return state.weight_level * profile.g_on


def degenerate_conductance(g_zero, v_source, degeneration: Degeneration):
    """Series-split conductance at a given source-node rise.

    The fixed device part (fraction 1-alpha of the zero-bias resistance) is in
    series with the access part (fraction alpha) scaled by the degeneration
    factor.  Vectorized over numpy inputs.
    """
    alpha = degeneration.alpha
    if alpha == 0.0:
        return np.broadcast_arrays(np.asarray(g_zero, dtype=float), np.asarray(v_source))[0].copy()
    f = degeneration.factor(v_source)
    return np.asarray(g_zero, dtype=float) / ((1.0 - alpha) + alpha / f)


def cell_current(
    profile: TechnologyProfile,
    state: CellState,
    v_drive: float,
    v_source: float,
) -> float:
    """Cell current at the given terminal voltages, degeneration included.

    At v_source = 0 this is exactly cell_conductance * (v_drive - v_source).
    Inputs outside 0 <= v_source <= v_drive are clamped into range.
    """
    v_drive = max(0.0, float(v_drive))
    v_source = min(max(0.0, float(v_source)), v_drive)
    g0 = cell_conductance(profile, state)
    g = degenerate_conductance(g0, v_source, profile.degeneration)
    return float(g) * (v_drive - v_source)
