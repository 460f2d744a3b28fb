"""Kratzer-form pionic shell model of light nuclei.

A nucleon in the pionic well of depth G and dimensionless charge Ga has
binding (MeV)

    eps_pion = m_ef * [1 - sqrt(1 - (G*Ga)**2 / (m_ef*n_ef)**2)]
    m_ef     = sqrt(M**2 + G**2),   M = 938 MeV
    n_ef     = D + N + 1 + K
    D        = -1/2 + sqrt((l+1/2)**2 + 2*Ga**2 [+ s])

K is the electrostatic correction (protons only), s the optional
spin-orbit shift.  The vacuum gluonic field subtracts a constant
2*d*(A-1)/A per nucleon, which cancels in every transition energy.

Charges:
    mirror (2Z = A):    Ga = k * (A-1)/A * (A-1)**(2/3)
    p != n:             Ga = k * (A-1)/(2*sqrt(p*n)) * (A-1)**(2/3) * S**(2/3)
                        S  = 1 - k1*|n-p|/sqrt(p)   (chain interrupted at S <= 0)

Spin-orbit variant: both j = l+1/2 branches of the bracket
w(j) = (j+1/2) - sqrt((j+1/2)**2 + Ga**2) are realised inside a pn pair —
the proton takes +w, the neutron -w — so an l = 0 pair still splits while
a level's printed plus/minus rows refer to the pair's own j = l +- 1/2.
"""

from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass, replace
from typing import Mapping, Optional, Sequence

__all__ = [
    "M_NUCLEON",
    "ChainInterrupted",
    "PionicField",
    "ShellState",
    "SpinOrbitTerm",
    "LevelRow",
    "LevelTable",
    "ShellConfiguration",
    "ConfigurationEnergy",
    "Move",
    "Transition",
    "TransitionMatch",
    "RuleGroup",
    "RuleSet",
    "OpenStates",
    "pionic_charge",
    "spin_orbit_term",
    "nucleon_energy",
    "level_table",
    "configuration_energy",
    "required_subtraction",
    "open_states",
    "enumerate_excitations",
    "match_lines",
    "chain_length",
]

M_NUCLEON = 938.0  # MeV
DEFAULT_COULOMB_C = 0.0035


class ChainInterrupted(ValueError):
    """Raised when the neutron-excess suppression factor S drops to <= 0."""


# --------------------------------------------------------------------------
# Field and states
# --------------------------------------------------------------------------

def pionic_charge(
    Z: int,
    A: int,
    k: float,
    k1: float = 0.0,
    mirror: bool = True,
) -> float:
    """Dimensionless charge Ga of the pionic field.

    The not-mirror path with n = p reduces exactly to the mirror one
    (S = 1 and 2*sqrt(p*n) = A).  A single nucleon carries no field, so
    A = 1 gives zero.
    """
    if A < 1:
        raise ValueError("A must be >= 1")
    if A == 1:
        return 0.0
    if mirror:
        return k * (A - 1) / A * (A - 1) ** (2.0 / 3.0)
    p, n = Z, A - Z
    if p < 1 or n < 1:
        raise ValueError("need at least one proton and one neutron")
    S = 1.0 - k1 * abs(n - p) / math.sqrt(p)
    if S <= 0.0:
        raise ChainInterrupted(f"S = {S:.4f} <= 0 for p={p}, n={n}, k1={k1}")
    return k * (A - 1) / (2.0 * math.sqrt(p * n)) * (A - 1) ** (2.0 / 3.0) * S ** (2.0 / 3.0)


@dataclass(frozen=True)
class PionicField:
    """Per-nuclide strong-field parameters (energies in MeV)."""

    Z: int
    A: int
    G: float
    Ga: float
    d_gluon: float
    coulomb_c: float = DEFAULT_COULOMB_C
    so_enabled: bool = False
    calibration_tag: str = "base"

    def __post_init__(self) -> None:
        if self.A < 2:
            raise ValueError("A must be >= 2")
        if self.G <= 0:
            raise ValueError("G must be positive")
        if self.Ga < 0:
            raise ValueError("Ga must be >= 0")
        if 1.0 - self.coulomb_c * (self.Z - 1) * self.Ga < 0:
            raise ValueError("electrostatic correction radicand < 0")

    @property
    def n_neutrons(self) -> int:
        return self.A - self.Z

    @property
    def effective_mass(self) -> float:
        return math.sqrt(M_NUCLEON**2 + self.G**2)

    @property
    def subtraction_per_nucleon(self) -> float:
        """Gluonic vacuum subtraction 2*d*(A-1)/A."""
        return 2.0 * self.d_gluon * (self.A - 1) / self.A

    def coulomb_k(self) -> float:
        """Proton correction K = (1 - sqrt(1 - c*(Z-1)*Ga)) / 2."""
        return 0.5 * (1.0 - math.sqrt(1.0 - self.coulomb_c * (self.Z - 1) * self.Ga))

    @classmethod
    def mirror(
        cls, Z: int, *, G: float, k: float, d_gluon: float,
        so_enabled: bool = False, calibration_tag: str = "base",
    ) -> "PionicField":
        A = 2 * Z
        return cls(Z=Z, A=A, G=G, Ga=pionic_charge(Z, A, k), d_gluon=d_gluon,
                   so_enabled=so_enabled, calibration_tag=calibration_tag)

    @classmethod
    def not_mirror(
        cls, p: int, n: int, *, G: float, k: float, k1: float, d_gluon: float,
        calibration_tag: str = "base",
    ) -> "PionicField":
        ga = pionic_charge(p, p + n, k, k1, mirror=(p == n))
        # Electrostatic energies are ignored on the not-mirror path, so
        # coulomb_c = 0 keeps protons and neutrons identical.
        return cls(Z=p, A=p + n, G=G, Ga=ga, d_gluon=d_gluon, coulomb_c=0.0,
                   so_enabled=False, calibration_tag=calibration_tag)


_STATE_RE = re.compile(r"\s*(\d+)\s*,\s*(\d+)\s*([+-]?)\s*")
_AVERAGE_RE = re.compile(r"\s*(\d+)av\s*")


@dataclass(frozen=True)
class ShellState:
    """Level label (N, l, spin-orbit branch) or a shell average ``<s>av``."""

    N: int = 0
    l: int = 0
    sign: str = "none"  # "plus" | "minus" | "none"
    averaged: Optional[int] = None  # shell index N+l of an averaged row

    def __post_init__(self) -> None:
        if self.averaged is not None:
            return
        if self.N < 0 or self.l < 0:
            raise ValueError("N and l must be non-negative")
        if self.sign not in ("plus", "minus", "none"):
            raise ValueError("sign must be plus, minus or none")
        if self.sign == "minus" and self.l < 1:
            raise ValueError("minus branch requires l >= 1")

    @property
    def shell(self) -> int:
        return self.averaged if self.averaged is not None else self.N + self.l

    @property
    def label(self) -> str:
        if self.averaged is not None:
            return f"{self.averaged}av"
        suffix = {"plus": "+", "minus": "-", "none": ""}[self.sign]
        return f"{self.N},{self.l}{suffix}"

    def two_j(self) -> int:
        """2j of the branch; the 'none' and 'plus' branches share j = l+1/2."""
        if self.averaged is not None:
            raise ValueError("averaged rows carry no single j")
        return 2 * self.l - 1 if self.sign == "minus" else 2 * self.l + 1

    @classmethod
    def parse(cls, text: str) -> "ShellState":
        m = _AVERAGE_RE.fullmatch(text)
        if m:
            return cls(averaged=int(m.group(1)))
        m = _STATE_RE.fullmatch(text)
        if not m:
            raise ValueError(f"unparseable shell state: {text!r}")
        sign = {"+": "plus", "-": "minus", "": "none"}[m.group(3)]
        return cls(N=int(m.group(1)), l=int(m.group(2)), sign=sign)


@dataclass(frozen=True)
class SpinOrbitTerm:
    """Both branch shifts at one j, plus the shifted exponents.

    ``b_plus`` belongs to the l = j-1/2 partner, ``b_minus`` to l = j+1/2;
    at Ga = 0 each reduces to its own l.
    """

    s_plus: float
    s_minus: float
    b_plus: float
    b_minus: float


def _so_bracket(two_j: int, Ga: float) -> float:
    jh = (two_j + 1) / 2.0
    return jh - math.sqrt(jh * jh + Ga * Ga)


def _b_exponent(l: int, Ga: float, s: float) -> float:
    radicand = (l + 0.5) ** 2 + 2.0 * Ga * Ga + s
    if radicand < 0.0:
        raise ValueError("negative radicand in level exponent")
    return -0.5 + math.sqrt(radicand)


def spin_orbit_term(two_j: int, Ga: float) -> SpinOrbitTerm:
    """Spin-orbit shifts s_± = ∓[j+1/2 - sqrt((j+1/2)**2 + Ga**2)] at one j."""
    if two_j < 1 or two_j % 2 == 0:
        raise ValueError("two_j must be a positive odd integer")
    w = _so_bracket(two_j, Ga)
    s_plus, s_minus = -w, +w
    l_plus = (two_j - 1) // 2
    l_minus = (two_j + 1) // 2
    return SpinOrbitTerm(
        s_plus=s_plus,
        s_minus=s_minus,
        b_plus=_b_exponent(l_plus, Ga, s_plus),
        b_minus=_b_exponent(l_minus, Ga, s_minus),
    )


# --------------------------------------------------------------------------
# Single-nucleon energies and level tables
# --------------------------------------------------------------------------

def _pionic_energy(field: PionicField, N: int, l: int, K: float, s: float) -> float:
    m_ef = field.effective_mass
    n_ef = _b_exponent(l, field.Ga, s) + N + 1 + K
    ratio = (field.G * field.Ga) ** 2 / (m_ef * n_ef) ** 2
    if ratio > 1.0:
        raise ValueError("pionic level radicand < 0")
    # 1 - sqrt(1-r) written as r/(1+sqrt(1-r)) to keep small levels exact.
    return m_ef * ratio / (1.0 + math.sqrt(1.0 - ratio))


def _flavor_shift(field: PionicField, state: ShellState, is_proton: bool) -> float:
    if not field.so_enabled:
        return 0.0
    w = _so_bracket(state.two_j(), field.Ga)
    return +w if is_proton else -w


def nucleon_energy(field: PionicField, state: ShellState, is_proton: bool) -> float:
    """Binding energy of one nucleon: pionic term minus gluonic subtraction.

    Zero charge means no pionic well, so the result is just the negative
    subtraction.  Averaged pseudo-states are rejected here; they only
    exist as level-table rows.
    """
    if state.averaged is not None:
        raise ValueError("averaged rows have no single-nucleon energy")
    K = field.coulomb_k() if is_proton else 0.0
    s = _flavor_shift(field, state, is_proton)
    return _pionic_energy(field, state.N, state.l, K, s) - field.subtraction_per_nucleon


def pionic_nucleon_energy(field: PionicField, state: ShellState, is_proton: bool) -> float:
    """Pionic part only (no gluonic subtraction)."""
    if state.averaged is not None:
        raise ValueError("averaged rows have no single-nucleon energy")
    K = field.coulomb_k() if is_proton else 0.0
    s = _flavor_shift(field, state, is_proton)
    return _pionic_energy(field, state.N, state.l, K, s)


@dataclass(frozen=True)
class LevelRow:
    state: ShellState
    eps_proton: float       # pionic, MeV
    eps_neutron: float      # pionic, MeV
    pair_pionic: float      # eps_proton + eps_neutron
    pair_binding: float     # pair_pionic - 2 * subtraction
    members: tuple[str, ...] = ()  # labels feeding an averaged row
    spread: tuple[float, float] = (0.0, 0.0)  # (min-avg, max-avg) of members

    @property
    def per_nucleon_pionic(self) -> float:
        return 0.5 * self.pair_pionic

    @property
    def per_nucleon_binding(self) -> float:
        return 0.5 * self.pair_binding


@dataclass(frozen=True)
class LevelTable:
    field: PionicField
    rows: tuple[LevelRow, ...]

    def row(self, state: ShellState) -> LevelRow:
        for r in self.rows:
            if r.state == state:
                return r
        # A 'none' lookup in a spin-orbit table resolves to the plus row.
        if state.averaged is None and state.sign == "none" and self.field.so_enabled:
            return self.row(replace(state, sign="plus"))
        raise KeyError(f"no such level: {state.label}")

    def labels(self) -> list[str]:
        return [r.state.label for r in self.rows]


def level_table(field: PionicField, max_n: int = 6, max_l: int = 6,
                average_from_shell: Optional[int] = None) -> LevelTable:
    """All (N, l) levels with N <= max_n, l <= max_l, sorted by pair
    energy descending.

    With ``average_from_shell`` set, shells from that index up collapse
    their positive-binding states into one ``<shell>av`` row (arithmetic
    mean over the j = l+1/2 variants), the way the lightest nuclides are
    tabulated; negative-binding states always stay individual rows.
    """
    if not (0 <= max_n <= 12 and 0 <= max_l <= 12):
        raise ValueError("max_n and max_l must be within 0..12")
    rows: list[LevelRow] = []
    for N in range(max_n + 1):
        for l in range(max_l + 1):
            signs = ("plus", "minus") if (field.so_enabled and l >= 1) else \
                    (("plus",) if field.so_enabled else ("none",))
            for sign in signs:
                st = ShellState(N=N, l=l, sign=sign)
                ep = pionic_nucleon_energy(field, st, True)
                en = pionic_nucleon_energy(field, st, False)
                pair = ep + en
                rows.append(LevelRow(
                    state=st, eps_proton=ep, eps_neutron=en, pair_pionic=pair,
                    pair_binding=pair - 2.0 * field.subtraction_per_nucleon,
                ))

    def plus_row(N: int, l: int) -> Optional[LevelRow]:
        want = "plus" if field.so_enabled else "none"
        for r in rows:
            if r.state.averaged is None and r.state.N == N and r.state.l == l \
                    and r.state.sign == want:
                return r
        return None

    if average_from_shell is not None:
        averaged: list[LevelRow] = []
        absorbed: set[ShellState] = set()
        for shell in range(average_from_shell, max_n + max_l + 1):
            members = [plus_row(N, shell - N) for N in range(shell + 1)]
            members = [m for m in members if m is not None and m.pair_binding > 0.0]
            if len(members) < 2:
                continue
            vals = [m.pair_binding for m in members]
            avg = sum(vals) / len(vals)
            pair_pionic = avg + 2.0 * field.subtraction_per_nucleon
            averaged.append(LevelRow(
                state=ShellState(averaged=shell),
                eps_proton=0.5 * pair_pionic, eps_neutron=0.5 * pair_pionic,
                pair_pionic=pair_pionic, pair_binding=avg,
                members=tuple(m.state.label for m in members),
                spread=(min(vals) - avg, max(vals) - avg),
            ))
            for m in members:
                absorbed.add(m.state)
                if m.state.sign == "plus" and m.state.l >= 1:
                    absorbed.add(replace(m.state, sign="minus"))
        rows = [r for r in rows if r.state not in absorbed]
        rows.extend(averaged)
    rows.sort(key=lambda r: -r.pair_binding)
    return LevelTable(field=field, rows=tuple(rows))


# --------------------------------------------------------------------------
# Configurations
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ShellConfiguration:
    """Occupancy of shell states by nucleons for one nuclide.

    ``occupancy`` maps states to total nucleon counts, ``protons`` to the
    proton share of each count.  ``field`` may describe a lighter core
    (halo nuclides); the occupancy still has to account for all A
    nucleons of the nuclide given by ``Z``/``A``.
    """

    Z: int
    A: int
    field: PionicField
    occupancy: Mapping[ShellState, int]
    protons: Mapping[ShellState, int]

    def __post_init__(self) -> None:
        if self.A < 2:
            raise ValueError("A must be >= 2")
        total = sum(self.occupancy.values())
        if total != self.A:
            raise ValueError(f"occupancy sums to {total}, nuclide has A = {self.A}")
        ptotal = sum(self.protons.values())
        if ptotal != self.Z:
            raise ValueError(f"proton assignment sums to {ptotal}, nuclide has Z = {self.Z}")
        for st, cnt in self.occupancy.items():
            if cnt < 0 or self.protons.get(st, 0) < 0:
                raise ValueError("negative occupancy")
            if self.protons.get(st, 0) > cnt:
                raise ValueError(f"more protons than nucleons in {st.label}")
        for st in self.protons:
            if st not in self.occupancy:
                raise ValueError(f"protons assigned to unoccupied state {st.label}")

    @property
    def paired(self) -> bool:
        """True when every state holds equal protons and neutrons (pn pairs)."""
        return all(2 * self.protons.get(st, 0) == cnt
                   for st, cnt in self.occupancy.items())

    @classmethod
    def from_dict(cls, doc: Mapping, *, field: Optional[PionicField] = None,
                  field_factory=None) -> "ShellConfiguration":
        """Build from the JSON document schema (see README)."""
        try:
            z, a = int(doc["z"]), int(doc["a"])
            calibration = doc.get("calibration", "base")
            entries = doc["occupancy"]
            occ: dict[ShellState, int] = {}
            prot: dict[ShellState, int] = {}
            for e in entries:
                st = ShellState(N=int(e["n"]), l=int(e["l"]),
                                sign=e.get("sign", "none"))
                occ[st] = occ.get(st, 0) + int(e["count"])
                prot[st] = prot.get(st, 0) + int(e.get("protons", int(e["count"]) // 2))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"bad configuration document: {exc}") from exc
        if field is None:
            if field_factory is None:
                raise ValueError("need a field or a field factory")
            core = doc.get("field")
            if core is not None:
                field = field_factory(int(core["p"]), int(core["n"]), calibration)
            else:
                field = field_factory(z, a - z, calibration)
        return cls(Z=z, A=a, field=field, occupancy=occ, protons=prot)

    def to_dict(self) -> dict:
        entries = []
        for st, cnt in sorted(self.occupancy.items(), key=lambda kv: kv[0].label):
            entries.append({"n": st.N, "l": st.l, "sign": st.sign,
                            "count": cnt, "protons": self.protons.get(st, 0)})
        doc = {"z": self.Z, "a": self.A,
               "calibration": self.field.calibration_tag, "occupancy": entries}
        if self.field.A != self.A or self.field.Z != self.Z:
            doc["field"] = {"p": self.field.Z, "n": self.field.n_neutrons}
        return doc


@dataclass(frozen=True)
class ConfigurationEnergy:
    pionic_total: float
    binding_with_subtraction: float


def configuration_energy(config: ShellConfiguration) -> ConfigurationEnergy:
    """Total pionic energy and binding after the gluonic subtraction."""
    total = 0.0
    for st, cnt in config.occupancy.items():
        p = config.protons.get(st, 0)
        total += p * pionic_nucleon_energy(config.field, st, True)
        total += (cnt - p) * pionic_nucleon_energy(config.field, st, False)
    binding = total - config.A * config.field.subtraction_per_nucleon
    return ConfigurationEnergy(pionic_total=total, binding_with_subtraction=binding)


def required_subtraction(config: ShellConfiguration, observed_binding: float) -> float:
    """Per-nucleon subtraction implied by an observed binding energy."""
    if observed_binding < 0:
        raise ValueError("observed binding must be >= 0")
    total = configuration_energy(config).pionic_total
    return (total - observed_binding) / config.A


@dataclass(frozen=True)
class OpenStates:
    open: tuple[ShellState, ...]
    resonance: tuple[ShellState, ...]


def open_states(table: LevelTable, subtraction: float) -> OpenStates:
    """Partition levels: open iff per-nucleon pionic energy > subtraction."""
    if subtraction < 0:
        raise ValueError("subtraction must be >= 0")
    op, res = [], []
    for r in table.rows:
        (op if r.per_nucleon_pionic > subtraction else res).append(r.state)
    return OpenStates(open=tuple(op), resonance=tuple(res))


# --------------------------------------------------------------------------
# Excitations
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    source: ShellState
    target: ShellState
    count: int  # nucleons


@dataclass(frozen=True)
class Transition:
    moves: tuple[Move, ...]
    energy: float

    @property
    def label(self) -> str:
        return "+".join(f"{m.count}({m.source.label}-{m.target.label})"
                        for m in self.moves)


@dataclass(frozen=True)
class TransitionMatch:
    transition: Transition
    observed: float
    deviation: float


@dataclass(frozen=True)
class RuleGroup:
    """One family of allowed excitations.

    ``units`` restricts how many pn pairs (or single nucleons, for
    unpaired configurations) move in total; ``whole_nucleus`` moves every
    occupied unit at once, one common destination per source state.
    """

    parity: str = "any"  # parity of the moved unit count
    units: Optional[tuple[int, ...]] = None
    max_moved: Optional[int] = None
    whole_nucleus: bool = False
    allowed_from: Optional[tuple[str, ...]] = None
    allowed_pairs: Optional[tuple[tuple[str, str], ...]] = None
    forbidden_pairs: tuple[tuple[str, str], ...] = ()
    min_target_pair_energy: Optional[float] = None
    targets_must_be_open: bool = False


@dataclass(frozen=True)
class RuleSet:
    """Excitation restrictions, normally loaded from a JSON rules file."""

    parity: str = "any"
    max_moved: Optional[int] = None
    forbidden_pairs: tuple[tuple[str, str], ...] = ()
    flip_suppressed: bool = True
    max_energy_mev: Optional[float] = None
    merge_states: tuple[tuple[str, ...], ...] = ()
    groups: tuple[RuleGroup, ...] = ()
    subtraction: Optional[float] = None  # for open-state targeting
    average_from_shell: Optional[int] = None  # table shape this nuclide uses
    max_resonance_states: Optional[int] = None  # keep only the first few

    @classmethod
    def from_dict(cls, doc: Mapping) -> "RuleSet":
        def pairs(v):
            return tuple((str(a), str(b)) for a, b in (v or ()))
        groups = []
        for g in doc.get("groups", ()):
            groups.append(RuleGroup(
                parity=g.get("parity", doc.get("parity", "any")),
                units=tuple(g["units"]) if "units" in g else None,
                max_moved=g.get("max_moved"),
                whole_nucleus=bool(g.get("whole_nucleus", False)),
                allowed_from=tuple(g["allowed_from"]) if "allowed_from" in g else None,
                allowed_pairs=tuple((a, b) for a, b in g["allowed_pairs"])
                if "allowed_pairs" in g else None,
                forbidden_pairs=pairs(g.get("forbidden_pairs")),
                min_target_pair_energy=g.get("min_target_pair_energy"),
                targets_must_be_open=bool(g.get("targets_must_be_open", False)),
            ))
        if not groups:
            groups.append(RuleGroup(
                parity=doc.get("parity", "any"),
                max_moved=doc.get("max_moved"),
                whole_nucleus=bool(doc.get("whole_nucleus", False)),
                forbidden_pairs=pairs(doc.get("forbidden_pairs")),
                targets_must_be_open=bool(doc.get("targets_must_be_open", False)),
            ))
        return cls(
            parity=doc.get("parity", "any"),
            max_moved=doc.get("max_moved"),
            forbidden_pairs=pairs(doc.get("forbidden_pairs")),
            flip_suppressed=bool(doc.get("flip_suppressed", True)),
            max_energy_mev=doc.get("max_energy_mev"),
            merge_states=tuple(tuple(m) for m in doc.get("merge_states", ())),
            groups=tuple(groups),
            subtraction=doc.get("subtraction"),
            average_from_shell=doc.get("average_from_shell"),
            max_resonance_states=doc.get("max_resonance_states"),
        )

    @classmethod
    def from_json(cls, text: str) -> "RuleSet":
        return cls.from_dict(json.loads(text))


def _parity_ok(count: int, parity: str) -> bool:
    if parity == "even":
        return count % 2 == 0
    if parity == "odd":
        return count % 2 == 1
    return True


def _flip_ok(src: ShellState, dst: ShellState) -> bool:
    if src.averaged is not None or dst.averaged is not None:
        return True
    a = "plus" if src.sign in ("plus", "none") else "minus"
    b = "plus" if dst.sign in ("plus", "none") else "minus"
    return a == b


def _merged_rows(table: LevelTable, rules: RuleSet) -> list[LevelRow]:
    """Extra destinations built by averaging the named member states."""
    out = []
    for labels in rules.merge_states:
        members = [table.row(ShellState.parse(t)) for t in labels]
        pair = sum(m.pair_pionic for m in members) / len(members)
        shell = members[0].state.shell
        out.append(LevelRow(
            state=ShellState(averaged=shell),
            eps_proton=pair / 2, eps_neutron=pair / 2, pair_pionic=pair,
            pair_binding=pair - 2 * table.field.subtraction_per_nucleon,
            members=tuple(labels),
        ))
    return out


def enumerate_excitations(
    config: ShellConfiguration,
    rules: RuleSet,
    table: LevelTable,
    max_energy: Optional[float] = None,
) -> list[Transition]:
    """All transitions permitted by the rules, sorted by energy.

    Move energies are per-nucleon pionic differences times the moved
    count, so the result is exactly independent of the gluonic constant.
    """
    if max_energy is None:
        max_energy = rules.max_energy_mev if rules.max_energy_mev is not None else math.inf

    unit = 2 if config.paired else 1
    sources = [(st, cnt // unit) for st, cnt in config.occupancy.items() if cnt >= unit]
    merged = _merged_rows(table, rules)
    member_states = {ShellState.parse(t) for labels in rules.merge_states for t in labels}
    dest_rows = [r for r in table.rows if r.state not in member_states] + merged
    if rules.max_resonance_states is not None:
        # The tabulated ladders stop after the first few resonance states;
        # plus/minus variants of one (N, l) count as a single state.
        kept, seen = [], []
        for r in sorted(dest_rows, key=lambda r: -r.pair_binding):
            if r.pair_binding > 0.0:
                kept.append(r)
                continue
            key = r.state.label if r.state.averaged is not None else (r.state.N, r.state.l)
            if key not in seen:
                seen.append(key)
            if seen.index(key) < rules.max_resonance_states:
                kept.append(r)
        dest_rows = kept

    def per_nucleon(row: LevelRow) -> float:
        return row.per_nucleon_pionic

    sub = rules.subtraction
    results: dict[tuple, Transition] = {}

    def dest_allowed(g: RuleGroup, src: ShellState, row: LevelRow) -> bool:
        dst = row.state
        if dst == src:
            return False
        if rules.flip_suppressed and not _flip_ok(src, dst):
            return False
        key = (src.label, dst.label)
        if key in rules.forbidden_pairs or key in g.forbidden_pairs:
            return False
        if g.allowed_pairs is not None and key not in g.allowed_pairs:
            return False
        if g.min_target_pair_energy is not None and row.pair_binding < g.min_target_pair_energy:
            return False
        if g.targets_must_be_open and sub is not None and per_nucleon(row) <= sub:
            return False
        return True

    def add(moves: list[Move]) -> None:
        moves = [m for m in moves if m.count > 0]
        if not moves:
            return
        energy = 0.0
        for m in moves:
            src_row = table.row(m.source)
            dst_row = next(r for r in dest_rows if r.state == m.target)
            part = m.count * (per_nucleon(src_row) - per_nucleon(dst_row))
            if part <= 0.0:  # every individual move is an excitation
                return
            energy += part
        if not (0.0 < energy <= max_energy):
            return
        key = tuple(sorted((m.source.label, m.target.label, m.count) for m in moves))
        if key not in results:
            results[key] = Transition(moves=tuple(moves), energy=energy)

    for g in rules.groups:
        g_sources = sources
        if g.allowed_from is not None:
            allowed = {ShellState.parse(t) for t in g.allowed_from}
            g_sources = [(st, n) for st, n in sources if st in allowed]

        if g.whole_nucleus:
            # Every unit moves; units sharing a source share a destination.
            choices = []
            for st, n_units in g_sources:
                opts = [r for r in dest_rows if dest_allowed(g, st, r)]
                choices.append([(st, n_units, r) for r in opts])
            total_units = sum(n for _, n in g_sources)
            if choices and all(choices) and _parity_ok(total_units, g.parity):
                for combo in itertools.product(*choices):
                    add([Move(source=st, target=r.state, count=n * unit)
                         for st, n, r in combo])
            continue

        # General case: distribute moved units over (source, destination).
        cells = []
        for st, n_units in g_sources:
            for r in dest_rows:
                if dest_allowed(g, st, r):
                    cells.append((st, r, n_units))
        cap = g.max_moved if g.max_moved is not None else (
            rules.max_moved if rules.max_moved is not None else
            sum(n for _, n in g_sources))
        allowed_totals = set(g.units) if g.units is not None else None

        def rec(i: int, used: dict, moves: list[Move], total: int) -> None:
            if total > cap:
                return
            if total > 0 and _parity_ok(total, g.parity) and (
                    allowed_totals is None or total in allowed_totals):
                add(list(moves))
            if i >= len(cells):
                return
            st, row, n_units = cells[i]
            avail = n_units - used.get(st, 0)
            rec(i + 1, used, moves, total)
            for take in range(1, avail + 1):
                if total + take > cap:
                    break
                used[st] = used.get(st, 0) + take
                moves.append(Move(source=st, target=row.state, count=take * unit))
                rec(i + 1, used, moves, total + take)
                moves.pop()
                used[st] -= take

        rec(0, {}, [], 0)

    out = sorted(results.values(), key=lambda t: t.energy)
    return out


def match_lines(
    transitions: Sequence[Transition],
    observed: Sequence[float],
    tol: float,
) -> list[TransitionMatch]:
    """Greedy nearest-neighbour pairing, each observed line used once."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    candidates = []
    for i, t in enumerate(transitions):
        for j, obs in enumerate(observed):
            dev = t.energy - obs
            if abs(dev) <= tol:
                candidates.append((abs(dev), i, j, t, obs, dev))
    candidates.sort(key=lambda c: (c[0], c[1], c[2]))
    used_t: set[int] = set()
    used_o: set[int] = set()
    matches = []
    for _, i, j, t, obs, dev in candidates:
        if i in used_t or j in used_o:
            continue
        used_t.add(i)
        used_o.add(j)
        matches.append(TransitionMatch(transition=t, observed=obs, deviation=dev))
    matches.sort(key=lambda m: m.transition.energy)
    return matches


def chain_length(p: int, k1: float) -> Optional[int]:
    """Largest mass number with S > 0, or None when k1 = 0 (no limit)."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if k1 < 0:
        raise ValueError("k1 must be >= 0")
    if k1 == 0.0:
        return None
    n = p
    while 1.0 - k1 * (n + 1 - p) / math.sqrt(p) > 0.0:
        n += 1
    return p + n
