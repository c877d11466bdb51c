"""The quadratic Cremona involutions Q1, Qtau, Qtau2 preserving the dual Hesse arrangement.

Each map acts on points, on the four point-triples, on coarse curve data
``[d, m1, mtau, mtau2, minf]``, on fine curve data
``[d, [..], [..], [..]]`` and on the pencil parameter t.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arrangement import DUAL_HESSE, ProjPoint
from .eisenstein import ONE, TAU, TAU2, EisensteinInt, QTau


class CremonaError(ValueError):
    pass


class IndeterminateError(CremonaError):
    """The point is a base point of the map."""


class ContractedError(CremonaError):
    """The strict transform has degree <= 0."""


class NegativeMultiplicityError(CremonaError):
    pass


class MapTag(str, enum.Enum):
    Q1 = "Q1"
    Qtau = "Qtau"
    Qtau2 = "Qtau2"

    def __str__(self) -> str:
        return self.value


# group fixed by the map (its base points) and the pair of groups it swaps
_FIXED = {MapTag.Q1: "1", MapTag.Qtau: "tau", MapTag.Qtau2: "tau2"}
_SWAP = {MapTag.Q1: ("tau", "tau2"), MapTag.Qtau: ("1", "tau2"), MapTag.Qtau2: ("1", "tau")}
# where point k of one swapped group lands in the other (frozen point order);
# the same permutation serves both directions since the maps are involutions
_SWAP_PERM = {MapTag.Q1: (1, 0, 2), MapTag.Qtau: (0, 1, 2), MapTag.Qtau2: (1, 0, 2)}
# scalar s in the components (s*y^2 - xz, s*x^2 - yz, z^2 - s^2*xy)
_SCALAR = {MapTag.Q1: ONE, MapTag.Qtau: TAU, MapTag.Qtau2: TAU2}

Monomials = dict[tuple[int, int, int], EisensteinInt]


@dataclass(frozen=True)
class CremonaMap:
    tag: MapTag

    @property
    def scalar(self) -> EisensteinInt:
        return _SCALAR[self.tag]

    @property
    def fixed_group(self) -> str:
        return _FIXED[self.tag]

    @property
    def swapped_groups(self) -> tuple[str, str]:
        return _SWAP[self.tag]

    @property
    def swap_permutation(self) -> tuple[int, int, int]:
        return _SWAP_PERM[self.tag]

    @property
    def base_points(self) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
        return DUAL_HESSE.groups[self.fixed_group]

    @property
    def components(self) -> tuple[Monomials, Monomials, Monomials]:
        s = self.scalar
        return (
            {(0, 2, 0): s, (1, 0, 1): -ONE},
            {(2, 0, 0): s, (0, 1, 1): -ONE},
            {(0, 0, 2): ONE, (1, 1, 0): -(s * s)},
        )

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return apply_point(self, p)

    def __str__(self) -> str:
        return self.tag.value


Q1 = CremonaMap(MapTag.Q1)
QTAU = CremonaMap(MapTag.Qtau)
QTAU2 = CremonaMap(MapTag.Qtau2)
MAPS = {MapTag.Q1: Q1, MapTag.Qtau: QTAU, MapTag.Qtau2: QTAU2}


def get_map(tag: str | MapTag | CremonaMap) -> CremonaMap:
    if isinstance(tag, CremonaMap):
        return tag
    return MAPS[MapTag(tag)]


def evaluate(m: CremonaMap, coords: Sequence) -> tuple[QTau, QTau, QTau]:
    x, y, z = (QTau.coerce(c) for c in coords)
    s = QTau.coerce(m.scalar)
    return (s * y * y - x * z, s * x * x - y * z, z * z - s * s * x * y)


def apply_point(m: CremonaMap | str, p: ProjPoint) -> ProjPoint:
    m = get_map(m)
    image = evaluate(m, p.coords)
    if not any(image):
        raise IndeterminateError(f"{p} is a base point of {m}")
    return ProjPoint(image)


def group_image(m: CremonaMap | str, g: str) -> str:
    m = get_map(m)
    u, v = m.swapped_groups
    return {u: v, v: u}.get(g, g)


def transform_parameter(m: CremonaMap | str, t: EisensteinInt | int) -> EisensteinInt:
    """t -> -t - s where s is 1, tau or tau**2."""
    m = get_map(m)
    return -EisensteinInt.coerce(t) - m.scalar


@dataclass(frozen=True)
class CoarseCurveData:
    """Degree and one multiplicity per point-triple, ``[d, m1, mtau, mtau2, minf]``."""

    d: int
    m1: int
    mtau: int
    mtau2: int
    minf: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ContractedError(f"degree {self.d} < 1")
        for m in self.multiplicities():
            if m < 0:
                raise NegativeMultiplicityError(f"negative multiplicity in {self.as_list()}")
            if m > self.d:
                raise ValueError(f"multiplicity {m} exceeds degree {self.d}")

    @classmethod
    def from_list(cls, data: Sequence[int]) -> CoarseCurveData:
        d, m1, mt, mt2, minf = data
        return cls(d, m1, mt, mt2, minf)

    def as_list(self) -> list[int]:
        return [self.d, self.m1, self.mtau, self.mtau2, self.minf]

    def multiplicities(self) -> tuple[int, int, int, int]:
        return (self.m1, self.mtau, self.mtau2, self.minf)

    def by_group(self) -> dict[str, int]:
        return dict(zip(("1", "tau", "tau2", "inf"), self.multiplicities()))

    def __str__(self) -> str:
        return str(self.as_list())


def _coarse_from_groups(d: int, m: dict[str, int]) -> CoarseCurveData:
    if d < 1:
        raise ContractedError(f"strict transform would have degree {d}")
    if min(m.values()) < 0:
        raise NegativeMultiplicityError(f"negative multiplicity {m}")
    return CoarseCurveData(d, m["1"], m["tau"], m["tau2"], m["inf"])


def transform_coarse(m: CremonaMap | str, c: CoarseCurveData | Sequence[int]) -> CoarseCurveData:
    m = get_map(m)
    if not isinstance(c, CoarseCurveData):
        c = CoarseCurveData.from_list(c)
    old = c.by_group()
    g = m.fixed_group
    u, v = m.swapped_groups
    new = dict(old)
    new[g] = c.d - 2 * old[g]
    new[u], new[v] = old[v], old[u]
    return _coarse_from_groups(2 * c.d - 3 * old[g], new)


Triple = tuple[int, int, int]


@dataclass(frozen=True)
class FineCurveData:
    """Degree plus the multiplicity at each point of P3(1), P3(tau), P3(tau2).

    Triples are positional in the frozen point order of the arrangement;
    the curves tracked here never pass through P3(inf).
    """

    d: int
    t1: Triple
    ttau: Triple
    ttau2: Triple

    def __post_init__(self) -> None:
        for name in ("t1", "ttau", "ttau2"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))
            if len(getattr(self, name)) != 3:
                raise ValueError(f"{name} must have three entries")
        if self.d < 1:
            raise ContractedError(f"degree {self.d} < 1")
        for v in self.multiplicities():
            if v < 0:
                raise NegativeMultiplicityError(f"negative multiplicity in {self.as_list()}")
            if v > self.d:
                raise ValueError(f"multiplicity {v} exceeds degree {self.d}")

    @classmethod
    def from_list(cls, data: Sequence) -> FineCurveData:
        d, t1, tt, tt2 = data
        return cls(d, tuple(t1), tuple(tt), tuple(tt2))

    def as_list(self) -> list:
        return [self.d, list(self.t1), list(self.ttau), list(self.ttau2)]

    def by_group(self) -> dict[str, Triple]:
        return {"1": self.t1, "tau": self.ttau, "tau2": self.ttau2}

    def multiplicities(self) -> list[int]:
        return [*self.t1, *self.ttau, *self.ttau2]

    def as_multisets(self) -> tuple:
        """Key that forgets the order inside each triple."""
        return (self.d, *(tuple(sorted(t)) for t in (self.t1, self.ttau, self.ttau2)))

    def same_multisets(self, other: FineCurveData | Sequence) -> bool:
        if not isinstance(other, FineCurveData):
            other = FineCurveData.from_list(other)
        return self.as_multisets() == other.as_multisets()

    def __str__(self) -> str:
        return str(self.as_list())


def transform_fine(
    m: CremonaMap | str,
    f: FineCurveData | Sequence,
    track_positions: bool = False,
) -> FineCurveData:
    """Strict-transform data under ``m``.

    With ``track_positions=False`` the swapped triples are copied as they
    stand, which is only correct up to reordering inside each triple.
    ``track_positions=True`` follows the actual images of the points, so
    position k of every triple keeps referring to point k of the arrangement.
    """
    m = get_map(m)
    if not isinstance(f, FineCurveData):
        f = FineCurveData.from_list(f)
    old = f.by_group()
    g = m.fixed_group
    u, v = m.swapped_groups
    a, b, c = old[g]
    new = dict(old)
    # the line through two base points is contracted onto the third one
    new[g] = (f.d - b - c, f.d - a - c, f.d - a - b)
    if track_positions:
        perm = m.swap_permutation
        new[u] = _permute(old[v], perm)
        new[v] = _permute(old[u], perm)
    else:
        new[u], new[v] = old[v], old[u]
    d = 2 * f.d - (a + b + c)
    if d < 1:
        raise ContractedError(f"strict transform would have degree {d}")
    if min(min(t) for t in new.values()) < 0:
        raise NegativeMultiplicityError(f"negative multiplicity {new}")
    return FineCurveData(d, new["1"], new["tau"], new["tau2"])


def _permute(t: Triple, perm: Triple) -> Triple:
    out = [0, 0, 0]
    for k, target in enumerate(perm):
        out[target] = t[k]
    return tuple(out)  # type: ignore[return-value]


def parse_path(path: Iterable[str | MapTag] | str) -> list[CremonaMap]:
    """Map tags applied left to right; a string may be comma separated."""
    if isinstance(path, str):
        path = [p for p in path.replace(";", ",").split(",") if p.strip()]
    return [get_map(p.strip() if isinstance(p, str) else p) for p in path]


def apply_path(path, value, action) -> object:
    for m in parse_path(path):
        value = action(m, value)
    return value
