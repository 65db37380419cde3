"""Bicirculant graph specifications and their exact matrices.

A bicirculant graph BC(Z_n; R, T, S) has a right part g_0 (vertices 0..n-1)
and a left part g_1 (vertices n..2n-1).  Right edges join h_0, g_0 when
g - h is in R, left edges join h_1, g_1 when g - h is in T, and spokes join
h_0, g_1 when g - h is in S.

Internally a graph is stored by its half-set data: the connection sets R and
T are symmetric, so they are determined by the representatives below n/2
(``alphas``, ``betas``) plus a flag telling whether the involution n/2 is
present.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence

from .errors import (
    DuplicateElement,
    InvalidSpec,
    NonSymmetricConnectionSet,
    OutOfRange,
    ZeroInRT,
)

__all__ = [
    "BigMatrix",
    "BicirculantSpec",
    "GammaClass",
    "adjacency_matrix",
    "canonical_json",
    "classify",
    "forest_matrix",
    "parse_spec",
    "spec_from_json",
    "spec_to_json",
]


class GammaClass(enum.Enum):
    """Structural class, fixed by which parts contain the involution n/2."""

    G1 = 1  # neither
    G2 = 2  # n/2 in R only
    G3 = 3  # n/2 in T only
    G4 = 4  # n/2 in both

    @property
    def has_half(self) -> bool:
        return self is not GammaClass.G1


@dataclass(frozen=True)
class BigMatrix:
    """Dense row-major matrix of Python integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BigMatrix":
        if not rows:
            raise ValueError("matrix must have at least one row")
        ncols = len(rows[0])
        if any(len(row) != ncols for row in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(int(x) for row in rows for x in row))

    @classmethod
    def identity(cls, size: int) -> "BigMatrix":
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)])

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "BigMatrix":
        return BigMatrix.from_rows([list(col) for col in zip(*self.to_rows())])

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.to_rows()]

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x:>3d}" for x in row) for row in self.to_rows())


def _check_sorted_unique(name: str, values: Sequence[int]) -> None:
    if len(set(values)) != len(values):
        raise DuplicateElement(f"{name} contains a repeated element: {list(values)}")
    if list(values) != sorted(values):
        raise InvalidSpec(f"{name} must be strictly increasing: {list(values)}")


@dataclass(frozen=True)
class BicirculantSpec:
    """Half-set description of BC(Z_n; R, T, S).

    ``alphas`` and ``betas`` hold the representatives 0 < x < n/2 of the
    symmetric sets R and T; ``half_in_R``/``half_in_T`` record n/2.
    ``gammas`` is the spoke set S itself.
    """

    n: int
    alphas: tuple[int, ...] = ()
    betas: tuple[int, ...] = ()
    gammas: tuple[int, ...] = ()
    half_in_R: bool = False
    half_in_T: bool = False

    def __post_init__(self) -> None:
        for name in ("alphas", "betas", "gammas"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        n = self.n
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise OutOfRange(f"group order must be a positive integer, got {n!r}")
        for name, half in (("alphas", self.half_in_R), ("betas", self.half_in_T)):
            values = getattr(self, name)
            _check_sorted_unique(name, values)
            for x in values:
                if 2 * x == n:
                    if half:
                        raise DuplicateElement(f"{name}: {x} duplicates the involution n/2")
                    raise OutOfRange(f"{name}: {x} = n/2 must be given as a half flag")
                if not 0 < 2 * x < n:
                    raise OutOfRange(f"{name}: {x} not in (0, n/2) for n={n}")
        _check_sorted_unique("gammas", self.gammas)
        for x in self.gammas:
            if not 0 <= x < n:
                raise OutOfRange(f"gammas: {x} not in [0, {n - 1}]")
        if (self.half_in_R or self.half_in_T) and n % 2:
            raise OutOfRange(f"n/2 is not an element of Z_{n} for odd n")

    @property
    def r(self) -> int:
        return len(self.alphas)

    @property
    def t(self) -> int:
        return len(self.betas)

    @property
    def s(self) -> int:
        return len(self.gammas)

    @property
    def gamma_class(self) -> GammaClass:
        return classify(self)

    @property
    def R(self) -> tuple[int, ...]:
        return self._full_set(self.alphas, self.half_in_R)

    @property
    def T(self) -> tuple[int, ...]:
        return self._full_set(self.betas, self.half_in_T)

    @property
    def S(self) -> tuple[int, ...]:
        return self.gammas

    def _full_set(self, reps: tuple[int, ...], half: bool) -> tuple[int, ...]:
        out = set(reps) | {self.n - x for x in reps}
        if half:
            out.add(self.n // 2)
        return tuple(sorted(out))

    @property
    def num_edges(self) -> int:
        return self.n * (self.r + self.t + self.s) + (self.n // 2) * (
            int(self.half_in_R) + int(self.half_in_T)
        )

    def at(self, n: int) -> "BicirculantSpec":
        """The same half-set data over Z_n for a different order n."""
        return BicirculantSpec(
            n, self.alphas, self.betas, self.gammas, self.half_in_R, self.half_in_T
        )

    def to_dict(self) -> dict[str, Any]:
        return spec_to_json(self)


def _residues(name: str, n: int, values: Iterable[int]) -> list[int]:
    out = []
    for x in values:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvalidSpec(f"{name}: element {x!r} is not an integer")
        if not 0 <= x < n:
            raise OutOfRange(f"{name}: element {x} not in [0, {n - 1}]")
        out.append(x)
    if len(set(out)) != len(out):
        raise DuplicateElement(f"{name} contains a repeated element: {out}")
    return out


def parse_spec(
    n: int, R: Iterable[int] = (), T: Iterable[int] = (), S: Iterable[int] = ()
) -> BicirculantSpec:
    """Validate connection sets given as residues mod n and normalize them.

    >>> parse_spec(4, {1, 2, 3}, set(), {0})
    BicirculantSpec(n=4, alphas=(1,), betas=(), gammas=(0,), half_in_R=True, half_in_T=False)
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise OutOfRange(f"group order must be a positive integer, got {n!r}")
    sets = {name: _residues(name, n, vals) for name, vals in (("R", R), ("T", T), ("S", S))}
    halves = {}
    reps = {}
    for name in ("R", "T"):
        members = set(sets[name])
        if 0 in members:
            raise ZeroInRT(f"0 may not belong to {name}")
        for x in members:
            if (n - x) % n not in members:
                raise NonSymmetricConnectionSet(
                    f"{name} is not closed under negation mod {n}: {x} in {name}, {n - x} missing"
                )
        reps[name] = tuple(sorted(x for x in members if 2 * x < n))
        halves[name] = any(2 * x == n for x in members)
    return BicirculantSpec(
        n=n,
        alphas=reps["R"],
        betas=reps["T"],
        gammas=tuple(sorted(sets["S"])),
        half_in_R=halves["R"],
        half_in_T=halves["T"],
    )


def classify(spec: BicirculantSpec) -> GammaClass:
    if spec.half_in_R and spec.half_in_T:
        return GammaClass.G4
    if spec.half_in_R:
        return GammaClass.G2
    if spec.half_in_T:
        return GammaClass.G3
    return GammaClass.G1


def spec_to_json(spec: BicirculantSpec) -> dict[str, Any]:
    return {"n": spec.n, "R": list(spec.R), "T": list(spec.T), "S": list(spec.S)}


def canonical_json(spec: BicirculantSpec) -> str:
    return json.dumps(spec_to_json(spec), sort_keys=True, separators=(",", ":"))


def spec_from_json(source: str | Mapping[str, Any]) -> BicirculantSpec:
    """Build a spec from ``{"n": int, "R": [...], "T": [...], "S": [...]}``."""
    data = json.loads(source) if isinstance(source, str) else dict(source)
    unknown = set(data) - {"n", "R", "T", "S"}
    if unknown:
        raise InvalidSpec(f"unknown keys in graph spec: {sorted(unknown)}")
    if "n" not in data:
        raise InvalidSpec("graph spec needs an 'n' field")
    return parse_spec(data["n"], data.get("R", []), data.get("T", []), data.get("S", []))


def adjacency_matrix(spec: BicirculantSpec) -> BigMatrix:
    """2n x 2n adjacency matrix, right part first then left part."""
    n = spec.n
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for x in spec.R:
            rows[i][(i + x) % n] = 1
        for x in spec.T:
            rows[n + i][n + (i + x) % n] = 1
        for u in spec.S:
            j = n + (i + u) % n
            rows[i][j] = 1
            rows[j][i] = 1
    return BigMatrix.from_rows(rows)


def forest_matrix(spec: BicirculantSpec) -> BigMatrix:
    """I + L = I + D - A, whose determinant counts rooted spanning forests."""
    adj = adjacency_matrix(spec).to_rows()
    size = len(adj)
    rows = [[-a for a in row] for row in adj]
    for i in range(size):
        rows[i][i] = 1 + sum(adj[i])
    return BigMatrix.from_rows(rows)
