"""Weighted Dyck paths: validation, structure, symmetries and enumeration.

A Dyck path is a word over ``U`` (rise) and ``D`` (fall) that never dips
below the ground and ends back on it.  A weighted Dyck path carries one
non-negative integer per step, constrained by the height profile.  The five
constraints are identified as C1..C5 throughout the package:

C1  0 <= weight(u) <= lower_height(u)
C2  weights weakly increase along consecutive rises
C3  weights weakly decrease along consecutive falls
C4  at a peak of height h, the two adjacent weights sum to at most h
C5  at a valley of height h, the two adjacent weights sum to at least h

All values are immutable after construction and every operation is a pure
function, so concurrent readers are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Union

UP = "U"
DOWN = "D"

_FLIP = str.maketrans({UP: DOWN, DOWN: UP})


class PathFormatError(ValueError):
    """A textual path failed to parse or violates the weight constraints."""


@dataclass(frozen=True)
class DyckPath:
    """A Dyck path as a step word over {U, D}; shape validated at construction."""

    steps: str = ""

    def __post_init__(self) -> None:
        height = 0
        for i, s in enumerate(self.steps, start=1):
            if s == UP:
                height += 1
            elif s == DOWN:
                height -= 1
            else:
                raise ValueError(f"invalid step character {s!r} at step {i}")
            if height < 0:
                raise ValueError(f"path dips below ground at step {i}")
        if height != 0:
            raise ValueError("path does not return to ground level")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class WeightedDyckPath:
    """A Dyck path with one integer weight per step.

    Only the length agreement is enforced here; the weight constraints
    C1..C5 are checked by :func:`validate_weighted` so that invalid
    weightings can be represented, inspected and reported.
    """

    path: DyckPath
    weights: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.weights) != len(self.path):
            raise ValueError(
                f"{len(self.path)} steps but {len(self.weights)} weights"
            )

    @classmethod
    def from_steps(cls, steps: str, weights: Optional[Sequence[int]] = None) -> "WeightedDyckPath":
        path = DyckPath(steps)
        if weights is None:
            weights = (0,) * len(path)
        return cls(path, tuple(weights))

    @property
    def steps(self) -> str:
        return self.path.steps

    @property
    def n(self) -> int:
        return self.path.n

    def __len__(self) -> int:
        return len(self.path)


PathLike = Union[DyckPath, WeightedDyckPath]


def _steps_of(path: PathLike) -> str:
    if isinstance(path, WeightedDyckPath):
        return path.path.steps
    if isinstance(path, DyckPath):
        return path.steps
    raise TypeError(f"expected a path, got {type(path).__name__}")


@lru_cache(maxsize=None)
def _height_profile(steps: str) -> tuple[int, ...]:
    out = [0]
    h = 0
    for s in steps:
        h += 1 if s == UP else -1
        out.append(h)
    return tuple(out)


def heights(path: PathLike) -> tuple[int, ...]:
    """Height profile h0..h2n, where h_i is the height after i steps."""
    return _height_profile(_steps_of(path))


def lower_height(path: PathLike, u: int) -> int:
    """Smaller endpoint height of step u (1-based); the cap on its weight."""
    steps = _steps_of(path)
    if not 1 <= u <= len(steps):
        raise IndexError(f"step index {u} out of range 1..{len(steps)}")
    h = _height_profile(steps)
    return min(h[u - 1], h[u])


def validate_weighted(wd: WeightedDyckPath) -> list[tuple[str, int]]:
    """All (constraint id, step index) violations, or [] when the weighting is valid.

    The list is exhaustive and sorted by step index, then constraint id.
    Pair constraints (C2..C5) are attributed to the later of the two steps.
    """
    steps = wd.path.steps
    w = wd.weights
    h = _height_profile(steps)
    out: list[tuple[str, int]] = []
    for u in range(1, len(steps) + 1):
        wu = w[u - 1]
        if not 0 <= wu <= min(h[u - 1], h[u]):
            out.append(("C1", u))
        if u == 1:
            continue
        prev, cur = steps[u - 2], steps[u - 1]
        pw = w[u - 2]
        if prev == UP and cur == UP:
            if wu < pw:
                out.append(("C2", u))
        elif prev == DOWN and cur == DOWN:
            if wu > pw:
                out.append(("C3", u))
        elif prev == UP and cur == DOWN:
            if pw + wu > h[u - 1]:
                out.append(("C4", u))
        elif pw + wu < h[u - 1]:
            out.append(("C5", u))
    return out


def is_valid_weighted(wd: WeightedDyckPath) -> bool:
    return not validate_weighted(wd)


@dataclass(frozen=True)
class Slope:
    """A maximal run of equal steps."""

    kind: str
    start: int  # 1-based index of the first step of the run
    length: int


@dataclass(frozen=True)
class SlopeDecomposition:
    """Alternating rise/fall runs with boundary heights and weights.

    Runs alternate U, D, U, D, ..., starting with a rise and ending with a
    fall, so there are as many up slopes as down slopes.  `peak_heights[i]`
    is the height at the top of up slope i; `valley_heights[i]` is the
    height between down slope i and up slope i+1 (ground returns included
    with height 0).  Weight pairs are None when built from a bare path;
    peak pairs are (rise-in, fall-out), valley pairs (fall-in, rise-out).
    """

    up_slopes: tuple[Slope, ...]
    down_slopes: tuple[Slope, ...]
    peak_heights: tuple[int, ...]
    valley_heights: tuple[int, ...]
    peak_weights: Optional[tuple[tuple[int, int], ...]]
    valley_weights: Optional[tuple[tuple[int, int], ...]]


def slopes(path: PathLike) -> SlopeDecomposition:
    """Decompose a path into maximal rises and falls with boundary context."""
    steps = _steps_of(path)
    h = _height_profile(steps)
    runs: list[Slope] = []
    i = 0
    while i < len(steps):
        j = i
        while j < len(steps) and steps[j] == steps[i]:
            j += 1
        runs.append(Slope(steps[i], i + 1, j - i))
        i = j
    ups = tuple(r for r in runs if r.kind == UP)
    downs = tuple(r for r in runs if r.kind == DOWN)
    peak_heights = tuple(h[r.start + r.length - 1] for r in ups)
    valley_heights = tuple(h[r.start - 1] for r in ups[1:])
    peak_weights = valley_weights = None
    if isinstance(path, WeightedDyckPath):
        w = path.weights
        peak_weights = tuple(
            (w[r.start + r.length - 2], w[r.start + r.length - 1]) for r in ups
        )
        valley_weights = tuple((w[r.start - 2], w[r.start - 1]) for r in ups[1:])
    return SlopeDecomposition(ups, downs, peak_heights, valley_heights,
                              peak_weights, valley_weights)


def reflect(wd: WeightedDyckPath) -> WeightedDyckPath:
    """Mirror the path along a vertical axis; weights follow their steps.

    An involution that preserves validity of the weighting.
    """
    return WeightedDyckPath(DyckPath(_reflected_steps(wd.path.steps)),
                            wd.weights[::-1])


def _reflected_steps(steps: str) -> str:
    return steps[::-1].translate(_FLIP)


def concat(p: WeightedDyckPath, q: WeightedDyckPath) -> WeightedDyckPath:
    """Juxtapose two weighted paths; the ground-level junction keeps validity."""
    return WeightedDyckPath(DyckPath(p.path.steps + q.path.steps),
                            p.weights + q.weights)


def factor_spans(steps: str) -> list[tuple[int, int]]:
    """Half-open 0-based spans of the irreducible factors (ground-to-ground arcs)."""
    out: list[tuple[int, int]] = []
    h = 0
    start = 0
    for i, s in enumerate(steps):
        h += 1 if s == UP else -1
        if h == 0:
            out.append((start, i + 1))
            start = i + 1
    return out


def factor_irreducible(wd: WeightedDyckPath) -> list[WeightedDyckPath]:
    """Split at every interior ground return; concatenating the factors in
    order reproduces the input."""
    spans = factor_spans(wd.path.steps)
    if len(spans) <= 1:
        return [wd] if spans else []
    return [
        WeightedDyckPath(DyckPath(wd.path.steps[a:b]), wd.weights[a:b])
        for a, b in spans
    ]


def _dyck_words(n: int) -> Iterator[str]:
    """All Dyck words of semilength n, lexicographically with U < D."""
    word: list[str] = []

    def rec(ups: int, height: int) -> Iterator[str]:
        if len(word) == 2 * n:
            yield "".join(word)
            return
        if ups < n:
            word.append(UP)
            yield from rec(ups + 1, height + 1)
            word.pop()
        if height > 0:
            word.append(DOWN)
            yield from rec(ups, height - 1)
            word.pop()

    yield from rec(0, 0)


def _weight_span(steps: str, h: tuple[int, ...], i: int, prev_w: int) -> tuple[int, int]:
    """Feasible weight interval for step i given the weight of step i-1.

    Because C2..C5 only couple adjacent steps, the interval is never empty,
    which makes the left-to-right enumeration output-linear.
    """
    s = steps[i - 1]
    lower = h[i - 1] if s == UP else h[i]
    if i == 1:
        return 0, lower
    p = steps[i - 2]
    if p == UP and s == UP:
        return prev_w, lower
    if p == UP:  # peak at h[i-1]
        return 0, min(lower, h[i - 1] - prev_w)
    if s == UP:  # valley at h[i-1]
        return max(0, h[i - 1] - prev_w), lower
    return 0, min(lower, prev_w)


def enumerate_weightings(path: DyckPath) -> Iterator[WeightedDyckPath]:
    """All valid weightings of one fixed path, in lexicographic weight order."""
    steps = path.steps
    m = len(steps)
    if m == 0:
        yield WeightedDyckPath(path, ())
        return
    h = _height_profile(steps)
    w = [0] * m

    def rec(i: int) -> Iterator[WeightedDyckPath]:
        if i > m:
            yield WeightedDyckPath(path, tuple(w))
            return
        lo, hi = _weight_span(steps, h, i, w[i - 2] if i > 1 else 0)
        for v in range(lo, hi + 1):
            w[i - 1] = v
            yield from rec(i + 1)

    yield from rec(1)


def enumerate_weighted(n: int) -> Iterator[WeightedDyckPath]:
    """Every weighted Dyck path of semilength n exactly once.

    Order: lexicographic on the step word (U < D), then lexicographic on
    the weight vector.  Every emitted element satisfies C1..C5.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for word in _dyck_words(n):
        yield from enumerate_weightings(DyckPath(word))


def count_weighted(n: int) -> int:
    """Number of weighted Dyck paths of semilength n (exact integer).

    Counts by dynamic programming over the weight of the last placed step,
    without materializing the paths.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 0
    for word in _dyck_words(n):
        if not word:
            total += 1
            continue
        h = _height_profile(word)
        lo, hi = _weight_span(word, h, 1, 0)
        cur = {v: 1 for v in range(lo, hi + 1)}
        for i in range(2, len(word) + 1):
            nxt: dict[int, int] = {}
            for pv, c in cur.items():
                lo, hi = _weight_span(word, h, i, pv)
                for v in range(lo, hi + 1):
                    nxt[v] = nxt.get(v, 0) + c
            cur = nxt
        total += sum(cur.values())
    return total


def parse_path(text: str) -> WeightedDyckPath:
    """Parse ``<steps>;<w,w,...>``; the weight section may be omitted, in
    which case an all-zero weighting is used when it is valid.

    Raises PathFormatError on malformed input or any C1..C5 violation
    (reporting the first violated constraint and its step).
    """
    body = text.strip()
    if ";" in body:
        step_part, _, weight_part = body.partition(";")
    else:
        step_part, weight_part = body, ""
    try:
        path = DyckPath(step_part.strip())
    except ValueError as exc:
        raise PathFormatError(f"not a Dyck path: {exc}") from None
    weight_part = weight_part.strip()
    if weight_part:
        try:
            weights = tuple(int(tok) for tok in weight_part.split(","))
        except ValueError:
            raise PathFormatError(f"malformed weight list {weight_part!r}") from None
    else:
        weights = (0,) * len(path)
    if len(weights) != len(path):
        raise PathFormatError(
            f"{len(path)} steps but {len(weights)} weights"
        )
    wd = WeightedDyckPath(path, weights)
    bad = validate_weighted(wd)
    if bad:
        cid, step = bad[0]
        raise PathFormatError(f"{cid} violated at step {step}")
    return wd


def serialize_path(wd: WeightedDyckPath) -> str:
    """Canonical text form; parse_path(serialize_path(wd)) == wd."""
    return f"{wd.path.steps};{','.join(map(str, wd.weights))}"


def path_record(wd: WeightedDyckPath) -> dict:
    """Streaming record with stable field names."""
    return {"steps": wd.path.steps, "weights": list(wd.weights)}
