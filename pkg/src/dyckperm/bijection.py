"""The statistics-preserving map between weighted Dyck paths and 1234-avoiding
up-down permutations.

For an irreducible path, the bottom word of the image collects the positions
of the rises, inserted one at a time into a growing word: the up slopes are
split into a left half (where a weight equal to its least feasible value
makes the element *jump* to the front) and a right half (where the greatest
feasible value triggers the jump); a non-jumping position u lands
``weight(u) + shift`` letters from the right end (one less on the left
half), where shift counts the falls left of u's slope.  The top word is the
same construction run on the mirrored path, read back through the alphabet
reversal.  Reducible paths map factor by factor, composing the images with
the shifted concatenation in reverse factor order, which makes the set of
bottom letters equal the set of rise positions.

The inverse is a pruned depth-first search over weight vectors: partial
assignments are replayed incrementally against the target bottom and top
words from both ends of the path, and any insertion that deviates from the
target's relative order is cut immediately.  The search scans its whole
(pruned) space so that a second solution would be detected.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

from .paths import (
    DOWN,
    UP,
    DyckPath,
    SlopeDecomposition,
    WeightedDyckPath,
    _height_profile,
    _reflected_steps,
    enumerate_weightings,
    factor_irreducible,
    factor_spans,
    serialize_path,
    validate_weighted,
)
from .perms import (
    AlternatingPermutation,
    assemble,
    avoids_1234,
    is_up_down,
    schutzenberger_word,
    shifted_concat,
    standardize,
)

SPLIT_CEIL = "ceil"
SPLIT_FLOOR = "floor"

LEFT = "L"
RIGHT = "R"


class NotInImageError(ValueError):
    """The permutation is not the image of any weighted Dyck path."""


class InternalConsistencyError(RuntimeError):
    """A guaranteed structural property failed; indicates a bug, not bad input."""


class InsertionOverflowError(RuntimeError):
    """A computed insertion distance fell outside the current word.

    Cannot happen for a valid weighted Dyck path; signals invalid input or
    an internal bug.  Carries the trace accumulated so far.
    """

    def __init__(self, message: str, trace: tuple["InsertionStep", ...]):
        super().__init__(message)
        self.trace = trace


@dataclass(frozen=True)
class SplitAssignment:
    """Left/right membership per up slope: an 'L' prefix then an 'R' suffix."""

    memberships: tuple[str, ...]
    rule: str


def _left_count(k: int, rule: str) -> int:
    if rule == SPLIT_CEIL:
        return (k + 1) // 2
    if rule == SPLIT_FLOOR:
        return k // 2
    raise ValueError(f"unknown split rule {rule!r}")


def split_up_slopes(decomp: SlopeDecomposition, rule: str = SPLIT_CEIL) -> SplitAssignment:
    """Assign each up slope to the left or right half.

    Under "ceil" (the default) the left half takes ceil(k/2) of the k up
    slopes; under "floor" it takes floor(k/2).
    """
    k = len(decomp.up_slopes)
    cut = _left_count(k, rule)
    return SplitAssignment(tuple(LEFT if i < cut else RIGHT for i in range(k)), rule)


@dataclass(frozen=True)
class _UpInfo:
    pos: int          # 1-based step index of the rise
    slope: int        # 1-based up-slope index
    first: bool       # first rise of its slope
    last: bool        # last rise of its slope
    shift: int        # falls strictly left of the slope
    lower: int        # lower height of the step
    membership: str
    ready: int        # last weight index (1-based) the jump rule reads


@lru_cache(maxsize=None)
def _up_infos(steps: str, rule: str) -> tuple[_UpInfo, ...]:
    h = _height_profile(steps)
    runs: list[tuple[int, int]] = []  # (start, length) of up slopes
    i = 0
    while i < len(steps):
        j = i
        while j < len(steps) and steps[j] == steps[i]:
            j += 1
        if steps[i] == UP:
            runs.append((i + 1, j - i))
        i = j
    cut = _left_count(len(runs), rule)
    infos: list[_UpInfo] = []
    for idx, (start, length) in enumerate(runs, start=1):
        # falls left of the slope = steps before it minus rises before it
        rises_before = sum(l for _, l in runs[: idx - 1])
        shift = start - 1 - rises_before
        membership = LEFT if idx - 1 < cut else RIGHT
        for off in range(length):
            p = start + off
            infos.append(
                _UpInfo(
                    pos=p,
                    slope=idx,
                    first=off == 0,
                    last=off == length - 1,
                    shift=shift,
                    lower=h[p - 1],
                    membership=membership,
                    ready=p if membership == LEFT else p + 1,
                )
            )
    return tuple(infos)


def _bound_of(info: _UpInfo, h: tuple[int, ...], wt: Callable[[int], int]) -> int:
    """Extremal feasible weight for a rise: the least value under 'L'
    membership, the greatest under 'R'."""
    if info.membership == LEFT:
        if not info.first:
            return wt(info.pos - 1)
        if info.pos == 1:
            return 0
        # valley entering the slope: fall weight d at height h_val caps the
        # minimum at h_val - d
        return h[info.pos - 1] - wt(info.pos - 1)
    if not info.last:
        return min(info.lower, wt(info.pos + 1))
    # peak leaving the slope: fall weight e at height h_peak caps the
    # maximum at h_peak - e (and the lower height always caps it)
    return min(info.lower, h[info.pos] - wt(info.pos + 1))


def _info_for(steps: str, u: int) -> _UpInfo:
    for info in _up_infos(steps, SPLIT_CEIL):
        if info.pos == u:
            return info
    raise ValueError(f"step {u} is not a rise")


def jump_bound(wd: WeightedDyckPath, u: int, membership: str) -> int:
    """The extremal feasible weight of rise u under the given membership.

    'L': the greatest lower bound (previous weight on the slope, or the
    valley residual for the slope's first rise, 0 on the path's first
    slope).  'R': the least upper bound (the minimum of the lower height
    and the next weight on the slope, or the peak residual for the last).
    """
    if membership not in (LEFT, RIGHT):
        raise ValueError(f"membership must be {LEFT!r} or {RIGHT!r}")
    steps = wd.path.steps
    if not 1 <= u <= len(steps):
        raise IndexError(f"step index {u} out of range 1..{len(steps)}")
    base = _info_for(steps, u)
    info = _UpInfo(base.pos, base.slope, base.first, base.last, base.shift,
                   base.lower, membership, base.ready)
    return _bound_of(info, _height_profile(steps), lambda i: wd.weights[i - 1])


def jumps(wd: WeightedDyckPath, u: int, membership: str) -> bool:
    """True when the weight of rise u attains its extremal feasible value."""
    return wd.weights[u - 1] == jump_bound(wd, u, membership)


@dataclass(frozen=True)
class InsertionStep:
    """One record of the insertion run for a single rise."""

    position: int
    weight: int
    slope: int
    membership: str
    shift: int
    jumped: bool
    distance: Optional[int]  # from the right-hand end; None on jumps
    word_after: tuple[int, ...]


InsertionTrace = tuple[InsertionStep, ...]


def _run_insertion(steps: str, weights: Sequence[int], rule: str,
                   want_trace: bool) -> tuple[tuple[int, ...], InsertionTrace]:
    h = _height_profile(steps)
    word: list[int] = []
    trace: list[InsertionStep] = []

    def wt(i: int) -> int:
        return weights[i - 1]

    for info in _up_infos(steps, rule):
        w = weights[info.pos - 1]
        bound = _bound_of(info, h, wt)
        if w == bound:
            word.insert(0, info.pos)
            jumped, dist = True, None
        else:
            dist = w + info.shift - (1 if info.membership == LEFT else 0)
            if dist < 0 or dist > len(word):
                raise InsertionOverflowError(
                    f"insertion overflow at rise {info.pos}: "
                    f"distance {dist} with word length {len(word)}",
                    tuple(trace),
                )
            word.insert(len(word) - dist, info.pos)
            jumped = False
        if want_trace:
            trace.append(
                InsertionStep(info.pos, w, info.slope, info.membership,
                              info.shift, jumped, dist, tuple(word))
            )
    return tuple(word), tuple(trace)


def _require_valid(wd: WeightedDyckPath) -> None:
    bad = validate_weighted(wd)
    if bad:
        cid, step = bad[0]
        raise ValueError(f"invalid weighting: {cid} violated at step {step}")


def _require_irreducible(wd: WeightedDyckPath) -> None:
    if len(factor_spans(wd.path.steps)) > 1:
        raise ValueError("path is reducible (interior return to the ground)")


def insertion_word(wd: WeightedDyckPath, rule: str = SPLIT_CEIL
                   ) -> tuple[tuple[int, ...], InsertionTrace]:
    """Bottom word of an irreducible weighted Dyck path, with the full
    per-rise trace (jump flag, shift, insertion distance, word snapshot)."""
    _require_valid(wd)
    _require_irreducible(wd)
    return _run_insertion(wd.path.steps, wd.weights, rule, want_trace=True)


def _map_factor(steps: str, weights: tuple[int, ...], rule: str) -> tuple[int, ...]:
    bot, bt = _run_insertion(steps, weights, rule, want_trace=False)
    raw, tt = _run_insertion(_reflected_steps(steps), weights[::-1], rule,
                             want_trace=False)
    top = schutzenberger_word(raw, len(steps))
    try:
        return assemble(bot, top).perm
    except ValueError as exc:
        raise InternalConsistencyError(
            f"assembly failed for {steps};{','.join(map(str, weights))}: {exc}"
        ) from exc


def to_permutation_irreducible(wd: WeightedDyckPath, rule: str = SPLIT_CEIL
                               ) -> AlternatingPermutation:
    """Image of one irreducible weighted Dyck path: the bottom word by
    insertion, the top word via the mirrored path and alphabet reversal."""
    _require_valid(wd)
    _require_irreducible(wd)
    return AlternatingPermutation(_map_factor(wd.path.steps, wd.weights, rule))


def to_permutation(wd: WeightedDyckPath, rule: str = SPLIT_CEIL) -> AlternatingPermutation:
    """Image of any weighted Dyck path.

    Irreducible factors are mapped independently and their images composed
    with the shifted concatenation, rightmost factor first; consequently the
    sorted bottom letters of the image equal the rise positions of the path.
    """
    _require_valid(wd)
    acc: tuple[int, ...] = ()
    for f in factor_irreducible(wd):
        acc = shifted_concat(_map_factor(f.path.steps, f.weights, rule), acc)
    return AlternatingPermutation(acc)


def bottom_traces(wd: WeightedDyckPath, rule: str = SPLIT_CEIL) -> InsertionTrace:
    """Bottom-word insertion records for all factors, with positions and
    word snapshots shifted to global step indices."""
    _require_valid(wd)
    out: list[InsertionStep] = []
    for (a, _b), f in zip(factor_spans(wd.path.steps), factor_irreducible(wd)):
        _, trace = _run_insertion(f.path.steps, f.weights, rule, want_trace=True)
        for st in trace:
            out.append(
                InsertionStep(st.position + a, st.weight, st.slope,
                              st.membership, st.shift, st.jumped, st.distance,
                              tuple(v + a for v in st.word_after))
            )
    return tuple(out)


@dataclass(frozen=True)
class ParkingFunction:
    """A weakly increasing sequence of non-negative integers with
    values[i] <= i (0-based)."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        prev = 0
        for i, v in enumerate(self.values):
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"value {v!r} at index {i} is not a non-negative integer")
            if v > i:
                raise ValueError(f"value {v} at index {i} exceeds {i}")
            if v < prev:
                raise ValueError(f"values decrease at index {i}")
            prev = v

    def __len__(self) -> int:
        return len(self.values)


def flatten_to_single_slope(wd: WeightedDyckPath, rule: str = SPLIT_CEIL) -> ParkingFunction:
    """Project the rises of an irreducible weighted path onto one single
    ascent whose insertion run reproduces the standardized bottom word.

    A jumping rise copies the previous image value; a non-jumping one adds
    its shift to its weight, plus one on the right half (offsetting the
    left half's shorter insertion distance).
    """
    _require_valid(wd)
    _require_irreducible(wd)
    _, trace = _run_insertion(wd.path.steps, wd.weights, rule, want_trace=True)
    vals: list[int] = []
    for st in trace:
        if st.jumped:
            vals.append(vals[-1] if vals else 0)
        else:
            vals.append(st.weight + st.shift + (1 if st.membership == RIGHT else 0))
    try:
        return ParkingFunction(tuple(vals))
    except ValueError as exc:
        raise InternalConsistencyError(
            f"flattening {serialize_path(wd)} produced a non-parking sequence {vals}"
        ) from exc


def parking_to_123_avoiding(pf: ParkingFunction) -> tuple[int, ...]:
    """Insertion replay on a single all-rise slope: a value equal to its
    predecessor jumps to the front (the first always does), a larger value v
    lands v-1 letters from the right.  The output avoids 123."""
    word: list[int] = []
    prev: Optional[int] = None
    for i, v in enumerate(pf.values, start=1):
        if prev is None or v == prev:
            word.insert(0, i)
        else:
            word.insert(len(word) - (v - 1), i)
        prev = v
    return tuple(word)


class _InsertionReplay:
    """Replays the insertion of rise positions against a fixed target word,
    validating relative order after every insertion; supports rollback."""

    def __init__(self, steps: str, target: tuple[int, ...], rule: str):
        self.infos = _up_infos(steps, rule)
        self.h = _height_profile(steps)
        self.rank = {letter: idx for idx, letter in enumerate(target)}
        self.word: list[int] = []
        self.done = 0
        self._hist: list[int] = []

    def mark(self) -> int:
        return self.done

    def feed(self, wt: Callable[[int], int], avail: int) -> bool:
        """Consume every rise whose jump rule only reads the first `avail`
        weights.  Returns False when the target order is contradicted; the
        partial feeds stay applied and the caller rolls back to its mark."""
        infos = self.infos
        word = self.word
        rank = self.rank
        while self.done < len(infos) and infos[self.done].ready <= avail:
            info = infos[self.done]
            w = wt(info.pos)
            if w == _bound_of(info, self.h, wt):
                idx = 0
            else:
                dist = w + info.shift - (1 if info.membership == LEFT else 0)
                if dist < 0 or dist > len(word):
                    return False
                idx = len(word) - dist
            r = rank.get(info.pos)
            if r is None:
                return False
            if idx > 0 and rank[word[idx - 1]] > r:
                return False
            if idx < len(word) and rank[word[idx]] < r:
                return False
            word.insert(idx, info.pos)
            self._hist.append(idx)
            self.done += 1
        return True

    def rollback(self, mark: int) -> None:
        while self.done > mark:
            del self.word[self._hist.pop()]
            self.done -= 1


def _local_span(steps: str, h: tuple[int, ...], i: int,
                left_w: Optional[int], right_w: Optional[int]) -> tuple[int, int]:
    """Feasible weights for step i given whichever neighbours are fixed."""
    s = steps[i - 1]
    lo, hi = 0, h[i - 1] if s == UP else h[i]
    if left_w is not None:
        p = steps[i - 2]
        if p == UP and s == UP:
            lo = max(lo, left_w)
        elif p == UP:
            hi = min(hi, h[i - 1] - left_w)
        elif s == UP:
            lo = max(lo, h[i - 1] - left_w)
        else:
            hi = min(hi, left_w)
    if right_w is not None:
        nxt = steps[i]
        if s == UP and nxt == UP:
            hi = min(hi, right_w)
        elif s == UP:
            hi = min(hi, h[i] - right_w)
        elif nxt == UP:
            lo = max(lo, h[i] - right_w)
        else:
            lo = max(lo, right_w)
    return lo, hi


def _factor_preimages(steps: str, bot_target: tuple[int, ...],
                      topref_target: tuple[int, ...], rule: str,
                      limit: int = 2) -> list[tuple[int, ...]]:
    """All weight vectors (up to `limit`) whose insertion runs reproduce the
    target bottom word and, on the mirrored path, the target top word."""
    m = len(steps)
    if m == 0:
        return [()]
    h = _height_profile(steps)
    eng_bot = _InsertionReplay(steps, bot_target, rule)
    eng_top = _InsertionReplay(_reflected_steps(steps), topref_target, rule)
    w: list[Optional[int]] = [None] * m

    # outside-in assignment order lets both replays prune early
    order: list[int] = []
    lo_i, hi_i = 1, m
    while lo_i <= hi_i:
        order.append(lo_i)
        lo_i += 1
        if lo_i <= hi_i:
            order.append(hi_i)
            hi_i -= 1

    def wt_fwd(i: int) -> int:
        return w[i - 1]  # type: ignore[return-value]

    def wt_rev(r: int) -> int:
        return w[m - r]  # type: ignore[return-value]

    sols: list[tuple[int, ...]] = []

    def rec(depth: int, left_len: int, right_len: int) -> None:
        if len(sols) >= limit:
            return
        if depth == m:
            sols.append(tuple(w))  # type: ignore[arg-type]
            return
        i = order[depth]
        left_w = w[i - 2] if i >= 2 else None
        right_w = w[i] if i < m else None
        lo, hi = _local_span(steps, h, i, left_w, right_w)
        new_left = left_len + 1 if i == left_len + 1 else left_len
        new_right = right_len + 1 if i == m - right_len else right_len
        if depth + 1 == m:
            # the two assignment fronts have met: every weight is fixed, so
            # both replays may consume the whole path
            bot_avail = top_avail = m
        else:
            bot_avail, top_avail = new_left, new_right
        for v in range(lo, hi + 1):
            w[i - 1] = v
            mb = eng_bot.mark()
            mt = eng_top.mark()
            if eng_bot.feed(wt_fwd, bot_avail) and eng_top.feed(wt_rev, top_avail):
                rec(depth + 1, new_left, new_right)
            eng_bot.rollback(mb)
            eng_top.rollback(mt)
            if len(sols) >= limit:
                break
        w[i - 1] = None

    rec(0, 0, 0)
    return sols


def _membership_checks(p: tuple[int, ...]) -> tuple[DyckPath, str]:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError("input is not a permutation of 1..N")
    if not is_up_down(p):
        raise NotInImageError("not in image: not an up-down permutation")
    if not avoids_1234(p):
        raise NotInImageError(
            "not in image: contains an increasing subsequence of length 4")
    word = "".join(UP if i in set(p[0::2]) else DOWN for i in range(1, len(p) + 1))
    try:
        return DyckPath(word), word
    except ValueError:
        raise NotInImageError(
            "not in image: bottom letters do not mark a Dyck path") from None


def from_permutation(p: Sequence[int], rule: str = SPLIT_CEIL) -> WeightedDyckPath:
    """The unique weighted Dyck path whose image is p.

    Raises NotInImageError naming the first failed membership check (shape,
    avoidance, bottom letters not a Dyck path, or search exhaustion) and
    InternalConsistencyError if the search ever finds two preimages.
    """
    p = tuple(p)
    if not p:
        return WeightedDyckPath(DyckPath(""), ())
    path, word = _membership_checks(p)
    weights: list[int] = [0] * len(p)
    offset = 0
    for a, b in reversed(factor_spans(word)):
        length = b - a
        block = p[offset:offset + length]
        offset += length
        if set(block) != set(range(a + 1, b + 1)):
            raise NotInImageError("not in image: preimage search exhausted")
        local = standardize(block)
        topref = tuple(length + 1 - t for t in reversed(local[1::2]))
        sols = _factor_preimages(word[a:b], local[0::2], topref, rule)
        if not sols:
            raise NotInImageError("not in image: preimage search exhausted")
        if len(sols) > 1:
            raise InternalConsistencyError(
                f"two preimages found for block {block}")
        weights[a:b] = sols[0]
    wd = WeightedDyckPath(path, tuple(weights))
    if validate_weighted(wd):
        raise InternalConsistencyError(
            f"reconstructed weighting is invalid: {serialize_path(wd)}")
    return wd


@lru_cache(maxsize=None)
def _image_table(steps: str, rule: str) -> dict:
    """perm -> weights over all valid weightings of one fixed path."""
    table: dict[tuple[int, ...], tuple[int, ...]] = {}
    for wd in enumerate_weightings(DyckPath(steps)):
        perm = to_permutation(wd, rule).perm
        if perm in table:
            raise InternalConsistencyError(
                f"two weightings of {steps} share the image {perm}")
        table[perm] = wd.weights
    return table


def from_permutation_brute(p: Sequence[int], cap_n: int = 7,
                           rule: str = SPLIT_CEIL) -> WeightedDyckPath:
    """Oracle inverse: enumerate every valid weighting of the path read off
    the bottom letters, map each forward, and return the unique match."""
    p = tuple(p)
    if len(p) > 2 * cap_n:
        raise ValueError(f"size {len(p)} exceeds the brute-force cap 2*{cap_n}")
    if not p:
        return WeightedDyckPath(DyckPath(""), ())
    path, word = _membership_checks(p)
    weights = _image_table(word, rule).get(p)
    if weights is None:
        raise NotInImageError("not in image: no weighting of the bottom path matches")
    return WeightedDyckPath(path, weights)
