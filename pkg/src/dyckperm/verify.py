"""Executable property suites.

Each suite turns one structural claim about the bijection into an
exhaustive pass/fail check over all instances up to a size cap, reporting
counterexamples in the canonical text serializations so that any failure
can be replayed through the CLI.  Running every suite at the default caps
is the package's acceptance gate.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .bijection import (
    LEFT,
    SPLIT_CEIL,
    InsertionOverflowError,
    _bound_of,
    _local_span,
    _left_count,
    _run_insertion,
    _up_infos,
    flatten_to_single_slope,
    from_permutation,
    from_permutation_brute,
    parking_to_123_avoiding,
    to_permutation,
)
from .paths import (
    DOWN,
    UP,
    WeightedDyckPath,
    _height_profile,
    _reflected_steps,
    concat,
    enumerate_weighted,
    count_weighted,
    factor_spans,
    reflect,
    serialize_path,
)
from .perms import (
    _criteria_verdict,
    avoids_123_word,
    avoids_1234,
    enumerate_updown_avoiders,
    is_up_down,
    perm_text,
    schutzenberger,
    schutzenberger_word,
    shifted_concat,
    standardize,
)

SUITES = (
    "counts",
    "bijectivity",
    "roundtrip",
    "schutzenberger",
    "product",
    "statistic",
    "criteria",
    "insertion_lemma",
    "transformation",
    "parking",
    "topword_equivalence",
)

DEFAULT_CAPS = {
    "counts": 6,
    "bijectivity": 6,
    "roundtrip": 6,
    "statistic": 6,
    "schutzenberger": 5,
    "product": 5,
    "criteria": 5,  # permutations of size up to 2*5 = 10
    "parking": 8,
    "transformation": 6,
    "insertion_lemma": 6,
    "topword_equivalence": 5,
}

# Three-dimensional Catalan numbers (OEIS A005789): the common size of both
# families, embedded so no lookup is ever needed.
REFERENCE_COUNTS = (1, 1, 5, 42, 462, 6006, 87516, 1385670)

# Catalan numbers: non-decreasing parking functions of length n and
# 123-avoiding permutations of size n.
CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one suite: sizes covered, instances checked, failures."""

    suite: str
    n_range: tuple[int, int]
    checked: int
    failures: tuple[dict, ...]
    elapsed: float

    @property
    def verdict(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_record(self) -> dict:
        return {
            "suite": self.suite,
            "nRange": list(self.n_range),
            "checked": self.checked,
            "failures": list(self.failures),
            "verdict": self.verdict,
            "elapsed": round(self.elapsed, 3),
        }


def _fail(input_text: str, expected: str, actual: str) -> dict:
    return {"input": input_text, "expected": expected, "actual": actual}


def _irreducible(n: int) -> Iterator[WeightedDyckPath]:
    for wd in enumerate_weighted(n):
        if len(factor_spans(wd.path.steps)) <= 1:
            yield wd


def top_word_direct(wd: WeightedDyckPath, rule: str = SPLIT_CEIL) -> tuple[int, ...]:
    """Top word computed by scanning the falls directly, right to left.

    The down slopes are processed from the right with the left/right roles
    swapped (the rightmost half of the down slopes uses the minimality
    rule), insertion distances are measured from the left, and jumping
    elements go to the right end.  Must equal the reflected-path
    construction used by the forward map.
    """
    steps = wd.path.steps
    w = wd.weights
    h = _height_profile(steps)
    m = len(steps)
    runs: list[tuple[int, int]] = []  # down slopes (start, length), left to right
    i = 0
    while i < m:
        j = i
        while j < m and steps[j] == steps[i]:
            j += 1
        if steps[i] == DOWN:
            runs.append((i + 1, j - i))
        i = j
    k = len(runs)
    minimal_from = k - _left_count(k, rule) + 1  # slopes s >= this use minimality
    word: list[int] = []
    for s in range(k, 0, -1):
        start, length = runs[s - 1]
        end = start + length - 1
        falls_right = sum(l for st, l in runs if st > end)
        shift = (m - end) - falls_right  # rises strictly right of the slope
        minimal = s >= minimal_from
        for off in range(length):
            pos = end - off  # bottom-up within the slope
            wu = w[pos - 1]
            lower = h[pos]
            if minimal:
                if off > 0:
                    bound = w[pos]  # fall just below on the same slope
                elif pos == m:
                    bound = 0
                else:
                    # valley after the slope: rise weight e caps the minimum
                    bound = h[pos] - w[pos]
                jumped = wu == bound
                dist = wu + shift - 1
            else:
                if off < length - 1:
                    bound = min(lower, w[pos - 2])  # fall just above
                else:
                    # peak atop the slope: rise weight e caps the maximum
                    bound = min(lower, h[pos - 1] - w[pos - 2])
                jumped = wu == bound
                dist = wu + shift
            if jumped:
                word.append(pos)
            else:
                word.insert(dist, pos)
    return tuple(word)


def _suite_counts(cap: int, rule: str) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    for n in range(cap + 1):
        ref = REFERENCE_COUNTS[n] if n < len(REFERENCE_COUNTS) else None
        got = count_weighted(n)
        checked += 1
        if ref is not None and got != ref:
            failures.append(_fail(f"weighted paths, n={n}", str(ref), str(got)))
        perm_count = sum(1 for _ in enumerate_updown_avoiders(n))
        checked += 1
        if ref is not None and perm_count != ref:
            failures.append(_fail(f"up-down avoiders, n={n}", str(ref), str(perm_count)))
        if got != perm_count:
            failures.append(_fail(f"family sizes, n={n}", str(got), str(perm_count)))
    return checked, failures


def _suite_bijectivity(cap: int, rule: str) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    for n in range(cap + 1):
        seen: dict[tuple[int, ...], WeightedDyckPath] = {}
        for wd in enumerate_weighted(n):
            perm = to_permutation(wd, rule).perm
            checked += 1
            if perm in seen:
                failures.append(_fail(
                    serialize_path(wd),
                    "a fresh image",
                    f"{perm_text(perm)} already hit by {serialize_path(seen[perm])}",
                ))
            else:
                seen[perm] = wd
        target = set(enumerate_updown_avoiders(n))
        checked += len(target)
        for perm in sorted(target - set(seen)):
            failures.append(_fail(perm_text(perm), "hit by some weighted path", "missed"))
        for perm in sorted(set(seen) - target):
            failures.append(_fail(
                serialize_path(seen[perm]),
                "an up-down permutation avoiding 1234",
                perm_text(perm),
            ))
    return checked, failures


def _suite_roundtrip(cap: int, rule: str) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    for n in range(cap + 1):
        for wd in enumerate_weighted(n):
            checked += 1
            sigma = to_permutation(wd, rule).perm
            text = serialize_path(wd)
            try:
                back = from_permutation(sigma, rule)
            except Exception as exc:  # noqa: BLE001 - report, don't crash the suite
                failures.append(_fail(text, "inverse succeeds", f"{type(exc).__name__}: {exc}"))
                continue
            if back != wd:
                failures.append(_fail(text, text, serialize_path(back)))
            brute = from_permutation_brute(sigma, cap_n=max(cap, 7), rule=rule)
            if brute != wd:
                failures.append(_fail(text, text, f"brute: {serialize_path(brute)}"))
    return checked, failures


def _suite_schutzenberger(cap: int, rule: str) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    for n in range(cap + 1):
        for wd in enumerate_weighted(n):
            checked += 1
            lhs = to_permutation(reflect(wd), rule).perm
            rhs = schutzenberger(to_permutation(wd, rule).perm)
            if lhs != rhs:
                failures.append(_fail(serialize_path(wd), perm_text(rhs), perm_text(lhs)))
    return checked, failures


def _suite_product(cap: int, rule: str) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    pools = {a: [(wd, to_permutation(wd, rule).perm) for wd in enumerate_weighted(a)]
             for a in range(cap + 1)}
    for a in range(cap + 1):
        for b in range(cap + 1 - a):
            for p, p_img in pools[a]:
                for q, q_img in pools[b]:
                    checked += 1
                    lhs = to_permutation(concat(p, q), rule).perm
                    rhs = shifted_concat(q_img, p_img)
                    if lhs != rhs:
                        failures.append(_fail(
                            f"{serialize_path(p)} * {serialize_path(q)}",
                            perm_text(rhs), perm_text(lhs)))
    return checked, failures


def _suite_statistic(cap: int, rule: str) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    for n in range(cap + 1):
        for wd in enumerate_weighted(n):
            checked += 1
            bots = sorted(to_permutation(wd, rule).perm[0::2])
            ups = [i for i, s in enumerate(wd.path.steps, start=1) if s == UP]
            if bots != ups:
                failures.append(_fail(serialize_path(wd), str(ups), str(bots)))
    return checked, failures


def _suite_criteria(cap: int, rule: str) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    for m in range(cap + 1):
        for p in itertools.permutations(range(1, 2 * m + 1)):
            checked += 1
            ground = is_up_down(p) and avoids_1234(p)
            if _criteria_verdict(p) != ground:
                failures.append(_fail(perm_text(p), str(ground), str(not ground)))
    return checked, failures


def _suite_insertion_lemma(cap: int, rule: str) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    for n in range(cap + 1):
        for wd in _irreducible(n):
            checked += 1
            text = serialize_path(wd)
            steps = wd.path.steps
            h = _height_profile(steps)
            weights = wd.weights
            try:
                _, trace = _run_insertion(steps, weights, rule, want_trace=True)
            except InsertionOverflowError as exc:
                failures.append(_fail(text, "no insertion overflow", str(exc)))
                continue
            infos = _up_infos(steps, rule)
            prev_shift = 0
            for length_before, (info, st) in enumerate(zip(infos, trace)):
                if st.shift < prev_shift:
                    failures.append(_fail(text, "non-decreasing shifts", f"rise {st.position}"))
                prev_shift = st.shift
                bound = _bound_of(info, h, lambda i: weights[i - 1])
                left_w = weights[info.pos - 2] if info.pos >= 2 else None
                right_w = weights[info.pos] if info.pos < len(steps) else None
                lo, hi = _local_span(steps, h, info.pos, left_w, right_w)
                dists = set()
                for alt in range(lo, hi + 1):
                    if alt == bound:
                        continue
                    d = alt + info.shift - (1 if info.membership == LEFT else 0)
                    if d < 0 or d > length_before:
                        failures.append(_fail(
                            text,
                            f"feasible weight {alt} of rise {info.pos} lands in [0,{length_before}]",
                            f"distance {d}"))
                    if d < st.shift:
                        failures.append(_fail(
                            text,
                            f"distance of rise {info.pos} at least shift {st.shift}",
                            f"distance {d}"))
                    if d in dists:
                        failures.append(_fail(
                            text, f"distinct distances at rise {info.pos}", f"repeat {d}"))
                    dists.add(d)
    return checked, failures


def _suite_transformation(cap: int, rule: str) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    for n in range(cap + 1):
        for wd in _irreducible(n):
            checked += 1
            text = serialize_path(wd)
            try:
                pf = flatten_to_single_slope(wd, rule)
            except Exception as exc:  # noqa: BLE001
                failures.append(_fail(text, "a valid parking function", str(exc)))
                continue
            word, _ = _run_insertion(wd.path.steps, wd.weights, rule, want_trace=False)
            expect = standardize(word)
            got = parking_to_123_avoiding(pf)
            if got != expect:
                failures.append(_fail(text, perm_text(expect), perm_text(got)))
    return checked, failures


def _parking_functions(n: int) -> Iterator[tuple[int, ...]]:
    vals: list[int] = []

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(vals)
            return
        lo = vals[-1] if vals else 0
        for v in range(lo, i + 1):
            vals.append(v)
            yield from rec(i + 1)
            vals.pop()

    yield from rec(0)


def _suite_parking(cap: int, rule: str) -> tuple[int, list[dict]]:
    from .bijection import ParkingFunction

    checked = 0
    failures: list[dict] = []
    for n in range(cap + 1):
        images: dict[tuple[int, ...], tuple[int, ...]] = {}
        for vals in _parking_functions(n):
            checked += 1
            word = parking_to_123_avoiding(ParkingFunction(vals))
            if not avoids_123_word(word):
                failures.append(_fail(str(list(vals)), "image avoids 123", perm_text(word)))
            if word in images:
                failures.append(_fail(
                    str(list(vals)), "a fresh image",
                    f"{perm_text(word)} already hit by {list(images[word])}"))
            images[word] = vals
        ref = CATALAN[n] if n < len(CATALAN) else None
        if ref is not None and len(images) != ref:
            failures.append(_fail(f"image count, n={n}", str(ref), str(len(images))))
    return checked, failures


def _suite_topword(cap: int, rule: str) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    for n in range(cap + 1):
        for wd in _irreducible(n):
            checked += 1
            raw, _ = _run_insertion(_reflected_steps(wd.path.steps),
                                    wd.weights[::-1], rule, want_trace=False)
            via_reflection = schutzenberger_word(raw, len(wd))
            direct = top_word_direct(wd, rule)
            if direct != via_reflection:
                failures.append(_fail(serialize_path(wd),
                                      perm_text(via_reflection), perm_text(direct)))
    return checked, failures


_SUITE_FUNCS = {
    "counts": _suite_counts,
    "bijectivity": _suite_bijectivity,
    "roundtrip": _suite_roundtrip,
    "schutzenberger": _suite_schutzenberger,
    "product": _suite_product,
    "statistic": _suite_statistic,
    "criteria": _suite_criteria,
    "insertion_lemma": _suite_insertion_lemma,
    "transformation": _suite_transformation,
    "parking": _suite_parking,
    "topword_equivalence": _suite_topword,
}


def run_suite(suite: str, max_n: Optional[int] = None, rule: str = SPLIT_CEIL,
              jobs: int = 1) -> VerificationReport:
    """Run one suite exhaustively up to max_n (the suite's default cap when
    None).  The jobs hint is accepted for interface stability; execution is
    serial, so reports never depend on it.  Failures are reported in the
    deterministic order the instances are enumerated."""
    if suite not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {suite!r}")
    if jobs < 1:
        raise ValueError("jobs must be positive")
    cap = DEFAULT_CAPS[suite] if max_n is None else max_n
    start = time.perf_counter()
    checked, failures = _SUITE_FUNCS[suite](cap, rule)
    return VerificationReport(suite, (0, cap), checked, tuple(failures),
                              time.perf_counter() - start)


def run_all(max_n: Optional[int] = None, rule: str = SPLIT_CEIL,
            jobs: int = 1) -> list[VerificationReport]:
    """Run every suite at its default cap, lowered to max_n when given."""
    out = []
    for suite in SUITES:
        cap = DEFAULT_CAPS[suite] if max_n is None else min(DEFAULT_CAPS[suite], max_n)
        out.append(run_suite(suite, cap, rule, jobs))
    return out
