"""Hook configurations and the fertility of a permutation.

The number of stack-sorting preimages of a word can be computed without ever
enumerating preimages. Draw the plot of ``p`` (1-based columns and values).
A *hook* runs from a southwest endpoint (i, p_i) vertically up and then right
to a northeast endpoint (j, p_j); this forces i < j and p_i < p_j. A *valid
hook configuration* places one hook per descent, subject to:

1. the southwest endpoints are exactly the descent tops;
2. no plot point lies strictly above a hook, i.e. p_x < p_j for all i < x < j;
3. two hooks (i, j) and (i', j') with i < i' are either disjoint (j <= i',
   where j = i' is allowed: an endpoint may be shared corner-to-corner) or
   strictly nested (i' < j' < j). Equal northeast endpoints and crossings
   are forbidden.

Each configuration colors the plot: the k northeast endpoints stay uncolored,
and every other point takes the color of the lowest hook passing over its
column, or the sky color if none does (a southwest endpoint looks past its
own hook). Counting points per color, sky first, gives a composition
(q_0, ..., q_k) of n - k into k + 1 positive parts; distinct configurations
induce distinct compositions. The fertility of ``p`` is the sum, over the
induced compositions, of the products of Catalan numbers of the parts.

Configurations are produced in a canonical order: descents are filled left to
right and northeast columns scanned increasingly, so the output is sorted
lexicographically by the tuple of northeast columns.
"""
from __future__ import annotations

import itertools
import math
from bisect import bisect
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    LengthMismatchError,
    NotStationaryError,
    PreconditionFailedError,
    ReductionNotFoundError,
    SumMismatchError,
    UnsortedPermutationError,
)
from .perms import Perm, descents, normalize

Composition = tuple[int, ...]


class Hook(NamedTuple):
    """A hook identified by the 1-based columns of its two endpoints."""

    sw: int
    ne: int


HookConfig = tuple[Hook, ...]


def _ne_candidates(p: Sequence[int], d: int) -> list[int]:
    """Columns j > d that can terminate a hook starting at column d.

    Requires p_j above the start value and above every entry strictly
    between (constraint 2).
    """
    out = []
    hi = 0
    for j in range(d + 1, len(p) + 1):
        v = p[j - 1]
        if v > hi:
            if v > p[d - 1]:
                out.append(j)
            hi = v
    return out


def iter_vhc(p: Sequence[int]) -> Iterator[HookConfig]:
    """Yield every valid hook configuration of ``p`` in canonical order.

    A word with no descents has exactly one configuration, the empty one; an
    unsorted word yields nothing.
    """
    ds = descents(p)
    k = len(ds)
    if k == 0:
        yield ()
        return
    n = len(p)
    cands = [_ne_candidates(p, d) for d in ds]

    # Pruning oracle: can descents ds[t:] with column < stop all be hooked
    # with northeast column < stop? Exact for the subproblem, since hooks
    # nested under a bound are independent of everything outside it. A word
    # may have hundreds of descents, so this runs on an explicit stack.
    memo: dict[tuple[int, int], bool] = {}

    def trivially_true(t: int, stop: int) -> bool:
        return t >= k or ds[t] >= stop

    def feasible(t0: int, stop0: int) -> bool:
        if trivially_true(t0, stop0):
            return True
        stack = [[t0, stop0, 0]]
        while stack:
            frame = stack[-1]
            t, stop, ci = frame
            key = (t, stop)
            if key in memo:
                stack.pop()
                continue
            clist = cands[t]
            decided = None
            while ci < len(clist):
                j = clist[ci]
                if j >= stop:
                    break
                # descents under the new hook continue with bound j; the
                # first ordinal at or past column j keeps the old bound
                inner = (t + 1, j)
                v1 = True if trivially_true(*inner) else memo.get(inner)
                if v1 is None:
                    frame[2] = ci
                    stack.append([*inner, 0])
                    decided = Ellipsis
                    break
                if v1:
                    rest = (bisect(ds, j - 1), stop)
                    v2 = True if trivially_true(*rest) else memo.get(rest)
                    if v2 is None:
                        frame[2] = ci
                        stack.append([*rest, 0])
                        decided = Ellipsis
                        break
                    if v2:
                        decided = True
                        break
                ci += 1
            if decided is Ellipsis:
                continue  # a child was pushed; resume this frame later
            memo[key] = bool(decided)
            stack.pop()
        return memo[(t0, stop0)]

    # Backtracking on an explicit stack as well. frames[t] holds the
    # candidate cursor for descent t plus the open northeast bounds in
    # effect there; the innermost bound alone constrains the next choice.
    chosen: list[Hook] = []
    frames: list[list] = []

    def enter(t: int, bounds: tuple[int, ...]) -> None:
        d = ds[t]
        while bounds and bounds[-1] <= d:
            bounds = bounds[:-1]  # hooks ending at or before d no longer bind
        frames.append([0, bounds, bounds[-1] if bounds else n + 1])

    enter(0, ())
    while frames:
        frame = frames[-1]
        t = len(frames) - 1
        ci, bounds, limit = frame
        clist = cands[t]
        descended = False
        while ci < len(clist):
            j = clist[ci]
            if j >= limit:
                break
            if feasible(t + 1, j):
                chosen.append(Hook(ds[t], j))
                if len(chosen) == k:
                    yield tuple(chosen)
                    chosen.pop()
                else:
                    frame[0] = ci + 1
                    enter(t + 1, bounds + (j,))
                    descended = True
                    break
            ci += 1
        if descended:
            continue
        frames.pop()
        if chosen:
            chosen.pop()


def enumerate_vhc(p: Sequence[int]) -> list[HookConfig]:
    """All valid hook configurations of ``p``, canonically ordered.

    >>> enumerate_vhc((2, 1))
    []
    >>> enumerate_vhc((1, 2, 3))
    [()]
    """
    return list(iter_vhc(p))


def point_colors(p: Sequence[int], config: HookConfig) -> tuple[int, ...]:
    """Color of each plot point under ``config``: 0 for sky, t for the t-th
    hook, -1 for an uncolored northeast endpoint.

    ``config`` must come from :func:`iter_vhc` for the same word.
    """
    starts = {h.sw: t for t, h in enumerate(config, start=1)}
    ends = {h.ne for h in config}
    colors = [0] * len(p)
    active: list[int] = []  # hook ordinals covering the current column, innermost last
    for x in range(1, len(p) + 1):
        if x in ends:
            active.pop()  # nesting means the ending hook is always innermost
            colors[x - 1] = -1
        elif active:
            colors[x - 1] = active[-1]
        t = starts.get(x)
        if t is not None:
            active.append(t)
    return tuple(colors)


def induced_composition(p: Sequence[int], config: HookConfig) -> Composition:
    """The composition (q_0, ..., q_k) counting points per color.

    >>> induced_composition((1, 2, 3), ())
    (3,)
    """
    if not p:
        return ()
    counts = [0] * (len(config) + 1)
    for c in point_colors(p, config):
        if c >= 0:
            counts[c] += 1
    return tuple(counts)


def valid_compositions(p: Sequence[int]) -> set[Composition]:
    """The set of compositions induced by the configurations of ``p``.

    Its size equals the number of configurations (the induced map is
    injective), so an unsorted word gives the empty set.
    """
    return {induced_composition(p, config) for config in iter_vhc(p)}


def catalan(j: int) -> int:
    """The j-th Catalan number, exactly.

    >>> [catalan(j) for j in range(7)]
    [1, 1, 2, 5, 14, 42, 132]
    """
    if j < 0:
        raise ValueError("catalan is defined for nonnegative arguments")
    return math.comb(2 * j, j) // (j + 1)


def composition_weight(q: Sequence[int]) -> int:
    """Product of the Catalan numbers of the parts.

    >>> composition_weight((4, 2))
    28
    """
    return math.prod(catalan(x) for x in q)


def fertility(p: Sequence[int], early_exit: int | None = None) -> int | None:
    """Number of stack-sorting preimages of ``p``, by the hook formula.

    Sums the Catalan weight of every induced composition; an unsorted word
    has fertility 0. When ``early_exit`` is given, returns ``None`` as soon
    as the running sum exceeds it (an exact result equal to ``early_exit``
    is still returned).

    >>> fertility((3, 1, 4, 2, 5, 6, 7))
    27
    >>> fertility((2, 1))
    0
    """
    total = 0
    seen: set[Composition] = set()
    for config in iter_vhc(p):
        q = induced_composition(p, config)
        if q in seen:
            continue
        seen.add(q)
        total += composition_weight(q)
        if early_exit is not None and total > early_exit:
            return None
    return total


def is_sorted(p: Sequence[int]) -> bool:
    """True when ``p`` has positive fertility, i.e. some configuration exists."""
    return next(iter_vhc(p), None) is not None


def stationary_hooks(p: Sequence[int]) -> set[Hook]:
    """Hooks present in every configuration of ``p``.

    >>> stationary_hooks((3, 1, 2, 4))
    {Hook(sw=1, ne=4)}
    """
    configs = iter_vhc(p)
    first = next(configs, None)
    if first is None:
        raise UnsortedPermutationError("an unsorted word has no hooks at all")
    common = set(first)
    for config in configs:
        common &= set(config)
        if not common:
            break
    return common


def factor_at_hook(p: Sequence[int], hook: Hook) -> tuple[Perm, Perm]:
    """Split ``p`` at a stationary hook into an outer and an inner word.

    For a stationary hook with endpoints at columns i < j, the outer word is
    p_1 .. p_{i+1} p_j .. p_n and the inner word is p_{i+1} .. p_{j-1} (the
    entry after the southwest corner appears in both). The fertility of ``p``
    is the product of the fertilities of the two parts.
    """
    hook = Hook(*hook)
    if hook not in stationary_hooks(p):
        raise NotStationaryError(f"{hook} is not stationary for {tuple(p)}")
    i, j = hook
    outer = tuple(p[:i + 1]) + tuple(p[j - 1:])
    inner = tuple(p[i:j - 1])
    return outer, inner


def interval_dominates(q: Sequence[int], q1: Sequence[int], q2: Sequence[int]) -> bool:
    """Whether every window sum of ``q`` reaches the smaller of the
    corresponding window sums of ``q1`` and ``q2``.

    All three must have the same length and the same total.
    """
    if not (len(q) == len(q1) == len(q2)):
        raise LengthMismatchError("compositions must have equal length")
    if not (sum(q) == sum(q1) == sum(q2)):
        raise SumMismatchError("compositions must have equal part sums")
    k = len(q)
    for m1 in range(k):
        s = s1 = s2 = 0
        for m2 in range(m1, k):
            s += q[m2]
            s1 += q1[m2]
            s2 += q2[m2]
            if s < min(s1, s2):
                return False
    return True


def _project(comps: set[Composition], i: int) -> set[Composition]:
    return {q[:i] + q[i + 1:] for q in comps}


def _reduction_candidate(p: Sequence[int], hook: Hook) -> Perm:
    """Delete a stationary hook and re-rank the survivors by region.

    Points strictly under the hook keep their columns shifted left by one and
    their values moved into a middle band; points outside the span move to a
    low band when they sit under the nearer hook corner (below the southwest
    value on the left, below the northeast value on the right) and to a high
    band otherwise. Relative order inside each band is preserved. The caller
    verifies the outcome, so this only has to be right in practice.
    """
    ic, jc = hook
    a, b = p[ic - 1], p[jc - 1]
    remaining = [(x, p[x - 1]) for x in range(1, len(p) + 1) if x != ic and x != jc]

    def band(x: int, v: int) -> int:
        if ic < x < jc:
            return 1
        return 0 if v < (a if x < ic else b) else 2

    by_value = sorted(remaining, key=lambda pt: (band(*pt), pt[1]))
    rank = {pt: r for r, pt in enumerate(by_value, start=1)}
    return tuple(rank[pt] for pt in remaining)


def reduce_stationary(p: Sequence[int], i: int) -> Perm:
    """Shrink ``p`` by two letters while deleting the i-th part of every
    induced composition, which must equal 1 throughout.

    ``i`` is a 1-based descent ordinal. When q_i = 1 for every induced
    composition, the i-th hook is the same in every configuration; removing
    it yields a word in S_{n-2} whose composition set is the projection of
    the original one (and whose fertility therefore matches). The
    construction is verified before being returned; if the direct build ever
    misses, an exhaustive search over S_{n-2} is attempted instead.
    """
    word = tuple(p)
    n = len(word)
    configs = enumerate_vhc(word)
    if not configs:
        raise PreconditionFailedError("reduction requires a sorted permutation")
    if n < 3:
        raise PreconditionFailedError("reduction requires length at least 3")
    k = len(configs[0])
    if not 1 <= i <= k:
        raise PreconditionFailedError(f"descent ordinal {i} out of range 1..{k}")
    comps = {induced_composition(word, c) for c in configs}
    if any(q[i] != 1 for q in comps):
        raise PreconditionFailedError(f"part {i} is not 1 in every induced composition")

    hook = configs[0][i - 1]
    assert all(c[i - 1] == hook for c in configs), "a forced part implies a stationary hook"

    target = _project(comps, i)
    candidate = normalize(_reduction_candidate(word, hook))
    if valid_compositions(candidate) == target:
        return candidate
    for z in itertools.permutations(range(1, n - 1)):
        if valid_compositions(z) == target:
            return z
    raise ReductionNotFoundError(f"no word in S_{n - 2} realises the projected set")
