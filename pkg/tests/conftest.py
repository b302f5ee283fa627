"""Shared sweep data and independent mini-oracles for the test suite.

The expensive artefacts (hook configurations for whole symmetric groups,
stack-sort image tallies) are built once per session and shared; everything
else here is a deliberately naive re-implementation used to cross-check the
engine.
"""
from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache

import pytest

from stacksort import induced_composition, iter_vhc, stack_sort


def all_perms(n):
    return itertools.permutations(range(1, n + 1))


@lru_cache(maxsize=None)
def vhc_table(n):
    """perm -> (configs, comps) for every word in S_n."""
    table = {}
    for w in all_perms(n):
        configs = list(iter_vhc(w))
        table[w] = (configs, [induced_composition(w, c) for c in configs])
    return table


@lru_cache(maxsize=None)
def image_counts(n):
    """Counter of stack-sort images over S_n: the brute-force fertility of
    any w in S_n is image_counts(n)[w]."""
    return Counter(stack_sort(w) for w in all_perms(n))


def compositions_of(total, parts):
    """All compositions of ``total`` into ``parts`` positive parts."""
    if parts == 1:
        return [(total,)] if total >= 1 else []
    out = []
    for first in range(1, total - parts + 2):
        out.extend((first,) + rest for rest in compositions_of(total - first, parts - 1))
    return out


def naive_point_colors(p, config):
    """Reference coloring rule: scan every hook for every point."""
    n = len(p)
    ne_cols = {h.ne for h in config}
    colors = []
    for x in range(1, n + 1):
        if x in ne_cols:
            colors.append(-1)
            continue
        best, best_v = 0, None
        for t, h in enumerate(config, start=1):
            if h.sw < x < h.ne and (best_v is None or p[h.ne - 1] < best_v):
                best, best_v = t, p[h.ne - 1]
        colors.append(best)
    return tuple(colors)


@pytest.fixture(scope="session")
def tables6():
    return {n: vhc_table(n) for n in range(1, 7)}


@pytest.fixture(scope="session")
def tables7():
    return {n: vhc_table(n) for n in range(1, 8)}
