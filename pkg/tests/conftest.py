import functools

import pytest

from resilat.corpus import builtin
from resilat.enumeration import enumerate_lattices, enumerate_rrl_groupoids
from resilat.transforms import transform


@functools.lru_cache(maxsize=None)
def lattices_up_to(n):
    return tuple(L for k in range(1, n + 1) for L in enumerate_lattices(k))


@functools.lru_cache(maxsize=None)
def groupoids_up_to(n):
    return tuple(G for L in lattices_up_to(n) for G in enumerate_rrl_groupoids(L))


CORPUS_GROUPOID_SOURCES = ("c2", "godel-3", "boolean-4", "boolean-8", "lukasiewicz-3", "lukasiewicz-4",
                           "n5-involution", "mo2", "nelson-3")


@functools.lru_cache(maxsize=None)
def corpus_groupoids():
    out = {}
    for name in CORPUS_GROUPOID_SOURCES:
        kind, s = builtin(name)
        out[name] = transform(s, kind, "rrl-groupoid")
    return out


@pytest.fixture(scope="session")
def corpus():
    return corpus_groupoids()
