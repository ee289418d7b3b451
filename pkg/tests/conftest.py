from __future__ import annotations

from functools import lru_cache

from hypothesis import settings

from unimodcat.families import a0, a1, named_group, regular_comodule, taft, trivial_comodule

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@lru_cache(maxsize=None)
def taft_c(N: int):
    return taft(N)


@lru_cache(maxsize=None)
def group_c(name: str):
    return named_group(name)


@lru_cache(maxsize=None)
def a0_c(N: int, d: int):
    return a0(N, d, taft_c(N))


@lru_cache(maxsize=None)
def a1_c(N: int, d: int, xi):
    return a1(N, d, xi, taft_c(N))


@lru_cache(maxsize=None)
def trivial_c(kind: str, arg):
    return trivial_comodule(taft_c(arg) if kind == "taft" else group_c(arg))


@lru_cache(maxsize=None)
def regular_c(kind: str, arg):
    return regular_comodule(taft_c(arg) if kind == "taft" else group_c(arg))
