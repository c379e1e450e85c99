"""Exact arithmetic over Q(i)(u, x, x0, x1, t0, t1, t2, t3) with q = u^4."""

from .gaussian import GaussianRational
from .kernel import NAME as KERNEL
from .probe import UnluckyEvaluation, probe_eq, probe_zero
from .ratfunc import (
    I,
    ONE,
    ZERO,
    DivisionByZero,
    RatFunc,
    SubstitutionPole,
    parse,
    var,
)

u = var("u")
x = var("x")
x0 = var("x0")
x1 = var("x1")
t0 = var("t0")
t1 = var("t1")
t2 = var("t2")
t3 = var("t3")


def ch(z):
    """z + 1/z"""
    return z + z.inverse()


def sh(z):
    """z - 1/z"""
    return z - z.inverse()


def rf_substitute(f, bindings):
    return f.subs(bindings)


def rf_probe_eq(a, b, seed=0):
    return probe_eq(a, b, seed)


def rf_arith(a, b, kind):
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


__all__ = [
    "GaussianRational", "KERNEL", "UnluckyEvaluation", "probe_eq", "probe_zero",
    "I", "ONE", "ZERO", "DivisionByZero", "RatFunc", "SubstitutionPole", "parse", "var",
    "u", "x", "x0", "x1", "t0", "t1", "t2", "t3", "ch", "sh", "rf_arith",
    "rf_substitute", "rf_probe_eq",
]
