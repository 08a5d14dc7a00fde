"""Sparse vectors as plain dicts ``basis key -> coefficient`` (no stored zeros)."""

from __future__ import annotations


def add_term(vec: dict, key, coeff) -> None:
    """In place ``vec += coeff * key``, dropping the entry if it cancels."""
    if not coeff:
        return
    if key in vec:
        coeff = vec[key] + coeff
        if coeff:
            vec[key] = coeff
        else:
            del vec[key]
    else:
        vec[key] = coeff


def add_scaled(vec: dict, other: dict, scale=1) -> dict:
    """In place ``vec += scale * other``; returns ``vec``."""
    for key, c in other.items():
        add_term(vec, key, c * scale)
    return vec


def vsum(*vecs: dict) -> dict:
    out: dict = {}
    for v in vecs:
        add_scaled(out, v)
    return out


def vsub(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, c in b.items():
        add_term(out, key, -c)
    return out


def vscale(vec: dict, c) -> dict:
    if not c:
        return {}
    return {k: x * c for k, x in vec.items()}


def apply(op, vec: dict) -> dict:
    """Extend ``op: key -> dict`` linearly to a sparse vector."""
    out: dict = {}
    for key, c in vec.items():
        add_scaled(out, op(key), c)
    return out


def compose(*ops):
    """Operator product; the rightmost operator is applied first."""
    def op(key):
        vec = {key: 1}
        for f in reversed(ops):
            vec = apply(f, vec)
        return vec
    return op


def commutator_on(a, b, key) -> dict:
    """``(ab - ba)`` applied to a single basis element."""
    return vsub(apply(a, b(key)), apply(b, a(key)))
