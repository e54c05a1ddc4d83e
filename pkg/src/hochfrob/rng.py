"""Deterministic cross-platform randomness for trials and fixtures.

The generator is splitmix64: state advances by the golden-gamma
constant and each output is a 64-bit mix of the state.  Streams are
keyed by (seed, group spec, field spec, degree, stream tag) through an
FNV-1a hash, so a (config, purpose) pair always replays identically on
any platform.  Rational coefficients are drawn from {-2, ..., 2};
prime-field coefficients are uniform residues.
"""

from __future__ import annotations

from typing import Iterator

from .cochains import BarCochain, Cochain, check_entry_budget
from .groups import FiniteGroup
from .scalars import Field

MASK64 = (1 << 64) - 1


def splitmix64_stream(seed: int) -> Iterator[int]:
    state = seed & MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def fnv1a(*parts: str) -> int:
    h = 0xCBF29CE484222325
    for part in parts:
        for byte in part.encode("utf-8"):
            h ^= byte
            h = (h * 0x100000001B3) & MASK64
        h ^= 0x1F
        h = (h * 0x100000001B3) & MASK64
    return h


def stream_for(seed: int, *key_parts: str) -> Iterator[int]:
    return splitmix64_stream((seed ^ fnv1a(*key_parts)) & MASK64)


def _draw(field: Field, word: int):
    if field.is_rationals:
        return int(word % 5) - 2
    return int(word % field.p)


def random_cochain(group: FiniteGroup, field: Field, degree: int, seed: int,
                   tag: str = "cochain", budget: int | None = None) -> Cochain:
    """Deterministic dense cochain for the given (group, field, degree, seed)."""
    size = group.order ** (degree + 1)
    check_entry_budget(size, budget)
    stream = stream_for(seed, group.name, field.spec(), str(degree), tag)
    values = [_draw(field, next(stream)) for _ in range(size)]
    return Cochain(group, field, degree, values, budget=budget)


def random_bar_cochain(group: FiniteGroup, field: Field, degree: int, seed: int,
                       tag: str = "bar", budget: int | None = None) -> BarCochain:
    size = group.order ** (degree + 1)
    check_entry_budget(size, budget)
    stream = stream_for(seed, group.name, field.spec(), str(degree), tag)
    values = [_draw(field, next(stream)) for _ in range(size)]
    return BarCochain(group, field, degree, values, budget=budget)


def random_identity_supported_cochain(group: FiniteGroup, field: Field, degree: int,
                                      seed: int, budget: int | None = None) -> Cochain:
    """Random cochain supported on tuples whose product is the identity."""
    from .cochains import restrict_to_identity_support

    return restrict_to_identity_support(
        random_cochain(group, field, degree, seed, tag="esupp", budget=budget))
