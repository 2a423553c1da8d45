"""Lazily evaluated biquaternion sequences f_0, f_1, f_2, ..."""
from __future__ import annotations

from .algebra import ONE, ZERO, Biquaternion, as_biquaternion


class Sequence:
    """A deterministic map from index n >= 0 to a biquaternion.

    Terms are memoized, so repeated evaluation at the same index returns the
    identical value and term functions may be shared between threads.
    ``radius_hint`` optionally records an analytically known convergence
    radius for the sequence's Z transform.
    """

    __slots__ = ("_fn", "_cache", "radius_hint", "name")

    def __init__(self, fn, radius_hint: float | None = None, name: str | None = None):
        self._fn = fn
        self._cache: dict[int, Biquaternion] = {}
        self.radius_hint = radius_hint
        self.name = name

    def term(self, n: int) -> Biquaternion:
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"sequence index must be a nonnegative integer, got {n!r}")
        cached = self._cache.get(n)
        if cached is None:
            cached = as_biquaternion(self._fn(n))
            self._cache[n] = cached
        return cached

    __call__ = term

    def prefix(self, count: int) -> list[Biquaternion]:
        return [self.term(n) for n in range(count)]

    @classmethod
    def constant(cls, value) -> "Sequence":
        c = as_biquaternion(value)
        return cls(lambda n: c, radius_hint=1.0 if c != ZERO else 0.0, name="constant")

    @classmethod
    def geometric(cls, ratio) -> "Sequence":
        p = as_biquaternion(ratio)
        return cls(lambda n: p**n, name="geometric")

    @classmethod
    def from_terms(cls, values, tail=ZERO) -> "Sequence":
        head = [as_biquaternion(v) for v in values]
        rest = as_biquaternion(tail)
        return cls(lambda n: head[n] if n < len(head) else rest, name="from_terms")

    @classmethod
    def delta(cls) -> "Sequence":
        return cls(lambda n: ONE if n == 0 else ZERO, radius_hint=0.0, name="delta")

    def __repr__(self):
        label = self.name or "anonymous"
        return f"Sequence({label}, radius_hint={self.radius_hint})"


def advance(f: Sequence, k: int) -> Sequence:
    """n -> f(n + k): drop the first k terms."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    return Sequence(lambda n: f.term(n + k), radius_hint=f.radius_hint, name="advance")


def delay(f: Sequence, k: int) -> Sequence:
    """n -> f(n - k), zero-padded for n < k."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    return Sequence(
        lambda n: f.term(n - k) if n >= k else ZERO,
        radius_hint=f.radius_hint,
        name="delay",
    )
