"""Decorated ordered set partitions, family admissibility and the winding map.

A decorated ordered set partition of ``{1..n}`` is a sequence of disjoint
blocks ``(L_1, ..., L_k)`` covering the ground set, each carrying a positive
integer decoration ``l_i``.  Every operation here works on the canonical
representative, the one with ``1 in L_1``.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator


class PartitionError(ValueError):
    """Base class for malformed decorated ordered set partitions."""


class OverlappingBlocks(PartitionError):
    pass


class MissingElements(PartitionError):
    pass


class NonPositiveDecoration(PartitionError):
    pass


class NotCanonical(PartitionError):
    pass


class InvalidFamily(ValueError):
    pass


class ModulusMismatch(ValueError):
    pass


class NotAdmissible(ValueError):
    pass


class LevelNotDivisible(ValueError):
    pass


class NoPreimage(ValueError):
    pass


@dataclass(frozen=True)
class DecoratedOSP:
    """Ordered set partition of ``{1..n}`` with a positive decoration per block.

    Blocks are stored as sorted tuples.  Construction normalizes but does not
    validate; call :func:`validate` (or build via :meth:`parse`) for that.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]
    decorations: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "decorations", tuple(int(l) for l in self.decorations))

    @property
    def total(self) -> int:
        return sum(self.decorations)

    def to_text(self) -> str:
        return "|".join(
            "{" + ",".join(map(str, b)) + "}_" + str(l)
            for b, l in zip(self.blocks, self.decorations)
        )

    __str__ = to_text

    @classmethod
    def parse(cls, text: str) -> "DecoratedOSP":
        """Parse the ``{1,5,6}_2|{2,9}_1`` encoding and validate the result."""
        blocks, decorations = [], []
        for part in text.strip().split("|"):
            m = _BLOCK_RE.fullmatch(part.strip())
            if m is None:
                raise PartitionError(f"cannot parse block {part!r}")
            elems = m.group(1).strip()
            blocks.append(tuple(int(e) for e in elems.split(",")) if elems else ())
            decorations.append(int(m.group(2)))
        n = sum(len(b) for b in blocks)
        p = cls(n, tuple(blocks), tuple(decorations))
        validate(p)
        return p


_BLOCK_RE = re.compile(r"\{([0-9,\s]*)\}_(-?\d+)")


def validate(p: DecoratedOSP) -> None:
    """Raise a :class:`PartitionError` subclass unless ``p`` is a valid canonical partition."""
    if len(p.blocks) != len(p.decorations):
        raise PartitionError("blocks and decorations differ in length")
    if not p.blocks:
        raise MissingElements("no blocks")
    seen: set[int] = set()
    for b in p.blocks:
        if not b:
            raise MissingElements("empty block")
        for e in b:
            if e in seen:
                raise OverlappingBlocks(f"element {e} appears in more than one block")
            seen.add(e)
    if seen != set(range(1, p.n + 1)):
        missing = sorted(set(range(1, p.n + 1)) - seen)
        extra = sorted(seen - set(range(1, p.n + 1)))
        raise MissingElements(f"blocks do not cover 1..{p.n}: missing {missing}, extra {extra}")
    for l in p.decorations:
        if l < 1:
            raise NonPositiveDecoration(f"decoration {l} is not positive")
    if 1 not in p.blocks[0]:
        raise NotCanonical("element 1 is not in the first block")


class Kind(str, enum.Enum):
    HYPERSIMPLEX = "hypersimplex"
    SIMPLEX = "simplex"
    SLICE = "slice"


@dataclass(frozen=True)
class FamilySpec:
    """One polytope instance together with its decoration rule.

    Block ``L`` admits decorations ``1 <= l <= scale*|L| - 1`` where ``scale``
    is 1 for hypersimplices and ``r`` otherwise; decorations sum to ``total``.
    """

    kind: Kind
    n: int
    total: int
    r: int = 1
    params: dict = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def hypersimplex(cls, a: int, b: int) -> "FamilySpec":
        n = a + b
        if not (1 <= a < n and b >= 1):
            raise InvalidFamily(f"hypersimplex needs 1 <= a < n, got a={a}, b={b}")
        return cls(Kind.HYPERSIMPLEX, n, a, 1, {"a": a, "b": b})

    @classmethod
    def simplex(cls, r: int, n: int) -> "FamilySpec":
        if r < 1 or n < 2:
            raise InvalidFamily(f"dilated simplex needs r >= 1, n >= 2, got r={r}, n={n}")
        return cls(Kind.SIMPLEX, n, r, r, {"r": r, "n": n})

    @classmethod
    def slice(cls, r: int, n: int, s: int) -> "FamilySpec":
        if r < 1 or n < 1 or not (1 <= s <= r * n - 1):
            raise InvalidFamily(f"cube slice needs r, n >= 1 and 1 <= s <= rn-1, got r={r}, n={n}, s={s}")
        return cls(Kind.SLICE, n, s, r, {"r": r, "n": n, "s": s})

    @classmethod
    def from_params(cls, kind, **params) -> "FamilySpec":
        kind = Kind(kind)
        if kind is Kind.HYPERSIMPLEX:
            return cls.hypersimplex(params["a"], params["b"])
        if kind is Kind.SIMPLEX:
            return cls.simplex(params["r"], params["n"])
        return cls.slice(params["r"], params["n"], params["s"])

    @property
    def decoration_total(self) -> int:
        return self.total

    @property
    def winding_modulus(self) -> int:
        return self.total

    @property
    def hstar_length(self) -> int:
        return self.n

    @property
    def slice_params(self) -> tuple[int, int, int]:
        """``(r, s, n)`` such that the polytope is ``{x in [0,r]^n : sum x = s}``."""
        return self.r, self.total, self.n

    def upper_bound(self, size: int) -> int:
        return self.r * size - 1

    @property
    def min_block_size(self) -> int:
        return 2 if self.r == 1 else 1

    def sort_key(self) -> tuple:
        order = list(Kind).index(self.kind)
        if self.kind is Kind.HYPERSIMPLEX:
            return (order, self.n, self.total)
        if self.kind is Kind.SIMPLEX:
            return (order, self.r, self.n)
        return (order, self.r, self.n, self.total)

    def label(self) -> str:
        return f"{self.kind.value}(" + ",".join(f"{k}={v}" for k, v in self.params.items()) + ")"


def is_admissible(p: DecoratedOSP, family: FamilySpec) -> bool:
    if p.n != family.n or sum(p.decorations) != family.total:
        return False
    return all(1 <= l <= family.upper_bound(len(b)) for b, l in zip(p.blocks, p.decorations))


def _compositions(total, bounds):
    """Compositions of ``total`` with part ``i`` in ``[1, bounds[i]]``, lexicographic."""
    k = len(bounds)
    # suffix capacity for pruning
    cap = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        cap[i] = cap[i + 1] + bounds[i]
    parts = [0] * k

    def rec(i, rem):
        if i == k:
            if rem == 0:
                yield tuple(parts)
            return
        later = k - i - 1
        for l in range(max(1, rem - cap[i + 1]), min(bounds[i], rem - later) + 1):
            parts[i] = l
            yield from rec(i + 1, rem - l)

    yield from rec(0, total)


def enumerate_partitions(family: FamilySpec) -> Iterator[DecoratedOSP]:
    """Yield every canonical admissible partition for ``family`` exactly once.

    Elements ``2..n`` are assigned to ordered blocks (element 1 sits in block
    0) by surjective words taken in lexicographic order; each block structure is
    followed by its decoration compositions in lexicographic order.
    """
    n, total, scale = family.n, family.total, family.r
    min_size = family.min_block_size
    max_blocks = min(total, n // min_size)
    word = [0] * n
    sizes = [1] + [0] * (max_blocks - 1)

    def assign(j, top):
        # blocks 0..top must all end up nonempty and of size >= min_size;
        # the decoration capacity scale*n - (top+1) only shrinks as top grows
        if scale * n - (top + 1) < total:
            return
        deficit = sum(max(0, min_size - s) for s in sizes[: top + 1])
        if deficit > n - j:
            return
        if j == n:
            blocks = [[] for _ in range(top + 1)]
            for e, b in enumerate(word, start=1):
                blocks[b].append(e)
            blocks = tuple(tuple(b) for b in blocks)
            bounds = [scale * len(b) - 1 for b in blocks]
            for decs in _compositions(total, bounds):
                yield DecoratedOSP(n, blocks, decs)
            return
        for b in range(max_blocks):
            word[j] = b
            sizes[b] += 1
            yield from assign(j + 1, max(top, b))
            sizes[b] -= 1

    yield from assign(1, 0)


def count_admissible(family: FamilySpec) -> int:
    return sum(1 for _ in enumerate_partitions(family))


@dataclass(frozen=True)
class WindingData:
    positions: tuple[int, ...]
    winding_vector: tuple[int, ...]
    level: int
    winding_number: int


def position_labels(p: DecoratedOSP, a: int) -> tuple[int, ...]:
    """Cumulative decoration before the block of each element, reduced mod ``a``."""
    if a != sum(p.decorations):
        raise ModulusMismatch(f"modulus {a} differs from decoration total {sum(p.decorations)}")
    labels = [0] * p.n
    acc = 0
    for block, l in zip(p.blocks, p.decorations):
        for e in block:
            labels[e - 1] = acc % a
        acc += l
    return tuple(labels)


def winding_vector(p: DecoratedOSP, family: FamilySpec | None = None) -> WindingData:
    """Winding data of ``p``; the modulus is the family's decoration total.

    Without a family the modulus is the decoration total of ``p`` itself.
    """
    if family is not None:
        if not is_admissible(p, family):
            raise NotAdmissible(f"{p} is not admissible for {family.label()}")
        a = family.winding_modulus
    else:
        a = sum(p.decorations)
    pos = position_labels(p, a)
    n = p.n
    w = tuple((pos[(i + 1) % n] - pos[i]) % a for i in range(n))
    level = sum(w)
    if level % a:
        raise LevelNotDivisible(f"level {level} not divisible by {a}")
    return WindingData(pos, w, level, level // a)


def unwind(w, a: int) -> DecoratedOSP:
    """Inverse of the winding map: rebuild the canonical partition from ``w``."""
    w = tuple(int(x) for x in w)
    n = len(w)
    if n == 0 or a < 1:
        raise NoPreimage("empty winding vector or non-positive modulus")
    if any(not 0 <= x < a for x in w):
        raise NoPreimage(f"entries of {w} must lie in 0..{a - 1}")
    if sum(w) % a:
        raise LevelNotDivisible(f"level {sum(w)} not divisible by {a}")
    pos = [0] * n
    for i in range(n - 1):
        pos[i + 1] = (pos[i] + w[i]) % a
    values = sorted(set(pos))
    blocks = tuple(tuple(e for e in range(1, n + 1) if pos[e - 1] == v) for v in values)
    decs = tuple(b - v for v, b in zip(values, values[1:] + [a]))
    p = DecoratedOSP(n, blocks, decs)
    try:
        validate(p)
    except PartitionError as exc:
        raise NoPreimage(str(exc)) from exc
    return p


def grading_histogram(family: FamilySpec) -> tuple[int, ...]:
    """Counts of admissible partitions by winding number, length ``n``."""
    hist = [0] * family.n
    for p in enumerate_partitions(family):
        hist[winding_vector(p, family).winding_number] += 1
    return tuple(hist)


def modular_section(r: int, n: int) -> set[tuple[int, ...]]:
    """All ``x in (Z/r)^n`` with coordinate sum divisible by ``r``."""
    if r < 1 or n < 1:
        raise ValueError("r and n must be positive")
    return {x for x in itertools.product(range(r), repeat=n) if sum(x) % r == 0}


def trim(vector) -> tuple[int, ...]:
    v = list(vector)
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    return tuple(v)
