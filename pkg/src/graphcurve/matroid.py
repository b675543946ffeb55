"""Explicit matroids on ``{1..n}`` given by their circuits."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from graphcurve.errors import GraphInputError, ResourceLimitError
from graphcurve.multigraph import iter_bits, mask_to_set

ENUMERATION_BOUND = 16
DEEP_VALIDATION_BOUND = 12
ISOMORPHISM_BOUND = 14


def circuit_key(c: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    t = tuple(sorted(c))
    return (len(t), t)


def canonical_circuits(circuits: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """Deduplicate and sort by (cardinality, lexicographic)."""
    uniq = {frozenset(c) for c in circuits}
    return tuple(sorted(uniq, key=circuit_key))


def to_mask(A: Iterable[int]) -> int:
    mask = 0
    for x in A:
        mask |= 1 << (x - 1)
    return mask


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of bitmasks."""
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _check_bound(n, bound, what):
    if n > bound:
        raise ResourceLimitError(f"{what} on {n} elements exceeds the bound {bound}")


@dataclass(frozen=True)
class ExplicitMatroid:
    ground_size: int
    circuits: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "circuits", canonical_circuits(self.circuits))

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(c) for c in self.circuits)

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    def is_independent_mask(self, mask: int) -> bool:
        return not any(c & mask == c for c in self.circuit_masks)

    def is_independent(self, A: Iterable[int]) -> bool:
        return self.is_independent_mask(to_mask(A))

    def rank_mask(self, mask: int) -> int:
        chosen = 0
        for x in iter_bits(mask):
            trial = chosen | (1 << (x - 1))
            if self.is_independent_mask(trial):
                chosen = trial
        return chosen.bit_count()

    def rank_of(self, A: Iterable[int]) -> int:
        return self.rank_mask(to_mask(A))

    @cached_property
    def rank(self) -> int:
        return self.rank_mask(self.full_mask)

    @cached_property
    def basis_masks(self) -> tuple[int, ...]:
        _check_bound(self.ground_size, ENUMERATION_BOUND, "basis enumeration")
        out = []
        for combo in combinations(range(self.ground_size), self.rank):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if self.is_independent_mask(mask):
                out.append(mask)
        return tuple(out)

    def bases(self) -> frozenset[frozenset[int]]:
        return frozenset(mask_to_set(b) for b in self.basis_masks)

    @cached_property
    def loops(self) -> frozenset[int]:
        return frozenset(next(iter(c)) for c in self.circuits if len(c) == 1)

    @cached_property
    def coloops(self) -> frozenset[int]:
        covered = 0
        for c in self.circuit_masks:
            covered |= c
        return mask_to_set(self.full_mask & ~covered)

    def __repr__(self):
        circ = [sorted(c) for c in self.circuits]
        return f"ExplicitMatroid(n={self.ground_size}, rank={self.rank}, circuits={circ})"


def from_circuits(n: int, circuits: Iterable[Iterable[int]], deep: bool = False) -> ExplicitMatroid:
    """Build a matroid from its circuit list.

    The list must be an antichain of non-empty subsets of ``1..n``.  With
    ``deep`` the circuit elimination axiom is checked on every pair.
    """
    circuits = canonical_circuits(circuits)
    for c in circuits:
        if not c:
            raise GraphInputError("the empty set cannot be a circuit")
        bad = [x for x in c if not 1 <= x <= n]
        if bad:
            raise GraphInputError(f"circuit {sorted(c)} has elements outside 1..{n}")
    masks = [to_mask(c) for c in circuits]
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if a & b == a or a & b == b:
                raise GraphInputError(
                    f"circuits {sorted(mask_to_set(a))} and {sorted(mask_to_set(b))} are comparable"
                )
    if deep:
        _check_bound(n, DEEP_VALIDATION_BOUND, "deep validation")
        for a, b in combinations(masks, 2):
            union = a | b
            for x in iter_bits(a & b):
                rest = union & ~(1 << (x - 1))
                if not any(c & rest == c for c in masks):
                    raise GraphInputError(
                        f"circuit elimination fails for {sorted(mask_to_set(a))}, "
                        f"{sorted(mask_to_set(b))} at element {x}"
                    )
    return ExplicitMatroid(n, circuits)


def uniform(r: int, n: int) -> ExplicitMatroid:
    if not 0 <= r <= n:
        raise GraphInputError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    if r == n:
        return ExplicitMatroid(n, ())
    return ExplicitMatroid(n, tuple(frozenset(c) for c in combinations(range(1, n + 1), r + 1)))


def from_independence(n: int, is_independent) -> ExplicitMatroid:
    """Circuits of the matroid whose independence oracle takes a bitmask.

    Subsets are scanned by increasing size; supersets of circuits already
    found are skipped.
    """
    _check_bound(n, ENUMERATION_BOUND, "circuit enumeration")
    found = []
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(c & mask == c for c in found):
                continue
            if not is_independent(mask):
                found.append(mask)
    return ExplicitMatroid(n, tuple(mask_to_set(c) for c in found))


def dual(M: ExplicitMatroid) -> ExplicitMatroid:
    """Dual matroid: its bases are the complements of the bases of ``M``."""
    _check_bound(M.ground_size, ENUMERATION_BOUND, "dualisation")
    bases = M.basis_masks

    # A is independent in the dual iff it misses some basis of M
    def coindependent(mask):
        return any(b & mask == 0 for b in bases)

    return from_independence(M.ground_size, coindependent)


def direct_sum(M1: ExplicitMatroid, M2: ExplicitMatroid) -> ExplicitMatroid:
    shift = M1.ground_size
    shifted = tuple(frozenset(x + shift for x in c) for c in M2.circuits)
    return ExplicitMatroid(M1.ground_size + M2.ground_size, M1.circuits + shifted)


def is_identically_self_dual(M: ExplicitMatroid) -> bool:
    """True iff the complement of every basis is again a basis (r = r*)."""
    bases = set(M.basis_masks)
    full = M.full_mask
    return all(full & ~b in bases for b in bases)


def _element_invariants(M: ExplicitMatroid) -> list[tuple]:
    sizes = sorted({len(c) for c in M.circuits})
    out = [None]
    for x in range(1, M.ground_size + 1):
        out.append(tuple(sum(1 for c in M.circuits if len(c) == s and x in c) for s in sizes))
    return out


def is_isomorphic(M1: ExplicitMatroid, M2: ExplicitMatroid) -> dict[int, int] | None:
    """Return a bijection of ground sets carrying circuits onto circuits, or
    ``None`` when the matroids are not isomorphic."""
    n = M1.ground_size
    if n != M2.ground_size:
        return None
    _check_bound(n, ISOMORPHISM_BOUND, "isomorphism search")
    if sorted(len(c) for c in M1.circuits) != sorted(len(c) for c in M2.circuits):
        return None
    inv1, inv2 = _element_invariants(M1), _element_invariants(M2)
    if sorted(inv1[1:]) != sorted(inv2[1:]):
        return None

    # rarest invariant classes first
    class_size = {}
    for x in range(1, n + 1):
        class_size[inv1[x]] = class_size.get(inv1[x], 0) + 1
    order = sorted(range(1, n + 1), key=lambda x: (class_size[inv1[x]], x))
    position = {x: i for i, x in enumerate(order)}
    closing = [[] for _ in range(n)]
    for c in M1.circuits:
        closing[max(position[x] for x in c)].append(tuple(c))
    targets = set(M2.circuit_masks)
    candidates = [[y for y in range(1, n + 1) if inv2[y] == inv1[x]] for x in order]

    mapping = {}
    used = set()

    def extend(i):
        if i == n:
            return True
        x = order[i]
        for y in candidates[i]:
            if y in used:
                continue
            mapping[x] = y
            ok = all(to_mask(mapping[z] for z in c) in targets for c in closing[i])
            if ok:
                used.add(y)
                if extend(i + 1):
                    return True
                used.discard(y)
            del mapping[x]
        return False

    if extend(0):
        return dict(sorted(mapping.items()))
    return None
