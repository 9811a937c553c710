"""Divisor-vector chains for integer lattices.

A divisor vector of a lattice L is a nonzero member v whose nonzero
coordinates divide the matching coordinate of every member. Such a v
induces a linear map onto pairwise quotient differences (t_i/v_i - t_j/v_j
over the nonzero coordinates of v) plus the untouched zero coordinates;
its kernel inside L is exactly Zv, so the image lattice has rank one less.
A chain certificate witnesses that repeating this reduction empties the
lattice; chains drive certificate generation and witness extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import DivisibilityError, ResourceLimitError, ZeroLatticeError
from .lattice import Lattice

DEFAULT_MAX_DIM = 64


@dataclass(frozen=True)
class SignPartition:
    """Indices of positive, negative, and zero coordinates of a vector."""

    pos: tuple[int, ...]
    neg: tuple[int, ...]
    zero: tuple[int, ...]

    @classmethod
    def of(cls, v) -> "SignPartition":
        pos = tuple(i for i, x in enumerate(v) if x > 0)
        neg = tuple(i for i, x in enumerate(v) if x < 0)
        zero = tuple(i for i, x in enumerate(v) if x == 0)
        return cls(pos, neg, zero)

    @property
    def support_size(self) -> int:
        return len(self.pos) + len(self.neg)


@dataclass(frozen=True)
class DivisorVector:
    """A lattice member dividing every member at its nonzero coordinates."""

    v: tuple[int, ...]
    partition: SignPartition

    @classmethod
    def of(cls, v) -> "DivisorVector":
        vec = tuple(int(x) for x in v)
        if not any(vec):
            raise ValueError("divisor vector must be nonzero")
        return cls(vec, SignPartition.of(vec))


@dataclass(frozen=True)
class IndexMap:
    """Layout of the reduced coordinates induced by a divisor vector.

    Pair coordinates come first, ordered lexicographically by the original
    index pair (i, j), i < j, over the divisor's nonzero coordinates; the
    zero coordinates follow in ascending order. No permutation of the
    ambient coordinates ever happens; bookkeeping stays in original indices.
    """

    pairs: tuple[tuple[int, int], ...]
    zeros: tuple[int, ...]

    @classmethod
    def of(cls, partition: SignPartition) -> "IndexMap":
        nonzero = tuple(sorted(partition.pos + partition.neg))
        return cls(tuple(combinations(nonzero, 2)), tuple(sorted(partition.zero)))

    @property
    def output_dim(self) -> int:
        return len(self.pairs) + len(self.zeros)


def map_point(div: DivisorVector, imap: IndexMap, t) -> tuple[int, ...]:
    """Image of t: quotient differences on pairs, passthrough on zeros.

    Requires v_i | t_i wherever v_i != 0; the output is then integral.
    """
    vec = [int(x) for x in t]
    v = div.v
    ratios = {}
    for i in div.partition.pos + div.partition.neg:
        if vec[i] % v[i] != 0:
            raise DivisibilityError(f"coordinate {i}: {v[i]} does not divide {vec[i]}")
        ratios[i] = vec[i] // v[i]
    out = [ratios[i] - ratios[j] for i, j in imap.pairs]
    out.extend(vec[k] for k in imap.zeros)
    return tuple(out)


def image_lattice(lat: Lattice, div: DivisorVector, imap: IndexMap) -> Lattice:
    """Canonical lattice spanned by the images of the basis vectors."""
    images = [map_point(div, imap, row) for row in lat.basis]
    return Lattice(imap.output_dim, images)


def divisor_candidates(lat: Lattice) -> list[DivisorVector]:
    """All divisor vectors of lat, in a fixed deterministic order.

    A member v divides everything iff each coordinate is either zero or has
    absolute value equal to the per-coordinate gcd d_i (v in the lattice
    forces d_i | v_i; dividing every member forces v_i | d_i). Candidates
    are therefore determined by their values on the pivot columns, each of
    which ranges over {+d, -d, 0}; that keeps the enumeration exponential
    in the rank rather than in the support size. Ordering is lexicographic
    over the nonzero-gcd coordinates with + before - before 0.
    """
    if lat.rank == 0:
        raise ZeroLatticeError("zero lattice has no divisor vectors")
    d = lat.projection_gcds()
    n = lat.ambient_dim
    nz = [i for i in range(n) if d[i] != 0]
    found = []
    for pattern in product((1, -1, 0), repeat=lat.rank):
        coeffs = []
        ok = True
        for k, (row, p) in enumerate(zip(lat.basis, lat.pivots)):
            acc = pattern[k] * d[p] - sum(
                coeffs[j] * lat.basis[j][p] for j in range(k)
            )
            if acc % row[p] != 0:
                ok = False
                break
            coeffs.append(acc // row[p])
        if not ok:
            continue
        v = [
            sum(coeffs[k] * lat.basis[k][j] for k in range(lat.rank))
            for j in range(n)
        ]
        if not any(v):
            continue
        if all(v[i] == 0 or abs(v[i]) == d[i] for i in range(n)):
            found.append(v)
    order = {1: 0, -1: 1, 0: 2}
    found.sort(key=lambda v: tuple(order[(v[i] > 0) - (v[i] < 0)] for i in nz))
    return [DivisorVector.of(v) for v in found]


@dataclass(frozen=True)
class ChainCertificate:
    """Recursive witness: a divisor vector per level until the image dies.

    child is None exactly when the image lattice is zero, i.e. at rank 1;
    the chain length always equals the rank of the lattice.
    """

    lattice: Lattice
    divisor: DivisorVector
    index_map: IndexMap
    child: "ChainCertificate | None"

    @property
    def chain_length(self) -> int:
        return 1 + (self.child.chain_length if self.child is not None else 0)


def certify(lat: Lattice, max_dim: int = DEFAULT_MAX_DIM):
    """Depth-first search for a divisor chain; None when no chain exists.

    Candidates are tried in their deterministic order and the first fully
    certifying choice wins, so output is reproducible. Recursion terminates
    because the rank drops by one per level; the ambient dimension of the
    images can grow, so levels beyond max_dim raise ResourceLimitError
    rather than searching a blown-up space.
    """
    if lat.rank == 0:
        raise ZeroLatticeError("cannot certify the zero lattice")
    for div in divisor_candidates(lat):
        imap = IndexMap.of(div.partition)
        image = image_lattice(lat, div, imap)
        if image.rank == 0:
            return ChainCertificate(lat, div, imap, None)
        if image.ambient_dim > max_dim:
            raise ResourceLimitError(
                f"image dimension {image.ambient_dim} exceeds cap {max_dim}"
            )
        sub = certify(image, max_dim=max_dim)
        if sub is not None:
            return ChainCertificate(lat, div, imap, sub)
    return None
