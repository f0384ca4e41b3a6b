"""Enumeration and counting of the partition families and pair sets.

Plain families (for a modulus r >= 2):

* ``Or``  -- r-regular: no part divisible by r;
* ``Dr``  -- no part value repeated more than r-1 times;
* ``Fr``  -- r-flat: every gap (final part included) at most r-1;
* ``O1r`` -- exactly one distinct part value divisible by r;
* ``D1r`` -- exactly one value repeated at least r times;
* ``F1r`` -- exactly one gap at least r;
* ``Tr``  -- exactly one value repeated more than r but fewer than 2r times.

Decorated families attach one mark or overline per the rules below, and the
pair sets couple an r-flat partition with a rectangle.

Every enumerator is deterministic: bases stream in descending lexicographic
order, decorations by increasing position, rectangles by increasing part
then count.  The order is part of the contract so fixtures stay stable.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .partitions import (
    DecoratedPartition,
    MARK,
    OVERLINE,
    Partition,
    RectanglePair,
    _check_modulus,
    _check_residue,
)


class Family(str, Enum):
    ALL = "all"
    O_R = "Or"
    D_R = "Dr"
    F_R = "Fr"
    O_1R = "O1r"
    D_1R = "D1r"
    F_1R = "F1r"
    T_R = "Tr"
    O_STAR = "Ostar"   # r-regular with one part of residue t marked
    F_BAR = "Fbar"     # r-flat with one overline on a gap >= t
    O_BAR = "Obar"     # r-regular with one value overlined (last occurrence)
    D_BAR = "Dbar"     # Dr with one value overlined (last occurrence)


class PairSet(str, Enum):
    P_RT = "Prt"   # (flat, ((a*r+t)^i)) with flat in Fr(n - i*(a*r+t))
    A_O = "Ao"     # (flat, (1^i)), i not divisible by r
    A_D = "Ad"     # (flat, (1^i)), gap_i(flat) < r-1
    A_T = "At"     # (flat, (1^i)), r | i, gap at i/r positive
    A = "A"        # (flat, (1^i)), gap_i(flat) = r-1
    B = "B"        # (flat, (1^i)), r | i, gap at i/r zero


_PLAIN = (Family.ALL, Family.O_R, Family.D_R, Family.F_R,
          Family.O_1R, Family.D_1R, Family.F_1R, Family.T_R)
_DECORATED = (Family.O_STAR, Family.F_BAR, Family.O_BAR, Family.D_BAR)
_NEEDS_T = (Family.O_STAR, Family.F_BAR)


def is_member(lam, family, r, t=None):
    """Exact membership test for the plain families (t accepted, unused)."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    family = Family(family)
    if family is Family.ALL:
        return True
    _check_modulus(r)
    if family is Family.O_R:
        return lam.is_regular(r)
    if family is Family.D_R:
        return lam.max_multiplicity() <= r - 1
    if family is Family.F_R:
        return lam.is_flat(r)
    if family is Family.O_1R:
        return len({p for p in lam if p % r == 0}) == 1
    if family is Family.D_1R:
        return sum(1 for c in lam.multiplicities().values() if c >= r) == 1
    if family is Family.F_1R:
        return sum(1 for g in lam.gaps() if g >= r) == 1
    if family is Family.T_R:
        big = [c for c in lam.multiplicities().values() if c >= r]
        return len(big) == 1 and r < big[0] < 2 * r
    raise ValueError(f"no plain membership predicate for decorated family {family.value!r}")


# ---------------------------------------------------------------------------
# Tuple-level generators.  All stream in descending lexicographic order.
# ---------------------------------------------------------------------------

def _parts_all(n, cap):
    if n == 0:
        yield ()
        return
    for v in range(min(n, cap), 0, -1):
        for rest in _parts_all(n - v, v):
            yield (v,) + rest


def _parts_regular(n, cap, r):
    if n == 0:
        yield ()
        return
    for v in range(min(n, cap), 0, -1):
        if v % r == 0:
            continue
        for rest in _parts_regular(n - v, v, r):
            yield (v,) + rest


def _parts_bounded_mult(n, cap, r):
    # runs of each value capped at r-1 copies
    if n == 0:
        yield ()
        return
    for v in range(min(n, cap), 0, -1):
        for c in range(min(n // v, r - 1), 0, -1):
            head = (v,) * c
            for rest in _parts_bounded_mult(n - v * c, v - 1, r):
                yield head + rest


def _parts_one_divisible(n, cap, r, used):
    # exactly one distinct divisible value overall
    if n == 0:
        if used:
            yield ()
        return
    if not used and min(n, cap) < r:
        return
    for v in range(min(n, cap), 0, -1):
        if v % r == 0:
            if used:
                continue
            for c in range(n // v, 0, -1):
                head = (v,) * c
                for rest in _parts_one_divisible(n - v * c, v - 1, r, True):
                    yield head + rest
        else:
            for rest in _parts_one_divisible(n - v, v, r, used):
                yield (v,) + rest


def _parts_one_big_mult(n, cap, r, used):
    # exactly one value with multiplicity >= r
    if n == 0:
        if used:
            yield ()
        return
    if not used and n < r:
        return
    for v in range(min(n, cap), 0, -1):
        cmax = n // v if not used else min(n // v, r - 1)
        for c in range(cmax, 0, -1):
            head = (v,) * c
            for rest in _parts_one_big_mult(n - v * c, v - 1, r, used or c >= r):
                yield head + rest


def _parts_one_between_mult(n, cap, r, used):
    # exactly one value with multiplicity strictly between r and 2r
    if n == 0:
        if used:
            yield ()
        return
    if not used and n < r + 1:
        return
    for v in range(min(n, cap), 0, -1):
        cmax = n // v if not used else min(n // v, r - 1)
        for c in range(cmax, 0, -1):
            if not used and c >= r:
                if c == r or c >= 2 * r:
                    continue
                consumed = True
            else:
                consumed = used
            head = (v,) * c
            for rest in _parts_one_between_mult(n - v * c, v - 1, r, consumed):
                yield head + rest


@lru_cache(maxsize=None)
def _min_flat_tail(v, r):
    # least extra sum needed strictly below a part v to finish flatly
    s = 0
    while v > r - 1:
        v -= r - 1
        s += v
    return s


def _parts_flat(n, r, lo, hi):
    # flat continuations: parts in [lo, hi], drops < r, final part < r
    if n == 0:
        yield ()
        return
    top = min(hi, n)
    if top < lo:
        return
    for v in range(top, lo - 1, -1):
        rem = n - v
        if rem == 0:
            if v <= r - 1:
                yield (v,)
        elif rem >= _min_flat_tail(v, r):
            for rest in _parts_flat(rem, r, max(1, v - r + 1), v):
                yield (v,) + rest


def _parts_one_steep(n, r, prev):
    # continuations in which exactly one gap >= r is still to come
    hi = n if prev is None else min(prev, n)
    for v in range(hi, 0, -1):
        big = prev is not None and prev - v >= r
        rem = n - v
        if not big:
            if rem == 0:
                if v >= r:
                    yield (v,)
            elif v >= r:
                for rest in _parts_one_steep(rem, r, v):
                    yield (v,) + rest
            # v < r with no steep gap spent: dead branch
        else:
            if rem == 0:
                if v <= r - 1:
                    yield (v,)
            elif rem >= _min_flat_tail(v, r):
                for rest in _parts_flat(rem, r, max(1, v - r + 1), v):
                    yield (v,) + rest


def _plain_tuples(n, family, r):
    if family is Family.ALL:
        return _parts_all(n, n if n else 1)
    if family is Family.O_R:
        return _parts_regular(n, n if n else 1, r)
    if family is Family.D_R:
        return _parts_bounded_mult(n, n if n else 1, r)
    if family is Family.F_R:
        return _parts_flat(n, r, 1, n if n else 1)
    if family is Family.O_1R:
        return _parts_one_divisible(n, n if n else 1, r, False)
    if family is Family.D_1R:
        return _parts_one_big_mult(n, n if n else 1, r, False)
    if family is Family.T_R:
        return _parts_one_between_mult(n, n if n else 1, r, False)
    if family is Family.F_1R:
        return _parts_one_steep(n, r, None)
    raise ValueError(f"not a plain family: {family!r}")


# ---------------------------------------------------------------------------
# Public enumeration API.
# ---------------------------------------------------------------------------

def _validate(n, family, r, t):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    family = Family(family)
    if family is not Family.ALL:
        _check_modulus(r)
    if family in _NEEDS_T:
        if t is None:
            raise ValueError(f"family {family.value!r} requires the residue t")
        _check_residue(r, t)
    elif t is not None:
        raise ValueError(f"family {family.value!r} does not take a residue t")
    return family


def enumerate_family(n, family, r=None, t=None):
    """Stream every member of the family exactly once, in canonical order.

    Plain families yield Partition; decorated families yield
    DecoratedPartition with decorations in increasing position order.
    """
    family = _validate(n, family, r, t)
    if family in _PLAIN:
        for parts in _plain_tuples(n, family, r):
            yield Partition._make(parts)
        return
    if family is Family.O_STAR:
        # one part of residue t mod r marked; equal parts marked separately
        for parts in _parts_regular(n, n if n else 1, r):
            base = Partition._make(parts)
            for i, p in enumerate(parts, start=1):
                if p % r == t:
                    yield DecoratedPartition(base, MARK, i)
        return
    if family is Family.F_BAR:
        # one overline, allowed only where the gap is at least t
        for parts in _parts_flat(n, r, 1, n if n else 1):
            base = Partition._make(parts)
            for i, g in enumerate(base.gaps(), start=1):
                if g >= t:
                    yield DecoratedPartition(base, OVERLINE, i)
        return
    if family in (Family.O_BAR, Family.D_BAR):
        plain = Family.O_R if family is Family.O_BAR else Family.D_R
        for parts in _plain_tuples(n, plain, r):
            base = Partition._make(parts)
            for i in range(1, len(parts) + 1):
                if i == len(parts) or parts[i] != parts[i - 1]:
                    yield DecoratedPartition(base, OVERLINE, i)
        return
    raise AssertionError(family)


@lru_cache(maxsize=None)
def count(n, family, r=None, t=None):
    """Number of members of the family; matches the enumeration exactly."""
    family = _validate(n, family, r, t)
    return sum(1 for _ in enumerate_family(n, family, r, t))


def enumerate_pairs(n, tag, r, t=None):
    """Stream the (flat partition, rectangle) pairs of the given pair set.

    Rectangles iterate by increasing part then increasing count, the flat
    component in descending lexicographic order within each rectangle.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    tag = PairSet(tag)
    _check_modulus(r)
    if tag is PairSet.P_RT:
        if t is None:
            raise ValueError("pair set 'Prt' requires the residue t")
        _check_residue(r, t)
    elif t is not None:
        raise ValueError(f"pair set {tag.value!r} does not take a residue t")

    if tag is PairSet.P_RT:
        s = t
        while s <= n:
            for i in range(1, n // s + 1):
                for parts in _parts_flat(n - s * i, r, 1, max(n - s * i, 1)):
                    yield RectanglePair(Partition._make(parts), s, i)
            s += r
        return

    for i in range(1, n + 1):
        if tag is PairSet.A_O:
            if i % r == 0:
                continue
        elif tag in (PairSet.A_T, PairSet.B):
            if i % r != 0:
                continue
        j = i // r
        for parts in _parts_flat(n - i, r, 1, max(n - i, 1)):
            flat = Partition._make(parts)
            if tag is PairSet.A_D:
                if flat.part_at(i) - flat.part_at(i + 1) >= r - 1:
                    continue
            elif tag is PairSet.A_T:
                if flat.part_at(j) - flat.part_at(j + 1) <= 0:
                    continue
            elif tag is PairSet.A:
                if flat.part_at(i) - flat.part_at(i + 1) != r - 1:
                    continue
            elif tag is PairSet.B:
                if flat.part_at(j) - flat.part_at(j + 1) != 0:
                    continue
            yield RectanglePair(flat, 1, i)


@lru_cache(maxsize=None)
def count_pairs(n, tag, r, t=None):
    """Number of pairs in the pair set; matches the enumeration exactly."""
    return sum(1 for _ in enumerate_pairs(n, tag, r, t))
