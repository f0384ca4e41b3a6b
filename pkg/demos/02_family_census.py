#!/usr/bin/env python3
"""Census of the partition families: enumeration order, counts, and the
classical equalities relating them."""

from beckpart import Family, count, enumerate_family

R = 3

print("=" * 64)
print(f"The families at r = {R}, n = 8 (descending lexicographic order)")
print("=" * 64)

for family, blurb in [
    (Family.O_R, "no part divisible by r"),
    (Family.D_R, "no value repeated r or more times"),
    (Family.F_R, "every gap (final part included) below r"),
    (Family.O_1R, "exactly one divisible value"),
    (Family.D_1R, "exactly one value repeated r+ times"),
    (Family.F_1R, "exactly one gap of at least r"),
    (Family.T_R, "one value repeated strictly between r and 2r times"),
]:
    members = [str(p) if p else "()" for p in enumerate_family(8, family, R)]
    print(f"{family.value:>4}  ({blurb})")
    print(f"      {members}")
print()

print("=" * 64)
print("Decorated families carry one mark or overline")
print("=" * 64)

print("Ostar at n = 8, t = 2: one residue-2 part marked (equal parts count separately)")
for d in enumerate_family(8, Family.O_STAR, R, 2):
    print(f"      {d}")
print()

print("=" * 64)
print(f"Counts agree across |Or(n)| = |Dr(n)| = |Fr(n)| (Glaisher), r = {R}")
print("=" * 64)

print(f"{'n':>3} {'|Or|':>6} {'|Dr|':>6} {'|Fr|':>6} {'|O1r|':>6} {'|D1r|':>6} {'|Tr|':>6}")
for n in range(0, 21):
    row = [count(n, fam, R) for fam in
           (Family.O_R, Family.D_R, Family.F_R, Family.O_1R, Family.D_1R, Family.T_R)]
    assert row[0] == row[1] == row[2]
    assert row[3] == row[4]
    print(f"{n:>3} " + " ".join(f"{c:>6}" for c in row))
print()
print("The |O1r| column is a companion sequence: the third Beck-type identity")
print("says it also equals the excess statistic computed in 03/04.")
