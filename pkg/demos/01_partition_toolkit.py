#!/usr/bin/env python3
"""Tour of the partition toolkit: parsing, the three operations, conjugation,
and r-modular Ferrers diagrams."""

from beckpart import Partition, modular_diagram, parse_partition

print("=" * 64)
print("Parsing and rendering")
print("=" * 64)

lam = parse_partition("5^2,4,3^3,1^2")
print(f'parse_partition("5^2,4,3^3,1^2")  ->  ({lam})')
print(f"exponential form: {lam.to_exponential()}")
print(f"size {lam.size}, length {len(lam)}, distinct values {len(lam.multiplicities())}")
print()

print("=" * 64)
print("Union, sum, difference")
print("=" * 64)

a = Partition((32, 24, 23, 16, 12))
b = Partition((5, 5, 5))
print(f"({a}) U (5,5,5)       = ({a.union(b)})")

c = Partition((22, 19, 15, 15, 13, 10, 6, 5, 2))
print(f"({c}) + (5,5,5) = ({c + b})")
print(f"... and subtracting (5,5,5) again recovers ({(c + b) - b})")
print()
print("The difference is only defined when the result is a partition:")
try:
    Partition((3, 3, 3)) - Partition((3, 1, 1))
except ValueError as exc:
    print(f"  (3,3,3) - (3,1,1) raises: {exc}")
print()

print("=" * 64)
print("Conjugation (an involution)")
print("=" * 64)

nu = Partition((20, 20, 17, 13, 10, 10, 10, 3))
print(f"({nu})'  = {nu.conjugate().to_exponential()}")
print(f"conjugating twice: ({nu.conjugate().conjugate()})")
print()

print("=" * 64)
print("Modular Ferrers diagrams")
print("=" * 64)

flat = Partition((10, 7, 7, 5, 4, 3))
print(f"The 4-modular diagram of ({flat}):")
print(modular_diagram(flat, 4))
print()
print("Each row holds cells of value 4 plus one final cell in [1, 4];")
print("a part divisible by 4 ends in a full cell of 4:")
print(modular_diagram(Partition((8,)), 4))
