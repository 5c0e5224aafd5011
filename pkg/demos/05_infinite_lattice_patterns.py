#!/usr/bin/env python3
# Doubly periodic tower patterns on infinite lattices, verified on finite
# windows whose interiors see every relevant tower.

from trdom import (
    king_lattice_pattern,
    triangular_lattice_pattern,
    verify_lattice_window,
)

# r = 1 on the king's lattice: towers on a (2t-1)-spaced square grid; the
# square broadcast zones tile the plane with no overlap at all.
pattern = king_lattice_pattern(3, 1)
report = verify_lattice_window(pattern, 3, 1, 12)
print("king r=1, t=3:")
print("  basis:", pattern.basis())
print(f"  window interior: dominated={report.dominated} "
      f"efficient={report.efficient} overlap_vertices={len(report.overlap_vertices)}")

# r = 2 needs zone borders to meet: the generator is a slightly sheared
# square lattice, and overlap vertices receive exactly 2.
pattern = king_lattice_pattern(3, 2)
report = verify_lattice_window(pattern, 3, 2, 12)
print("\nking r=2, t=3:")
print("  basis:", pattern.basis())
print(f"  window interior: dominated={report.dominated} "
      f"efficient={report.efficient} overlap_vertices={len(report.overlap_vertices)} "
      f"wasted_signal={report.wasted_signal}")

# The triangular-lattice rule, embedded into slant coordinates, covers
# every (t, r); towers carry hexagonal zones.
for (t, r) in ((2, 1), (3, 2), (4, 2)):
    pattern = triangular_lattice_pattern(t, r)
    report = verify_lattice_window(pattern, t, r, 4 * t)
    print(f"\ntriangular (t={t}, r={r}):")
    print("  basis:", pattern.basis())
    print("  towers near origin:", pattern.towers_in_box(-4, 4, -4, 4))
    print(f"  window interior: dominated={report.dominated} "
          f"efficient={report.efficient}")

# A quick look at pattern density: towers per area equals 1/|det(basis)|.
print("\npattern densities (towers per vertex):")
for (label, pattern) in (
    ("king r=1, t=2", king_lattice_pattern(2, 1)),
    ("king r=2, t=2", king_lattice_pattern(2, 2)),
    ("triangular (2,1)", triangular_lattice_pattern(2, 1)),
    ("triangular (3,2)", triangular_lattice_pattern(3, 2)),
):
    (a, b), (c, d) = pattern.basis()
    det = abs(a * d - b * c)
    print(f"  {label}: 1/{det}")
