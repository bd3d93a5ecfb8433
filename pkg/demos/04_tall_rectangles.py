"""Tall rectangles (m < n): no diagonal fits, but the augmented-word
insertion route still sometimes produces a tableau of promotion order n.
Only some permutations admit one; the rest fail loudly.
"""

from taquin import (
    Rectangle,
    all_permutations,
    augmented_word,
    format_grid,
    insertion_tableau,
    minimal_orbit_tableau,
    promotion_order,
)
from taquin.orbits import ExperimentalConstructionError

w_list = list(all_permutations(3))
rect = Rectangle(3, 2)

aug = augmented_word(w_list[1], 2)  # w = 132
print("augmented word of 132 with two shifted blocks:", aug)
print("its insertion tableau:")
for row in insertion_tableau(aug):
    print("   ", row)
print()

for w in w_list:
    try:
        t = minimal_orbit_tableau(w, rect, via="insertion", experimental=True)
    except ExperimentalConstructionError as exc:
        print(f"w = {w}: no tableau ({str(exc).split(':')[-1].strip()})")
        continue
    print(f"w = {w}: promotion order {promotion_order(t)}")
    print(format_grid(t))
    print()

print("5 tableaux exist on 3 rows x 2 columns, so the 6 permutations")
print("cannot all be represented; the construction is partial here.")
