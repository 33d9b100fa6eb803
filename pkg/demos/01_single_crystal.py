"""Walk through one crystal end to end: orbits, difference sequences, counts.

The running example is the supersingular rank-two crystal: the basis swap
permutation with slopes (0, 1).  Its automorphism dimension is pinned at 1
from level 1 on, and its endomorphism component exponent grows as 4m - 2.
"""

from __future__ import annotations

from fcrystal import (
    FCyclicCrystal,
    Permutation,
    endo_exponent,
    gamma,
    gamma_table,
    newton_slopes,
    orbit_epsilon,
    product_orbits,
)


def main() -> None:
    crystal = FCyclicCrystal(Permutation((2, 1)), (0, 1))
    print(f"crystal: r={crystal.r}, swap permutation, slopes={crystal.slopes}")
    print(f"dieudonne={crystal.is_dieudonne} circular={crystal.is_circular}")
    print(f"newton slopes: {[str(s) for s in newton_slopes(crystal)]}")
    print()

    print("orbits of the doubled action on basis pairs, with slope differences:")
    for orbit in product_orbits(crystal.pi):
        eps = orbit_epsilon(crystal, orbit)
        print(f"  {orbit.points} -> eps={eps}")
    print()

    print("level tables (gamma = automorphism dimension, b = component exponent):")
    table = gamma_table(crystal, 6)
    print(f"  gamma(0..6) = {table.gamma}")
    print(f"  b(1..6)     = {table.b}")
    print(f"  stabilization = {table.stabilization} (an isomorphism number here)")
    print()

    print("spot checks at m = 3:")
    print(f"  gamma(3) = {gamma(crystal, 3)} (expected 1)")
    print(f"  b(3) = {endo_exponent(crystal, 3)} (expected 4*3 - 2 = 10)")


if __name__ == "__main__":
    main()
