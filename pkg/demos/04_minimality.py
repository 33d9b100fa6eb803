"""Minimality of 0/1 crystals and where gamma stops growing.

A 0/1 crystal is minimal exactly when its gamma table is already flat after
level 1.  The per-cycle slope-sum criterion decides minimality directly; the
stabilization level of the gamma table gives the same verdict from the other
side.  Rank-four cycles show both outcomes.
"""

from __future__ import annotations

import itertools

from fcrystal import FCyclicCrystal, gamma_table, is_minimal, newton_slopes, parse_permutation


def main() -> None:
    pi = parse_permutation("(1 2 3 4)", 4)
    print("rank-four cycle, all 0/1 slope vectors:")
    print(f"{'slopes':>14} {'newton':>8} {'minimal':>8} {'stabilization':>14} {'gamma':>20}")
    for slopes in itertools.product((0, 1), repeat=4):
        crystal = FCyclicCrystal(pi, slopes)
        table = gamma_table(crystal, 4)
        newton = str(newton_slopes(crystal)[0])
        print(f"{str(slopes):>14} {newton:>8} {str(is_minimal(crystal)):>8} "
              f"{table.stabilization:>14} {str(table.gamma):>20}")
        assert is_minimal(crystal) == (table.stabilization <= 1)
    print()
    print("the verdict column always matches stabilization <= 1.")


if __name__ == "__main__":
    main()
