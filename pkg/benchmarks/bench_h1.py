"""Benchmark: truncated H^1 computation on a few (lambda, mu) cells.

Usage:
    python benchmarks/bench_h1.py
"""

import time
from fractions import Fraction


def bench_cell(lam: Fraction, mu: Fraction, relative: bool) -> tuple[int, float]:
    """Return (h1_dim, elapsed_seconds) for one cell, plateau check included."""
    from supercohom import h1_dimension

    t0 = time.perf_counter()
    report = h1_dimension(lam, mu, relative=relative)
    elapsed = time.perf_counter() - t0
    return report.h1_dim, elapsed


def main() -> None:
    half = Fraction(1, 2)
    cells = [
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(1)),
        (-half, half),
        (Fraction(-1), Fraction(1)),
        (Fraction(0), Fraction(1)),
    ]

    print(f"{'lambda':>8s}  {'mu':>8s}  {'H1':>4s}  {'rel H1':>6s}  "
          f"{'abs (s)':>9s}  {'rel (s)':>9s}")
    print("-" * 54)

    for lam, mu in cells:
        h1, t_abs = bench_cell(lam, mu, relative=False)
        h1_rel, t_rel = bench_cell(lam, mu, relative=True)
        print(f"{str(lam):>8s}  {str(mu):>8s}  {h1:>4d}  {h1_rel:>6d}  "
              f"{t_abs:>9.3f}  {t_rel:>9.3f}")


if __name__ == "__main__":
    main()
