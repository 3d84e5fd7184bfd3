"""Print Stirling triangles and the first Frobenius-Euler numbers/polynomials."""

import argparse
from dataclasses import dataclass

from umbra import families as fam


@dataclass
class TableConfig:
    rows: int = 8
    fe_rows: int = 5
    order: int = 1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=8)
    ap.add_argument("--fe-rows", type=int, default=5)
    ap.add_argument("--order", type=int, default=1)
    cfg = TableConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args()).items()})

    print("signed Stirling numbers of the first kind S1(n, l)")
    for n in range(cfg.rows + 1):
        print("  ", " ".join(f"{fam.stirling1(n, l):>8d}" for l in range(n + 1)))
    print("Stirling numbers of the second kind S2(n, l)")
    for n in range(cfg.rows + 1):
        print("  ", " ".join(f"{fam.stirling2(n, l):>8d}" for l in range(n + 1)))
    print("Frobenius-Euler numbers H_n(L)")
    for n in range(cfg.fe_rows + 1):
        print(f"   H_{n} = {fam.frobenius_euler_number(n).render()}")
    print(f"Frobenius-Euler polynomials of order {cfg.order}")
    for n in range(cfg.fe_rows + 1):
        print(f"   H_{n}^({cfg.order})(x|L) = {fam.frobenius_euler(n, cfg.order).render()}")


if __name__ == "__main__":
    main()
