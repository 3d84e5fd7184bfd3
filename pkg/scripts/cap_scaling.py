"""Time the composition-sum identities (T10, EFinal) as n grows past the default caps."""

import argparse
import time
from dataclasses import dataclass

from umbra import families as fam
from umbra import identities as idt


@dataclass
class ScalingConfig:
    n_max: int = 5
    mu: int = 2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=5, dest="n_max")
    ap.add_argument("--mu", type=int, default=2)
    cfg = ScalingConfig(**vars(ap.parse_args()))
    print(f"{'n':>3} {'compositions':>13} {'T10 ms':>10} {'EFinal ms':>10}")
    for n in range(1, cfg.n_max + 1):
        caps = {"T10": n, "EFinal": n}
        start = time.perf_counter()
        for k in range(1, n + 1):
            assert idt.run_instance("T10", {"n": n, "mu": cfg.mu, "k": k}, caps).status == "pass"
        t10 = (time.perf_counter() - start) * 1000
        start = time.perf_counter()
        assert idt.run_instance("EFinal", {"n": n}, caps).status == "pass"
        final = (time.perf_counter() - start) * 1000
        print(f"{n:>3} {fam.count_weak_compositions(n - 1, n):>13} {t10:>10.1f} {final:>10.1f}")


if __name__ == "__main__":
    main()
