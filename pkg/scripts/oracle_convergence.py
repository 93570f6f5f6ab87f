"""How the truncated oracle approaches S_k(n): raw partial sums vs period averaging + extrapolation."""
import argparse
from dataclasses import dataclass

from pmlv.lvalues import LValueSpec, closed_S_k, oracle_eval
from pmlv.symbolic import numeric_eval


@dataclass
class Config:
    n: int = 1
    k: int = 2
    precision: int = 30


def main(cfg: Config):
    exact = numeric_eval(closed_S_k(cfg.n, cfg.k), cfg.precision)
    print(f"S_{cfg.k}({cfg.n}) = {closed_S_k(cfg.n, cfg.k).render()}")
    print(f"{'T':>9} {'raw error':>12} {'accelerated':>12} {'estimate':>12}")
    for e in range(3, 8):
        T = 10**e
        spec = LValueSpec.uniform(2, 2, cfg.n, cfg.k)
        raw = oracle_eval(spec, T, cfg.precision, accelerate=False)
        acc = oracle_eval(spec, T, cfg.precision)
        print(f"{T:>9} {float(abs(raw.value - exact)):12.2e} {float(abs(acc.value - exact)):12.2e} "
              f"{acc.error_estimate:12.2e}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--precision", type=int, default=30)
    main(Config(**vars(p.parse_args())))
