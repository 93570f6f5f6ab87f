"""Print every worked example next to its oracle value and the gap."""
import argparse
from dataclasses import dataclass

import mpmath

from pmlv.lvalues import PRINTED_EXAMPLES, LValueSpec, closed_S_k, oracle_eval
from pmlv.symbolic import numeric_eval


@dataclass
class Config:
    T: int = 10**6
    precision: int = 30


def main(cfg: Config):
    print(f"{'value':8} {'closed form':60} {'closed':>22} {'oracle':>22} {'gap':>9}")
    for key, printed in PRINTED_EXAMPLES.items():
        n, k = int(key[4]), int(key[2])
        value = closed_S_k(n, k)
        assert value == printed
        closed = numeric_eval(value, cfg.precision)
        res = oracle_eval(LValueSpec.uniform(2, 2, n, k), cfg.T, cfg.precision)
        gap = abs(res.value - closed)
        print(f"{key:8} {value.render():60} {mpmath.nstr(closed, 15):>22} "
              f"{mpmath.nstr(res.value.real, 15):>22} {float(gap):9.1e}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--T", type=int, default=Config.T)
    p.add_argument("--precision", type=int, default=Config.precision)
    main(Config(**vars(p.parse_args())))
