"""Write CSV grids of S_k(n): N = M = 2 closed forms, or a general (N, M) from the Gamma product."""
import argparse
import csv
import sys
from dataclasses import dataclass, field
from typing import List

import mpmath

from pmlv.lvalues import LValueSpec, closed_S_k, genfun_P, oracle_eval
from pmlv.symbolic import numeric_eval


@dataclass
class Config:
    N: int = 2
    M: int = 2
    n_values: List[int] = field(default_factory=lambda: [1, 2, 3, 4])
    k_values: List[int] = field(default_factory=lambda: [1, 2, 3, 4])
    T: int = 10**5
    precision: int = 30
    oracle: bool = False


def rows(cfg: Config):
    for n in cfg.n_values:
        series = None
        if (cfg.N, cfg.M) != (2, 2):
            series = genfun_P(cfg.N, cfg.M, n, n * max(cfg.k_values), "numeric", cfg.precision)
        for k in cfg.k_values:
            if series is None:
                sym = closed_S_k(n, k)
                value, rendered = numeric_eval(sym, cfg.precision), sym.render()
            else:
                value, rendered = series[n * k], ""
            value = mpmath.mpc(value)
            row = [n, k, rendered, mpmath.nstr(value.real, 20), mpmath.nstr(value.imag, 20)]
            if cfg.oracle:
                res = oracle_eval(LValueSpec.uniform(cfg.N, cfg.M, n, k), cfg.T, cfg.precision)
                row.append(f"{float(abs(res.value - value)):.2e}")
            yield row


def main(cfg: Config):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "k", "closed", "re", "im"] + (["oracle_gap"] if cfg.oracle else []))
    writer.writerows(rows(cfg))


if __name__ == "__main__":
    ints = lambda s: [int(x) for x in s.split(",")]
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--M", type=int, default=2)
    p.add_argument("--n", dest="n_values", type=ints, default=[1, 2, 3, 4])
    p.add_argument("--k", dest="k_values", type=ints, default=[1, 2, 3, 4])
    p.add_argument("--T", type=int, default=10**5)
    p.add_argument("--precision", type=int, default=30)
    p.add_argument("--oracle", action="store_true")
    main(Config(**vars(p.parse_args())))
