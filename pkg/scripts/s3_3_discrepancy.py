"""Adjudicate the zeta(6)zeta(3) coefficient of S_3(3): 93/128 (as printed) or 93/256."""
import argparse
from dataclasses import dataclass

import mpmath

from pmlv.lvalues import PRINTED_S3_3, LValueSpec, closed_S_k, genfun_P2, oracle_eval
from pmlv.symbolic import numeric_eval


@dataclass
class Config:
    T: int = 10**6
    precision: int = 30


def main(cfg: Config):
    derived = closed_S_k(3, 3)
    assert genfun_P2(3, 9)[9] == derived
    oracle = oracle_eval(LValueSpec.uniform(2, 2, 3, 3), cfg.T, cfg.precision)
    for label, value in (("printed (93/128)", PRINTED_S3_3), ("derived (93/256)", derived)):
        v = numeric_eval(value, cfg.precision)
        print(f"{label:18} {value.render():60} {mpmath.nstr(v, 15):>20}  gap to oracle {float(abs(v - oracle.value)):.2e}")
    print(f"{'oracle':18} {'T = ' + str(cfg.T):60} {mpmath.nstr(oracle.value.real, 15):>20}  "
          f"error estimate {oracle.error_estimate:.1e}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--T", type=int, default=Config.T)
    p.add_argument("--precision", type=int, default=Config.precision)
    main(Config(**vars(p.parse_args())))
