"""Time exact tree counts of K_{n,n} and Kirchhoff indices of G(n,n,n/2)."""

import argparse
import time
from dataclasses import dataclass

from spantree import formulas as fm
from spantree.graph import build_gmnp, complete_bipartite
from spantree.resistance import kirchhoff_index
from spantree.spanning import tau


@dataclass
class BenchConfig:
    sizes: tuple[int, ...] = (10, 20, 30, 40, 50)


def timed(fn, *args):
    start = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - start


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("sizes", nargs="*", type=int, default=list(BenchConfig.sizes))
    cfg = BenchConfig(tuple(p.parse_args(argv).sizes))
    print(f"{'n':>4} {'tau(K_nn) s':>12} {'digits':>7} {'Kf(G) s':>9}  Kf")
    for n in cfg.sizes:
        t, t_tau = timed(tau, complete_bipartite(n, n))
        assert t == fm.tau_kmn(n, n)
        p_ = max(1, n // 2)
        kf, t_kf = timed(kirchhoff_index, build_gmnp(n, n, p_))
        assert kf == fm.kf_gmnp(n, n, p_)
        print(f"{n:4d} {t_tau:12.3f} {len(str(t.numerator)):7d} {t_kf:9.3f}  {kf}")


if __name__ == "__main__":
    main()
