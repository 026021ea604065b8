"""Print the closed-form pair-class resistances of G(m,n,p) beside direct solves."""

import argparse
from itertools import combinations

from spantree import formulas as fm
from spantree.graph import build_gmnp
from spantree.resistance import resistance_matrix


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    args = p.parse_args(argv)
    m, n, k = args.m, args.n, args.p

    table = dict(fm.gmnp_resistances(m, n, k).items())
    r = resistance_matrix(build_gmnp(m, n, k))
    seen: dict[str, set] = {}
    for u, v in combinations(range(m + n), 2):
        seen.setdefault(fm.gmnp_pair_class(m, n, k, u, v), set()).add(r[u][v])
    for name, value in table.items():
        direct = seen.get(name)
        shown = "-" if direct is None else ", ".join(str(x) for x in sorted(direct))
        mark = "" if value is None or direct == {value} else "  <-- mismatch"
        print(f"{name:>4}  formula={'n/a' if value is None else value!s:>10}  direct={shown}{mark}")


if __name__ == "__main__":
    main()
