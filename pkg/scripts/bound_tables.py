"""Tabulate degree bounds over small parameter ranges.

    python3 scripts/bound_tables.py pullback --max-k 4
    python3 scripts/bound_tables.py counts --n 4
"""
import argparse
from dataclasses import dataclass

from pfaffcount import bounds
from pfaffcount.counting import PfaffCountQuery, pfaff_count


@dataclass
class TableConfig:
    n: int = 4
    max_k: int = 4
    max_m: int = 4
    max_deg: int = 6


def pullback_table(cfg: TableConfig) -> None:
    """Regularity case of the pull-back bound with s = 2, |d| = 2 against deg(F)."""
    print("m  k  deg(G)  smallest deg(F) allowed (R = 0)")
    for m in range(1, cfg.max_m + 1):
        for k in range(0, cfg.max_k + 1):
            for deg_f in range(0, 4 * cfg.max_deg):
                rep = bounds.corollary_6_4_bounds(cfg.n, m, k, deg_f, "Regularity", 0)
                if rep.holds:
                    print(f"{m}  {k}  {rep.lhs}  {deg_f}")
                    break


def count_table(cfg: TableConfig) -> None:
    print(f"invariant twisted 1-forms on P^{cfg.n}, rows d, columns m")
    print("d\\m " + " ".join(f"{m:>6}" for m in range(cfg.max_deg + 1)))
    for d in range(1, cfg.max_k + 1):
        vals = [pfaff_count(PfaffCountQuery(cfg.n, d, m, 1)) for m in range(cfg.max_deg + 1)]
        print(f"{d:<3} " + " ".join(f"{v:>6}" for v in vals))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("table", choices=("pullback", "counts"))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--max-deg", type=int, default=6)
    a = p.parse_args()
    cfg = TableConfig(a.n, a.max_k, a.max_m, a.max_deg)
    (pullback_table if a.table == "pullback" else count_table)(cfg)
