"""Tangent-field counts on P^n at and around the excluded degree d = ((n+1)/2) m + 1.

For each (m, d) the kernel oracle is run on several seeded random projective
1-forms and compared with the Bott value h^0(wedge^2 T(d-m-3)).  At the
excluded degree the oracle sits strictly below the Bott value.

    python3 scripts/excluded_degree_probe.py --n 3 --m 1 2 --samples 5
"""
import argparse
import random
from dataclasses import dataclass
from typing import Tuple

from pfaffcount.counting import VfCountQuery, oracle_vf_count, vf_count_bott
from pfaffcount.polyforms import random_projective_form


@dataclass
class ProbeConfig:
    n: int = 3
    degrees: Tuple[int, ...] = (1, 2)
    samples: int = 5
    seed: int = 0


def main(cfg: ProbeConfig) -> None:
    rng = random.Random(cfg.seed)
    print("n  m  d  excluded  bott  oracle-samples")
    for m in cfg.degrees:
        for d in range(m + 1, 2 * (m + 1) + 1):
            q = VfCountQuery(cfg.n, m, d)
            obs = [oracle_vf_count(random_projective_form(cfg.n, 1, m, rng), d) for _ in range(cfg.samples)]
            flag = "yes" if q.odd_excluded or q.even_excluded else ""
            print(f"{cfg.n}  {m}  {d}  {flag:8}  {vf_count_bott(q):4}  {obs}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, nargs="+", default=[1, 2])
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    main(ProbeConfig(a.n, tuple(a.m), a.samples, a.seed))
