"""Tables of W, C, H polynomials and cube numbers for small parameters."""
import argparse
from dataclasses import dataclass

from munarini import polynomials as pl


@dataclass
class TableConfig:
    n_max: int = 6
    k_max: int = 4
    terms: int = 10


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=TableConfig.n_max)
    ap.add_argument("--k-max", type=int, default=TableConfig.k_max)
    ap.add_argument("--terms", type=int, default=TableConfig.terms)
    cfg = TableConfig(**vars(ap.parse_args()))

    for k in range(1, cfg.k_max + 1):
        print(f"== k = {k}")
        for n in range(cfg.n_max + 1):
            print(f"n={n}  W = {pl.weight_poly(n, k)}")
            print(f"     C = {pl.cube_poly(n, k)}")
            if k >= 2:
                print(f"     H = {pl.maximal_cube_poly(n, k)}")
        print("cube numbers:", " ".join(map(str, pl.cube_number_series(k, cfg.terms - 1))))
        print()


if __name__ == "__main__":
    main()
