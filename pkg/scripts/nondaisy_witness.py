"""Degree argument separating Pi_{n,k} from daisy cubes, plus a root search."""
import argparse
from dataclasses import dataclass

from munarini import graphs as gr
from munarini import hypercube_analysis as ha
from munarini import polynomials as pl


@dataclass
class WitnessConfig:
    n_max: int = 5
    k_max: int = 4
    root_search_n: int = 3


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=WitnessConfig.n_max)
    ap.add_argument("--k-max", type=int, default=WitnessConfig.k_max)
    ap.add_argument("--root-search-n", type=int, default=WitnessConfig.root_search_n)
    cfg = WitnessConfig(**vars(ap.parse_args()))

    print("n,k,kn-1,W_x_coeff,max_deg_Pi,contradiction,daisy_root_found")
    for k in range(2, cfg.k_max + 1):
        for n in range(1, cfg.n_max + 1):
            rep = pl.max_degree_witness(n, k)
            root = ""
            if n <= cfg.root_search_n:
                root = int(bool(ha.find_daisy_root(ha.embed_partial_cube(gr.build_generalized_pell(n, k)))))
            print(f"{n},{k},{k * n - 1},{rep['weight_linear_coeff']},{rep['genpell_max_degree']},"
                  f"{int(rep['contradiction'])},{root}")


if __name__ == "__main__":
    main()
