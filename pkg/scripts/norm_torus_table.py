"""Table of local invariants for norm-one tori with mixed ramification.

    python3 scripts/norm_torus_table.py --max-e 4 --max-f 3 --q 3
"""
from tori.experiments import NormTableConfig, config_from_args, norm_torus_table


def main(argv=None):
    cfg = config_from_args(NormTableConfig, argv, __doc__.splitlines()[0])
    print(f"{'n':>3} {'e':>3} {'f':>3}  {'component':<12} {'shyr':>4}  {'H^1':<6} L(1)")
    for r in norm_torus_table(cfg):
        print(f"{r['n']:>3} {r['e']:>3} {r['f']:>3}  {r['component']:<12} {r['shyr']:>4}  "
              f"{r['h1']:<6} {r['l_factor']}")


if __name__ == "__main__":
    main()
