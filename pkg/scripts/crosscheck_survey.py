"""Compare torsion-freeness of the component group with vanishing of H^1.

Also counts disagreements between |torsion of the inertia coinvariants|
and |H^1|, which should never happen.

    python3 scripts/crosscheck_survey.py --seed 0 --count 200
"""
from tori.experiments import SurveyConfig, config_from_args, crosscheck_survey


def main(argv=None):
    cfg = config_from_args(SurveyConfig, argv, __doc__.splitlines()[0])
    res = crosscheck_survey(cfg)
    print(f"config: {cfg}")
    print(f"instances: {res.total}")
    print(f"torsion-free vs H^1 = 0 disagreements: {len(res.mismatches)}")
    for name, e, f, d, comp, coh in res.mismatches:
        print(f"  {name}: |I|={e} F={f} d={d} component={comp} H^1={coh}")
    if res.by_group:
        print("by group:", dict(res.by_group))
    print(f"|coinvariant torsion| vs |H^1| disagreements: {res.geometric_mismatches}")


if __name__ == "__main__":
    main()
