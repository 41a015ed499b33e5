"""Small experiments over the catalog and the random sampler.

Each experiment takes a dataclass config and returns plain rows, so the
scripts in scripts/ only parse arguments and print.
"""
from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass, field, fields

from .catalog import norm_one_torus
from .groups import Subgroup, cyclic
from .lattice import h1
from .local import (LocalTorusData, artin_l_factor, component_group, geometric_component_group)
from .sampling import random_instances


@dataclass
class NormTableConfig:
    """Norm-one tori over Z/(e f) with inertia of order e."""

    max_e: int = 4
    max_f: int = 3
    q: int = 3


@dataclass
class SurveyConfig:
    """Random local data for comparing torsion of the component group with H^1."""

    seed: int = 0
    count: int = 200
    max_rank: int = 4
    max_inertia: int = 6
    max_group_order: int = 8
    unramified: bool = False


@dataclass
class SurveyResult:
    total: int = 0
    # instances where "component group torsion-free" and "H^1 = 0" disagree
    mismatches: list = field(default_factory=list)
    # instances where |torsion of the inertia coinvariants| != |H^1|
    geometric_mismatches: int = 0
    by_group: Counter = field(default_factory=Counter)


def norm_torus_table(cfg: NormTableConfig) -> list[dict]:
    rows = []
    for e in range(1, cfg.max_e + 1):
        for f in range(1, cfg.max_f + 1):
            n = e * f
            G = cyclic(n)
            I = Subgroup.generated(G, [(n // e) % n])
            data = LocalTorusData(norm_one_torus(G), I, 1 % n, cfg.q)
            comp = component_group(data)
            rows.append({"n": n, "e": e, "f": f, "component": str(comp),
                         "shyr": comp.torsion_order, "h1": str(h1(data.lattice, I)),
                         "l_factor": artin_l_factor(data)})
    return rows


def crosscheck_survey(cfg: SurveyConfig) -> SurveyResult:
    out = SurveyResult()
    for inst in random_instances(cfg.seed, cfg.count, cfg.max_rank, cfg.max_inertia,
                                 cfg.max_group_order, cfg.unramified):
        d = inst.data
        out.total += 1
        comp = component_group(d)
        coh = h1(d.lattice, d.inertia)
        if comp.is_free != coh.is_trivial:
            out.mismatches.append((inst.group_name, d.inertia.order, d.frobenius, d.rank,
                                   str(comp), str(coh)))
            out.by_group[inst.group_name] += 1
        if geometric_component_group(d).torsion_order != coh.torsion_order:
            out.geometric_mismatches += 1
    return out


def parser_for(config_cls, description: str) -> argparse.ArgumentParser:
    """An argparse parser with one --option per config field."""
    p = argparse.ArgumentParser(description=description)
    for f in fields(config_cls):
        flag = "--" + f.name.replace("_", "-")
        if f.type in (bool, "bool"):
            p.add_argument(flag, action="store_true", default=f.default)
        else:
            p.add_argument(flag, type=int, default=f.default)
    return p


def config_from_args(config_cls, argv=None, description: str = ""):
    args = parser_for(config_cls, description).parse_args(argv)
    return config_cls(**{f.name: getattr(args, f.name) for f in fields(config_cls)})
