"""For every Galois class in a census, test the criterion exactly at the break
and tabulate the graded norm cokernels that explain the outcome.

    python3 scripts/tbreak_sweep.py -p 3 -e 2 -B 4
"""
import argparse
from dataclasses import dataclass

from eisenram.census import CensusConfig, census
from eisenram.identity import integer_break, tbreak_check
from eisenram.norm_graded import coker_order, quotient_order
from eisenram.padic import format_val


@dataclass
class TBreakConfig:
    p: int = 2
    e: int = 2
    B: int = 4
    digits: int | None = None


def run(cfg: TBreakConfig) -> list[dict]:
    rows = []
    for c in census(CensusConfig(cfg.p, cfg.e, cfg.B, cfg.digits)):
        if not c.galois or c.u_break.denominator != 1:
            continue
        f = c.representative
        m = integer_break(f, cfg.digits)
        res = tbreak_check(f, cfg.digits)
        row = {
            "f": str(f),
            "u_break": format_val(c.u_break),
            "holds": res.holds,
            "witness": str(res.witness[0]) if res.witness else None,
            "same_count": sum(o.verdict.value == "Same" for _, _, o in res.sweep),
            "sweep": len(res.sweep),
            "coker": coker_order(f, m - 1, cfg.digits),
            "quotient": quotient_order(f, m - 1, cfg.digits),
        }
        rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-p", type=int, default=2)
    ap.add_argument("-e", type=int, default=2)
    ap.add_argument("-B", type=int, default=4)
    ap.add_argument("--digits", type=int, default=None)
    rows = run(TBreakConfig(**vars(ap.parse_args())))
    cols = ["f", "u_break", "holds", "witness", "same_count", "sweep", "coker", "quotient"]
    print("\t".join(cols))
    for r in rows:
        print("\t".join(str(r[k]) for k in cols))


if __name__ == "__main__":
    main()
