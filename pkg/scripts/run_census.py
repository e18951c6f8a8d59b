"""Census of totally ramified extensions of Q_p of degree e, for a range of boxes.

    python3 scripts/run_census.py -p 2 -e 2 --boxes 2 3 4 5 --out census_2_2.json
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from eisenram.census import CensusConfig, census_report


@dataclass
class SweepConfig:
    p: int = 2
    e: int = 2
    boxes: list = field(default_factory=lambda: [2, 3, 4])
    digits: int | None = None
    out: str | None = None


def run(cfg: SweepConfig) -> dict:
    rows = []
    for B in cfg.boxes:
        CensusConfig(cfg.p, cfg.e, B, cfg.digits)  # validates
        start = time.perf_counter()
        report = census_report(cfg.p, cfg.e, B, cfg.digits)
        rows.append({"B": B, "seconds": round(time.perf_counter() - start, 3), "report": report})
        print(f"B={B}: {report['class_count']} classes, stable_at_B={report['stable_at_B']}")
    return {"config": asdict(cfg), "runs": rows}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-p", type=int, default=2)
    ap.add_argument("-e", type=int, default=2)
    ap.add_argument("--boxes", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--digits", type=int, default=None)
    ap.add_argument("--out", default=None)
    cfg = SweepConfig(**vars(ap.parse_args()))
    result = run(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(result, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
