"""Run the whole identity registry and write a JSON report plus a summary.

    python3 scripts/run_identity_suite.py --jobs 4 --out reports/suite.json
"""

import argparse
import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple

from umbra import identities as idt


@dataclass
class SuiteConfig:
    ids: Tuple[str, ...] = idt.IDS
    jobs: int = 1
    caps: Dict[str, int] = field(default_factory=lambda: dict(idt.DEFAULT_CAPS))
    out: Optional[Path] = None


def run(cfg: SuiteConfig):
    specs = [idt.make_spec(i) for i in cfg.ids]
    start = time.perf_counter()
    reports = idt.verify_many(specs, jobs=cfg.jobs, caps=cfg.caps)
    elapsed = time.perf_counter() - start
    for r in reports:
        c = r.counts()
        print(f"{r.id:7s} {r.expectation:9s} pass={c['pass']:3d} fail={c['fail']:3d} skipped={c['skipped']:3d}")
    print(f"total {elapsed:.2f}s, exit code {idt.exit_code(reports)}")
    if cfg.out:
        cfg.out.parent.mkdir(parents=True, exist_ok=True)
        cfg.out.write_text(json.dumps([idt.report_dict(r) for r in reports], indent=2) + "\n")
    return idt.exit_code(reports)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--id", action="append", dest="ids")
    ap.add_argument("--cap", action="append", default=[], metavar="ID=N",
                    help="raise the n cap of a composition-sum identity, e.g. T10=4")
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    cfg = SuiteConfig(jobs=args.jobs, out=args.out)
    if args.ids:
        cfg.ids = tuple(args.ids)
    for item in args.cap:
        key, value = item.split("=")
        cfg.caps[key] = int(value)
    raise SystemExit(run(cfg))


if __name__ == "__main__":
    main()
