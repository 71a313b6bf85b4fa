#!/usr/bin/env python3
"""Emit the class tables (non-square and square discriminants) to files."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from surdsym.cli import main as cli_main


@dataclass(frozen=True)
class TableRun:
    delta_max: int = 100
    fmt: str = "md"
    jobs: int = 1
    out_dir: Path = Path("out")

    def execute(self) -> None:
        self.out_dir.mkdir(parents=True, exist_ok=True)
        ext = {"md": "md", "csv": "csv", "json": "json"}[self.fmt]
        for which in ("nonzero", "zero"):
            target = self.out_dir / f"table_{which}_{self.delta_max}.{ext}"
            rc = cli_main(["table", "--delta-max", str(self.delta_max),
                           "--which", which, "--format", self.fmt,
                           "--jobs", str(self.jobs), "--out", str(target)])
            if rc != 0:
                raise SystemExit(rc)
            print(f"wrote {target}")


def parse_args() -> TableRun:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--delta-max", type=int, default=100)
    ap.add_argument("--format", choices=("md", "csv", "json"), default="md")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out-dir", type=Path, default=Path("out"))
    ns = ap.parse_args()
    return TableRun(ns.delta_max, ns.format, ns.jobs, ns.out_dir)


if __name__ == "__main__":
    parse_args().execute()
