#!/usr/bin/env python3
"""Check sum(c_i) == 3t over all symmetric classes up to a discriminant bound."""

import argparse
import time
from dataclasses import dataclass

from surdsym.census import sum_rule_sweep


@dataclass(frozen=True)
class SumRuleRun:
    delta_max: int = 10_000
    jobs: int = 4

    def execute(self) -> None:
        t0 = time.monotonic()
        checked, failures = sum_rule_sweep(self.delta_max, jobs=self.jobs)
        elapsed = time.monotonic() - t0
        print(f"checked {checked} super/anti/(m+n) classes with "
              f"delta <= {self.delta_max} in {elapsed:.1f}s")
        if failures:
            for f in failures:
                print(f"  VIOLATION delta={f.delta} rep={f.representative} "
                      f"period={f.modular_period}")
            raise SystemExit(1)
        print("sum rule holds for every class checked")


def parse_args() -> SumRuleRun:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--delta-max", type=int, default=10_000)
    ap.add_argument("--jobs", type=int, default=4)
    ns = ap.parse_args()
    return SumRuleRun(ns.delta_max, ns.jobs)


if __name__ == "__main__":
    parse_args().execute()
