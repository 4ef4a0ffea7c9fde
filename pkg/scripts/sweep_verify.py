"""Build and verify every supported even-rank query up to a size limit.

    python scripts/sweep_verify.py --real-max 64 --hermitian-max 32

Prints one TSV line per query and a closing summary; exits 1 if any query fails.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from rhspaces import build_space, classify, verify_space
from rhspaces.spaces import MAX_CORANK


@dataclass(frozen=True)
class SweepConfig:
    real_max: int = 64
    hermitian_max: int = 32
    samples: int = 200
    seed: int = 0

    def queries(self):
        for field, n_max in (("real", self.real_max), ("complex", self.hermitian_max)):
            for n in range(1, n_max + 1):
                for s in range(MAX_CORANK[field] + 1):
                    if s < n and (n - s) % 2 == 0:
                        yield field, n, s


def run(cfg: SweepConfig) -> int:
    failed = 0
    print("field\tn\ts\tdim\tcertificate\tpassed\tseconds")
    for field, n, s in cfg.queries():
        start = time.perf_counter()
        space = build_space(field, n, s)
        report = verify_space(space, samples=cfg.samples, seed=cfg.seed)
        ok = report.passed and space.dimension == classify(field=field, n=n, s=s).lower
        failed += not ok
        kind = space.certificate.kind if space.certificate else "-"
        print(f"{field}\t{n}\t{s}\t{space.dimension}\t{kind}\t{ok}\t{time.perf_counter() - start:.3f}")
    print(f"# {failed} failing queries", file=sys.stderr)
    return 1 if failed else 0


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--real-max", type=int, default=SweepConfig.real_max)
    p.add_argument("--hermitian-max", type=int, default=SweepConfig.hermitian_max)
    p.add_argument("--samples", type=int, default=SweepConfig.samples)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    a = p.parse_args(argv)
    return run(SweepConfig(a.real_max, a.hermitian_max, a.samples, a.seed))


if __name__ == "__main__":
    sys.exit(main())
