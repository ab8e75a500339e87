"""Randomized soundness sweep for the four metric constructors.

Every output is re-validated (Jacobi and the cyclic identity) independently of
the constructor's own certification step.
"""

import argparse
import random
import sys
import time
from collections import Counter
from dataclasses import dataclass

from cyclic_metric import randgen
from cyclic_metric.constructions import (
    central_double_extension_1d,
    derive_theta,
    double_extension,
    quadruple_extension,
    semidirect,
)
from cyclic_metric.forms import cyclic_defect
from cyclic_metric.lie import validate


@dataclass
class StressConfig:
    trials: int = 200
    seed: int = 0


def _double(rng):
    h, s, pi, bt = randgen.double_extension_inputs(rng)
    return double_extension(h, s, pi, derive_theta(h, s, pi), bt)


def run(cfg: StressConfig):
    rng = random.Random(cfg.seed)
    makers = {
        "semidirect": lambda: semidirect(*randgen.semidirect_inputs(rng)),
        "quadruple_extension": lambda: quadruple_extension(*randgen.quadruple_inputs(rng)),
        "double_extension": lambda: _double(rng),
        "central_double_extension_1d": lambda: central_double_extension_1d(*randgen.central_inputs(rng)),
    }
    results = {}
    for name, mk in makers.items():
        t0 = time.perf_counter()
        fails, dims = 0, Counter()
        for _ in range(cfg.trials):
            ma = mk()
            dims[ma.dim] += 1
            if not validate(ma.algebra).ok or cyclic_defect(ma.algebra, ma.form):
                fails += 1
        results[name] = (fails, dict(sorted(dims.items())), time.perf_counter() - t0)
    return results


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=StressConfig.trials)
    p.add_argument("--seed", type=int, default=StressConfig.seed)
    args = p.parse_args(argv)
    results = run(StressConfig(args.trials, args.seed))
    for name, (fails, dims, secs) in results.items():
        print(f"{name:<30} failures={fails} dims={dims} ({secs:.1f}s)")
    return 1 if any(r[0] for r in results.values()) else 0


if __name__ == "__main__":
    sys.exit(main())
