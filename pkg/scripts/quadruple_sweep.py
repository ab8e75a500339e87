"""Dimensions of cyclic-quadruple spaces for sl(2) modules V(k) and sl(2)⊕sl(2) modules V(k1)⊗V(k2).

Only the 3-dimensional modules (V(2), and V(2)⊗V(0) / V(0)⊗V(2)) carry nonzero ρ.
"""

import argparse
import sys
from dataclasses import dataclass

from cyclic_metric.reps import quadruple_space, tensor_rep, vk_module


@dataclass
class SweepConfig:
    max_k: int = 5
    max_tensor_k: int = 3


def sweep(cfg: SweepConfig):
    single = {k: quadruple_space(vk_module(k)).dimension for k in range(cfg.max_k + 1)}
    pairs = {}
    for k1 in range(cfg.max_tensor_k + 1):
        for k2 in range(cfg.max_tensor_k + 1):
            pairs[(k1, k2)] = quadruple_space(tensor_rep(vk_module(k1), vk_module(k2))).dimension
    return single, pairs


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-k", type=int, default=SweepConfig.max_k)
    p.add_argument("--max-tensor-k", type=int, default=SweepConfig.max_tensor_k)
    args = p.parse_args(argv)
    single, pairs = sweep(SweepConfig(args.max_k, args.max_tensor_k))
    print("sl(2) on V(k):")
    for k, d in single.items():
        print(f"  k={k} dim V={k + 1}: {d}")
    print("sl(2)+sl(2) on V(k1)xV(k2):")
    for (k1, k2), d in pairs.items():
        print(f"  ({k1},{k2}) dim V={(k1 + 1) * (k2 + 1)}: {d}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
