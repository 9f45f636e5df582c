"""Solve time and peak memory of cycle/co-graph compositions of growing size."""

import argparse
import time
import tracemalloc
from dataclasses import dataclass, field

from strongdim.frame import solve
from strongdim.generate import cactus_cograph_instance


@dataclass
class ScaleConfig:
    sizes: list[int] = field(default_factory=lambda: [10_000, 25_000, 50_000, 100_000])
    seed: int = 7
    max_size: int = 50
    memory: bool = False


def run(cfg: ScaleConfig):
    print(f"{'vertices':>9} {'edges':>9} {'blocks':>7} {'dim':>7} {'seconds':>8} {'us/vertex':>9}"
          + (f" {'peak MB':>8}" if cfg.memory else ""))
    for n in cfg.sizes:
        g = cactus_cograph_instance(n, cfg.seed, cfg.max_size).graph
        if cfg.memory:
            tracemalloc.start()
        t0 = time.perf_counter()
        s = solve(g)
        dt = time.perf_counter() - t0
        row = f"{g.n:>9} {g.edge_count:>9} {len(s.trace):>7} {s.dimension:>7} {dt:>8.2f} {1e6 * dt / g.n:>9.1f}"
        if cfg.memory:
            row += f" {tracemalloc.get_traced_memory()[1] / 2**20:>8.1f}"
            tracemalloc.stop()
        print(row)


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("sizes", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-size", type=int, default=50)
    p.add_argument("--memory", action="store_true", help="trace peak allocation (slower)")
    args = p.parse_args()
    cfg = ScaleConfig(seed=args.seed, max_size=args.max_size, memory=args.memory)
    if args.sizes:
        cfg.sizes = args.sizes
    run(cfg)


if __name__ == "__main__":
    main()
