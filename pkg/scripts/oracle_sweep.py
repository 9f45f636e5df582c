"""Compare the block-decomposition solver with the direct SR cover on generated instances."""

import argparse
import time
from dataclasses import dataclass

from strongdim.frame import solve
from strongdim.generate import generate_instances, parse_components
from strongdim.resolver import is_strong_resolving_set
from strongdim.srgraph import strong_resolving_graph
from strongdim.vertex_cover import min_vertex_cover


@dataclass
class SweepConfig:
    components: str = "cycle:3-9,grid:2x2-3x3,cograph:2-8,random:2-7"
    count: int = 500
    seed: int = 1
    max_components: int = 6
    max_vertices: int = 40


def run(cfg: SweepConfig) -> int:
    specs = parse_components(cfg.components)
    instances = generate_instances(specs, cfg.count, cfg.seed, cfg.max_components, cfg.max_vertices)
    t_frame = t_oracle = 0.0
    mismatches = 0
    for inst in instances:
        g = inst.graph
        t0 = time.perf_counter()
        s = solve(g)
        t1 = time.perf_counter()
        want = min_vertex_cover(strong_resolving_graph(g)).size
        t_oracle += time.perf_counter() - t1
        t_frame += t1 - t0
        if s.dimension != want or not is_strong_resolving_set(g, s.vertices)[0]:
            mismatches += 1
            print(f"mismatch seed={inst.seed}: frame {s.dimension} oracle {want}")
    print(f"{len(instances)} instances, {mismatches} mismatches; "
          f"frame {t_frame:.2f}s, oracle {t_oracle:.2f}s")
    return 1 if mismatches else 0


def main():
    p = argparse.ArgumentParser(description=__doc__)
    defaults = SweepConfig()
    p.add_argument("--components", default=defaults.components)
    p.add_argument("--count", type=int, default=defaults.count)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--max-components", type=int, default=defaults.max_components)
    p.add_argument("--max-vertices", type=int, default=defaults.max_vertices)
    args = p.parse_args()
    raise SystemExit(run(SweepConfig(args.components, args.count, args.seed, args.max_components, args.max_vertices)))


if __name__ == "__main__":
    main()
