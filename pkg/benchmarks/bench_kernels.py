"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best-of-N time for each backend and
the speed-up. Inputs match what the engines pass at desk scale.
"""

import argparse
import timeit

import numpy as np

from seqlfi import _kernels
from seqlfi.simulators import LVConfig


def cases(rng):
    n, k, d = 100, 5, 9
    t = d * (d + 1) // 2
    heads = (rng.standard_normal((n, k)), rng.standard_normal((n, k, d)),
             0.3 * rng.standard_normal((n, k, t)), rng.standard_normal((n, d)))
    up = np.ones(n)
    cfg = LVConfig()
    rates = np.array([0.01, 0.5, 1.0, 0.01])

    def gillespie(mod):
        r = np.random.default_rng(0)
        state = np.array([0.0, cfg.predators0, cfg.prey0, 0.0, 0.0])
        record = np.zeros((cfg.n_grid, 2))
        while mod.gillespie_chunk(rates, state, r.random(2 * cfg.chunk), record, cfg.step,
                                  cfg.duration, cfg.max_events) == 0:
            pass

    service = 1 + 4 * rng.random(50)
    arrivals = np.cumsum(rng.exponential(5.0, 50))
    p = 14_000
    adam = [rng.standard_normal(p) for _ in range(4)]

    return {
        "mixture log-prob (100 x K5 x D9)": lambda mod: mod.mixture_head_log_prob(*heads),
        "mixture log-prob + grad": lambda mod: mod.mixture_head_log_prob(*heads, up, True),
        "gillespie Lotka-Volterra run": gillespie,
        "M/G/1 departures (50)": lambda mod: mod.mg1_interdepartures(service, arrivals),
        "adam step (14k params)": lambda mod: mod.adam_update(adam[0], adam[1], adam[2],
                                                              np.abs(adam[3]), 1e-3, 0.9,
                                                              0.999, 1e-8, 10),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels.compiled is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e .` first")
    print(f"{'kernel':36s} {'cython':>11s} {'python':>11s} {'speed-up':>9s}")
    for name, fn in cases(np.random.default_rng(1)).items():
        times = []
        for mod in (_kernels.compiled, _kernels.fallback):
            number = max(1, int(0.2 / max(timeit.timeit(lambda: fn(mod), number=1), 1e-6)))
            best = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat))
            times.append(best / number)
        print(f"{name:36s} {times[0] * 1e3:9.3f}ms {times[1] * 1e3:9.3f}ms "
              f"{times[1] / times[0]:8.1f}x")


if __name__ == "__main__":
    main()
