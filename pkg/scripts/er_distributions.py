"""Communication-time distributions on random connected graphs.

    python scripts/er_distributions.py --out results/

Writes one CSV and one JSON summary per setting and prints a text histogram.
"""

import argparse
from pathlib import Path

from greedyorder.experiments import ExperimentConfig, run_er_experiment

SETTINGS = {
    "small": ExperimentConfig(n=6, p=0.3, samples=200, methods=("random", "best", "alg1")),
    "large": ExperimentConfig(n=40, p=0.05, samples=300, methods=("random", "alg1")),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--rng", type=int, default=0)
    ap.add_argument("--only", choices=sorted(SETTINGS))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for name, cfg in SETTINGS.items():
        if args.only and name != args.only:
            continue
        cfg = ExperimentConfig(cfg.n, cfg.p, cfg.samples, cfg.methods, rng_seed=args.rng)
        dist = run_er_experiment(cfg)
        (args.out / f"er_{name}.csv").write_text(dist.to_csv())
        (args.out / f"er_{name}.json").write_text(dist.summary_json())
        print(f"== n={cfg.n} p={cfg.p} samples={cfg.samples}")
        for m in cfg.methods:
            s = dist.summary()[m]
            print(f"{m:>7}: mean {s['mean']:.2f}  min {s['min']:.0f}  max {s['max']:.0f}")
            print(dist.histogram_text(m))


if __name__ == "__main__":
    main()
