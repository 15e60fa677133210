"""Long learning experiments behind the acceptance checks.

    python3 scripts/run_experiments.py small   [--episodes N] [--seeds 0 1 2]
    python3 scripts/run_experiments.py rainbow [--steps N]    [--seeds 0 1 2]

Each run trains in ``experiments/<suite>/<condition>-seed<k>/`` (resumable:
rerunning continues where a run stopped) and the suite summary is written to
``experiments/<suite>/summary.json``.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from hanabi_conventions.config import RunConfig
from hanabi_conventions.harness import read_curve, train, write_json
from hanabi_conventions.harness.io import first_episode_reaching

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "experiments")

SMALL_CONDITIONS = ("primitive", "pure_conventions", "augmented_simplified")
RAINBOW_CONDITIONS = ("primitive", "augmented")


def _log(msg: str) -> None:
    print(time.strftime("%H:%M:%S"), msg, flush=True)


def _run(suite: str, condition: str, seed: int, **fields):
    out = os.path.join(ROOT, suite, f"{condition}-seed{seed}")
    run = RunConfig(space=condition, seed=seed, output_dir=out, checkpoint_every=5000, **fields)
    _log(f"{suite}/{condition} seed {seed}: start")
    summary = train(run, log=lambda m: None)
    _log(f"{suite}/{condition} seed {seed}: {summary.episodes} episodes, {summary.env_steps} steps, "
         f"final ema {summary.final_ema:.3f}")
    return read_curve(summary.curve_path)


def small(args) -> dict:
    rows = {}
    for seed in args.seeds:
        curves = {c: _run("small", c, seed, preset="small", agent="dqn", episodes=args.episodes)
                  for c in SMALL_CONDITIONS}
        prim = curves["primitive"]
        converged = float(prim.ema[-1])
        entry = {c: {"final_ema": float(cv.ema[-1]), "episodes": int(cv.episode[-1]),
                     "steps": int(cv.step[-1])} for c, cv in curves.items()}
        entry["primitive_converged_ema"] = converged
        entry["primitive_first_reach"] = first_episode_reaching(prim, converged)
        entry["pure_first_reach"] = first_episode_reaching(curves["pure_conventions"], converged)
        rows[str(seed)] = entry
    summary = {"episodes": args.episodes, "seeds": args.seeds, "runs": rows}
    write_json(os.path.join(ROOT, "small", "summary.json"), summary)
    return summary


def rainbow(args) -> dict:
    rows = {}
    for seed in args.seeds:
        entry = {}
        for c in RAINBOW_CONDITIONS:
            cv = _run("rainbow3p", c, seed, preset="full", num_players=3, agent="rainbow_lite",
                      episodes=0, max_steps=args.steps)
            entry[c] = {"final_ema": float(cv.ema[-1]), "episodes": int(cv.episode[-1]),
                        "steps": int(cv.step[-1]), "last_1000_raw": float(cv.raw[-1000:].mean())}
        rows[str(seed)] = entry
    summary = {"steps": args.steps, "seeds": args.seeds, "runs": rows}
    write_json(os.path.join(ROOT, "rainbow3p", "summary.json"), summary)
    return summary


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="suite", required=True)
    p = sub.add_parser("small")
    p.add_argument("--episodes", type=int, default=60000)
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    p = sub.add_parser("rainbow")
    p.add_argument("--steps", type=int, default=200_000)
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    args = parser.parse_args(argv)
    result = small(args) if args.suite == "small" else rainbow(args)
    _log(f"summary: {result}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
