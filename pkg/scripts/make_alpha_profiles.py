#!/usr/bin/env python3
"""Derive alpha-action ring profiles and write them as strict JSON.

For each requested genus, invert the Gysin bookkeeping against the known
framed table and save the resulting profile; the files load back through
``f2moduli serre --ring-file PATH``.
"""

import argparse
from pathlib import Path

from f2moduli.ringdata import write_profile


def run(out_dir: Path, genera: list[int]) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for g in genera:
        path = out_dir / f"alpha_profile_g{g}.json"
        action = write_profile(path, g)
        print(f"genus {g}: dims {sum(action.dims)} total, ranks {action.ranks} -> {path}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=Path, default=Path("profiles"))
    ap.add_argument("--genera", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    args = ap.parse_args()
    run(args.out_dir, args.genera)
