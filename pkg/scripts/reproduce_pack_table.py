"""Regenerate the pack/equivalent force table and diff it against the golden copy.

    python scripts/reproduce_pack_table.py [--out pack_table.txt]
"""

import argparse
import difflib
import sys
from pathlib import Path

from mckibben.cli import main

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "tests" / "golden" / "pack_table_pretty.txt"
CONFIG = ROOT / "configs" / "reference.cfg"


def run() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(ROOT / "pack_table.txt"))
    args = parser.parse_args()

    code = main(["compare", "--config", str(CONFIG), "--out", args.out])
    if code != 0:
        return code
    produced = Path(args.out).read_text()
    print(produced, end="")
    expected = GOLDEN.read_text()
    if produced == expected:
        print(f"identical to {GOLDEN.relative_to(ROOT)}")
        return 0
    sys.stdout.writelines(difflib.unified_diff(
        expected.splitlines(True), produced.splitlines(True), "golden", "produced"))
    return 1


if __name__ == "__main__":
    sys.exit(run())
