"""Regenerate the golden JSON files from the transcribed published constants.

    python3 scripts/write_golden_files.py [--check]

With --check nothing is written; the exit status says whether the files on
disk are current.
"""
import argparse
import json
import sys

from berndt.reference import DATA_DIR, golden_items


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    stale = []
    DATA_DIR.mkdir(exist_ok=True)
    for name, expr in sorted(golden_items().items()):
        text = json.dumps(expr.to_json_obj(), indent=2) + "\n"
        path = DATA_DIR / name
        if path.exists() and path.read_text() == text:
            continue
        stale.append(name)
        if not args.check:
            path.write_text(text)
    verb = "stale" if args.check else "wrote"
    for name in stale:
        print(f"{verb} {name}")
    return 1 if (args.check and stale) else 0


if __name__ == "__main__":
    sys.exit(main())
