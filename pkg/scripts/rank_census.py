"""2-rank of user-supplied design files against the 3^t - 2^t bound."""

import argparse
import json
import sys

from arcres import formats
from arcres.design import validate_steiner
from arcres.rank import conjecture_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("designs", nargs="+")
    ap.add_argument("--cross-check", action="store_true", help="search for a bound-achieving family at the bound")
    args = ap.parse_args()

    status = 0
    for path in args.designs:
        v, blocks = formats.parse_blocks(formats.read_text(path))
        rep = conjecture_check(validate_steiner(v, blocks, strict=False), cross_check=args.cross_check)
        print(json.dumps({"file": path, **rep.to_dict()}))
        if rep.verdict == "below-bound":
            status = 1
    sys.exit(status)


if __name__ == "__main__":
    main()
