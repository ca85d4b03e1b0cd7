"""Download the 1990 census name-frequency lists (not bundled; not used in CI).

    python scripts/fetch_census.py DEST_DIR

The Census Bureau has moved these files several times; pass --base to point
at a current mirror. Each file has rows ``NAME FREQ CUMFREQ RANK`` and can be
fed straight to ``anonykit sweep``.
"""

import argparse
import urllib.request
from pathlib import Path

DEFAULT_BASE = "https://www2.census.gov/topics/genealogy/1990surnames"
FILES = {"FEMALE-1990": "dist.female.first", "MALE-1990": "dist.male.first", "LAST-1990": "dist.all.last"}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("dest")
    parser.add_argument("--base", default=DEFAULT_BASE)
    args = parser.parse_args()
    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    for label, name in FILES.items():
        url = f"{args.base}/{name}"
        print(f"{label}: {url}")
        urllib.request.urlretrieve(url, dest / name)


if __name__ == "__main__":
    main()
