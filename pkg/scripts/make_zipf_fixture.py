"""Write a synthetic name-frequency table shaped like the 1990 census lists.

Label i (1-based) gets frequency proportional to 1 / i**s, printed as a
percentage with three decimals. Usage:

    python scripts/make_zipf_fixture.py 500 1.0 > src/anonykit/data/zipf500.txt
"""

import sys


def main(n=500, s=1.0):
    weights = [1 / (i**s) for i in range(1, n + 1)]
    total = sum(weights)
    cum = 0.0
    for rank, w in enumerate(weights, 1):
        freq = round(100 * w / total, 3)
        cum += freq
        print(f"{'NAME%04d' % rank:<15}{freq:6.3f}{cum:7.3f}{rank:7d}")


if __name__ == "__main__":
    args = sys.argv[1:]
    main(int(args[0]) if args else 500, float(args[1]) if len(args) > 1 else 1.0)
