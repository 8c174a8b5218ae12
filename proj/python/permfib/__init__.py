"""Permutation statistics, word bijections and generating functions.

Permutations are lists of the letters 1..n in one-line notation. Big integers
come back as Python ints and series coefficients as fractions.Fraction.
"""

from ._core import *  # noqa: F401,F403
from ._core import Error, InvalidInput, NotInDomain, NotInLanguage, ResourceLimit, SingularSeries


def parse_perm(text):
    """"2 3 5 1 4", "2,3,5,1,4" or "23514" (n <= 9) -> [2, 3, 5, 1, 4]."""
    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    return [int(t) for t in tokens]


def main(argv=None):
    import sys

    code, out, err = run_cli(list(sys.argv[1:] if argv is None else argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
