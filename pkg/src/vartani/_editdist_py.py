"""Pure-Python Levenshtein kernel, the fallback for the compiled extension.

Same contract as vartani._editdist: unit-cost insert/delete/replace,
O(len(a) * len(b)) time, one working row of length min(len(a), len(b)) + 1.
"""

__all__ = ["levenshtein"]


def levenshtein(a: str, b: str) -> int:
    """Unit-cost Levenshtein distance between two strings."""
    if a == b:
        return 0
    # Keep b the shorter string so the row stays minimal.
    if len(b) > len(a):
        a, b = b, a
    if not b:
        return len(a)
    row = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        diag = row[0]
        row[0] = i
        for j, cb in enumerate(b, start=1):
            tmp = row[j]
            if ca == cb:
                best = diag
            else:
                best = diag + 1
            up = tmp + 1
            if up < best:
                best = up
            left = row[j - 1] + 1
            if left < best:
                best = left
            row[j] = best
            diag = tmp
    return row[-1]
