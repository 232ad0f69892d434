"""Pure-Python elimination kernel (exact, arbitrary-size integers).

Mirrors ``_ckernels.pyx`` step for step; the Cython build is used when
available and falls back here on int64 overflow.
"""


def smith_pivots(matrix):
    """Diagonalize an integer matrix by unimodular row and column operations.

    ``matrix`` is a list of equal-length rows of ints and is not modified.
    Returns the absolute values of the nonzero diagonal entries in the order
    they were produced.  They are not yet in divisibility order.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    active = list(range(m))
    pivots = []
    for c in range(n):
        while True:
            r = -1
            best = 0
            for i in active:
                v = a[i][c]
                if v and (r < 0 or abs(v) < best):
                    r, best = i, abs(v)
                    if best == 1:
                        break
            if r < 0:
                break
            p = a[r][c]
            prow = a[r]
            cleared = True
            for i in active:
                if i != r and a[i][c]:
                    q = a[i][c] // p
                    row = a[i]
                    for j in range(c, n):
                        if prow[j]:
                            row[j] -= q * prow[j]
                    if row[c]:
                        cleared = False
            if not cleared:
                continue
            swapped = False
            for j in range(c + 1, n):
                if prow[j]:
                    # column op col_j -= q*col_c only touches the pivot row,
                    # since column c is zero elsewhere
                    prow[j] %= p
                    if prow[j]:
                        for i in active:
                            a[i][c], a[i][j] = a[i][j], a[i][c]
                        swapped = True
                        break
            if swapped:
                continue
            pivots.append(abs(p))
            active.remove(r)
            break
    return pivots
