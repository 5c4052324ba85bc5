"""Pure-Python fallback for the compiled overlap scans in ``_kernels.pyx``."""


def lspo(x: str, y: str) -> int:
    nx = len(x)
    for L in range(min(nx, len(y)), 0, -1):
        off = nx - L
        for k in range(L):
            if x[off + k] != y[k]:
                break
        else:
            return L
    return 0


def overlap_row(x, others):
    return [lspo(x, y) for y in others]


def overlap_column(others, y):
    return [lspo(x, y) for x in others]


def overlap_matrix(strings):
    return [[lspo(a, b) for b in strings] for a in strings]
