# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of `_purecheck`: identical contracts on scaled int64 values.

The caller guarantees magnitudes small enough that no intermediate sum can
overflow (see `_kernel`); halving operations stay exact because inputs are
pre-scaled by twice a common denominator, making every halved quantity even.
"""

from libc.stdlib cimport free, malloc

ctypedef long long i64

BACKEND = "compiled"

MECH_SOCIAL_OPTIMAL = 0
MECH_LEFTMOST = 1
MECH_MAXCOST = 2
MECH_OPTIMAL_MAXCOST = 3

KIND_GSP = 0
KIND_SGSP = 1


cdef inline i64 _shrink(i64 x, i64 a, i64 b) noexcept:
    if x <= a:
        return x
    if x >= b:
        return x - (b - a)
    return a


cdef inline i64 _cost(i64 x, i64 a, i64 b) noexcept:
    cdef i64 s = _shrink(x, a, b) - _shrink(0, a, b)
    return -s if s < 0 else s


cdef i64 _inf_d(i64* xs, int n, i64 d, i64* buf) noexcept:
    # buf: scratch of size 2n; holds the sorted candidate points.
    cdef int m = 0, i, j
    cdef i64 v, c
    cdef int n_leq, n_geq, n_gt
    for i in range(2 * n):
        v = xs[i >> 1]
        if i & 1:
            v -= d
        j = m
        while j > 0 and buf[j - 1] > v:
            buf[j] = buf[j - 1]
            j -= 1
        buf[j] = v
        m += 1
    for i in range(m):
        c = buf[i]
        if i > 0 and c == buf[i - 1]:
            continue
        n_leq = 0
        n_geq = 0
        n_gt = 0
        for j in range(n):
            if xs[j] <= c:
                n_leq += 1
            if xs[j] >= c + d:
                n_geq += 1
            if xs[j] > c + d:
                n_gt += 1
        if n_leq >= n_geq or n_leq >= n_gt:
            return c
    return buf[m - 1]  # unreachable: predicate holds at the largest candidate


cdef void _mech(int mech, i64* xs, int n, i64 d, i64* buf, i64* oa, i64* ob) noexcept:
    cdef i64 xl, xr, t, c0
    cdef int i
    if mech == 0:  # social optimal
        t = _inf_d(xs, n, d, buf)
        if t >= 0:
            oa[0] = 0
            ob[0] = d
        elif t <= -d:
            oa[0] = -d
            ob[0] = 0
        else:
            oa[0] = t
            ob[0] = t + d
        return
    xl = xs[0]
    xr = xs[0]
    for i in range(1, n):
        if xs[i] < xl:
            xl = xs[i]
        if xs[i] > xr:
            xr = xs[i]
    if mech == 1:  # leftmost
        if xl >= 0:
            oa[0] = 0
            ob[0] = d
        elif xl <= -d:
            oa[0] = -d
            ob[0] = 0
        else:
            oa[0] = xl
            ob[0] = xl + d
        return
    if mech == 2:  # maxcost
        t = xl if xl < 0 else 0
        oa[0] = t
        ob[0] = t + d
        return
    # optimal maxcost
    if xl >= 0:
        oa[0] = 0
        ob[0] = d
    elif xr <= 0:
        oa[0] = -d
        ob[0] = 0
    elif xl + xr > d:
        oa[0] = 0
        ob[0] = d
    elif xl + xr < -d:
        oa[0] = -d
        ob[0] = 0
    elif xr - xl <= d:
        oa[0] = xl
        ob[0] = xl + d
    else:
        c0 = (xr - xl - d) // 2
        oa[0] = xl + c0
        ob[0] = xr - c0


cdef i64* _to_array(values) except NULL:
    cdef int n = len(values)
    cdef i64* out = <i64*> malloc(n * sizeof(i64))
    if out == NULL:
        raise MemoryError()
    cdef int i
    try:
        for i in range(n):
            out[i] = values[i]
    except BaseException:
        free(out)
        raise
    return out


def shrink(x, a, b):
    return _shrink(x, a, b)


def cost(x, a, b):
    return _cost(x, a, b)


def inf_d(xs, d):
    cdef int n = len(xs)
    cdef i64* X = _to_array(xs)
    cdef i64* buf = <i64*> malloc(2 * n * sizeof(i64))
    if buf == NULL:
        free(X)
        raise MemoryError()
    try:
        return _inf_d(X, n, d, buf)
    finally:
        free(buf)
        free(X)


def mechanism_range(int mech, xs, i64 d):
    if mech < 0 or mech > 3:
        raise ValueError(f"unknown mechanism code {mech}")
    cdef int n = len(xs)
    cdef i64* X = _to_array(xs)
    cdef i64* buf = <i64*> malloc(2 * n * sizeof(i64))
    cdef i64 a = 0, b = 0
    if buf == NULL:
        free(X)
        raise MemoryError()
    try:
        _mech(mech, X, n, d, buf, &a, &b)
        return (a, b)
    finally:
        free(buf)
        free(X)


def social_cost(xs, i64 a, i64 b):
    cdef i64 total = 0
    cdef i64 x
    for x in xs:
        total += _cost(x, a, b)
    return total


def max_cost(xs, i64 a, i64 b):
    cdef i64 best = 0
    cdef i64 x, c
    cdef bint first = True
    for x in xs:
        c = _cost(x, a, b)
        if first or c > best:
            best = c
            first = False
    return best


cdef int _push_unique_sorted(i64* arr, int m, i64 v) noexcept:
    # insertion keeping arr[:m] sorted; duplicates allowed (dedup at scan).
    cdef int j = m
    while j > 0 and arr[j - 1] > v:
        arr[j] = arr[j - 1]
        j -= 1
    arr[j] = v
    return m + 1


cdef tuple _sweep(i64* xs, int n, i64 d, i64* anchors, int m, bint maximum):
    cdef i64 best_t = 0, best = 0, t, value, c
    cdef bint first = True
    cdef int i, j
    for i in range(m):
        t = anchors[i]
        if i > 0 and t == anchors[i - 1]:
            continue
        if maximum:
            value = 0
            for j in range(n):
                c = _cost(xs[j], t, t + d)
                if j == 0 or c > value:
                    value = c
        else:
            value = 0
            for j in range(n):
                value += _cost(xs[j], t, t + d)
        if first or value < best:
            best_t = t
            best = value
            first = False
    return (best_t, best)


def optimal_social(xs, i64 d):
    cdef int n = len(xs)
    cdef i64* X = _to_array(xs)
    cdef i64* anchors = <i64*> malloc((2 * n + 2) * sizeof(i64))
    cdef int m = 0
    cdef int i
    cdef i64 v
    if anchors == NULL:
        free(X)
        raise MemoryError()
    try:
        for i in range(n):
            v = X[i]
            if -d <= v <= 0:
                m = _push_unique_sorted(anchors, m, v)
            v = X[i] - d
            if -d <= v <= 0:
                m = _push_unique_sorted(anchors, m, v)
        m = _push_unique_sorted(anchors, m, -d)
        m = _push_unique_sorted(anchors, m, 0)
        return _sweep(X, n, d, anchors, m, False)
    finally:
        free(anchors)
        free(X)


def optimal_max_closed(xs, i64 d):
    cdef int n = len(xs)
    cdef i64* X = _to_array(xs)
    cdef i64 xl, xr, v
    cdef int i
    try:
        xl = X[0]
        xr = X[0]
        for i in range(1, n):
            if X[i] < xl:
                xl = X[i]
            if X[i] > xr:
                xr = X[i]
    finally:
        free(X)
    if xl >= 0:
        v = xr - d
        return v if v > 0 else 0
    if xr <= 0:
        v = -xl - d
        return v if v > 0 else 0
    if xl + xr > d:
        return xr - d
    if xl + xr < -d:
        return -xl - d
    v = (xr - xl - d) // 2
    return v if v > 0 else 0


def optimal_max_brute(xs, i64 d):
    cdef int n = len(xs)
    cdef i64* X = _to_array(xs)
    cdef i64* anchors = <i64*> malloc((2 * n + 2 + n * n) * sizeof(i64))
    cdef int m = 0
    cdef int i, j
    cdef i64 v
    if anchors == NULL:
        free(X)
        raise MemoryError()
    try:
        for i in range(n):
            v = X[i]
            if -d <= v <= 0:
                m = _push_unique_sorted(anchors, m, v)
            v = X[i] - d
            if -d <= v <= 0:
                m = _push_unique_sorted(anchors, m, v)
        m = _push_unique_sorted(anchors, m, -d)
        m = _push_unique_sorted(anchors, m, 0)
        for i in range(n):
            if X[i] >= 0:
                continue
            for j in range(n):
                if X[j] <= 0:
                    continue
                v = (X[i] + X[j] - d) // 2
                if -d <= v <= 0:
                    m = _push_unique_sorted(anchors, m, v)
        return _sweep(X, n, d, anchors, m, True)
    finally:
        free(anchors)
        free(X)


def first_violation(int mech, xs, i64 d, cands, int kind, int max_coalition):
    """First profitable deviation in canonical order; see `_purecheck`."""
    cdef int n = len(xs)
    cdef int m = len(cands)
    cdef int max_size = max_coalition if max_coalition < n else n
    if m == 0:
        return None
    cdef i64* X = NULL
    cdef i64* C = NULL
    cdef i64* Y = NULL
    cdef i64* BASE = NULL
    cdef i64* buf = NULL
    cdef int* POOL = NULL
    cdef int* IDX = NULL
    cdef int* DIG = NULL
    cdef int* COAL = NULL
    cdef i64 base_a = 0, base_b = 0, a = 0, b = 0, after
    cdef int psize = 0, size, i, k, pos
    cdef bint valid, hit, all_zero
    result = None
    try:
        X = _to_array(xs)
        C = _to_array(cands)
        Y = <i64*> malloc(n * sizeof(i64))
        BASE = <i64*> malloc(n * sizeof(i64))
        buf = <i64*> malloc(2 * n * sizeof(i64))
        POOL = <int*> malloc(n * sizeof(int))
        IDX = <int*> malloc((n + 1) * sizeof(int))
        DIG = <int*> malloc((n + 1) * sizeof(int))
        COAL = <int*> malloc((n + 1) * sizeof(int))
        if Y == NULL or BASE == NULL or buf == NULL or POOL == NULL \
                or IDX == NULL or DIG == NULL or COAL == NULL:
            raise MemoryError()

        _mech(mech, X, n, d, buf, &base_a, &base_b)
        for i in range(n):
            Y[i] = X[i]
            BASE[i] = _cost(X[i], base_a, base_b)
            if kind == KIND_GSP:
                if BASE[i] > 0:
                    POOL[psize] = i
                    psize += 1
            else:
                POOL[psize] = i
                psize += 1

        for size in range(1, max_size + 1):
            if size > psize:
                break
            for k in range(size):
                IDX[k] = k
            while True:
                for k in range(size):
                    COAL[k] = POOL[IDX[k]]
                all_zero = True
                for k in range(size):
                    if BASE[COAL[k]] != 0:
                        all_zero = False
                        break
                if not (kind == KIND_SGSP and all_zero):
                    for k in range(size):
                        DIG[k] = 0
                    while True:
                        valid = True
                        if kind == KIND_GSP:
                            for k in range(size):
                                if C[DIG[k]] == X[COAL[k]]:
                                    valid = False
                                    break
                        if valid:
                            for k in range(size):
                                Y[COAL[k]] = C[DIG[k]]
                            _mech(mech, Y, n, d, buf, &a, &b)
                            if kind == KIND_GSP:
                                hit = True
                                for k in range(size):
                                    if _cost(X[COAL[k]], a, b) >= BASE[COAL[k]]:
                                        hit = False
                                        break
                            else:
                                hit = False
                                for k in range(size):
                                    after = _cost(X[COAL[k]], a, b)
                                    if after > BASE[COAL[k]]:
                                        hit = False
                                        break
                                    if after < BASE[COAL[k]]:
                                        hit = True
                            if hit:
                                result = (
                                    tuple(COAL[k] for k in range(size)),
                                    tuple(C[DIG[k]] for k in range(size)),
                                )
                                return result
                        # advance the report odometer (rightmost fastest)
                        pos = size - 1
                        while pos >= 0:
                            DIG[pos] += 1
                            if DIG[pos] < m:
                                break
                            DIG[pos] = 0
                            pos -= 1
                        if pos < 0:
                            break
                    for k in range(size):
                        Y[COAL[k]] = X[COAL[k]]
                # advance the coalition (standard next-combination)
                pos = size - 1
                while pos >= 0 and IDX[pos] == psize - size + pos:
                    pos -= 1
                if pos < 0:
                    break
                IDX[pos] += 1
                for k in range(pos + 1, size):
                    IDX[k] = IDX[k - 1] + 1
        return None
    finally:
        free(X)
        free(C)
        free(Y)
        free(BASE)
        free(buf)
        free(POOL)
        free(IDX)
        free(DIG)
        free(COAL)
