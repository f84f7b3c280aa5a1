"""Pure-Python backend.  Same contracts as the compiled one, on unbounded ints."""

from itertools import combinations

from hefty._kernels._common import DegenerateInput

NAME = "python"
MAX_POINTS = None


def _det(m):
    """Bareiss determinant of a square list-of-lists integer matrix (copied)."""
    d = len(m)
    if d == 0:
        return 1
    m = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(d - 1):
        if m[k][k] == 0:
            for r in range(k + 1, d):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        rk = m[k]
        for i in range(k + 1, d):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, d):
                ri[j] = (ri[j] * piv - mik * rk[j]) // prev
        prev = piv
    return sign * m[d - 1][d - 1]


def _normal(rows, d):
    """Cofactor normal: <normal, x> equals det(rows + [x])."""
    r = d - 1
    out = []
    for j in range(d):
        minor = [[row[jj] for jj in range(d) if jj != j] for row in rows]
        det = _det(minor)
        out.append(det if (r + j) % 2 == 0 else -det)
    return out


def _subset_hefts(coords, weights, n, d, idx):
    a0 = coords[idx[0]]
    w0 = weights[idx[0]] if weights is not None else 0
    E, b = [], []
    for i in idx[1:]:
        e = [x - y for x, y in zip(coords[i], a0)]
        s = sum(x * x for x in e)
        if weights is not None:
            s -= weights[i] - w0
        E.append(e)
        b.append(s)
    det_e = _det(E)
    if det_e == 0:
        raise DegenerateInput("flat", idx)
    D = 2 * det_e
    C = []
    for c in range(d):
        M = [row[:c] + [b[i]] + row[c + 1:] for i, row in enumerate(E)]
        C.append(_det(M))
    members = set(idx)
    heft, mask = 0, 0
    for q in range(n):
        if q in members:
            continue
        u = [x - y for x, y in zip(coords[q], a0)]
        nrm = sum(x * x for x in u)
        if weights is not None:
            nrm -= weights[q] - w0
        val = D * nrm - 2 * sum(x * y for x, y in zip(u, C))
        if val == 0:
            raise DegenerateInput("sphere", tuple(sorted(members | {q})))
        if (val < 0) != (D < 0):
            heft += 1
            mask |= 1 << q
    return heft, mask


def heft_table(coords, weights=None, first_lo=0, first_hi=None):
    """Hefts and enclosed-index bitmasks of every (d+1)-subset, lexicographic order."""
    n = len(coords)
    d = len(coords[0])
    if first_hi is None:
        first_hi = n
    coords = [list(p) for p in coords]
    hefts, masks = [], []
    for idx in combinations(range(n), d + 1):
        if idx[0] < first_lo:
            continue
        if idx[0] >= first_hi:
            break
        h, m = _subset_hefts(coords, weights, n, d, idx)
        hefts.append(h)
        masks.append(m)
    return hefts, masks


def depths(coords, queries):
    """Halfspace (Tukey) depth of each query with respect to the integer point set."""
    n = len(coords)
    d = len(queries[0])
    out = [n] * len(queries)
    for sub in combinations(range(n), d):
        p0 = coords[sub[0]]
        rows = [[x - y for x, y in zip(coords[i], p0)] for i in sub[1:]]
        normal = _normal(rows, d)
        pos = neg = 0
        for p in coords:
            s = sum(a * (x - y) for a, x, y in zip(normal, p, p0))
            if s > 0:
                pos += 1
            elif s < 0:
                neg += 1
        for t, q in enumerate(queries):
            s = sum(a * (x - y) for a, x, y in zip(normal, q, p0))
            if s == 0:
                raise DegenerateInput("query", (t,))
            c = pos if s > 0 else neg
            if c < out[t]:
                out[t] = c
    for t, q in enumerate(queries):
        for sub in combinations(range(n), d - 1):
            rows = [[x - y for x, y in zip(coords[i], q)] for i in sub]
            normal = _normal(rows, d)
            pos = neg = on = 0
            for p in coords:
                s = sum(a * (x - y) for a, x, y in zip(normal, p, q))
                if s > 0:
                    pos += 1
                elif s < 0:
                    neg += 1
                else:
                    on += 1
            if on != d - 1:
                raise DegenerateInput("query", (t,))
            out[t] = min(out[t], pos, neg)
    return out


def _orient(pts):
    p0 = pts[0]
    return _det([[x - y for x, y in zip(p, p0)] for p in pts[1:]])


def locate(coords, simplices, query):
    """+1 interior, 0 boundary, -1 outside for each simplex (rows of vertex indices)."""
    out = []
    query = list(query)
    for verts in simplices:
        pts = [coords[i] for i in verts]
        o = _orient(pts)
        if o == 0:
            raise DegenerateInput("flat", tuple(verts))
        o = 1 if o > 0 else -1
        zero = opposed = False
        for i in range(len(pts)):
            s = _orient(pts[:i] + [query] + pts[i + 1:])
            if s == 0:
                zero = True
            elif (s > 0) != (o > 0):
                opposed = True
                break
        out.append(-1 if opposed else (0 if zero else 1))
    return out
