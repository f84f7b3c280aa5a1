/* Exact integer kernels for heft enumeration, halfspace depth and simplex location.
 *
 * All arithmetic is on 128-bit integers with overflow checks.  Any overflow aborts
 * the call with HK_OVERFLOW so the Python layer can redo the work with big ints.
 */
#include "hk.h"

#include <string.h>

typedef __int128 i128;

#define CHK(expr) do { if (expr) return HK_OVERFLOW; } while (0)

static inline int mul_ov(i128 a, i128 b, i128 *r) { return __builtin_mul_overflow(a, b, r); }
static inline int add_ov(i128 a, i128 b, i128 *r) { return __builtin_add_overflow(a, b, r); }
static inline int sub_ov(i128 a, i128 b, i128 *r) { return __builtin_sub_overflow(a, b, r); }

/* Fraction-free (Bareiss) determinant of the d x d row-major matrix m, destroyed. */
static int det_bareiss(i128 *m, int d, i128 *out)
{
    i128 prev = 1, t1, t2;
    int sign = 1;
    if (d == 0) { *out = 1; return HK_OK; }
    for (int k = 0; k < d - 1; k++) {
        if (m[k * d + k] == 0) {
            int r = k + 1;
            while (r < d && m[r * d + k] == 0) r++;
            if (r == d) { *out = 0; return HK_OK; }
            for (int j = 0; j < d; j++) {
                i128 tmp = m[k * d + j];
                m[k * d + j] = m[r * d + j];
                m[r * d + j] = tmp;
            }
            sign = -sign;
        }
        i128 piv = m[k * d + k];
        for (int i = k + 1; i < d; i++) {
            for (int j = k + 1; j < d; j++) {
                CHK(mul_ov(m[i * d + j], piv, &t1));
                CHK(mul_ov(m[i * d + k], m[k * d + j], &t2));
                CHK(sub_ov(t1, t2, &t1));
                m[i * d + j] = t1 / prev;
            }
        }
        prev = piv;
    }
    *out = sign > 0 ? m[(d - 1) * d + (d - 1)] : -m[(d - 1) * d + (d - 1)];
    return HK_OK;
}

static int dot_ov(const i128 *a, const i128 *b, int d, i128 *out)
{
    i128 acc = 0, t;
    for (int j = 0; j < d; j++) {
        CHK(mul_ov(a[j], b[j], &t));
        CHK(add_ov(acc, t, &acc));
    }
    *out = acc;
    return HK_OK;
}

/* Advance a lexicographic combination of size r over 0..n-1; 0 when exhausted. */
static int next_comb(int32_t *idx, int r, int n)
{
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) i--;
    if (i < 0) return 0;
    idx[i]++;
    for (int j = i + 1; j < r; j++) idx[j] = idx[j - 1] + 1;
    return 1;
}

/* Normal (cofactor) vector of the hyperplane through base + span(rows), rows is (d-1) x d.
 * orient(x) = <normal, x - base> is the determinant with rows (rows..., x - base). */
static int hyperplane_normal(const i128 *rows, int d, i128 *normal)
{
    i128 minor[HK_MAXD * HK_MAXD];
    int r = d - 1;
    for (int j = 0; j < d; j++) {
        for (int i = 0; i < r; i++) {
            int c = 0;
            for (int jj = 0; jj < d; jj++) {
                if (jj == j) continue;
                minor[i * r + c] = rows[i * d + jj];
                c++;
            }
        }
        i128 det;
        int st = det_bareiss(minor, r, &det);
        if (st) return st;
        normal[j] = ((r + j) % 2 == 0) ? det : -det;
    }
    return HK_OK;
}

int hk_heft_table(const int64_t *coords, const int64_t *weights, int n, int d,
                  int first_lo, int first_hi,
                  int32_t *hefts, uint64_t *masks, int64_t capacity,
                  int64_t *written, int32_t *witness)
{
    i128 E[HK_MAXD * HK_MAXD], M[HK_MAXD * HK_MAXD];
    i128 b[HK_MAXD], C[HK_MAXD], u[HK_MAXD];
    int32_t idx[HK_MAXD + 1];
    int r = d + 1;
    int64_t count = 0;

    *written = 0;
    if (d < 1 || d > HK_MAXD || n > 64) return HK_BAD_ARGS;
    if (first_hi > n - d) first_hi = n - d;
    if (first_lo >= first_hi) return HK_OK;
    for (int i = 0; i < r; i++) idx[i] = first_lo + i;

    do {
        if (idx[0] >= first_hi) break;
        if (count >= capacity) return HK_CAPACITY;
        const int64_t *a0 = coords + (int64_t)idx[0] * d;
        i128 w0 = weights ? weights[idx[0]] : 0;
        for (int i = 0; i < d; i++) {
            const int64_t *ai = coords + (int64_t)idx[i + 1] * d;
            i128 acc = 0, t;
            for (int j = 0; j < d; j++) {
                E[i * d + j] = (i128)ai[j] - (i128)a0[j];
                CHK(mul_ov(E[i * d + j], E[i * d + j], &t));
                CHK(add_ov(acc, t, &acc));
            }
            if (weights) {
                i128 om = (i128)weights[idx[i + 1]] - w0;
                CHK(sub_ov(acc, om, &acc));
            }
            b[i] = acc;
        }
        i128 detE;
        memcpy(M, E, sizeof(i128) * d * d);
        int st = det_bareiss(M, d, &detE);
        if (st) return st;
        if (detE == 0) {
            for (int i = 0; i < r; i++) witness[i] = idx[i];
            witness[r] = -1;
            return HK_FLAT;
        }
        i128 D;
        CHK(mul_ov(detE, 2, &D));
        for (int c = 0; c < d; c++) {
            memcpy(M, E, sizeof(i128) * d * d);
            for (int i = 0; i < d; i++) M[i * d + c] = b[i];
            st = det_bareiss(M, d, &C[c]);
            if (st) return st;
        }

        int32_t heft = 0;
        uint64_t mask = 0;
        int v = 0;
        for (int q = 0; q < n; q++) {
            if (v < r && idx[v] == q) { v++; continue; }
            const int64_t *aq = coords + (int64_t)q * d;
            i128 nrm = 0, t, uc, val;
            for (int j = 0; j < d; j++) {
                u[j] = (i128)aq[j] - (i128)a0[j];
                CHK(mul_ov(u[j], u[j], &t));
                CHK(add_ov(nrm, t, &nrm));
            }
            if (weights) {
                i128 om = (i128)weights[q] - w0;
                CHK(sub_ov(nrm, om, &nrm));
            }
            st = dot_ov(u, C, d, &uc);
            if (st) return st;
            CHK(mul_ov(D, nrm, &val));
            CHK(mul_ov(uc, 2, &uc));
            CHK(sub_ov(val, uc, &val));
            if (val == 0) {
                int k = 0, placed = 0;
                for (int i = 0; i < r; i++) {
                    if (!placed && q < idx[i]) { witness[k++] = q; placed = 1; }
                    witness[k++] = idx[i];
                }
                if (!placed) witness[k++] = q;
                return HK_SPHERE;
            }
            if ((val < 0) != (D < 0)) {
                heft++;
                mask |= ((uint64_t)1) << q;
            }
        }
        hefts[count] = heft;
        masks[count] = mask;
        count++;
    } while (next_comb(idx, r, n));

    *written = count;
    return HK_OK;
}

int hk_depths(const int64_t *coords, int n, int d,
              const int64_t *queries, int nq,
              int32_t *out, int32_t *witness)
{
    i128 rows[HK_MAXD * HK_MAXD], normal[HK_MAXD], diff[HK_MAXD];
    int32_t idx[HK_MAXD];
    int st;

    if (d < 1 || d > HK_MAXD) return HK_BAD_ARGS;
    for (int t = 0; t < nq; t++) out[t] = n;

    /* hyperplanes through d set points: side counts are query independent */
    if (n >= d) {
        for (int i = 0; i < d; i++) idx[i] = i;
        do {
            const int64_t *p0 = coords + (int64_t)idx[0] * d;
            for (int i = 1; i < d; i++)
                for (int j = 0; j < d; j++)
                    rows[(i - 1) * d + j] = (i128)coords[(int64_t)idx[i] * d + j] - (i128)p0[j];
            st = hyperplane_normal(rows, d, normal);
            if (st) return st;
            int pos = 0, neg = 0;
            for (int q = 0; q < n; q++) {
                i128 s;
                for (int j = 0; j < d; j++) diff[j] = (i128)coords[(int64_t)q * d + j] - (i128)p0[j];
                st = dot_ov(normal, diff, d, &s);
                if (st) return st;
                if (s > 0) pos++;
                else if (s < 0) neg++;
            }
            for (int t = 0; t < nq; t++) {
                i128 s;
                for (int j = 0; j < d; j++) diff[j] = (i128)queries[(int64_t)t * d + j] - (i128)p0[j];
                st = dot_ov(normal, diff, d, &s);
                if (st) return st;
                if (s == 0) { witness[0] = t; return HK_QUERY_ON_PLANE; }
                int c = s > 0 ? pos : neg;
                if (c < out[t]) out[t] = c;
            }
        } while (next_comb(idx, d, n));
    }

    /* hyperplanes through the query and d-1 set points */
    if (n >= d - 1) {
        for (int t = 0; t < nq; t++) {
            const int64_t *qp = queries + (int64_t)t * d;
            for (int i = 0; i < d - 1; i++) idx[i] = i;
            do {
                for (int i = 0; i < d - 1; i++)
                    for (int j = 0; j < d; j++)
                        rows[i * d + j] = (i128)coords[(int64_t)idx[i] * d + j] - (i128)qp[j];
                st = hyperplane_normal(rows, d, normal);
                if (st) return st;
                int pos = 0, neg = 0, on = 0;
                for (int q = 0; q < n; q++) {
                    i128 s;
                    for (int j = 0; j < d; j++) diff[j] = (i128)coords[(int64_t)q * d + j] - (i128)qp[j];
                    st = dot_ov(normal, diff, d, &s);
                    if (st) return st;
                    if (s > 0) pos++;
                    else if (s < 0) neg++;
                    else on++;
                }
                if (on != d - 1) { witness[0] = t; return HK_QUERY_ON_PLANE; }
                if (pos < out[t]) out[t] = pos;
                if (neg < out[t]) out[t] = neg;
            } while (d > 1 && next_comb(idx, d - 1, n));
        }
    }
    return HK_OK;
}

static int orient_rows(const int64_t *coords, int d, const int32_t *verts,
                       int replace, const int64_t *query, int *sign)
{
    i128 m[HK_MAXD * HK_MAXD], det;
    const int64_t *p0 = replace == 0 ? query : coords + (int64_t)verts[0] * d;
    for (int i = 1; i <= d; i++) {
        const int64_t *pi = replace == i ? query : coords + (int64_t)verts[i] * d;
        for (int j = 0; j < d; j++) m[(i - 1) * d + j] = (i128)pi[j] - (i128)p0[j];
    }
    int st = det_bareiss(m, d, &det);
    if (st) return st;
    *sign = det > 0 ? 1 : (det < 0 ? -1 : 0);
    return HK_OK;
}

int hk_locate(const int64_t *coords, int n, int d,
              const int32_t *simplices, int m,
              const int64_t *query, int8_t *out)
{
    (void)n;
    if (d < 1 || d > HK_MAXD) return HK_BAD_ARGS;
    for (int s = 0; s < m; s++) {
        const int32_t *verts = simplices + (int64_t)s * (d + 1);
        int o, st, zero = 0, opposed = 0;
        st = orient_rows(coords, d, verts, -1, query, &o);
        if (st) return st;
        if (o == 0) return HK_FLAT;
        for (int i = 0; i <= d && !opposed; i++) {
            int si;
            st = orient_rows(coords, d, verts, i, query, &si);
            if (st) return st;
            if (si == 0) zero = 1;
            else if (si != o) opposed = 1;
        }
        out[s] = opposed ? -1 : (zero ? 0 : 1);
    }
    return HK_OK;
}
