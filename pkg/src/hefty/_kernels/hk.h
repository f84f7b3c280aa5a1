#ifndef HEFTY_KERNELS_H
#define HEFTY_KERNELS_H

#include <stdint.h>

#define HK_MAXD 8

enum {
    HK_OK = 0,
    HK_OVERFLOW = 1,        /* 128-bit intermediate overflowed; caller retries in Python */
    HK_FLAT = 2,            /* d+1 points affinely dependent */
    HK_SPHERE = 3,          /* d+2 points on a common (weighted) sphere */
    HK_QUERY_ON_PLANE = 4,  /* query lies on a spanned hyperplane */
    HK_CAPACITY = 5,
    HK_BAD_ARGS = 6
};

int hk_heft_table(const int64_t *coords, const int64_t *weights, int n, int d,
                  int first_lo, int first_hi,
                  int32_t *hefts, uint64_t *masks, int64_t capacity,
                  int64_t *written, int32_t *witness);

int hk_depths(const int64_t *coords, int n, int d,
              const int64_t *queries, int nq,
              int32_t *out, int32_t *witness);

int hk_locate(const int64_t *coords, int n, int d,
              const int32_t *simplices, int m,
              const int64_t *query, int8_t *out);

#endif
