# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled exhaustive scanner over the operation tables."""

ctypedef long long i64
ctypedef Py_ssize_t isize

name = "c"

N3 = 11  # fused three-variable clauses

_THREE_VAR = (
    "ax1/or-assoc",
    "ax1/and-assoc",
    "ax1/and-over-or",
    "ax1/or-over-and",
    "ax3/add-left",
    "ax3/add-right",
    "ax5/mod-left",
    "ax5/mod-right",
    "ax9/assoc-id-left",
    "ax9/assoc-id-mid",
    "ax9/assoc-id-right",
)


def scan(tables):
    cdef int n = tables.n
    cdef isize E = tables.size
    cdef i64[::1] conv = tables.conv
    cdef i64[:, ::1] comp = tables.comp
    cdef i64[:, ::1] comp_t = tables.comp_t
    cdef i64 idm = tables.id_mask
    cdef i64 one = tables.one_mask

    cdef i64 *comp0 = &comp[0, 0]
    cdef i64 *compt0 = &comp_t[0, 0]
    cdef i64 *conv0 = &conv[0]
    cdef i64 *id_row = comp0 + ((<isize> idm) << n)
    cdef i64 *id_col = compt0 + ((<isize> idm) << n)

    out = {}
    cdef isize x, y, z
    cdef i64 xv, lhs, rhs, t, u, uu, v, vv, w1, w2, w3, xy, c_xy
    cdef i64 a5l_uy, a5r_xv, t1, t2

    # one free variable
    first = {
        "ax1/or-ident": None,
        "ax1/and-ident": None,
        "ax1/compl-join": None,
        "ax1/compl-meet": None,
        "ax6/id-left": None,
        "ax6/id-right": None,
    }
    for x in range(E):
        xv = <i64> x
        if first["ax1/or-ident"] is None and (xv | 0) != xv:
            first["ax1/or-ident"] = (x,)
        if first["ax1/and-ident"] is None and (xv & one) != xv:
            first["ax1/and-ident"] = (x,)
        if first["ax1/compl-join"] is None and (xv | (one ^ xv)) != one:
            first["ax1/compl-join"] = (x,)
        if first["ax1/compl-meet"] is None and (xv & (one ^ xv)) != 0:
            first["ax1/compl-meet"] = (x,)
        if first["ax6/id-left"] is None and (id_row[x] & (one ^ xv)) != 0:
            first["ax6/id-left"] = (x,)
        if first["ax6/id-right"] is None and (id_col[x] & (one ^ xv)) != 0:
            first["ax6/id-right"] = (x,)
    out.update(first)

    # two free variables
    cdef bint f_orc = 0, f_andc = 0, f_ax2 = 0
    out["ax1/or-comm"] = None
    out["ax1/and-comm"] = None
    out["ax2/conv-meet"] = None
    for x in range(E):
        if f_orc and f_andc and f_ax2:
            break
        xv = <i64> x
        for y in range(E):
            if not f_orc and (xv | <i64> y) != (<i64> y | xv):
                out["ax1/or-comm"] = (x, y)
                f_orc = 1
            if not f_andc and (xv & <i64> y) != (<i64> y & xv):
                out["ax1/and-comm"] = (x, y)
                f_andc = 1
            if not f_ax2 and conv0[xv & conv0[y]] != (conv0[x] & <i64> y):
                out["ax2/conv-meet"] = (x, y)
                f_ax2 = 1

    # three free variables, fused single pass
    cdef char found[11]
    cdef isize wx[11]
    cdef isize wy[11]
    cdef isize wz[11]
    cdef int k, n_found = 0
    for k in range(N3):
        found[k] = 0

    cdef i64 *row_x
    cdef i64 *row_u
    cdef i64 *row_uu
    cdef i64 *row_w1
    cdef i64 *row_xy
    cdef i64 *row_y
    cdef i64 *row_t1
    cdef i64 *row_t2
    cdef i64 *row_w2
    cdef i64 *row_cxy
    cdef i64 *rowt_v
    cdef i64 *rowt_vv
    cdef i64 yv, zv

    for x in range(E):
        if n_found == N3:
            break
        xv = <i64> x
        u = conv0[x]
        uu = conv0[u]
        w1 = xv & idm
        row_x = comp0 + (x << n)
        row_u = comp0 + ((<isize> u) << n)
        row_uu = comp0 + ((<isize> uu) << n)
        row_w1 = comp0 + ((<isize> w1) << n)
        for y in range(E):
            yv = <i64> y
            xy = xv | yv
            row_xy = comp0 + ((<isize> xy) << n)
            row_y = comp0 + (y << n)
            c_xy = row_x[y]
            row_cxy = comp0 + ((<isize> c_xy) << n)
            a5l_uy = row_u[y]
            v = conv0[y]
            vv = conv0[v]
            a5r_xv = row_x[v]
            rowt_v = compt0 + ((<isize> v) << n)
            rowt_vv = compt0 + ((<isize> vv) << n)
            t1 = row_w1[y]
            row_t1 = comp0 + ((<isize> t1) << n)
            w2 = yv & idm
            t2 = row_x[w2]
            row_t2 = comp0 + ((<isize> t2) << n)
            row_w2 = comp0 + ((<isize> w2) << n)
            for z in range(E):
                zv = <i64> z
                if not found[0] and ((xv | yv) | zv) != (xv | (yv | zv)):
                    found[0] = 1; wx[0] = x; wy[0] = y; wz[0] = z; n_found += 1
                if not found[1] and ((xv & yv) & zv) != (xv & (yv & zv)):
                    found[1] = 1; wx[1] = x; wy[1] = y; wz[1] = z; n_found += 1
                if not found[2] and (xv & (yv | zv)) != ((xv & yv) | (xv & zv)):
                    found[2] = 1; wx[2] = x; wy[2] = y; wz[2] = z; n_found += 1
                if not found[3] and (xv | (yv & zv)) != ((xv | yv) & (xv | zv)):
                    found[3] = 1; wx[3] = x; wy[3] = y; wz[3] = z; n_found += 1
                if not found[4] and row_xy[z] != (row_x[z] | row_y[z]):
                    found[4] = 1; wx[4] = x; wy[4] = y; wz[4] = z; n_found += 1
                if not found[5] and row_x[yv | zv] != (c_xy | row_x[z]):
                    found[5] = 1; wx[5] = x; wy[5] = y; wz[5] = z; n_found += 1
                if not found[6]:
                    lhs = a5l_uy & zv
                    t = yv & row_uu[z]
                    rhs = row_u[t] & zv
                    if lhs != rhs:
                        found[6] = 1; wx[6] = x; wy[6] = y; wz[6] = z; n_found += 1
                if not found[7]:
                    lhs = a5r_xv & zv
                    t = xv & rowt_vv[z]
                    rhs = rowt_v[t] & zv
                    if lhs != rhs:
                        found[7] = 1; wx[7] = x; wy[7] = y; wz[7] = z; n_found += 1
                if not found[8] and row_t1[z] != row_w1[row_y[z]]:
                    found[8] = 1; wx[8] = x; wy[8] = y; wz[8] = z; n_found += 1
                if not found[9] and row_t2[z] != row_x[row_w2[z]]:
                    found[9] = 1; wx[9] = x; wy[9] = y; wz[9] = z; n_found += 1
                if not found[10]:
                    w3 = zv & idm
                    if row_cxy[w3] != row_x[row_y[w3]]:
                        found[10] = 1; wx[10] = x; wy[10] = y; wz[10] = z; n_found += 1

    for k in range(N3):
        out[_THREE_VAR[k]] = (wx[k], wy[k], wz[k]) if found[k] else None
    return out
