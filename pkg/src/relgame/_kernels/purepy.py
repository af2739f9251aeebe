"""Vectorized exhaustive scanner (the pure-Python kernel backend).

Mirrors the compiled scanner exactly: same clause set, same canonical
first-witness semantics (lexicographic in each clause's own assignment
space).  Grids over the two inner variables keep the python-level loop
down to the outermost variable only.
"""

from __future__ import annotations

import numpy as np

from .tables import KernelTables

name = "python"

THREE_VAR = (
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


def _first(viol: np.ndarray, size: int):
    nz = np.flatnonzero(viol.ravel())
    if not nz.size:
        return None
    flat = int(nz[0])
    if viol.ndim == 1:
        return (flat,)
    return (flat // size, flat % size)


def scan(t: KernelTables) -> dict:
    E = t.size
    idx = np.arange(E, dtype=np.int64)
    one = np.int64(t.one_mask)
    idm = np.int64(t.id_mask)
    conv, comp, comp_t = t.conv, t.comp, t.comp_t
    out: dict[str, tuple | None] = {}

    # one free variable
    out["ax1/or-ident"] = _first((idx | 0) != idx, E)
    out["ax1/and-ident"] = _first((idx & one) != idx, E)
    out["ax1/compl-join"] = _first((idx | (one ^ idx)) != one, E)
    out["ax1/compl-meet"] = _first((idx & (one ^ idx)) != 0, E)
    id_row = comp[t.id_mask]
    id_col = comp_t[t.id_mask]
    out["ax6/id-left"] = _first((id_row & (one ^ idx)) != 0, E)
    out["ax6/id-right"] = _first((id_col & (one ^ idx)) != 0, E)

    # two free variables
    X = idx[:, None]
    Y = idx[None, :]
    out["ax1/or-comm"] = _first((X | Y) != (Y | X), E)
    out["ax1/and-comm"] = _first((X & Y) != (Y & X), E)
    out["ax2/conv-meet"] = _first(
        conv[X & conv[Y]] != (conv[X] & Y), E
    )

    # three free variables: outer loop on x, (y, z) gridded
    for clause in THREE_VAR:
        out[clause] = None
    remaining = set(THREE_VAR)
    Yv = idx[:, None]
    Zv = idx[None, :]
    for x in range(E):
        if not remaining:
            break
        u = int(conv[x])
        uu = int(conv[u])
        w1 = x & t.id_mask
        row_x = comp[x]
        row_u = comp[u]
        row_uu = comp[uu]
        row_w1 = comp[w1]

        def hit(clause: str, viol: np.ndarray, x=x) -> None:
            if clause in remaining:
                w = _first(viol, E)
                if w is not None:
                    out[clause] = (x, w[0], w[1])
                    remaining.discard(clause)

        hit("ax1/or-assoc", ((x | Yv) | Zv) != (x | (Yv | Zv)))
        hit("ax1/and-assoc", ((x & Yv) & Zv) != (x & (Yv & Zv)))
        hit("ax1/and-over-or", (x & (Yv | Zv)) != ((x & Yv) | (x & Zv)))
        hit("ax1/or-over-and", (x | (Yv & Zv)) != ((x | Yv) & (x | Zv)))

        hit("ax3/add-left", comp[x | Yv, Zv] != (row_x[Zv] | comp))
        hit("ax3/add-right", row_x[Yv | Zv] != (row_x[Yv] | row_x[Zv]))

        lhs = row_u[Yv] & Zv
        rhs = row_u[Yv & row_uu[Zv]] & Zv
        hit("ax5/mod-left", lhs != rhs)

        v = conv[Yv]
        vv = conv[v]
        lhs = row_x[v] & Zv
        tt = x & comp_t[vv, Zv]
        rhs = comp_t[v, tt] & Zv
        hit("ax5/mod-right", lhs != rhs)

        t1 = row_w1[Yv]
        hit("ax9/assoc-id-left", comp[t1, Zv] != row_w1[comp])
        w2 = Yv & idm
        t2 = row_x[w2]
        hit("ax9/assoc-id-mid", comp[t2, Zv] != row_x[comp[w2, Zv]])
        w3 = Zv & idm
        hit("ax9/assoc-id-right", comp[row_x[Yv], w3] != row_x[comp[Yv, w3]])

    return out
