"""Dense operation tables for the exhaustive axiom scanners.

Both scanner backends work on the same tables: the additive converse of
every element, the full element-by-element composition table, and its
transpose (kept separately so right-argument lookups stay cache-local).
Table size is quadratic in the element count, which is what bounds how
far exhaustive checking can go.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Beyond this the composition table alone would exceed ~128 MiB.
MAX_TABLE_ATOMS = 12


@dataclass
class KernelTables:
    n: int
    size: int
    conv: np.ndarray
    comp: np.ndarray
    comp_t: np.ndarray
    id_mask: int
    one_mask: int


def build_tables(structure) -> KernelTables:
    n = structure.n
    if n > MAX_TABLE_ATOMS:
        raise ValueError(f"operation tables limited to {MAX_TABLE_ATOMS} atoms")
    size = 1 << n
    idx = np.arange(size, dtype=np.int64)

    conv = np.zeros(size, dtype=np.int64)
    for a in range(n):
        j = structure.conv_table[a]
        if j >= 0:
            conv[(idx >> a) & 1 == 1] |= np.int64(1 << j)

    # rows[a][y] = product of atom a with element y, extended additively
    rows = np.zeros((max(n, 1), size), dtype=np.int64)
    for a in range(n):
        row = rows[a]
        for b in range(n):
            mask = structure.comp_table[a][b]
            if mask:
                row[(idx >> b) & 1 == 1] |= np.int64(mask)

    comp = np.zeros((size, size), dtype=np.int64)
    for a in range(n):
        comp[(idx >> a) & 1 == 1, :] |= rows[a]

    return KernelTables(
        n=n,
        size=size,
        conv=conv,
        comp=comp,
        comp_t=np.ascontiguousarray(comp.T),
        id_mask=structure.identity_mask,
        one_mask=size - 1,
    )
