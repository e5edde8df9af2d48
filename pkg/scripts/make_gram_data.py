"""Regenerate src/tmf_forms/lattice/_gram_data.py.

E8 is its Cartan matrix.  D16+ and the Leech lattice are built from explicit
generating sets in a scaled copy of Z^n, reduced to a basis by Hermite normal
form and then LLL-reduced (via sympy) so that enumeration trees stay small.

    python3 scripts/make_gram_data.py
"""

from __future__ import annotations

import itertools
import pathlib
import pprint

from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.matrices.normalforms import hermite_normal_form

OUT = pathlib.Path(__file__).resolve().parents[1] / "src/tmf_forms/lattice/_gram_data.py"

E8_CARTAN = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, -1],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 0, 0, 2],
]


def golay_code():
    # cyclic [23,12,7] code from g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11, extended by parity
    g = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]
    rows = []
    for shift in range(12):
        word = [0] * 23
        for i, c in enumerate(g):
            word[i + shift] = c
        word.append(sum(word) % 2)
        rows.append(word)
    weights = set()
    for combo in itertools.product((0, 1), repeat=12):
        w = [sum(c * r[i] for c, r in zip(combo, rows)) % 2 for i in range(24)]
        weights.add(sum(w))
    assert weights == {0, 8, 12, 16, 24}, weights
    return rows


def reduced_basis(gens):
    h = hermite_normal_form(Matrix(gens).T).T  # rows span the same lattice
    rows = [list(map(int, h.row(i))) for i in range(h.rows) if any(h.row(i))]
    dm = DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), len(rows[0])), ZZ)
    red = dm.lll()
    return [[int(x) for x in r] for r in red.to_Matrix().tolist()]


def gram(basis, scale):
    n = len(basis)
    g = [[sum(a * b for a, b in zip(basis[i], basis[j])) for j in range(n)] for i in range(n)]
    for row in g:
        for x in row:
            assert x % scale == 0
    return [[x // scale for x in row] for row in g]


def leech_gram():
    # sqrt(8) * Leech inside Z^24
    gens = [[2 * c for c in w] for w in golay_code()]
    for i in range(23):
        v = [0] * 24
        v[i], v[i + 1] = 4, -4
        gens.append(v)
    v = [0] * 24
    v[0] = v[1] = 4
    gens.append(v)
    gens.append([-3] + [1] * 23)
    return gram(reduced_basis(gens), 8)


def d16plus_gram():
    # 2 * D16+ inside Z^16
    gens = []
    for i in range(15):
        v = [0] * 16
        v[i], v[i + 1] = 2, -2
        gens.append(v)
    v = [0] * 16
    v[14] = v[15] = 2
    gens.append(v)
    gens.append([1] * 16)
    return gram(reduced_basis(gens), 4)


def main():
    data = {"E8": E8_CARTAN, "D16PLUS": d16plus_gram(), "LEECH": leech_gram()}
    lines = ['"""Built-in Gram matrices (generated by scripts/make_gram_data.py)."""', ""]
    for name, g in data.items():
        lines.append(f"{name} = " + pprint.pformat(g, width=100, compact=True))
        lines.append("")
    OUT.write_text("\n".join(lines))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
