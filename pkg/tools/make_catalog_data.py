#!/usr/bin/env python3
"""Regenerate the shipped group data under src/genuslab/data.

Presentations that are not split extensions of a cyclic group are realized
as permutation groups by coset enumeration (sympy, only needed here).
"""
from __future__ import annotations

import json
from pathlib import Path

from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

DATA = Path(__file__).resolve().parents[1] / "src" / "genuslab" / "data"


def dihedral(n: int) -> dict:
    return {
        "recipe": "permutations",
        "degree": n,
        "generators": [[(i + 1) % n for i in range(n)], [(-i) % n for i in range(n)]],
    }


def cyclic(n: int) -> dict:
    return {"recipe": "permutations", "degree": n, "generators": [[(i + 1) % n for i in range(n)]]}


def perms(degree: int, gens: list[list[int]]) -> dict:
    return {"recipe": "permutations", "degree": degree, "generators": gens}


def semidirect(n: int, m: int, t: int) -> dict:
    return {"recipe": "semidirect", "n": n, "m": m, "t": t}


def product(*names: str) -> dict:
    return {"recipe": "product", "factors": list(names)}


def presented(gen_names: str, relators) -> dict:
    F, *gens = free_group(gen_names)
    G = FpGroup(F, relators(*gens))
    P, hom = G._to_perm_group()
    images = [hom(g).array_form for g in gens]
    degree = P.degree
    images = [img + list(range(len(img), degree)) for img in images]
    return perms(degree, images)


def quaternion(order: int) -> dict:
    n = order // 2
    return presented("a b", lambda a, b: [a**n, b**2 * a ** -(n // 2), b**-1 * a * b * a])


def sl23() -> dict:
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}

    def act(m):
        return [index[((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)] for x, y in vecs]

    return perms(8, [act([[1, 1], [0, 1]]), act([[0, 2], [1, 0]])])


def heisenberg27() -> dict:
    vecs = [(x, y, z) for x in range(3) for y in range(3) for z in range(3)]
    index = {v: i for i, v in enumerate(vecs)}

    def act(m):
        out = []
        for v in vecs:
            w = tuple(sum(m[r][c] * v[c] for c in range(3)) % 3 for r in range(3))
            out.append(index[w])
        return out

    return perms(27, [act([[1, 1, 0], [0, 1, 0], [0, 0, 1]]), act([[1, 0, 0], [0, 1, 1], [0, 0, 1]])])


def catalog() -> list[dict]:
    entries: list[tuple[str, dict]] = [
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("D4", perms(4, [[1, 0, 3, 2], [2, 3, 0, 1]])),
        ("S3", perms(3, [[1, 2, 0], [1, 0, 2]])),
        ("D8", dihedral(4)),
        ("Q8", quaternion(8)),
        ("A4", perms(4, [[1, 2, 0, 3], [0, 2, 3, 1]])),
        ("D10", dihedral(5)),
        ("D12", dihedral(6)),
        ("D8xZ2", product("D8", "Z2")),
        ("Q8xZ2", product("Q8", "Z2")),
        ("S4", perms(4, [[1, 2, 3, 0], [1, 0, 2, 3]])),
        ("SL(2,3)", sl23()),
        ("A5", perms(5, [[1, 2, 3, 4, 0], [1, 2, 0, 3, 4]])),
        ("Z3xZ4", semidirect(3, 4, 2)),
        ("Z4xZ4", semidirect(4, 4, 3)),
        ("Z8xZ2", semidirect(8, 2, 5)),
        (
            "(Z4xZ2)xZ2",
            presented("a b", lambda a, b: [a**4, b**2, (a * b) ** 4, a**-2 * b**-1 * a**2 * b]),
        ),
        (
            "Z4oD8",
            presented(
                "a b c",
                lambda a, b, c: [
                    a**2, b**2, c**4,
                    a**-1 * c**-1 * a * c,
                    b**-1 * c**-1 * b * c,
                    a**-1 * b**-1 * a * b * c**-2,
                ],
            ),
        ),
        ("Z5xZ4", semidirect(5, 4, 3)),
        ("D14", dihedral(7)),
        ("D16", dihedral(8)),
        ("Q16", quaternion(16)),
        ("QD16", semidirect(8, 2, 3)),
        ("A4xZ2", product("A4", "Z2")),
        ("Z7xZ3", semidirect(7, 3, 2)),
        ("Z3xD8", product("Z3", "D8")),
        ("Z3xQ8", product("Z3", "Q8")),
        ("D18", dihedral(9)),
        ("D20", dihedral(10)),
        ("D22", dihedral(11)),
        ("D24", dihedral(12)),
        ("Heis27", heisenberg27()),
        ("Z9xZ3", semidirect(9, 3, 4)),
    ]
    orders = {
        "Z2": 2, "Z3": 3, "Z4": 4, "D4": 4, "S3": 6, "D8": 8, "Q8": 8, "A4": 12, "D10": 10,
        "D12": 12, "D8xZ2": 16, "Q8xZ2": 16, "S4": 24, "SL(2,3)": 24, "A5": 60, "Z3xZ4": 12,
        "Z4xZ4": 16, "Z8xZ2": 16, "(Z4xZ2)xZ2": 16, "Z4oD8": 16, "Z5xZ4": 20, "D14": 14,
        "D16": 16, "Q16": 16, "QD16": 16, "A4xZ2": 24, "Z7xZ3": 21, "Z3xD8": 24, "Z3xQ8": 24,
        "D18": 18, "D20": 20, "D22": 22, "D24": 24, "Heis27": 27, "Z9xZ3": 27,
    }
    return [{"name": name, "order": orders[name], **recipe} for name, recipe in entries]


# --- order 32: written as plain permutation-generator files ------------------

def _closure(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(x[g[p]] for p in range(len(x)))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def _regular(gens: list[list[int]]) -> list[list[int]]:
    elems = _closure([tuple(g) for g in gens])
    index = {e: i for i, e in enumerate(elems)}
    out = []
    for g in gens:
        out.append([index[tuple(g[e[p]] for p in range(len(e)))] for e in elems])
    return out


def _sum_action(*factors: tuple[int, list[list[int]]]) -> tuple[int, list[list[int]]]:
    degree = sum(d for d, _ in factors)
    gens = []
    offset = 0
    for d, fg in factors:
        for g in fg:
            full = list(range(degree))
            for p in range(d):
                full[offset + p] = offset + g[p]
            gens.append(full)
        offset += d
    return degree, gens


def _semidirect_perms(n: int, m: int, t: int) -> tuple[int, list[list[int]]]:
    u = pow(t, -1, n)
    elems = [(i, j) for j in range(m) for i in range(n)]
    index = {e: k for k, e in enumerate(elems)}

    def mul(x, y):
        return ((x[0] + y[0] * pow(u, x[1], n)) % n, (x[1] + y[1]) % m)

    gens = []
    for g in [(1, 0), (0, 1)]:
        gens.append([index[mul(g, e)] for e in elems])
    return n * m, gens


def _as_pair(entry: dict) -> tuple[int, list[list[int]]]:
    return entry["degree"], entry["generators"]


def order32() -> dict[str, tuple[int, list[list[int]]]]:
    d8 = _as_pair(dihedral(4))
    q8 = _as_pair(quaternion(8))
    z2 = _as_pair(cyclic(2))
    z4 = _as_pair(cyclic(4))
    d16 = _as_pair(dihedral(8))
    q16 = _as_pair(quaternion(16))
    qd16 = _semidirect_perms(8, 2, 3)
    plus = presented(
        "x y u v",
        lambda x, y, u, v: [
            x**2, y**2, u**2, v**2, (x * y) ** 4, (u * v) ** 4,
            x**-1 * u**-1 * x * u, x**-1 * v**-1 * x * v,
            y**-1 * u**-1 * y * u, y**-1 * v**-1 * y * v,
            (x * y) ** 2 * (u * v) ** -2,
        ],
    )
    minus = presented(
        "i j u v",
        lambda i, j, u, v: [
            i**4, i**2 * j**-2, j**-1 * i * j * i, u**2, v**2, (u * v) ** 4,
            i**-1 * u**-1 * i * u, i**-1 * v**-1 * i * v,
            j**-1 * u**-1 * j * u, j**-1 * v**-1 * j * v,
            i**2 * (u * v) ** -2,
        ],
    )
    groups = {
        "D32": _as_pair(dihedral(16)),
        "Q32": _as_pair(quaternion(32)),
        "SD32": _semidirect_perms(16, 2, 7),
        "M32": _semidirect_perms(16, 2, 9),
        "Z8xZ4_t3": _semidirect_perms(8, 4, 3),
        "Z8xZ4_t5": _semidirect_perms(8, 4, 5),
        "Z8xZ4_t7": _semidirect_perms(8, 4, 7),
        "Z4xZ8_t3": _semidirect_perms(4, 8, 3),
        "D8xZ4": _sum_action(d8, z4),
        "Q8xZ4": _sum_action(q8, z4),
        "D16xZ2": _sum_action(d16, z2),
        "Q16xZ2": _sum_action(q16, z2),
        "QD16xZ2": _sum_action(qd16, z2),
        "D8xZ2xZ2": _sum_action(d8, z2, z2),
        "Q8xZ2xZ2": _sum_action(q8, z2, z2),
        "D8oD8": _as_pair(plus),
        "Q8oD8": _as_pair(minus),
    }
    return groups


def main() -> None:
    rows = ",\n".join(" " + json.dumps(e) for e in catalog())
    (DATA / "catalog.json").write_text("[\n" + rows + "\n]\n")
    out = DATA / "order32"
    out.mkdir(exist_ok=True)
    for name, (degree, gens) in order32().items():
        payload = {"name": name, "degree": degree, "generators": gens}
        (out / f"{name}.json").write_text(json.dumps(payload) + "\n")


if __name__ == "__main__":
    main()
