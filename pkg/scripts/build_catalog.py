"""Regenerate the bundled non-abelian character tables in src/lambdacl/catalog/.

Groups are built concretely (permutations, unit quaternions), the Cayley table,
conjugacy classes and power maps are computed, and the hand-entered character
values are attached per class.  Every table is re-validated on the way out, and
linear characters are checked to be homomorphisms on the Cayley table.

    python scripts/build_catalog.py
"""
from __future__ import annotations

import itertools
import json
from pathlib import Path

from lambdacl.chartab import validate_char_table
from lambdacl.exact import CycNumber

OUT = Path(__file__).resolve().parent.parent / "src" / "lambdacl" / "catalog"


def perm_mul(p, q):
    # (p*q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(q)))


def closure(gens, mul, ident):
    elems = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mul(a, g)
                if b not in elems:
                    elems.append(b)
                    nxt.append(b)
        frontier = nxt
    return elems


def quat_mul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0)


def build(name, elems, mul, class_spec, chars, exponent):
    """class_spec: list of (class name, representative element)."""
    n = len(elems)
    idx = {g: i for i, g in enumerate(elems)}
    cayley = [[idx[mul(a, b)] for b in elems] for a in elems]
    ident = next(i for i in range(n) if all(cayley[i][j] == j for j in range(n)))
    inv = [next(h for h in range(n) if cayley[g][h] == ident) for g in range(n)]
    element_classes = [None] * n
    classes = []
    for ci, (cname, rep) in enumerate(class_spec):
        r = idx[rep]
        orbit = sorted({cayley[cayley[inv[x]][r]][x] for x in range(n)})
        for g in orbit:
            assert element_classes[g] is None, f"{name}: class {cname} overlaps"
            element_classes[g] = ci
        order, p = 1, r
        while p != ident:
            p = cayley[p][r]
            order += 1
        classes.append({"name": cname, "size": len(orbit), "rep_order": order})
    assert None not in element_classes, f"{name}: classes do not cover the group"
    power_maps = []
    for k in range(exponent):
        row = []
        for ci, (_, rep) in enumerate(class_spec):
            p = ident
            for _ in range(k):
                p = cayley[p][idx[rep]]
            row.append(element_classes[p])
        power_maps.append(row)
    data = {
        "name": name,
        "order": n,
        "exponent": exponent,
        "classes": classes,
        "power_maps": power_maps,
        "irreducibles": chars,
        "cayley": cayley,
        "element_classes": element_classes,
    }
    table = validate_char_table(data)
    for a, row in enumerate(table.irreducibles):
        if row[0] == 1:
            for g in range(n):
                for h in range(n):
                    lhs = row[element_classes[cayley[g][h]]]
                    assert lhs == row[element_classes[g]] * row[element_classes[h]], \
                        f"{name}: linear character {a} is not multiplicative"
    return data


def z(e, m):
    """Power-basis coefficient array of zeta_e^m (length e)."""
    v = CycNumber.zeta(e, m)
    return [int(c) for c in v.coeffs] + [0] * (e - len(v.coeffs))


def s3():
    e = (0, 1, 2)
    elems = closure([(1, 0, 2), (1, 2, 0)], perm_mul, e)
    spec = [("1", e), ("2a", (1, 0, 2)), ("3a", (1, 2, 0))]
    chars = [[[1], [1], [1]], [[1], [-1], [1]], [[2], [0], [-1]]]
    return build("S3", elems, perm_mul, spec, chars, 6)


def d4():
    e = (0, 1, 2, 3)
    r, s = (1, 2, 3, 0), (0, 3, 2, 1)
    elems = closure([r, s], perm_mul, e)
    r2 = perm_mul(r, r)
    spec = [("1", e), ("2a", r2), ("4a", r), ("2b", s), ("2c", perm_mul(s, r))]
    chars = [
        [[1], [1], [1], [1], [1]],
        [[1], [1], [1], [-1], [-1]],
        [[1], [1], [-1], [1], [-1]],
        [[1], [1], [-1], [-1], [1]],
        [[2], [-2], [0], [0], [0]],
    ]
    return build("D4", elems, perm_mul, spec, chars, 4)


def q8():
    one, i, j = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)
    elems = closure([i, j], quat_mul, one)
    spec = [("1", one), ("2a", (-1, 0, 0, 0)), ("4a", i), ("4b", j), ("4c", (0, 0, 0, 1))]
    chars = [
        [[1], [1], [1], [1], [1]],
        [[1], [1], [1], [-1], [-1]],
        [[1], [1], [-1], [1], [-1]],
        [[1], [1], [-1], [-1], [1]],
        [[2], [-2], [0], [0], [0]],
    ]
    return build("Q8", elems, quat_mul, spec, chars, 4)


def a4():
    e = (0, 1, 2, 3)
    even = [p for p in itertools.permutations(range(4))
            if sum(1 for a, b in itertools.combinations(range(4), 2) if p[a] > p[b]) % 2 == 0]
    elems = closure([(1, 2, 0, 3), (1, 0, 3, 2)], perm_mul, e)
    assert sorted(elems) == sorted(even)
    c3 = (1, 2, 0, 3)
    spec = [("1", e), ("2a", (1, 0, 3, 2)), ("3a", c3), ("3b", perm_mul(c3, c3))]
    w, w2 = z(6, 2), z(6, 4)
    chars = [
        [[1], [1], [1], [1]],
        [[1], [1], w, w2],
        [[1], [1], w2, w],
        [[3], [-1], [0], [0]],
    ]
    return build("A4", elems, perm_mul, spec, chars, 6)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for key, fn in [("s3", s3), ("d4", d4), ("q8", q8), ("a4", a4)]:
        data = fn()
        (OUT / f"{key}.json").write_text(json.dumps(data) + "\n")
        print(f"wrote {key}.json  order={data['order']} classes={len(data['classes'])}")


if __name__ == "__main__":
    main()
