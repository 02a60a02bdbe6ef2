#!/usr/bin/env python3
# Copyright 2026 The Isogenion Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/modular_polynomials.txt from the q-expansion of j.

Solves Phi_l(j(q), j(q^l)) = 0 for the unknown coefficients with exact
rational elimination. Output lines are `l i j c` with i <= j.
"""
import sys
from fractions import Fraction


def j_series(n):
    """Coefficients of q*j(q) up to q^n (index 0 is the q^-1 term of j)."""
    sigma3 = [0] * (n + 2)
    for d in range(1, n + 2):
        for m in range(d, n + 2, d):
            sigma3[m] += d ** 3
    e4 = [1] + [240 * sigma3[k] for k in range(1, n + 2)]

    def mul(a, b):
        out = [0] * (n + 2)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for k, y in enumerate(b[: n + 2 - i]):
                out[i + k] += x * y
        return out

    e4_cubed = mul(mul(e4, e4), e4)
    # prod (1 - q^k)^24 truncated, then invert as a power series.
    eta24 = [1] + [0] * (n + 1)
    for k in range(1, n + 2):
        for _ in range(24):
            for m in range(n + 1, k - 1, -1):
                eta24[m] -= eta24[m - k]
    inv = [0] * (n + 2)
    inv[0] = 1
    for m in range(1, n + 2):
        inv[m] = -sum(eta24[k] * inv[m - k] for k in range(1, m + 1))
    return mul(e4_cubed, inv)[: n + 1]


class Laurent:
    def __init__(self, low, coeffs):
        self.low = low
        self.c = coeffs

    def mul(self, other, upto):
        low = self.low + other.low
        out = [0] * (upto - low + 1)
        for i, x in enumerate(self.c):
            if x == 0:
                continue
            for k, y in enumerate(other.c):
                e = i + k
                if low + e > upto:
                    break
                out[e] += x * y
        return Laurent(low, out)

    def coeff(self, e):
        k = e - self.low
        return self.c[k] if 0 <= k < len(self.c) else 0


def modular_polynomial(level):
    top = level * (level + 1)
    upto = 40
    # Intermediate powers lose validity at their low end; keep a wide margin.
    bound = upto + 2 * top + 10
    n = bound + 20
    js = j_series(n)
    jq = Laurent(-1, js)
    jql_coeffs = [0] * (level * n + 1)
    for k, c in enumerate(js):
        jql_coeffs[level * k] = c
    jql = Laurent(-level, jql_coeffs)

    def powers(s, count):
        out = [Laurent(0, [1])]
        for _ in range(count):
            out.append(out[-1].mul(s, bound))
        return out

    xp = powers(jq, level + 1)
    yp = powers(jql, level + 1)
    unknowns = [(i, k) for i in range(level + 1) for k in range(level + 1)]
    terms = {u: xp[u[0]].mul(yp[u[1]], upto) for u in unknowns}
    known = [((level + 1, 0), 1), ((0, level + 1), 1)]
    known_terms = [(xp[a].mul(yp[b], upto), c) for (a, b), c in known]

    rows = []
    for e in range(-top, upto + 1):
        row = [Fraction(terms[u].coeff(e)) for u in unknowns]
        rhs = -sum(c * t.coeff(e) for t, c in known_terms)
        rows.append(row + [Fraction(rhs)])

    ncols = len(unknowns)
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if len(pivots) != ncols:
        raise SystemExit(f"level {level}: underdetermined system")
    for i in range(r, len(rows)):
        if rows[i][-1] != 0:
            raise SystemExit(f"level {level}: inconsistent system")

    coeffs = {}
    for i, col in enumerate(pivots):
        v = rows[i][-1]
        assert v.denominator == 1
        if v != 0:
            coeffs[unknowns[col]] = int(v)
    for (a, b), c in known:
        coeffs[(a, b)] = c
    for (a, b), c in coeffs.items():
        assert coeffs.get((b, a)) == c, "asymmetric result"
    return coeffs


def main():
    out = sys.stdout
    out.write("# Classical modular polynomials: level X-degree Y-degree coefficient\n")
    out.write("# Symmetric entries are stored once with X-degree <= Y-degree.\n")
    for level in (2, 3, 5, 7):
        coeffs = modular_polynomial(level)
        for (a, b) in sorted(coeffs):
            if a <= b:
                out.write(f"{level} {a} {b} {coeffs[(a, b)]}\n")


if __name__ == "__main__":
    main()
