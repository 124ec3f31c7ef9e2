#!/usr/bin/env python3
"""Write offline stand-in b-files for every OEIS sequence the registry checks.

Each sequence is produced from a definition recorded on its OEIS page
(closed form, recurrence, generating function, or a direct count), never
from the inset formulas the library implements. When network access to
oeis.org is available, replace these files with the published b-files:

    insets --fixtures crates/core/fixtures/oeis crosscheck all --refresh
"""

import sys
from math import comb
from pathlib import Path

TERMS = 50
DIAGONALS = 10


def series(num, den, order):
    """Power series num/den truncated at x^order; den[0] must be +-1."""
    out = []
    rem = list(num) + [0] * (order + 1)
    for i in range(order + 1):
        c = rem[i] * den[0]
        out.append(c)
        for j, d in enumerate(den):
            if i + j < len(rem):
                rem[i + j] -= c * d
    return out


def pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def ppow(a, e):
    out = [1]
    for _ in range(e):
        out = pmul(out, a)
    return out


def closed(f, start=0, count=TERMS):
    return start, [f(n) for n in range(start, start + count)]


def crystal_ball(dim, radius):
    # coefficient of x^radius in (1+x)^dim / (1-x)^(dim+1)
    return sum(comb(dim, j) * comb(radius - j + dim, dim) for j in range(min(dim, radius) + 1))


def coordination(dim):
    return series(ppow([1, 1], dim), ppow([1, -1], dim), TERMS - 1)


def delannoy_table(size):
    t = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(size):
            if a == 0 or b == 0:
                t[a][b] = 1
            else:
                t[a][b] = t[a - 1][b] + t[a][b - 1] + t[a - 1][b - 1]
    return t


def antidiagonals(cell):
    return [cell(d - j, j) for d in range(DIAGONALS) for j in range(d + 1)]


def central_delannoy():
    a = [1, 3]
    for n in range(2, TERMS):
        a.append((3 * (2 * n - 1) * a[-1] - (n - 1) * a[-2]) // n)
    return 0, a


def hetyei(m, n):
    # asymmetric Delannoy array: coefficient of x^m in (2-x)^n / (1-x)^(n+1)
    return series(ppow([2, -1], n), ppow([1, -1], n + 1), m)[m]


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def fibonacci():
    a = [0, 1]
    while len(a) < TERMS:
        a.append(a[-1] + a[-2])
    return 0, a


def sulanke():
    size = DIAGONALS
    s = {}
    for n in range(size):
        for k in range(size):
            if n == 0 and k == 0:
                s[n, k] = 1
                continue
            left = s.get((n, k - 1), 0)
            up = s.get((n - 1, k), 0)
            s[n, k] = left + (up if (n + k) % 2 == 0 else 2 * up)
    return 0, antidiagonals(lambda n, k: s[n, k])


def two_one_pascal():
    rows = [[1], [2, 1]]
    while len(rows) < DIAGONALS:
        prev = rows[-1]
        rows.append([2] + [prev[k - 1] + prev[k] for k in range(1, len(prev))] + [1])
    return 0, [v for row in rows for v in row]


def dyck_two_levels(n):
    if n == 0:
        return 1
    return sum(comb(n - 1, t - 1) * comb(n + t, t) for t in range(1, n + 1))


SEQUENCES = {
    "A005408": ("a(n) = 2n+1", lambda: closed(lambda n: 2 * n + 1)),
    "A000290": ("a(n) = n^2", lambda: closed(lambda n: n * n)),
    "A000330": ("a(n) = n(n+1)(2n+1)/6", lambda: closed(lambda n: n * (n + 1) * (2 * n + 1) // 6)),
    "A002415": ("a(n) = n^2(n^2-1)/12", lambda: closed(lambda n: n * n * (n * n - 1) // 12)),
    "A001844": ("a(n) = 2n(n+1)+1", lambda: closed(lambda n: 2 * n * (n + 1) + 1)),
    "A005900": ("a(n) = n(2n^2+1)/3", lambda: closed(lambda n: n * (2 * n * n + 1) // 3)),
    "A001845": ("a(n) = (2n+1)(2n^2+2n+3)/3", lambda: closed(lambda n: (2 * n + 1) * (2 * n * n + 2 * n + 3) // 3)),
    "A006325": ("a(n) = n(n+1)(n^2+n+1)/6", lambda: closed(lambda n: n * (n + 1) * (n * n + n + 1) // 6)),
    "A001793": ("a(n) = n(n+3)2^(n-3)", lambda: closed(lambda n: n * (n + 3) * 2 ** n // 8, start=1)),
    "A002492": ("a(n) = 2n(n+1)(2n+1)/3", lambda: closed(lambda n: 2 * n * (n + 1) * (2 * n + 1) // 3)),
    "A033455": ("a(n) = n(n^4-1)/30", lambda: closed(lambda n: n * (n ** 4 - 1) // 30)),
    "A008288": ("Delannoy square array by antidiagonals, T(a,b)=T(a-1,b)+T(a,b-1)+T(a-1,b-1)",
                lambda: (0, antidiagonals(lambda a, b: delannoy_table(DIAGONALS)[a][b]))),
    "A001850": ("n a(n) = 3(2n-1) a(n-1) - (n-1) a(n-2)", central_delannoy),
    "A049600": ("asymmetric Delannoy array by antidiagonals, [x^m] (2-x)^n/(1-x)^(n+1)",
                lambda: (0, antidiagonals(lambda n, m: hetyei(m, n)))),
    "A051960": ("a(n) = (3n+2) Catalan(n)", lambda: closed(lambda n: (3 * n + 2) * catalan(n))),
    "A000045": ("F(n) = F(n-1) + F(n-2)", fibonacci),
    "A064861": ("Sulanke triangle by antidiagonals, s(n,k)=s(n,k-1)+(1 or 2)s(n-1,k) by parity of n+k", sulanke),
    "A001846": ("[x^n] (1+x)^4/(1-x)^5", lambda: closed(lambda n: crystal_ball(4, n))),
    "A001847": ("[x^n] (1+x)^5/(1-x)^6", lambda: closed(lambda n: crystal_ball(5, n))),
    "A005899": ("[x^n] (1+x)^3/(1-x)^3", lambda: (0, coordination(3))),
    "A008412": ("[x^n] (1+x)^4/(1-x)^4", lambda: (0, coordination(4))),
    "A008413": ("[x^n] (1+x)^5/(1-x)^5", lambda: (0, coordination(5))),
    "A008414": ("[x^n] (1+x)^6/(1-x)^6", lambda: (0, coordination(6))),
    "A008415": ("[x^n] (1+x)^7/(1-x)^7", lambda: (0, coordination(7))),
    "A029653": ("(2,1)-Pascal triangle by rows", two_one_pascal),
    "A058396": ("[x^n] ((1-x)/(1-2x))^3", lambda: (0, series(ppow([1, -1], 3), ppow([1, -2], 3), TERMS - 1))),
    "A000297": ("a(n) = (n-1)(n+1)(n+6)/6", lambda: closed(lambda n: (n - 1) * (n + 1) * (n + 6) // 6)),
    "A167667": ("a(n) = 3n 2^(n-1)", lambda: closed(lambda n: 3 * n * 2 ** n // 2)),
    "A002002": ("a(n) = Sum_{k<n} C(n,k+1) C(n+k,k)",
                lambda: closed(lambda n: sum(comb(n, k + 1) * comb(n + k, k) for k in range(n)))),
    "A002003": ("a(n) = 2 Sum_{k<n} C(n-1,k) C(n+k,k)",
                lambda: closed(lambda n: 2 * sum(comb(n - 1, k) * comb(n + k, k) for k in range(n)))),
    "A001105": ("a(n) = 2n^2", lambda: closed(lambda n: 2 * n * n)),
    "A072819": ("a(n) = 2n^2(n^2-1)/3", lambda: closed(lambda n: 2 * n * n * (n * n - 1) // 3, start=1)),
    "A058331": ("a(n) = 2n^2+1", lambda: closed(lambda n: 2 * n * n + 1)),
    "A176479": ("height-2 Dyck paths with n peaks on each level, Sum_t C(n-1,t-1) C(n+t,t)",
                lambda: closed(dyck_two_levels, count=TERMS)),
    "A181675": ("lattice points of Z^n with Lee norm <= n^2", lambda: closed(lambda n: crystal_ball(n, n * n), count=30)),
    "A038207": ("triangle T(n,k) = 2^(n-k) C(n,k) by rows",
                lambda: (0, [2 ** (n - k) * comb(n, k) for n in range(DIAGONALS) for k in range(n + 1)])),
}


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "crates/core/fixtures/oeis"
    out_dir.mkdir(parents=True, exist_ok=True)
    for a_number, (definition, make) in sorted(SEQUENCES.items()):
        start, values = make()
        lines = [f"# {a_number} offline stand-in, not downloaded: {definition}"]
        lines += [f"{start + i} {v}" for i, v in enumerate(values)]
        (out_dir / f"b{a_number[1:]}.txt").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(SEQUENCES)} fixtures to {out_dir}")


if __name__ == "__main__":
    main()
