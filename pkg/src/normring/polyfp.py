"""Dense univariate polynomials over F_p.

Polynomials are lists of coefficients in ``range(p)``, constant term first,
with no trailing zeros (the zero polynomial is ``[]``).
"""


def trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def reduce(a, p):
    return trim([x % p for x in a])


def add(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def sub(a, b, p):
    return add(a, [-x % p for x in b], p)


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return reduce(out, p)


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        a = trim(a)
    return trim(q), a


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def gcd(a, b, p):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b, p)[1]
    return monic(a, p)


def powmod(base, e, mod, p):
    result = [1]
    base = divmod_(base, mod, p)[1]
    while e:
        if e & 1:
            result = divmod_(mul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = divmod_(mul(base, base, p), mod, p)[1]
    return result


def is_irreducible(f, p):
    """Ben-Or test for a polynomial whose degree survives reduction mod p."""
    f = monic(reduce(f, p), p)
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    xp = x
    for _ in range(n // 2):
        xp = powmod(xp, p, f, p)
        if len(gcd(f, sub(xp, x, p), p)) > 1:
            return False
    return True


def evaluate(a, c, p):
    v = 0
    for x in reversed(a):
        v = (v * c + x) % p
    return v


def split_roots(g, p):
    """Roots of a monic squarefree polynomial that splits into linear factors.

    Small primes are scanned directly; otherwise Cantor-Zassenhaus splitting
    with shifts ``x + delta`` tried in increasing order of ``delta``.
    """
    g = monic(reduce(g, p), p)
    if len(g) <= 1:
        return []
    if p < 64:
        return [c for c in range(p) if evaluate(g, c, p) == 0]
    roots = []
    stack = [g]
    while stack:
        h = stack.pop()
        if len(h) == 2:
            roots.append(-h[0] % p)
            continue
        for delta in range(p):
            w = powmod([delta, 1], (p - 1) // 2, h, p)
            d = gcd(h, sub(w, [1], p), p)
            if 1 < len(d) < len(h):
                stack.append(d)
                stack.append(divmod_(h, d, p)[0])
                break
        else:
            raise ArithmeticError("polynomial does not split into distinct linear factors")
    return sorted(roots)
