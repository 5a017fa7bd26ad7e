"""Maximal orders by p-maximalization (Pohst-Zassenhaus round 2)."""

from dataclasses import dataclass

from sympy import isprime, primerange

from .errors import FactorizationIncomplete, NotContained, NotNormalization, NotPrime
from .ideal import multiplier_ring
from .lattice import lattice_index
from .local import primes_above, radical_ideal

__all__ = [
    "DiscFactorization",
    "factor_disc",
    "p_radical",
    "p_maximal_order",
    "normalize",
    "validate_normalization",
    "TRIAL_DIVISION_BOUND",
]

TRIAL_DIVISION_BOUND = 10**6

_small_primes = None


def _primes():
    global _small_primes
    if _small_primes is None:
        _small_primes = list(primerange(2, TRIAL_DIVISION_BOUND + 1))
    return _small_primes


@dataclass(frozen=True)
class DiscFactorization:
    """``disc == sign * cofactor * prod(p**e)``.

    ``cofactor`` is 1, a certified prime larger than the trial bound (then it
    also appears in ``factors``), or an uncertified composite remainder.
    """

    disc: int
    factors: tuple
    cofactor: int
    certified: bool

    def square_primes(self):
        return [p for p, e in self.factors if e >= 2]


def factor_disc(d, bound=TRIAL_DIVISION_BOUND):
    if d == 0:
        raise ValueError("zero discriminant")
    n = abs(d)
    factors = []
    for p in _primes():
        if p > bound or p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    if n == 1:
        return DiscFactorization(d, tuple(factors), 1, True)
    # remaining n has no prime factor <= min(bound, sqrt(n))
    if n <= bound * bound or isprime(n):
        factors.append((n, 1))
        factors.sort()
        return DiscFactorization(d, tuple(factors), 1, True)
    return DiscFactorization(d, tuple(factors), n, False)


def _require_prime(p):
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")


def p_radical(R, p):
    """``I_p`` with ``I_p / pR`` the radical of ``R / pR``."""
    return radical_ideal(R, p)


def p_maximal_order(R, p):
    """Iterate ``R <- (I_p : I_p)`` until the ring stops growing."""
    _require_prime(p)
    while True:
        S = multiplier_ring(p_radical(R, p))
        if S == R:
            return R
        R = S


def normalize(R, bound=TRIAL_DIVISION_BOUND):
    fac = factor_disc(R.disc, bound)
    if not fac.certified:
        raise FactorizationIncomplete(fac.cofactor)
    for p in fac.square_primes():
        R = p_maximal_order(R, p)
    return R


def validate_normalization(R, Rt, p_bound=50, bound=TRIAL_DIVISION_BOUND):
    """Check that ``Rt`` contains ``R`` and passes the Dedekind test.

    The test ``N(m^2) == N(m)^2`` runs at every maximal ideal of ``Rt`` above
    the primes whose square divides ``disc(Rt)``. When that discriminant
    cannot be factored, primes up to ``p_bound`` and the primes dividing the
    index ``[Rt : R]`` are used instead.
    """
    if not Rt.lattice.contains_lattice(R.lattice):
        raise NotContained("the normalization must contain the order")
    fac = factor_disc(Rt.disc, bound)
    if fac.certified:
        primes = fac.square_primes()
    else:
        idx = int(lattice_index(Rt.lattice, R.lattice))
        fi = factor_disc(idx, bound)
        primes = sorted({p for p, _ in fi.factors} | set(primerange(2, p_bound + 1)))
    for p in primes:
        for m in primes_above(Rt, p):
            if (m.ideal * m.ideal).norm != m.norm**2:
                raise NotNormalization(f"N(m^2) != N(m)^2 at a prime above {p}")
    return Rt
