"""Full-rank integer sublattices of Z^2 and their quotient arithmetic.

Every such lattice has exactly one basis of the shape (d1, 0), (k, d2) with
d1, d2 >= 1 and 0 <= k < d1 (column Hermite form). Storing that form makes
lattice equality a tuple comparison and reduces membership and coset
reduction to integer division, with no floating point anywhere.
"""

from dataclasses import dataclass
from math import gcd


def _egcd(a: int, b: int):
    """Extended gcd: (g, p, q) with p*a + q*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_p, p = 1, 0
    old_q, q = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_p, p = p, old_p - quot * p
        old_q, q = q, old_q - quot * q
    if old_r < 0:
        old_r, old_p, old_q = -old_r, -old_p, -old_q
    return old_r, old_p, old_q


@dataclass(frozen=True)
class PeriodLattice:
    """A sublattice of Z^2 in Hermite form: generated by (d1, 0) and (k, d2)."""

    d1: int
    d2: int
    k: int

    @property
    def det(self) -> int:
        return self.d1 * self.d2

    def basis(self):
        return ((self.d1, 0), (self.k, self.d2))

    @classmethod
    def from_basis(cls, b1, b2) -> "PeriodLattice":
        """Hermite-reduce an arbitrary integer basis; rejects singular ones."""
        u1, u2 = (int(c) for c in b1)
        v1, v2 = (int(c) for c in b2)
        det = u1 * v2 - u2 * v1
        if det == 0:
            raise ValueError(f"basis {tuple(b1)}, {tuple(b2)} is singular")
        d2, p, q = _egcd(u2, v2)
        if d2 == 0:
            # both generators horizontal would force det == 0
            raise ValueError(f"basis {tuple(b1)}, {tuple(b2)} is singular")
        e = p * u1 + q * v1
        d1 = abs(det) // d2
        return cls(d1, d2, e % d1)

    def reduce(self, x: int, y: int):
        """Canonical coset representative of (x, y) in [0, d1) x [0, d2)."""
        j, y = divmod(y, self.d2)
        return (x - j * self.k) % self.d1, y

    def contains(self, x: int, y: int) -> bool:
        return self.reduce(x, y) == (0, 0)

    def squares(self):
        """Canonical square representatives, ordered by (y, x)."""
        for y in range(self.d2):
            for x in range(self.d1):
                yield x, y

    def nonzero_vectors_within(self, reach: int):
        """Nonzero lattice vectors (p, q) with |p| + |q| <= reach."""
        for p in range(-reach, reach + 1):
            rest = reach - abs(p)
            for q in range(-rest, rest + 1):
                if (p or q) and self.contains(p, q):
                    yield p, q


def hnf_lattices(max_det: int):
    """Every sublattice of index <= max_det, once each, ordered by
    (index, d1, k)."""
    for det in range(1, max_det + 1):
        for d1 in range(1, det + 1):
            d2, rem = divmod(det, d1)
            if rem:
                continue
            for k in range(d1):
                yield PeriodLattice(d1, d2, k)
