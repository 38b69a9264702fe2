"""Coefficient fields: exact rationals and prime fields."""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


class Rationals:
    """QQ.  Elements are ``int`` whenever integral, otherwise ``Fraction``."""

    characteristic = 0
    modulus = None
    heuristic = False
    name = "QQ"

    def __call__(self, c):
        if isinstance(c, str):
            c = Fraction(c)
        if isinstance(c, Fraction):
            return c.numerator if c.denominator == 1 else c
        if isinstance(c, int):
            return c
        raise TypeError(f"cannot coerce {c!r} into QQ")

    def normalize(self, c):
        if type(c) is Fraction and c.denominator == 1:
            return c.numerator
        return c

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        if b == 1:
            return a
        if b == -1:
            return -a
        if type(a) is int and type(b) is int and a % b == 0:
            return a // b
        return self.normalize(Fraction(a) / b)

    def inv(self, b):
        return self.div(1, b)

    def to_pair(self, c) -> list[int]:
        c = Fraction(c)
        return [c.numerator, c.denominator]

    def from_pair(self, pair) -> int | Fraction:
        num, den = pair
        return self(Fraction(int(num), int(den)))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) with elements stored as ints in ``[0, p)``.

    Results over a prime field are marked heuristic: the claims being checked
    live over an infinite field of characteristic zero.
    """

    characteristic: int
    heuristic = True

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.modulus = p
        self.name = f"GF({p})"

    def __call__(self, c):
        p = self.modulus
        if isinstance(c, str):
            c = Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator % p == 0:
                raise ZeroDivisionError(f"denominator vanishes mod {p}")
            return c.numerator * pow(c.denominator, -1, p) % p
        return int(c) % p

    def normalize(self, c):
        return c % self.modulus

    def div(self, a, b):
        if b % self.modulus == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return a * pow(b, -1, self.modulus) % self.modulus

    def inv(self, b):
        return self.div(1, b)

    def to_pair(self, c) -> list[int]:
        return [c % self.modulus, 1]

    def from_pair(self, pair) -> int:
        return self(Fraction(int(pair[0]), int(pair[1])))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))

    def __repr__(self):
        return self.name


QQ = Rationals()


def parse_field(text: str):
    """``"rational"``/``"QQ"`` or ``"prime"``/``"prime:p"``/``"GF(p)"``."""
    t = text.strip().lower()
    if t in ("rational", "rationals", "qq", "q"):
        return QQ
    if t == "prime":
        return PrimeField()
    for prefix in ("prime:", "prime(", "gf(", "gf:"):
        if t.startswith(prefix):
            return PrimeField(int(t[len(prefix):].rstrip(")")))
    raise ValueError(f"unknown field {text!r}")
