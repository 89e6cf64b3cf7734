"""
    Exact coefficient fields
"""
import logging
from fractions import Fraction
from sympy import GF, QQ, isprime, mod_inverse

from libgentlesurf.complexes import exceptions

log = logging.getLogger(__name__)


class Field:
    """Rationals or a prime field GF(p). Path coefficients are Fraction
    or int values, matrices are built over the matching sympy
    domain."""

    def __init__(self, characteristic=0):
        self.characteristic = characteristic
        self.domain = GF(characteristic) if characteristic else QQ

    @property
    def name(self):
        """Field specification string"""
        if self.characteristic:
            return f"gf:{self.characteristic}"
        return "rationals"

    def element(self, value):
        """Convert integer or rational value into the field"""
        value = Fraction(value)
        if not self.characteristic:
            return value
        p = self.characteristic
        if value.denominator % p == 0:
            raise exceptions.FieldConfigError(
                f"Value [{value}] has no image in GF({p})"
            )
        return value.numerator * mod_inverse(value.denominator, p) % p

    def add(self, first, second):
        """Sum"""
        if self.characteristic:
            return (first + second) % self.characteristic
        return first + second

    def sub(self, first, second):
        """Difference"""
        if self.characteristic:
            return (first - second) % self.characteristic
        return first - second

    def mul(self, first, second):
        """Product"""
        if self.characteristic:
            return first * second % self.characteristic
        return first * second

    def neg(self, value):
        """Additive inverse"""
        if self.characteristic:
            return -value % self.characteristic
        return -value

    def div(self, first, second):
        """Quotient, second must be nonzero"""
        if second == 0:
            raise ZeroDivisionError("division by zero field element")
        if self.characteristic:
            p = self.characteristic
            return first * mod_inverse(second, p) % p
        return Fraction(first) / second

    def toDomain(self, value):
        """Coefficient as element of the sympy domain"""
        if self.characteristic:
            return self.domain(int(value))
        value = Fraction(value)
        return self.domain(value.numerator, value.denominator)

    def fromDomain(self, value):
        """Domain element as coefficient"""
        if self.characteristic:
            return int(value) % self.characteristic
        return Fraction(int(value.numerator), int(value.denominator))

    def random(self, rng):
        """Random element"""
        if self.characteristic:
            return rng.randrange(self.characteristic)
        return Fraction(rng.randint(-9, 9))

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(self.characteristic)

    def __repr__(self):
        return f"Field({self.name})"


def fieldFromSpec(spec):
    """Parse "rationals" or "gf:<p>" with p prime and p >= 5"""
    spec = (spec or "rationals").strip().lower()
    if spec in ("rationals", "q"):
        return Field()
    if spec.startswith("gf:"):
        try:
            prime = int(spec[3:])
        except ValueError as e:
            raise exceptions.FieldConfigError(
                f"Invalid field characteristic in [{spec}]: [{e}]"
            ) from e
        if prime < 5 or not isprime(prime):
            raise exceptions.FieldConfigError(
                f"Field characteristic must be a prime >= 5, got [{prime}]"
            )
        log.debug("Using prime field GF(%s)", prime)
        return Field(prime)
    raise exceptions.FieldConfigError(
        f"Unknown field specification [{spec}], use rationals or gf:<p>"
    )
