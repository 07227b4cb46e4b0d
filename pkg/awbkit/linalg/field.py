"""Exact ground fields: the rationals and prime fields ``F_p``."""

from typing import Any, Dict, Iterator, Optional, Union

from fractions import Fraction

import sympy
from sympy.polys.domains import GF, QQ

from awbkit.errors import FieldMismatch, UnsupportedField

MAX_PRIME = 2**31


class Field:
    """
    Exact ground field, wrapping a sympy domain.

    Scalars are the elements of ``self.domain``: reduced fractions over ``QQ`` or
    residues over ``GF(p)``. Two fields are equal when their descriptors are equal.

    :param p: The characteristic of a prime field, ``None`` for the rationals.
    """

    __slots__ = ("p", "domain")

    def __init__(self, p: Optional[int] = None):
        if p is None:
            self.p = None
            self.domain = QQ
        else:
            p = int(p)
            if not 1 < p < MAX_PRIME or not sympy.isprime(p):
                raise UnsupportedField(f"not a prime below 2**31: {p}")
            self.p = p
            self.domain = GF(p)

    @classmethod
    def rational(cls) -> "Field":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __call__(self, value: Union[int, str, Fraction, Any]):
        """
        Converts a value into a scalar of this field.

        :param value: An integer, a string such as ``"-3/4"``, a fraction or a scalar.
        :return: The scalar.
        """
        if isinstance(value, bool):
            raise TypeError(f"not a scalar: {value!r}")
        if isinstance(value, int):
            return self.domain(value)
        if isinstance(value, str):
            value = value.strip()
            if self.is_prime:
                return self.domain(int(value))
            value = Fraction(value)
        if isinstance(value, Fraction):
            if self.is_prime:
                return self.domain(value.numerator) / self.domain(value.denominator)
            return self.domain(value.numerator, value.denominator)
        if self.domain.of_type(value):
            return value
        raise TypeError(f"cannot convert {value!r} into {self}")

    def to_str(self, value) -> str:
        """
        Serializes a scalar as ``"a/b"``, ``"a"`` or a residue in ``[0, p)``.

        :param value: The scalar.
        :return: Its canonical string.
        """
        if self.is_prime:
            return str(self.to_int(value))
        numerator = int(self.domain.numer(value))
        denominator = int(self.domain.denom(value))
        if denominator == 1:
            return str(numerator)
        return f"{numerator}/{denominator}"

    def to_int(self, value) -> int:
        """
        Representative in ``[0, p)`` of a residue.

        :param value: The scalar.
        :return: The integer representative.
        """
        assert self.is_prime
        return int(value) % self.p

    def is_zero(self, value) -> bool:
        return value == self.domain.zero

    def elements(self) -> Iterator:
        """
        Iterates over the elements of a prime field in the order ``0, 1, ..., p - 1``.

        :return:
        """
        assert self.is_prime
        for k in range(self.p):
            yield self.domain(k)

    def check_same(self, other: "Field"):
        if self != other:
            raise FieldMismatch(self, other)

    def descriptor(self) -> Dict[str, Union[str, int]]:
        if self.is_prime:
            return {"kind": "prime", "p": self.p}
        return {"kind": "rational"}

    @classmethod
    def from_descriptor(cls, descriptor: Dict[str, Union[str, int]]) -> "Field":
        kind = descriptor.get("kind")
        if kind == "rational":
            return cls.rational()
        if kind == "prime":
            return cls.prime(int(descriptor["p"]))
        raise UnsupportedField(f"unknown field kind: {kind!r}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("field", self.p))

    def __repr__(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.p})"
