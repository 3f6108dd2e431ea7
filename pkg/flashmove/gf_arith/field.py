"""
GF(2^w) Field Module
Symbol arithmetic over GF(2^8) / GF(2^16) with log/antilog tables
"""
from functools import lru_cache
from typing import Optional

import numpy as np

from ..config.settings import DEFAULT_POLYNOMIALS
from ..errors import FieldDomainError

# A symbol is an integer in [0, 2^w); identical coefficients are applied to
# every symbol position of a page.
Symbol = int


def poly_mod(a: int, mod: int) -> int:
    """Remainder of the GF(2)[x] polynomial a modulo mod"""
    mod_bitlen = mod.bit_length()
    while a.bit_length() >= mod_bitlen:
        a ^= mod << (a.bit_length() - mod_bitlen)
    return a


def is_irreducible(poly: int) -> bool:
    """
    Exhaustive divisor check for a GF(2)[x] polynomial.

    Every polynomial of degree 1..deg/2 is tried as a factor; fine for deg <= 16.
    """
    degree = poly.bit_length() - 1
    if degree < 1:
        return False
    for divisor in range(2, 1 << (degree // 2 + 1)):
        if poly_mod(poly, divisor) == 0:
            return False
    return True


def peasant_multiply(a: int, b: int, poly: int, w: int) -> int:
    """Shift-and-reduce multiplication, independent of the lookup tables"""
    result = 0
    top = 1 << w
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return result


class FieldContext:
    """
    Arithmetic context for GF(2^w).

    Immutable after construction; every method is pure.
    """

    def __init__(self, w: int = 8, reduction_poly: Optional[int] = None):
        if w not in DEFAULT_POLYNOMIALS:
            raise FieldDomainError(f"Unsupported symbol width {w}; expected 8 or 16")
        poly = DEFAULT_POLYNOMIALS[w] if reduction_poly is None else reduction_poly
        if poly.bit_length() - 1 != w:
            raise FieldDomainError(f"Reduction polynomial {poly:#x} does not have degree {w}")
        if not is_irreducible(poly):
            raise FieldDomainError(f"Reduction polynomial {poly:#x} is reducible")

        self._w = w
        self._poly = poly
        self._order = 1 << w
        self._build_tables()

    @property
    def w(self) -> int:
        return self._w

    @property
    def reduction_poly(self) -> int:
        return self._poly

    @property
    def order(self) -> int:
        """Number of field elements, 2^w"""
        return self._order

    @property
    def dtype(self):
        """Unsigned numpy type holding one symbol"""
        return np.uint8 if self._w == 8 else np.uint16

    def _build_tables(self) -> None:
        group = self._order - 1
        for generator in range(2, self._order):
            exp = [1] * group
            value = 1
            for power in range(1, group):
                value = peasant_multiply(value, generator, self._poly, self._w)
                if value == 1:
                    break
                exp[power] = value
            else:
                break
        else:  # pragma: no cover - the multiplicative group is cyclic
            raise FieldDomainError(f"No generator found for {self._poly:#x}")

        log = [0] * self._order
        for power, value in enumerate(exp):
            log[value] = power

        self.generator = generator
        self._exp_list = exp + exp
        self._log_list = log
        self._exp = np.array(self._exp_list, dtype=np.int64)
        self._log = np.array(log, dtype=np.int64)

    def check(self, a: int) -> Symbol:
        """Return a as a Symbol, rejecting values outside [0, 2^w)"""
        if not 0 <= a < self._order:
            raise FieldDomainError(f"{a} is not an element of GF(2^{self._w})")
        return a

    def require_capacity(self, n: int) -> None:
        """Coded plans need n distinct nonzero elements"""
        if self._order - 1 < n:
            raise FieldDomainError(
                f"GF(2^{self._w}) has only {self._order - 1} nonzero elements; {n} blocks need a wider field"
            )

    def add(self, a: Symbol, b: Symbol) -> Symbol:
        return self.check(a) ^ self.check(b)

    def mul(self, a: Symbol, b: Symbol) -> Symbol:
        self.check(a)
        self.check(b)
        if a == 0 or b == 0:
            return 0
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: Symbol) -> Symbol:
        if self.check(a) == 0:
            raise FieldDomainError("Zero has no multiplicative inverse")
        return self._exp_list[(self._order - 1 - self._log_list[a]) % (self._order - 1)]

    def div(self, a: Symbol, b: Symbol) -> Symbol:
        return self.mul(a, self.inv(b))

    def pow(self, a: Symbol, e: int) -> Symbol:
        if self.check(a) == 0:
            return 1 if e == 0 else 0
        return self._exp_list[(self._log_list[a] * e) % (self._order - 1)]

    def multiply(self, a, b) -> np.ndarray:
        """Element-wise product of broadcastable arrays of symbols"""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        product = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, product)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldContext):
            return NotImplemented
        return self._w == other._w and self._poly == other._poly

    def __hash__(self) -> int:
        return hash((self._w, self._poly))

    def __repr__(self) -> str:
        return f"FieldContext(w={self._w}, reduction_poly={self._poly:#x})"


@lru_cache(maxsize=None)
def get_field(w: int = 8, reduction_poly: Optional[int] = None) -> FieldContext:
    """Shared FieldContext per (w, polynomial); table construction is not free"""
    return FieldContext(w, reduction_poly)
