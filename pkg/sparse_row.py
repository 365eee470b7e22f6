"""Sparse rows of exact rationals.

A SparseRow is a dict key -> Fraction whose missing keys read as 0 and which
never stores a zero coefficient. It supports the vector space operations used
by the invariant vectors (X/Y basis) and by symbol coordinates.
"""

from fractions import Fraction
from typing import Iterable, Tuple, Any


class SparseRow(dict):
    def __init__(self, data=()):
        super().__init__()
        self.__iadd__(data)

    def __getitem__(self, key):
        return self.get(key, Fraction(0))

    def __setitem__(self, key, value):
        value = Fraction(value)
        if value == 0:
            self.pop(key, None)
        else:
            super().__setitem__(key, value)

    def _new(self, data=()):
        return type(self)(data)

    def copy(self):
        return self._new(self.items())

    def iadd_coef(self, coef, other):  # self += coef*other
        if coef == 0:
            return self
        if isinstance(other, dict):
            other = other.items()
        for k, x in other:
            if x == 0:
                continue
            self[k] = self.get(k, 0) + Fraction(coef) * x
        return self

    def __iadd__(self, other):
        return self.iadd_coef(1, other)

    def __isub__(self, other):
        return self.iadd_coef(-1, other)

    def __add__(self, other):
        return self.copy().__iadd__(other)

    def __sub__(self, other):
        return self.copy().__isub__(other)

    def __neg__(self):
        return self._new((k, -x) for k, x in self.items())

    def __mul__(self, n):
        if n == 0:
            return self._new()
        return self._new((k, Fraction(n) * x) for k, x in self.items())

    def __rmul__(self, n):
        return self.__mul__(n)

    def __eq__(self, other):
        if isinstance(other, dict):
            return dict.__eq__(self, other)
        if other == 0:
            return len(self) == 0
        return NotImplemented

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    __hash__ = None

    def sorted_items(self) -> Iterable[Tuple[Any, Fraction]]:
        return sorted(self.items())

    def __repr__(self):
        body = ', '.join(f"{k!r}: {v}" for k, v in self.sorted_items())
        return f"{type(self).__name__}({{{body}}})"
