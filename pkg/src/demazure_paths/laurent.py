"""Exact Laurent polynomials with integer coefficients.

``LaurentTable`` is multivariate with exponent tuples as keys;
``QPoly`` is the univariate case in q.
"""

from __future__ import annotations

from collections import defaultdict


class LaurentTable:
    """Finitely supported map from exponent tuples to integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = defaultdict(int)
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for key, c in items:
                acc[tuple(key)] += c
        self._terms = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def monomial(cls, key, coef=1):
        return cls({tuple(key): coef})

    @classmethod
    def count(cls, keys):
        """Sum of e^key over an iterable of keys."""
        acc = defaultdict(int)
        for k in keys:
            acc[tuple(k)] += 1
        return cls(acc)

    def items(self):
        return sorted(self._terms.items())

    def keys(self):
        return sorted(self._terms)

    def __getitem__(self, key):
        return self._terms.get(tuple(key), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentTable):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = defaultdict(int, self._terms)
        for k, v in other._terms.items():
            out[k] += v
        return LaurentTable(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return LaurentTable({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out = defaultdict(int)
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                out[tuple(a + b for a, b in zip(k1, k2))] += v1 * v2
        return LaurentTable(out)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        if not self._terms:
            if e == 0:
                raise ValueError("0**0 has no exponent width")
            return LaurentTable()
        width = len(next(iter(self._terms)))
        out = LaurentTable.monomial((0,) * width)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, key):
        """Multiply by the monomial e^key."""
        return LaurentTable({tuple(a + b for a, b in zip(k, key)): v for k, v in self._terms.items()})

    def map_keys(self, fn):
        out = defaultdict(int)
        for k, v in self._terms.items():
            out[tuple(fn(k))] += v
        return LaurentTable(out)

    def mass(self) -> int:
        return sum(self._terms.values())

    def first_difference(self, other):
        """Smallest key whose coefficients differ, with both coefficients."""
        for k in sorted(set(self._terms) | set(other._terms)):
            a, b = self[k], other[k]
            if a != b:
                return k, a, b
        return None

    def to_json(self) -> dict:
        return {"terms": [{"exp": list(k), "coef": v} for k, v in self.items()]}

    def __repr__(self):
        return f"LaurentTable({dict(self.items())})"


class QPoly:
    """Laurent polynomial in a single variable q."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        acc = defaultdict(int)
        if coeffs:
            items = coeffs.items() if hasattr(coeffs, "items") else coeffs
            for e, c in items:
                acc[int(e)] += c
        self._c = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def q(cls, e: int = 1, coef: int = 1):
        return cls({e: coef})

    @classmethod
    def from_exponents(cls, exps):
        acc = defaultdict(int)
        for e in exps:
            acc[e] += 1
        return cls(acc)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, e):
        return self._c.get(e, 0)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        out = defaultdict(int, self._c)
        for e, c in other._c.items():
            out[e] += c
        return QPoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self._c.items()})
        out = defaultdict(int)
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] += c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, s: int) -> "QPoly":
        return QPoly({e + s: c for e, c in self._c.items()})

    def __call__(self, q):
        return sum(c * q ** e for e, c in self._c.items())

    def min_degree(self):
        return min(self._c) if self._c else None

    def to_json(self) -> dict:
        return {"terms": [{"exp": e, "coef": c} for e, c in self.items()]}

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items(), reverse=True):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"QPoly({str(self)!r})"
