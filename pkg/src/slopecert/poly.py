"""Exact arithmetic for the three polynomial rings behind the certificates.

All rings are dict-backed and sparse, with Python integers as coefficients,
so no precision is ever lost:

- ``LaurentPoly``: the ring Z[a^{+-1}] of one-variable Laurent polynomials.
  Zeroth-coefficient skein invariants live here, and "is this a unit" is
  the question the whole certificate hinges on.
- ``BiLaurent``: Z[v^{+-1}, z^{+-1}], home of the two-variable HOMFLYPT
  polynomial.
- ``SkeinElem``: polynomials in two formal indeterminates H and C with
  ``LaurentPoly`` coefficients. H and C stand in for two knot polynomials
  that the symbolic computation deliberately never evaluates.

Values are immutable after construction; every operation is a pure function
returning a new value, so results can be shared freely between tasks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Union


def _gather(items) -> dict:
    """Accumulate (key, coeff) pairs into a dict, dropping zero totals."""
    out: dict = {}
    for k, c in items:
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


class LaurentPoly:
    """Sparse Laurent polynomial sum_e c_e * a^e with integer coefficients.

    Stored as a mapping from exponent to nonzero coefficient. Instances are
    immutable and hashable; arithmetic returns new objects.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, Mapping):
            self._terms = _gather(terms.items())
        else:
            self._terms = _gather(terms)
        self._hash = None

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def _coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls({0: x})
        raise TypeError(f"cannot treat {type(x).__name__} as a LaurentPoly")

    def items(self):
        """Terms as (exponent, coefficient) pairs in ascending exponent."""
        return sorted(self._terms.items())

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def coefficients(self):
        """Coefficients in ascending-exponent order."""
        return [c for _, c in self.items()]

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_unit(self) -> bool:
        """True iff the value is +-a^k, the only invertible elements here."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def evaluate(self, x) -> Fraction:
        """Exact evaluation at a nonzero rational point."""
        x = Fraction(x)
        if x == 0:
            raise ValueError("cannot evaluate at 0: negative exponents")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * x**e
        return total

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        merged = dict(self._terms)
        for e, c in other._terms.items():
            s = merged.get(e, 0) + c
            if s:
                merged[e] = s
            elif e in merged:
                del merged[e]
        out = LaurentPoly()
        out._terms = merged
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        prod: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = prod.get(e, 0) + c1 * c2
                if s:
                    prod[e] = s
                elif e in prod:
                    del prod[e]
        out = LaurentPoly()
        out._terms = prod
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by a^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Divide by ``other`` in Z[a^{+-1}], raising if not exact."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        # Shift both operands into ordinary polynomials.
        av, bv = self.min_exp(), other.min_exp()
        da, db = self.max_exp() - av, other.max_exp() - bv
        if db > da:
            raise ValueError("not divisible: divisor degree too large")
        A = [0] * (da + 1)
        for e, c in self._terms.items():
            A[e - av] = c
        B = [0] * (db + 1)
        for e, c in other._terms.items():
            B[e - bv] = c
        Q = [0] * (da - db + 1)
        R = A[:]
        lead = B[db]
        for i in range(da - db, -1, -1):
            top = R[i + db]
            if top % lead != 0:
                raise ValueError("not divisible in Z[a^{+-1}]")
            qi = top // lead
            Q[i] = qi
            if qi:
                for j in range(db + 1):
                    R[i + j] -= qi * B[j]
        if any(R):
            raise ValueError("not divisible: nonzero remainder")
        return LaurentPoly({i + av - bv: c for i, c in enumerate(Q) if c})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.items()))
        return self._hash

    # Text form: terms "coeff*a^exp" in ascending exponent, joined by " + ".
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*a^{e}" for e, c in self.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: parse '(-2)*a^1 + ...' style term lists."""
        text = text.strip()
        if not text or text == "0":
            return cls.zero()
        pairs = []
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            coeff_s, sep, exp_s = chunk.partition("*a^")
            if not sep:
                raise ValueError(f"malformed Laurent term: {chunk!r}")
            pairs.append((int(exp_s), int(coeff_s)))
        return cls(_gather(pairs))

    def to_pairs(self):
        """JSON form: [exponent, coefficient] pairs, ascending exponent."""
        return [[e, c] for e, c in self.items()]

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls(_gather((int(e), int(c)) for e, c in pairs))


ALPHA = LaurentPoly({1: 1})
ONE = LaurentPoly({0: 1})
ONE_PLUS_INV_ALPHA = LaurentPoly({0: 1, -1: 1})


def neg_alpha_pow(k: int) -> LaurentPoly:
    """(-a)^k for any integer k."""
    return LaurentPoly({k: -1 if k % 2 else 1})


class BiLaurent:
    """Sparse integer Laurent polynomial in two variables v and z."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[tuple, int]] = None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, Mapping):
            self._terms = _gather(terms.items())
        else:
            self._terms = _gather(terms)
        self._hash = None

    @classmethod
    def zero(cls) -> "BiLaurent":
        return cls()

    @classmethod
    def one(cls) -> "BiLaurent":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, v_exp: int, z_exp: int) -> "BiLaurent":
        return cls({(v_exp, z_exp): coeff})

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, v_exp: int, z_exp: int) -> int:
        return self._terms.get((v_exp, z_exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __neg__(self) -> "BiLaurent":
        return BiLaurent({k: -c for k, c in self._terms.items()})

    def __add__(self, other: "BiLaurent") -> "BiLaurent":
        merged = dict(self._terms)
        for k, c in other._terms.items():
            s = merged.get(k, 0) + c
            if s:
                merged[k] = s
            elif k in merged:
                del merged[k]
        out = BiLaurent()
        out._terms = merged
        return out

    def __sub__(self, other: "BiLaurent") -> "BiLaurent":
        return self + (-other)

    def __mul__(self, other: "BiLaurent") -> "BiLaurent":
        prod: dict = {}
        for (v1, z1), c1 in self._terms.items():
            for (v2, z2), c2 in other._terms.items():
                k = (v1 + v2, z1 + z2)
                s = prod.get(k, 0) + c1 * c2
                if s:
                    prod[k] = s
                elif k in prod:
                    del prod[k]
        out = BiLaurent()
        out._terms = prod
        return out

    def __pow__(self, n: int) -> "BiLaurent":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = BiLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def times_monomial(self, v_exp: int, z_exp: int, coeff: int = 1) -> "BiLaurent":
        return BiLaurent(
            {(v + v_exp, z + z_exp): c * coeff for (v, z), c in self._terms.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*v^{v}*z^{z}" for (v, z), c in self.items())

    def __repr__(self) -> str:
        return f"BiLaurent({dict(self.items())!r})"


class SkeinElem:
    """Polynomial in formal indeterminates H and C over LaurentPoly.

    Terms are keyed by (degree in H, degree in C); both degrees are
    nonnegative. Coefficients identically zero are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[tuple, LaurentPoly]] = None):
        clean: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (h, c), poly in items:
                if h < 0 or c < 0:
                    raise ValueError("H and C degrees must be nonnegative")
                if (h, c) in clean:
                    poly = clean[(h, c)] + poly
                if poly:
                    clean[(h, c)] = poly
                elif (h, c) in clean:
                    del clean[(h, c)]
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls) -> "SkeinElem":
        return cls()

    @classmethod
    def scalar(cls, value) -> "SkeinElem":
        return cls({(0, 0): LaurentPoly._coerce(value)})

    @classmethod
    def one(cls) -> "SkeinElem":
        return cls.scalar(1)

    @classmethod
    def indeterminate_h(cls) -> "SkeinElem":
        return cls({(1, 0): LaurentPoly.one()})

    @classmethod
    def indeterminate_c(cls) -> "SkeinElem":
        return cls({(0, 1): LaurentPoly.one()})

    @classmethod
    def _coerce(cls, x) -> "SkeinElem":
        if isinstance(x, SkeinElem):
            return x
        if isinstance(x, (LaurentPoly, int)):
            return cls.scalar(x)
        raise TypeError(f"cannot treat {type(x).__name__} as a SkeinElem")

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, h_deg: int, c_deg: int) -> LaurentPoly:
        return self._terms.get((h_deg, c_deg), LaurentPoly.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __neg__(self) -> "SkeinElem":
        return SkeinElem({k: -p for k, p in self._terms.items()})

    def __add__(self, other) -> "SkeinElem":
        other = self._coerce(other)
        merged = dict(self._terms)
        for k, p in other._terms.items():
            s = merged.get(k, LaurentPoly.zero()) + p
            if s:
                merged[k] = s
            elif k in merged:
                del merged[k]
        out = SkeinElem()
        out._terms = merged
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "SkeinElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SkeinElem":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "SkeinElem":
        other = self._coerce(other)
        prod: dict = {}
        for (h1, c1), p1 in self._terms.items():
            for (h2, c2), p2 in other._terms.items():
                k = (h1 + h2, c1 + c2)
                s = prod.get(k, LaurentPoly.zero()) + p1 * p2
                if s:
                    prod[k] = s
                elif k in prod:
                    del prod[k]
        out = SkeinElem()
        out._terms = prod
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SkeinElem":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = SkeinElem.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(
        self,
        c_value: Optional[LaurentPoly] = None,
        h_value: Optional[LaurentPoly] = None,
    ) -> Union["SkeinElem", LaurentPoly]:
        """Substitute Laurent values for C and/or H.

        With both values given the result collapses to a LaurentPoly; with
        one given the other indeterminate survives; with neither this is
        the identity.
        """
        if c_value is None and h_value is None:
            return self
        if c_value is not None and h_value is not None:
            total = LaurentPoly.zero()
            for (h, c), poly in self._terms.items():
                total = total + poly * h_value**h * c_value**c
            return total
        acc = SkeinElem.zero()
        for (h, c), poly in self._terms.items():
            if c_value is not None:
                acc = acc + SkeinElem({(h, 0): poly * c_value**c})
            else:
                acc = acc + SkeinElem({(0, c): poly * h_value**h})
        return acc

    def evaluate_alpha(self, x) -> dict:
        """Evaluate every coefficient at a rational point of the a-variable.

        Returns {(h_deg, c_deg): Fraction} with zero values dropped; H and C
        stay symbolic.
        """
        out = {}
        for k, poly in self._terms.items():
            val = poly.evaluate(x)
            if val:
                out[k] = val
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = SkeinElem._coerce(other)
        if not isinstance(other, SkeinElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (h, c), poly in self.items():
            factors = [f"({poly})"]
            if h:
                factors.append(f"H^{h}")
            if c:
                factors.append(f"C^{c}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SkeinElem({dict(self.items())!r})"

    def to_rows(self):
        """JSON form: [h_deg, c_deg, laurent_pairs] rows sorted by degree."""
        return [[h, c, poly.to_pairs()] for (h, c), poly in self.items()]

    @classmethod
    def from_rows(cls, rows) -> "SkeinElem":
        return cls({(int(h), int(c)): LaurentPoly.from_pairs(p) for h, c, p in rows})
