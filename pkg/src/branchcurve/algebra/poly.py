"""Exact multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction`, so every operation is exact.
Polynomials carry an ordered tuple of variable names; binary operations
work over the union of both operands' variables.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

VAR_ORDER = ("x", "y", "w", "z")

Number = Union[int, Fraction]
Exponent = tuple


def _var_key(name: str):
    if name in VAR_ORDER:
        return (0, VAR_ORDER.index(name), "")
    return (1, 0, name)


def sort_vars(names: Iterable[str]) -> tuple:
    return tuple(sorted(set(names), key=_var_key))


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


class RatPoly:
    """Immutable polynomial with rational coefficients.

    >>> x, y = RatPoly.gens("x", "y")
    >>> (x + y) ** 2
    x^2 + 2*x*y + y^2
    """

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping = ()):
        variables = tuple(variables)
        ordered = sort_vars(variables)
        if len(ordered) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        perm = [variables.index(v) for v in ordered]
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent {exps} does not match variables {variables}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            coeff = as_fraction(coeff)
            if coeff == 0:
                continue
            key = tuple(exps[i] for i in perm)
            total = clean.get(key, 0) + coeff
            if total == 0:
                clean.pop(key, None)
            else:
                clean[key] = total
        self._vars = ordered
        self._terms = clean
        self._hash = None

    # construction

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "RatPoly":
        # trusted path: variables already sorted, terms already clean
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def gens(cls, *names: str) -> tuple:
        """Generators sharing one ambient variable list."""
        variables = sort_vars(names)
        out = []
        for name in names:
            exps = tuple(1 if v == name else 0 for v in variables)
            out.append(cls._raw(variables, {exps: Fraction(1)}))
        return tuple(out)

    @classmethod
    def constant(cls, value, variables: Sequence[str] = ()) -> "RatPoly":
        variables = sort_vars(variables)
        value = as_fraction(value)
        terms = {(0,) * len(variables): value} if value else {}
        return cls._raw(variables, terms)

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], coeff=1) -> "RatPoly":
        return cls(variables, {tuple(exps): coeff})

    # basic queries

    @property
    def vars(self) -> tuple:
        return self._vars

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        if var not in self._vars:
            return 0 if self._terms else -1
        i = self._vars.index(var)
        return max((e[i] for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self._terms}
        return len(degrees) <= 1

    def support_vars(self) -> tuple:
        used = set()
        for exps in self._terms:
            used.update(v for v, e in zip(self._vars, exps) if e)
        return sort_vars(used)

    def coefficient(self, exps: Mapping[str, int] | Sequence[int]) -> Fraction:
        if isinstance(exps, Mapping):
            unknown = set(exps) - set(self._vars)
            if any(exps[v] for v in unknown):
                return Fraction(0)
            exps = tuple(exps.get(v, 0) for v in self._vars)
        return self._terms.get(tuple(exps), Fraction(0))

    # variable bookkeeping

    def with_vars(self, variables: Iterable[str]) -> "RatPoly":
        """Re-express over a larger ordered variable set."""
        target = sort_vars(set(variables) | set(self._vars))
        if target == self._vars:
            return self
        idx = [target.index(v) for v in self._vars]
        terms = {}
        for exps, c in self._terms.items():
            new = [0] * len(target)
            for i, e in zip(idx, exps):
                new[i] = e
            terms[tuple(new)] = c
        return RatPoly._raw(target, terms)

    def drop_unused(self, keep: Iterable[str] = ()) -> "RatPoly":
        target = sort_vars(set(self.support_vars()) | set(keep))
        idx = [self._vars.index(v) for v in target]
        terms = {tuple(exps[i] for i in idx): c for exps, c in self._terms.items()}
        return RatPoly._raw(target, terms)

    def _align(self, other) -> tuple:
        if not isinstance(other, RatPoly):
            other = RatPoly.constant(other, self._vars)
        if other._vars == self._vars:
            return self, other
        joint = set(self._vars) | set(other._vars)
        return self.with_vars(joint), other.with_vars(joint)

    # arithmetic

    def __neg__(self):
        return RatPoly._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other, self._vars)
        elif not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._align(other)
        terms = dict(a._terms)
        for e, c in b._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return RatPoly._raw(a._vars, terms)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other, self._vars)
        elif not isinstance(other, RatPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatPoly._raw(self._vars, {})
            return RatPoly._raw(self._vars, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._align(other)
        terms = {}
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return RatPoly._raw(a._vars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, RatPoly):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = RatPoly.constant(1, self._vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other, self._vars)
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._align(other)
        return a._terms == b._terms

    def __hash__(self):
        if self._hash is None:
            canon = []
            for exps, c in self._terms.items():
                mono = tuple((v, e) for v, e in zip(self._vars, exps) if e)
                canon.append((mono, c))
            self._hash = hash(frozenset(canon))
        return self._hash

    # calculus and evaluation

    def derivative(self, var: str) -> "RatPoly":
        if var not in self._vars:
            raise ValueError(f"unknown variable {var!r}; polynomial variables are {self._vars}")
        i = self._vars.index(var)
        terms = {}
        for exps, c in self._terms.items():
            if exps[i]:
                new = exps[:i] + (exps[i] - 1,) + exps[i + 1:]
                terms[new] = c * exps[i]
        return RatPoly._raw(self._vars, terms)

    def evaluate(self, values) -> Fraction:
        """Evaluate at a full assignment (mapping or sequence aligned with ``vars``)."""
        if isinstance(values, Mapping):
            missing = [v for v in self.support_vars() if v not in values]
            if missing:
                raise ValueError(f"no value given for {missing}")
            point = [as_fraction(values[v]) if v in values else Fraction(0) for v in self._vars]
        else:
            point = [as_fraction(v) for v in values]
            if len(point) != len(self._vars):
                raise ValueError(f"expected {len(self._vars)} values for {self._vars}")
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for value, e in zip(point, exps):
                if e:
                    term *= value ** e
            total += term
        return total

    __call__ = evaluate

    def substitute(self, mapping: Mapping[str, object]) -> "RatPoly":
        """Replace variables by polynomials or numbers; other variables stay."""
        subs = {}
        for var, val in mapping.items():
            if not isinstance(val, RatPoly):
                val = RatPoly.constant(val)
            subs[var] = val
        keep = [v for v in self._vars if v not in subs]
        joint = set(keep)
        for val in subs.values():
            joint |= set(val.vars)
        joint = sort_vars(joint)
        subs = {k: v.with_vars(joint) for k, v in subs.items()}
        gens = dict(zip(joint, RatPoly.gens(*joint))) if joint else {}
        cache = {}

        def power(var, e):
            key = (var, e)
            if key not in cache:
                base = subs[var] if var in subs else gens[var]
                cache[key] = base ** e
            return cache[key]

        result = RatPoly.constant(0, joint)
        for exps, c in self._terms.items():
            term = RatPoly.constant(c, joint)
            for var, e in zip(self._vars, exps):
                if e:
                    term = term * power(var, e)
            result = result + term
        return result

    def coefficients_in(self, var: str) -> dict:
        """Map power of ``var`` to its coefficient, a polynomial in the other variables."""
        if var not in self._vars:
            return {0: self} if self else {}
        i = self._vars.index(var)
        rest = self._vars[:i] + self._vars[i + 1:]
        buckets = {}
        for exps, c in self._terms.items():
            buckets.setdefault(exps[i], {})[exps[:i] + exps[i + 1:]] = c
        return {k: RatPoly._raw(rest, t) for k, t in buckets.items()}

    def homogeneous_part(self, degree: int) -> "RatPoly":
        return RatPoly._raw(self._vars, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def lowest_degree(self) -> int:
        return min((sum(e) for e in self._terms), default=-1)

    # division

    def leading_term(self):
        """Lexicographically largest (exponent, coefficient) pair."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self._terms)
        return exps, self._terms[exps]

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        """Quotient of an exact division; raises ValueError if ``other`` does not divide."""
        if isinstance(other, (int, Fraction)):
            return self / other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        a, b = self._align(other)
        if b.is_constant():
            return a * (1 / b.constant_value())
        lead_e, lead_c = b.leading_term()
        remainder = dict(a._terms)
        quotient = {}
        b_items = list(b._terms.items())
        while remainder:
            e = max(remainder)
            c = remainder[e]
            q_e = tuple(i - j for i, j in zip(e, lead_e))
            if any(k < 0 for k in q_e):
                raise ValueError("polynomial division is not exact")
            q_c = c / lead_c
            quotient[q_e] = q_c
            for be, bc in b_items:
                t = tuple(i + j for i, j in zip(q_e, be))
                s = remainder.get(t, 0) - q_c * bc
                if s:
                    remainder[t] = s
                else:
                    remainder.pop(t, None)
        return RatPoly._raw(a._vars, quotient)

    def ratio_to(self, other: "RatPoly"):
        """Return ``r`` with ``self == r * other`` for a rational ``r``, or None."""
        a, b = self._align(other)
        if b.is_zero():
            return Fraction(0) if a.is_zero() else None
        if set(a._terms) != set(b._terms):
            return None
        ratio = None
        for e, c in a._terms.items():
            r = c / b._terms[e]
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
        return ratio

    def is_proportional(self, other: "RatPoly") -> bool:
        r = self.ratio_to(other)
        return r is not None and r != 0

    def normalized(self) -> "RatPoly":
        """Scale so that the lexicographic leading coefficient is 1."""
        if self.is_zero():
            return self
        return self * (1 / self.leading_term()[1])

    # display

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, key=lambda e: (-sum(e), tuple(-i for i in e))):
            c = self._terms[exps]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self._vars, exps) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def partial_derivative(f: RatPoly, var: str) -> RatPoly:
    """Formal partial derivative; ``var`` must be one of ``f``'s variables."""
    return f.derivative(var)
