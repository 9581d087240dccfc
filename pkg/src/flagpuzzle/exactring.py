"""Exact coefficients and sparse multivariate Laurent polynomials.

Monomials are packed into a single Python int, one balanced 24-bit digit per
variable, so that multiplying monomials is integer addition.  Every element
carries its own sorted variable tuple; binary operations align the two tuples
first.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

Coef = Union[int, Fraction]
Rational = Fraction

_SHIFT = 24
_BASE = 1 << _SHIFT
_HALF = _BASE >> 1
_MASK = _BASE - 1

_VAR_RE = re.compile(r"^([A-Za-z_]+)(\d*)$")


def var_key(name: str):
    """Sort key giving u2 < u10 and grouping variables by prefix."""
    m = _VAR_RE.match(name)
    if not m:
        return (name, -1)
    return (m.group(1), int(m.group(2)) if m.group(2) else -1)


def _norm(c: Coef) -> Coef:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _pack(exps: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if not -_HALF < e < _HALF:
            raise OverflowError("exponent out of range")
        key += e << (_SHIFT * i)
    return key


def _unpack(key: int, nv: int) -> tuple[int, ...]:
    out = []
    for _ in range(nv):
        r = key & _MASK
        if r >= _HALF:
            r -= _BASE
        out.append(r)
        key = (key - r) >> _SHIFT
    return tuple(out)


class EvaluationError(ZeroDivisionError):
    pass


class LaurentElem:
    """An element of Z[x_1^+-1, ...] (or Q[...]) with named variables."""

    __slots__ = ("_vars", "_terms")

    def __init__(self, terms: Mapping[tuple, Coef] | None = None, variables: Iterable[str] = ()):
        # terms maps exponent tuples (aligned with `variables`) to coefficients
        vs = tuple(sorted(set(variables), key=var_key))
        if terms and tuple(variables) != vs:
            raise ValueError("variables must be given in canonical order")
        self._vars = vs
        self._terms = {}
        for exps, c in (terms or {}).items():
            c = _norm(c)
            if c:
                k = _pack(exps)
                self._terms[k] = _norm(self._terms.get(k, 0) + c)
                if not self._terms[k]:
                    del self._terms[k]

    # construction -----------------------------------------------------------

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "LaurentElem":
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        return obj

    @classmethod
    def const(cls, c: Coef) -> "LaurentElem":
        c = _norm(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        return cls._raw((), {0: c} if c else {})

    @classmethod
    def var(cls, name: str) -> "LaurentElem":
        return cls._raw((name,), {1: 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coef: Coef = 1) -> "LaurentElem":
        vs = tuple(sorted((v for v, e in exps.items() if e), key=var_key))
        if not coef:
            return cls._raw(vs, {})
        return cls._raw(vs, {_pack(exps[v] for v in vs): _norm(coef)})

    @classmethod
    def from_dict(cls, terms: Mapping[tuple, Coef]) -> "LaurentElem":
        """Build from {((var, exp), ...): coef}."""
        out = cls.zero()
        for mono, c in terms.items():
            out = out + cls.monomial(dict(mono), c)
        return out

    @classmethod
    def zero(cls) -> "LaurentElem":
        return cls._raw((), {})

    @classmethod
    def one(cls) -> "LaurentElem":
        return cls._raw((), {0: 1})

    # alignment ----------------------------------------------------------------

    def _repack(self, target: tuple) -> dict:
        if self._vars == target:
            return self._terms
        idx = [target.index(v) for v in self._vars]
        nt = len(target)
        out = {}
        nv = len(self._vars)
        for k, c in self._terms.items():
            e = _unpack(k, nv)
            full = [0] * nt
            for i, x in zip(idx, e):
                full[i] = x
            out[_pack(full)] = c
        return out

    @staticmethod
    def _align(a: "LaurentElem", b: "LaurentElem"):
        if a._vars == b._vars:
            return a._vars, a._terms, b._terms
        vs = tuple(sorted(set(a._vars) | set(b._vars), key=var_key))
        return vs, a._repack(vs), b._repack(vs)

    @staticmethod
    def _lift(x) -> "LaurentElem":
        if isinstance(x, LaurentElem):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentElem.const(x)
        return NotImplemented

    # ring operations ------------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        vs, ta, tb = self._align(self, other)
        out = dict(ta)
        for k, c in tb.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = _norm(s)
            else:
                out.pop(k, None)
        return LaurentElem._raw(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElem._raw(self._vars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        vs, ta, tb = self._align(self, other)
        if len(ta) > len(tb):
            ta, tb = tb, ta
        out: dict = {}
        get = out.get
        for ka, ca in ta.items():
            for kb, cb in tb.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return LaurentElem._raw(vs, {k: _norm(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (k, c), = self._terms.items()
            return LaurentElem._raw(self._vars, {-k * (-e): _norm(Fraction(1, 1) / c ** (-e))})
        out = LaurentElem.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.divide_exact(other)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        _, ta, tb = self._align(self, other)
        return ta == tb

    def __hash__(self):
        return hash(frozenset(self.items()))

    def __bool__(self):
        return bool(self._terms)

    # inspection -------------------------------------------------------------------

    @property
    def variables(self) -> tuple:
        return tuple(v for v in self._vars if any(self._exps_of(v)))

    def _exps_of(self, v):
        i = self._vars.index(v)
        nv = len(self._vars)
        return (_unpack(k, nv)[i] for k in self._terms)

    def items(self):
        """Yield ((var, exp) pairs, coef) with zero exponents dropped."""
        nv = len(self._vars)
        for k, c in self._terms.items():
            e = _unpack(k, nv)
            yield tuple((v, x) for v, x in zip(self._vars, e) if x), c

    def terms(self) -> dict:
        return dict(self.items())

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    def constant_term(self) -> Coef:
        return self._terms.get(0, 0)

    def leading(self):
        """Lex-leading (packed key, coef); the packing order is lex from the last variable."""
        k = max(self._terms)
        return k, self._terms[k]

    # exact division -------------------------------------------------------------

    def divide_exact(self, other: "LaurentElem") -> "LaurentElem":
        """Quotient q with q*other == self; raises ArithmeticError otherwise."""
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        vs, num, den = self._align(self, other)
        num = dict(num)
        if len(den) == 1:
            (kd, cd), = den.items()
            return LaurentElem._raw(vs, {k - kd: _cdiv(c, cd) for k, c in num.items()})
        kd = max(den)
        cd = den[kd]
        low = min(num) - min(den) if num else 0
        quot: dict = {}
        while num:
            kn = max(num)
            kq = kn - kd
            if kq < low:
                raise ArithmeticError("division is not exact")
            cn = num[kn]
            cq = _cdiv(cn, cd)
            quot[kq] = cq
            for k, c in den.items():
                kk = k + kq
                s = num.get(kk, 0) - cq * c
                if s:
                    num[kk] = _norm(s)
                else:
                    num.pop(kk, None)
        return LaurentElem._raw(vs, quot)

    # evaluation and substitution --------------------------------------------------

    def evaluate(self, assignment: Mapping[str, Coef]) -> Fraction:
        """Exact value at a rational point."""
        nv = len(self._vars)
        vals = []
        for v in self._vars:
            if v not in assignment:
                if any(self._exps_of(v)):
                    raise KeyError(f"no value for variable {v}")
                vals.append(Fraction(1))
            else:
                vals.append(Fraction(assignment[v]))
        total = Fraction(0)
        for k, c in self._terms.items():
            t = Fraction(c)
            for x, e in zip(vals, _unpack(k, nv)):
                if e:
                    if e < 0 and x == 0:
                        raise EvaluationError("zero assigned to a variable with negative exponent")
                    t *= x ** e
            total += t
        return total

    def substitute(self, mapping: Mapping[str, "LaurentElem"]) -> "LaurentElem":
        """Ring substitution of variables by Laurent elements (monomials may take negative powers)."""
        out = LaurentElem.zero()
        nv = len(self._vars)
        cache: dict = {}
        for k, c in self._terms.items():
            t = LaurentElem.const(c)
            for v, e in zip(self._vars, _unpack(k, nv)):
                if not e:
                    continue
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = mapping[v] ** e
                    t = t * cache[key]
                else:
                    t = t * LaurentElem.monomial({v: e})
            out = out + t
        return out

    def rename(self, mapping: Mapping[str, str]) -> "LaurentElem":
        """Rename variables (a bijection on the variables present)."""
        return self.substitute({a: LaurentElem.var(b) for a, b in mapping.items()})

    # K -> H degeneration ---------------------------------------------------------

    def exp_truncate(self, degree: int, prefix_from: str = "u", prefix_to: str = "y") -> "LaurentElem":
        """Substitute u_i = 1 + y_i and keep the homogeneous part of total y-degree `degree`."""
        if degree < 0:
            return LaurentElem.zero()
        acc: dict = {}
        nv = len(self._vars)
        for k, c in self._terms.items():
            series = {(): Fraction(c)}
            for v, e in zip(self._vars, _unpack(k, nv)):
                if not e:
                    continue
                if not v.startswith(prefix_from):
                    raise ValueError(f"unexpected variable {v}")
                yv = prefix_to + v[len(prefix_from):]
                uni = [(m, _binom(e, m)) for m in range(degree + 1)]
                new: dict = {}
                for mono, a in series.items():
                    dm = sum(x for _, x in mono)
                    for m, b in uni:
                        if dm + m > degree or not b:
                            continue
                        key = mono + ((yv, m),) if m else mono
                        new[key] = new.get(key, 0) + a * b
                series = new
            for mono, a in series.items():
                if sum(x for _, x in mono) == degree and a:
                    key = tuple(sorted(mono, key=lambda p: var_key(p[0])))
                    acc[key] = acc.get(key, 0) + a
        return LaurentElem.from_dict({m: a for m, a in acc.items() if a})

    def min_total_degree_after_exp(self, upto: int) -> int | None:
        """Lowest y-degree <= upto with a nonzero component, or None."""
        for k in range(upto + 1):
            if self.exp_truncate(k):
                return k
        return None

    # printing / serialisation -----------------------------------------------------

    def _sorted_items(self):
        def key(item):
            mono, _ = item
            return (sum(abs(e) for _, e in mono), [(var_key(v), -e) for v, e in mono])
        return sorted(self.items(), key=key)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self._sorted_items():
            num = [(v, e) for v, e in mono if e > 0]
            den = [(v, -e) for v, e in mono if e < 0]
            mstr = _mono_str(num, den)
            sign = "-" if c < 0 else "+"
            ac = -c if c < 0 else c
            if not mono:
                body = str(ac)
            elif ac == 1:
                body = mstr
            else:
                body = f"{ac}*{mstr}" if not mstr.startswith("1/") else f"{ac}{mstr[1:]}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentElem({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"exps": dict(mono), "coef": str(c)} for mono, c in self._sorted_items()]}

    @classmethod
    def from_json(cls, data) -> "LaurentElem":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_dict({tuple(sorted(t["exps"].items(), key=lambda p: var_key(p[0]))): _norm(Fraction(t["coef"]))
                              for t in data["terms"]})


def _cdiv(a: Coef, b: Coef) -> Coef:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


def _binom(e: int, m: int) -> Fraction:
    num = 1
    for i in range(m):
        num *= e - i
    return Fraction(num, factorial(m))


def _mono_str(num, den) -> str:
    def fmt(vs):
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in vs)
    if not den:
        return fmt(num)
    d = fmt(den)
    if len(den) > 1:
        d = f"({d})"
    return f"{fmt(num) if num else '1'}/{d}"


def var(name: str) -> LaurentElem:
    return LaurentElem.var(name)


def const(c: Coef) -> LaurentElem:
    return LaurentElem.const(c)


def ring_add(a: LaurentElem, b: LaurentElem) -> LaurentElem:
    return a + b


def ring_mul(a: LaurentElem, b: LaurentElem) -> LaurentElem:
    return a * b


def evaluate(p: LaurentElem, assignment: Mapping[str, Coef]) -> Fraction:
    return p.evaluate(assignment)


def parse(text: str) -> LaurentElem:
    """Parse expressions like '1 - u3/u2', '2*u1^2*u2^-1', '(1-q^2)*u1' (no nested division)."""
    import ast

    tree = ast.parse(text.replace("^", "**"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a.divide_exact(b) if isinstance(b, LaurentElem) else a * Fraction(1, b)
            if isinstance(node.op, ast.Pow):
                return a ** int(b.constant_term() if isinstance(b, LaurentElem) else b)
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            return v
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return LaurentElem.const(node.value)
        if isinstance(node, ast.Name):
            return LaurentElem.var(node.id)
        raise ValueError(f"cannot parse {text!r}")

    return ev(tree)


class RatFunc:
    """A fraction num/den of Laurent elements; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = LaurentElem._lift(num) if not isinstance(num, LaurentElem) else num
        den = LaurentElem.one() if den is None else den
        self.den = LaurentElem._lift(den) if not isinstance(den, LaurentElem) else den
        if not self.den:
            raise ZeroDivisionError("zero denominator")

    @staticmethod
    def _lift(x) -> "RatFunc":
        return x if isinstance(x, RatFunc) else RatFunc(x)

    def __add__(self, o):
        o = self._lift(o)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._lift(o)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __eq__(self, o):
        o = self._lift(o)
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __bool__(self):
        return bool(self.num)

    def evaluate(self, assignment: Mapping[str, Coef]) -> Fraction:
        d = self.den.evaluate(assignment)
        if d == 0:
            raise EvaluationError("denominator vanishes at this point")
        return self.num.evaluate(assignment) / d

    def __str__(self):
        if self.den == LaurentElem.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__
