"""Polynomial rings over F_p (or Q) with packed-integer monomials.

A monomial is a single Python int whose natural integer order *is* the
monomial order, so the leading term of a polynomial ``f`` (a dict mapping
monomial -> coefficient) is simply ``max(f)``.  Exponents live in 8-bit
fields; every exponent must stay below 128.

Encodings
---------
degrevlex
    low part: field ``i`` holds ``127 - e_i`` for variable ``i`` (field ``N``
    is reserved for the elimination variable); above it a 16-bit weighted
    degree; above that (elimination rings only) the exponent of ``t``.
    Multiplication is ``a + b - ONE`` where ``ONE`` encodes the unit monomial.
lex
    ``e_0`` in the most significant field, total degree in the lowest 16 bits.
    Multiplication is ``a + b``.

In both encodings the quotient shift used by reduction is ``m - lead``:
``t * (m / lead) == t + m - lead``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import InvalidInput

Poly = Dict[int, object]

MAX_EXP = 127
_FIELD = 8
_DEG_BITS = 16

ORDERS = ("degrevlex", "lex")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Ring:
    """Polynomial ring ``K[v_0, ..., v_{N-1}]`` with a fixed monomial order.

    ``characteristic`` is a prime p (coefficients are ints in [0, p)) or 0
    (coefficients are :class:`fractions.Fraction`).
    """

    def __init__(self, nvars: int, characteristic: int = 32003, order: str = "degrevlex",
                 names: Optional[Sequence[str]] = None, *, _elim: bool = False):
        if nvars < 1:
            raise InvalidInput("a ring needs at least one variable")
        if order not in ORDERS:
            raise InvalidInput(f"unknown monomial order {order!r}")
        if characteristic != 0 and not _is_prime(characteristic):
            raise InvalidInput(f"characteristic must be 0 or prime, got {characteristic}")
        if _elim and order != "degrevlex":
            raise InvalidInput("elimination rings extend degrevlex only")
        self.nvars = nvars
        self.p = characteristic
        self.order = order
        self.is_elim = _elim
        if names is None:
            names = [f"v{i}" for i in range(nvars)]
        self.names = list(names)
        if len(self.names) != nvars + (1 if _elim else 0):
            raise InvalidInput("wrong number of variable names")
        self.n = None  # graph vertex count, set by for_graph
        N = nvars
        if order == "degrevlex":
            self._sh = _FIELD * (N + 1)
            self._sht = self._sh + _DEG_BITS
            self._low = (1 << self._sh) - 1
            self.one = sum(MAX_EXP << (_FIELD * f) for f in range(N + 1))
            self._guard = sum(0x80 << (_FIELD * f) for f in range(N + 1))
        else:
            self._sh = 0
            self._low = None
            self.one = 0
            self._guard = sum(0x80 << (_FIELD * f) for f in range(N))
        self._var_monos = [self._encode_var(i) for i in range(N + (1 if _elim else 0))]

    # ------------------------------------------------------------------ setup
    @classmethod
    def for_graph(cls, n: int, characteristic: int = 32003, order: str = "degrevlex") -> "Ring":
        """The ring K[x_1..x_n, y_1..y_n]; variable ``i-1`` is x_i, ``n+i-1`` is y_i."""
        names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
        ring = cls(2 * n, characteristic, order, names)
        ring.n = n
        return ring

    def x(self, i: int) -> int:
        """Variable index of x_i (1-based vertex label)."""
        return i - 1

    def y(self, i: int) -> int:
        """Variable index of y_i (1-based vertex label)."""
        return self.n + i - 1

    def with_order(self, order: str) -> "Ring":
        ring = Ring(self.nvars, self.p, order, self.names[: self.nvars])
        ring.n = self.n
        return ring

    def elimination_ring(self) -> "Ring":
        """Same ring plus one extra variable ``t`` (index N, weight 0) ordered first.

        Monomials of ``self`` are valid monomials of the result unchanged.
        """
        if self.order != "degrevlex" or self.is_elim:
            raise InvalidInput("elimination ring needs a plain degrevlex ring")
        ring = Ring(self.nvars, self.p, "degrevlex", self.names + ["t"], _elim=True)
        ring.n = self.n
        return ring

    def same_as(self, other: "Ring") -> bool:
        return (self.nvars, self.p, self.order, self.is_elim) == (
            other.nvars, other.p, other.order, other.is_elim)

    def __repr__(self):
        k = f"GF({self.p})" if self.p else "QQ"
        return f"Ring({k}[{', '.join(self.names)}], {self.order})"

    # -------------------------------------------------------------- monomials
    def _encode_var(self, i: int) -> int:
        N = self.nvars
        if self.order == "degrevlex":
            if i == N:  # elimination variable: weight 0, own top field
                return self.one - (1 << (_FIELD * N)) + (1 << self._sht)
            return self.one - (1 << (_FIELD * i)) + (1 << self._sh)
        return (1 << (_DEG_BITS + _FIELD * (N - 1 - i))) + 1

    def encode(self, exps: Sequence[int]) -> int:
        """Monomial from an exponent vector (length N, or N+1 in an elimination ring)."""
        m = self.one
        for i, e in enumerate(exps):
            if e:
                if e < 0 or e > MAX_EXP:
                    raise InvalidInput(f"exponent {e} out of range")
                m += e * (self._var_monos[i] - self.one)
        return m

    def exps(self, m: int) -> Tuple[int, ...]:
        N = self.nvars
        if self.order == "degrevlex":
            out = [MAX_EXP - ((m >> (_FIELD * i)) & 0xFF) for i in range(N)]
            if self.is_elim:
                out.append(MAX_EXP - ((m >> (_FIELD * N)) & 0xFF))
            return tuple(out)
        return tuple((m >> (_DEG_BITS + _FIELD * (N - 1 - i))) & 0xFF for i in range(N))

    def mono_mul(self, a: int, b: int) -> int:
        return a + b - self.one

    def mono_div(self, a: int, b: int) -> int:
        """a / b, assuming b divides a."""
        return a - b + self.one

    def divides(self, b: int, a: int) -> bool:
        """True iff monomial b divides monomial a."""
        g = self._guard
        if self.order == "degrevlex":
            low = self._low
            return ((((b & low) | g) - (a & low)) & g) == g
        return ((((a >> _DEG_BITS) | g) - (b >> _DEG_BITS)) & g) == g

    def mono_lcm(self, a: int, b: int) -> int:
        return self.encode([max(u, v) for u, v in zip(self.exps(a), self.exps(b))])

    def coprime(self, a: int, b: int) -> bool:
        return not any(u and v for u, v in zip(self.exps(a), self.exps(b)))

    def mono_degree(self, m: int) -> int:
        if self.order == "degrevlex":
            return (m >> self._sh) & ((1 << _DEG_BITS) - 1)
        return m & ((1 << _DEG_BITS) - 1)

    def support(self, m: int) -> int:
        """Bitmask of the variables dividing m."""
        mask = 0
        for i, e in enumerate(self.exps(m)):
            if e:
                mask |= 1 << i
        return mask

    # ----------------------------------------------------------- coefficients
    def coerce(self, c) -> object:
        if self.p:
            if isinstance(c, Fraction):
                return (c.numerator * pow(c.denominator, -1, self.p)) % self.p
            return int(c) % self.p
        return Fraction(c)

    def inv(self, c):
        if self.p:
            return pow(c, -1, self.p)
        return 1 / c

    # ------------------------------------------------------------ polynomials
    def zero(self) -> Poly:
        return {}

    def const(self, c) -> Poly:
        c = self.coerce(c)
        return {self.one: c} if c else {}

    def var(self, i: int) -> Poly:
        return {self._var_monos[i]: self.coerce(1)}

    def monomial(self, exps: Sequence[int], c=1) -> Poly:
        c = self.coerce(c)
        return {self.encode(exps): c} if c else {}

    def from_terms(self, terms: Dict[Tuple[int, ...], object]) -> Poly:
        f: Poly = {}
        for e, c in terms.items():
            c = self.coerce(c)
            if c:
                m = self.encode(e)
                s = f.get(m, 0) + c
                if self.p:
                    s %= self.p
                if s:
                    f[m] = s
                else:
                    f.pop(m, None)
        return f

    def terms(self, f: Poly) -> Dict[Tuple[int, ...], object]:
        return {self.exps(m): c for m, c in f.items()}

    def add(self, f: Poly, g: Poly) -> Poly:
        h = dict(f)
        p = self.p
        for m, c in g.items():
            s = h.get(m, 0) + c
            if p:
                s %= p
            if s:
                h[m] = s
            else:
                h.pop(m, None)
        return h

    def neg(self, f: Poly) -> Poly:
        if self.p:
            return {m: self.p - c for m, c in f.items()}
        return {m: -c for m, c in f.items()}

    def sub(self, f: Poly, g: Poly) -> Poly:
        return self.add(f, self.neg(g))

    def scale(self, f: Poly, c) -> Poly:
        c = self.coerce(c)
        if not c:
            return {}
        if self.p:
            return {m: (a * c) % self.p for m, a in f.items()}
        return {m: a * c for m, a in f.items()}

    def mul_term(self, f: Poly, m: int, c=1) -> Poly:
        """Multiply f by the term c*m."""
        shift = m - self.one
        p = self.p
        if p:
            return {k + shift: (a * c) % p for k, a in f.items()}
        return {k + shift: a * c for k, a in f.items()}

    def mul(self, f: Poly, g: Poly) -> Poly:
        h: Poly = {}
        p = self.p
        one = self.one
        for m1, c1 in f.items():
            for m2, c2 in g.items():
                m = m1 + m2 - one
                s = h.get(m, 0) + c1 * c2
                if p:
                    s %= p
                if s:
                    h[m] = s
                else:
                    h.pop(m, None)
        return h

    def lead(self, f: Poly) -> int:
        return max(f)

    def monic(self, f: Poly) -> Poly:
        if not f:
            return f
        c = f[max(f)]
        if c == 1:
            return f
        return self.scale(f, self.inv(c))

    def degree(self, f: Poly) -> int:
        return max(self.mono_degree(m) for m in f)

    def is_homogeneous(self, f: Poly) -> bool:
        return len({self.mono_degree(m) for m in f}) <= 1

    def substitute(self, f: Poly, a: int, b: Optional[int], c=1) -> Poly:
        """Replace variable a by ``c * v_b`` (or by 0 when b is None)."""
        c = self.coerce(c)
        out: Dict[Tuple[int, ...], object] = {}
        p = self.p
        for m, coef in f.items():
            e = list(self.exps(m))
            k = e[a]
            if k:
                if b is None:
                    continue
                e[a] = 0
                e[b] += k
                coef = coef * (c ** k)
                if p:
                    coef %= p
            key = tuple(e)
            out[key] = out.get(key, 0) + coef
        return self.from_terms(out)

    def convert(self, f: Poly, other: "Ring") -> Poly:
        """Re-encode f as a polynomial of ``other`` (same variables, maybe another order)."""
        if other.order == self.order and other.nvars == self.nvars:
            return dict(f)
        n = other.nvars + (1 if other.is_elim else 0)
        out: Poly = {}
        for m, c in f.items():
            e = self.exps(m)
            if len(e) > n:
                if any(e[n:]):
                    raise InvalidInput("polynomial uses variables missing from target ring")
                e = e[:n]
            out[other.encode(e)] = other.coerce(c) if other.p != self.p else c
        return {m: c for m, c in out.items() if c}

    def variables_of(self, f: Poly) -> int:
        mask = 0
        for m in f:
            mask |= self.support(m)
        return mask

    # ------------------------------------------------------------- text forms
    def format(self, f: Poly) -> str:
        if not f:
            return "0"
        parts = []
        for m in sorted(f, reverse=True):
            c = f[m]
            e = self.exps(m)
            mono = "*".join(
                self.names[i] + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            if self.p and c > self.p // 2:
                sign, mag = "-", self.p - c
            elif not self.p and c < 0:
                sign, mag = "-", -c
            else:
                sign, mag = "+", c
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    _token = re.compile(r"\s*([+-]?)\s*([^+-]+)")

    def parse(self, text: str) -> Poly:
        """Parse a sum of terms like ``"x1*y2 - x2*y1 + 3*x1^2"``."""
        index = {name: i for i, name in enumerate(self.names)}
        nv = len(self.names)
        terms: Dict[Tuple[int, ...], object] = {}
        text = text.strip()
        if text in ("", "0"):
            return {}
        pos = 0
        for match in self._token.finditer(text):
            if match.start() != pos:
                raise InvalidInput(f"cannot parse polynomial {text!r}")
            pos = match.end()
            sign, body = match.groups()
            coef = Fraction(-1 if sign == "-" else 1)
            e = [0] * nv
            for factor in body.strip().split("*"):
                factor = factor.strip()
                if not factor:
                    raise InvalidInput(f"cannot parse polynomial {text!r}")
                if "^" in factor:
                    base, power = factor.split("^")
                    power = int(power)
                else:
                    base, power = factor, 1
                base = base.strip()
                if base in index:
                    e[index[base]] += power
                else:
                    try:
                        coef *= Fraction(base) ** power
                    except ValueError:
                        raise InvalidInput(f"unknown variable {base!r}") from None
            key = tuple(e)
            terms[key] = terms.get(key, 0) + coef
        if pos != len(text):
            raise InvalidInput(f"cannot parse polynomial {text!r}")
        return self.from_terms(terms)


def canonical(ring: Ring, polys: Iterable[Poly]) -> List[Poly]:
    """Nonzero monic copies sorted by leading monomial (descending), duplicates dropped."""
    seen = set()
    out = []
    for f in polys:
        if not f:
            continue
        f = ring.monic(f)
        key = tuple(sorted(f.items()))
        if key not in seen:
            seen.add(key)
            out.append(f)
    out.sort(key=lambda f: max(f), reverse=True)
    return out
