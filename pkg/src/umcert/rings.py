"""Exact arithmetic over finitely presented commutative rings.

Supported constructions: the integers, modular integers Z/n, prime fields F_p,
univariate polynomial rings R[t], quotients R[t]/(monic), quotients R/I, and the
fiber product R x_{R/I} R of congruent pairs.  Elements are immutable wrappers
around a normal-form payload: an int, a tuple of base payloads (polynomials,
trailing zeros trimmed), or a congruent pair of payloads (fiber products).
Everything is computed exactly; operations that have no decision procedure for a
construction raise UndecidableError rather than guessing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property


class RingMismatchError(TypeError):
    """Operands belong to different rings."""


class UndecidableError(Exception):
    """No decision procedure is available for this construction."""


class CongruenceError(ValueError):
    """A fiber pair's components disagree modulo the ideal."""


class NonMemberError(ValueError):
    """An element is not in the ideal it was required to lie in."""


class NonUnitError(ValueError):
    """An element required to be a unit is not one."""


class SizeGuardError(RuntimeError):
    """An enumeration would exceed the configured desk-scale bound."""


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g == a*x + b*y."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def payload_key(p):
    """Deterministic total order on payloads (ints < tuples, recursively)."""
    if isinstance(p, int):
        return (0, p)
    return (1, len(p), tuple(payload_key(c) for c in p))


@dataclass(frozen=True)
class Elem:
    """An element of a ring, stored in normal form."""

    ring: "Ring"
    payload: object

    def _coerce(self, other):
        if isinstance(other, Elem):
            if other.ring != self.ring:
                raise RingMismatchError(f"mixed rings: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Elem(self.ring, self.ring.add(self.payload, other.payload))

    __radd__ = __add__

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.payload))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Elem(self.ring, self.ring.add(self.payload, self.ring.neg(other.payload)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Elem(self.ring, self.ring.add(other.payload, self.ring.neg(self.payload)))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Elem(self.ring, self.ring.mul(self.payload, other.payload))

    __rmul__ = __mul__

    def is_zero(self):
        return self.payload == self.ring.zero_payload()

    def is_one(self):
        return self.payload == self.ring.one_payload()

    def __repr__(self):
        return f"{self.ring.short_name()}({self.payload!r})"


class Ring:
    """Base class: payload-level arithmetic plus capability queries."""

    declared_dim = None
    is_field = False

    # -- payload arithmetic, implemented by subclasses ---------------------
    def normalize(self, payload):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def zero_payload(self):
        raise NotImplementedError

    def one_payload(self):
        return self.from_int_payload(1)

    def from_int_payload(self, k):
        raise NotImplementedError

    # -- capabilities -------------------------------------------------------
    @property
    def is_finite(self):
        return False

    def size(self):
        """Number of elements, or None when infinite."""
        return None

    def elements(self):
        """Iterate all elements in a deterministic canonical order."""
        raise UndecidableError(f"{self} is not enumerable")

    def try_inverse(self, a):
        """Return a payload b with a*b = 1, or None if a is not a unit."""
        if self.is_finite:
            one = self.one_payload()
            for e in self.elements():
                if self.mul(a, e.payload) == one:
                    return e.payload
            return None
        raise UndecidableError(f"unit test undecidable over {self}")

    def exact_divide(self, x, s):
        """Solve q*s = x.  Returns (q_payload, unique_flag) or None.

        The canonical solution is the first in element order; unique_flag
        records whether it is the only one (i.e. s is a non-zero-divisor or
        the equation pins q down anyway).
        """
        if self.is_finite:
            sols = [e.payload for e in self.elements() if self.mul(e.payload, s) == x]
            if not sols:
                return None
            sols.sort(key=payload_key)
            return sols[0], len(sols) == 1
        raise UndecidableError(f"exact division undecidable over {self}")

    # -- conveniences ---------------------------------------------------------
    def elem(self, raw):
        """Build an element from a raw payload-like value (checked)."""
        return Elem(self, self.normalize(self.coerce_payload(raw)))

    def coerce_payload(self, raw):
        if isinstance(raw, Elem):
            if raw.ring != self:
                raise RingMismatchError(f"mixed rings: {self} vs {raw.ring}")
            return raw.payload
        return raw

    def from_int(self, k):
        return Elem(self, self.from_int_payload(k))

    def zero(self):
        return Elem(self, self.zero_payload())

    def one(self):
        return Elem(self, self.one_payload())

    def short_name(self):
        return type(self).__name__

    def __repr__(self):
        return self.short_name()


@dataclass(frozen=True, repr=False)
class IntegerRing(Ring):
    """The ring of integers."""

    declared_dim: int | None = 1

    def normalize(self, payload):
        if not isinstance(payload, int):
            raise TypeError(f"integer payload expected, got {payload!r}")
        return payload

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def zero_payload(self):
        return 0

    def from_int_payload(self, k):
        return k

    def try_inverse(self, a):
        return a if a in (1, -1) else None

    def exact_divide(self, x, s):
        if s == 0:
            return (0, False) if x == 0 else None
        q, r = divmod(x, s)
        return (q, True) if r == 0 else None

    def short_name(self):
        return "Z"


@dataclass(frozen=True, repr=False)
class ModularRing(Ring):
    """Integers modulo n (n >= 1; n == 1 is the zero ring)."""

    n: int
    declared_dim: int | None = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be >= 1")

    def normalize(self, payload):
        if not isinstance(payload, int):
            raise TypeError(f"integer payload expected, got {payload!r}")
        return payload % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def zero_payload(self):
        return 0

    def from_int_payload(self, k):
        return k % self.n

    @property
    def is_finite(self):
        return True

    def size(self):
        return self.n

    def elements(self):
        return (Elem(self, k) for k in range(self.n))

    def try_inverse(self, a):
        g, x, _ = xgcd(a, self.n)
        if g != 1:
            return None
        return x % self.n

    def exact_divide(self, x, s):
        # q*s = x (mod n) solvable iff gcd(s, n) divides x.
        g, u, _ = xgcd(s, self.n)
        if g == 0:
            return (0, False) if x == 0 else None  # zero ring or s = n = 0
        if x % g:
            return None
        m = self.n // g
        q = ((x // g) * u) % m if m > 1 else 0
        return q, g == 1

    def short_name(self):
        return f"Z/{self.n}"


@dataclass(frozen=True, repr=False)
class PrimeField(ModularRing):
    """F_p, a marked-field version of Z/p."""

    is_field = True

    def __post_init__(self):
        super().__post_init__()
        p = self.n
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")

    def short_name(self):
        return f"F{self.n}"


class _PolyOps:
    """Shared tuple-of-payloads polynomial arithmetic over a base ring."""

    def _trim(self, coeffs):
        zero = self.base.zero_payload()
        i = len(coeffs)
        while i > 0 and coeffs[i - 1] == zero:
            i -= 1
        return tuple(coeffs[:i])

    def _coerce_coeffs(self, raw):
        if isinstance(raw, int):
            return (self.base.from_int_payload(raw),)
        if isinstance(raw, (list, tuple)):
            return tuple(self.base.normalize(self.base.coerce_payload(c)) for c in raw)
        raise TypeError(f"polynomial payload expected, got {raw!r}")

    def _add(self, a, b):
        n = max(len(a), len(b))
        zero = self.base.zero_payload()
        out = []
        for k in range(n):
            x = a[k] if k < len(a) else zero
            y = b[k] if k < len(b) else zero
            out.append(self.base.add(x, y))
        return self._trim(out)

    def _neg(self, a):
        return tuple(self.base.neg(c) for c in a)

    def _mul(self, a, b):
        if not a or not b:
            return ()
        zero = self.base.zero_payload()
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = self.base.add(out[i + j], self.base.mul(x, y))
        return self._trim(out)

    def _divmod_monic(self, a, m):
        """Division by a monic polynomial; valid over any commutative base."""
        a = list(a)
        d = len(m) - 1
        q = [self.base.zero_payload()] * max(len(a) - d, 0)
        while len(a) > d:
            c = a[-1]
            k = len(a) - 1 - d
            q[k] = c
            for t in range(d + 1):
                prod = self.base.mul(c, m[t])
                a[k + t] = self.base.add(a[k + t], self.base.neg(prod))
            while a and a[-1] == self.base.zero_payload():
                a.pop()
        return self._trim(q), self._trim(a)


@dataclass(frozen=True, repr=False)
class PolynomialRing(Ring, _PolyOps):
    """Univariate polynomials over a base ring; payload = coefficient tuple."""

    base: Ring
    declared_dim: int | None = None

    def normalize(self, payload):
        if not isinstance(payload, tuple):
            payload = self._coerce_coeffs(payload)
        return self._trim(tuple(self.base.normalize(c) for c in payload))

    def coerce_payload(self, raw):
        if isinstance(raw, Elem):
            return super().coerce_payload(raw)
        if isinstance(raw, (int, list, tuple)):
            return self._coerce_coeffs(raw)
        raise TypeError(f"polynomial payload expected, got {raw!r}")

    def add(self, a, b):
        return self._add(a, b)

    def neg(self, a):
        return self._neg(a)

    def mul(self, a, b):
        return self._mul(a, b)

    def zero_payload(self):
        return ()

    def from_int_payload(self, k):
        c = self.base.from_int_payload(k)
        return () if c == self.base.zero_payload() else (c,)

    def variable(self):
        return Elem(self, self._trim((self.base.zero_payload(), self.base.one_payload())))

    def try_inverse(self, a):
        if self.base.is_field:
            if len(a) == 1:
                inv = self.base.try_inverse(a[0])
                if inv is not None:
                    return (inv,)
            return None
        raise UndecidableError(f"unit test undecidable over {self}")

    def exact_divide(self, x, s):
        if not self.base.is_field:
            raise UndecidableError(f"exact division undecidable over {self}")
        if not s:
            return ((), False) if not x else None
        # make the divisor monic, divide, undo the scaling
        lead_inv = self.base.try_inverse(s[-1])
        if lead_inv is None:
            return None
        monic = tuple(self.base.mul(c, lead_inv) for c in s)
        q, r = self._divmod_monic(x, monic)
        if r:
            return None
        return tuple(self.base.mul(c, lead_inv) for c in q), True

    def poly_xgcd(self, a, b):
        """Extended gcd over a field base; gcd is monic (or zero)."""
        if not self.base.is_field:
            raise UndecidableError(f"gcd undecidable over {self}")
        r0, r1 = a, b
        x0, x1 = (self.base.one_payload(),), ()
        y0, y1 = (), (self.base.one_payload(),)
        while r1:
            lead_inv = self.base.try_inverse(r1[-1])
            monic = tuple(self.base.mul(c, lead_inv) for c in r1)
            q, rem = self._divmod_monic(r0, monic)
            q = tuple(self.base.mul(c, lead_inv) for c in q)
            r0, r1 = r1, rem
            x0, x1 = x1, self._add(x0, self._neg(self._mul(q, x1)))
            y0, y1 = y1, self._add(y0, self._neg(self._mul(q, y1)))
        if r0:
            lead_inv = self.base.try_inverse(r0[-1])
            r0 = tuple(self.base.mul(c, lead_inv) for c in r0)
            x0 = tuple(self.base.mul(c, lead_inv) for c in x0)
            y0 = tuple(self.base.mul(c, lead_inv) for c in y0)
        return r0, x0, y0

    def short_name(self):
        return f"{self.base.short_name()}[t]"


@dataclass(frozen=True, repr=False)
class PolynomialQuotientRing(Ring, _PolyOps):
    """base[t]/(m) for a monic modulus m; payload = reduced coefficient tuple."""

    base: Ring
    modulus: tuple
    declared_dim: int | None = None

    def __post_init__(self):
        mod = tuple(self.base.normalize(self.base.coerce_payload(c)) for c in self.modulus)
        if len(mod) < 2 or mod[-1] != self.base.one_payload():
            raise ValueError("modulus must be monic of degree >= 1")
        object.__setattr__(self, "modulus", mod)

    def normalize(self, payload):
        if not isinstance(payload, tuple):
            payload = self._coerce_coeffs(payload)
        payload = self._trim(tuple(self.base.normalize(c) for c in payload))
        _, r = self._divmod_monic(payload, self.modulus)
        return r

    def coerce_payload(self, raw):
        if isinstance(raw, Elem):
            return super().coerce_payload(raw)
        if isinstance(raw, (int, list, tuple)):
            return self._coerce_coeffs(raw)
        raise TypeError(f"polynomial payload expected, got {raw!r}")

    def add(self, a, b):
        return self._add(a, b)

    def neg(self, a):
        return self._neg(a)

    def mul(self, a, b):
        _, r = self._divmod_monic(self._mul(a, b), self.modulus)
        return r

    def zero_payload(self):
        return ()

    def from_int_payload(self, k):
        c = self.base.from_int_payload(k)
        payload = () if c == self.base.zero_payload() else (c,)
        return self.normalize(payload)

    def variable(self):
        return Elem(self, self.normalize((self.base.zero_payload(), self.base.one_payload())))

    @property
    def is_finite(self):
        return self.base.is_finite

    def size(self):
        b = self.base.size()
        return None if b is None else b ** (len(self.modulus) - 1)

    def elements(self):
        if not self.base.is_finite:
            raise UndecidableError(f"{self} is not enumerable")
        deg = len(self.modulus) - 1
        base_elems = [e.payload for e in self.base.elements()]
        for combo in itertools.product(base_elems, repeat=deg):
            yield Elem(self, self._trim(tuple(combo)))

    def short_name(self):
        return f"{self.base.short_name()}[t]/(m)"


@dataclass(frozen=True, repr=False)
class QuotientRing(Ring):
    """base/I with a canonical-representative normal form."""

    base: Ring
    ideal: "Ideal"
    declared_dim: int | None = None

    def __post_init__(self):
        if self.ideal.ring != self.base:
            raise RingMismatchError("quotient ideal must live over the base ring")

    @cached_property
    def _int_modulus(self):
        # Z/(g1,...,gk) == Z/(gcd); 0 means the quotient is Z itself.
        g = 0
        for gen in self.ideal.generators:
            g, _, _ = xgcd(g, gen.payload)
        return g

    @cached_property
    def _poly_modulus(self):
        g = ()
        for gen in self.ideal.generators:
            g, _, _ = self.base.poly_xgcd(g, gen.payload)
        return g

    @cached_property
    def _coset_reps(self):
        # finite base: map each base payload to the minimum of its coset
        members = [m.payload for m in self.ideal.members()]
        reps = {}
        for e in self.base.elements():
            coset = [self.base.add(e.payload, m) for m in members]
            reps[e.payload] = min(coset, key=payload_key)
        return reps

    def normalize(self, payload):
        payload = self.base.normalize(self.base.coerce_payload(payload))
        if isinstance(self.base, IntegerRing):
            g = self._int_modulus
            return payload % g if g else payload
        if isinstance(self.base, PolynomialRing) and self.base.base.is_field:
            g = self._poly_modulus
            if not g:
                return payload
            _, r = self.base._divmod_monic(payload, g)
            return r
        if self.base.is_finite:
            return self._coset_reps[payload]
        raise UndecidableError(f"no normal form for quotients of {self.base}")

    def coerce_payload(self, raw):
        if isinstance(raw, Elem):
            if raw.ring == self:
                return raw.payload
            if raw.ring == self.base:
                return raw.payload
            raise RingMismatchError(f"mixed rings: {self} vs {raw.ring}")
        return self.base.coerce_payload(raw)

    def add(self, a, b):
        return self.normalize(self.base.add(a, b))

    def neg(self, a):
        return self.normalize(self.base.neg(a))

    def mul(self, a, b):
        return self.normalize(self.base.mul(a, b))

    def zero_payload(self):
        return self.normalize(self.base.zero_payload())

    def from_int_payload(self, k):
        return self.normalize(self.base.from_int_payload(k))

    @property
    def is_finite(self):
        if self.base.is_finite:
            return True
        if isinstance(self.base, IntegerRing):
            return self._int_modulus != 0
        if isinstance(self.base, PolynomialRing) and self.base.base.is_field:
            return self.base.base.is_finite and bool(self._poly_modulus)
        return False

    def size(self):
        if not self.is_finite:
            return None
        return len(set(self._rep_list()))

    def _rep_list(self):
        if isinstance(self.base, IntegerRing):
            return list(range(self._int_modulus)) or [0]
        if isinstance(self.base, PolynomialRing):
            deg = len(self._poly_modulus) - 1
            base_elems = [e.payload for e in self.base.base.elements()]
            return [
                self.base._trim(tuple(c))
                for c in itertools.product(base_elems, repeat=deg)
            ] or [()]
        return sorted(set(self._coset_reps.values()), key=payload_key)

    def elements(self):
        if not self.is_finite:
            raise UndecidableError(f"{self} is not enumerable")
        seen = []
        for p in self._rep_list():
            if p not in seen:
                seen.append(p)
        for p in sorted(seen, key=payload_key):
            yield Elem(self, p)

    def lift(self, x):
        """Canonical preimage in the base ring (the representative itself)."""
        x = self.coerce_payload(x)
        return Elem(self.base, self.base.normalize(x))

    def reduce(self, x):
        """Image of a base element in the quotient."""
        if isinstance(x, Elem):
            if x.ring != self.base:
                raise RingMismatchError("reduce expects a base-ring element")
            x = x.payload
        return Elem(self, self.normalize(x))

    def try_inverse(self, a):
        if isinstance(self.base, IntegerRing):
            g = self._int_modulus
            if g == 0:
                return a if a in (1, -1) else None
            gg, x, _ = xgcd(a, g)
            return x % g if gg == 1 else None
        if self.is_finite:
            return super().try_inverse(a)
        raise UndecidableError(f"unit test undecidable over {self}")

    def short_name(self):
        return f"{self.base.short_name()}/I"


@dataclass(frozen=True, repr=False)
class FiberProductRing(Ring):
    """Pairs (u, v) from the base ring with u congruent to v modulo the ideal."""

    base: Ring
    ideal: "Ideal"
    declared_dim: int | None = None

    def __post_init__(self):
        if self.ideal.ring != self.base:
            raise RingMismatchError("fiber ideal must live over the base ring")

    def congruent(self, u, v):
        diff = Elem(self.base, self.base.add(u, self.base.neg(v)))
        return self.ideal.contains(diff)

    def normalize(self, payload):
        u, v = payload
        u = self.base.normalize(u)
        v = self.base.normalize(v)
        return (u, v)

    def coerce_payload(self, raw):
        if isinstance(raw, Elem):
            return super().coerce_payload(raw)
        if isinstance(raw, (tuple, list)) and len(raw) == 2:
            u = self.base.normalize(self.base.coerce_payload(raw[0]))
            v = self.base.normalize(self.base.coerce_payload(raw[1]))
            return (u, v)
        if isinstance(raw, int):
            p = self.base.from_int_payload(raw)
            return (p, p)
        raise TypeError(f"fiber payload expected, got {raw!r}")

    def elem(self, raw):
        payload = self.normalize(self.coerce_payload(raw))
        if not self.congruent(*payload):
            raise CongruenceError(
                f"components {payload[0]!r} and {payload[1]!r} differ modulo the ideal"
            )
        return Elem(self, payload)

    def add(self, a, b):
        return (self.base.add(a[0], b[0]), self.base.add(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), self.base.neg(a[1]))

    def mul(self, a, b):
        return (self.base.mul(a[0], b[0]), self.base.mul(a[1], b[1]))

    def zero_payload(self):
        z = self.base.zero_payload()
        return (z, z)

    def from_int_payload(self, k):
        p = self.base.from_int_payload(k)
        return (p, p)

    @property
    def is_finite(self):
        return self.base.is_finite

    def size(self):
        if not self.base.is_finite:
            return None
        return self.base.size() * len(self.ideal.members())

    def elements(self):
        if not self.base.is_finite:
            raise UndecidableError(f"{self} is not enumerable")
        members = [m.payload for m in self.ideal.members()]
        for e in self.base.elements():
            for d in members:
                yield Elem(self, (e.payload, self.base.add(e.payload, d)))

    def try_inverse(self, a):
        iu = self.base.try_inverse(a[0])
        if iu is None:
            return None
        iv = self.base.try_inverse(a[1])
        if iv is None:
            return None
        return (iu, iv)

    def exact_divide(self, x, s):
        if self.is_finite:
            return Ring.exact_divide(self, x, s)
        du = self.base.exact_divide(x[0], s[0])
        dv = self.base.exact_divide(x[1], s[1])
        if du is None or dv is None:
            return None
        (qu, uu), (qv, uv) = du, dv
        if not self.congruent(qu, qv):
            return None
        return (qu, qv), uu and uv

    def project(self, x, which):
        """First (which=1) or second (which=2) component, in the base ring."""
        if which not in (1, 2):
            raise ValueError("which must be 1 or 2")
        x = self.coerce_payload(x)
        return Elem(self.base, x[0] if which == 1 else x[1])

    def short_name(self):
        return f"{self.base.short_name()}^(2,I)"


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal, carried as its generator list."""

    ring: Ring
    generators: tuple

    def __post_init__(self):
        gens = tuple(
            g if isinstance(g, Elem) and g.ring == self.ring else self.ring.elem(g)
            for g in self.generators
        )
        if not gens:
            raise ValueError("ideal needs at least one generator")
        object.__setattr__(self, "generators", gens)

    @cached_property
    def _euclidean_data(self):
        """(g, coeffs) with g = sum coeffs[i]*gen[i], for Z and F_p[t]."""
        ring = self.ring
        if isinstance(ring, IntegerRing):
            g, coeffs = 0, []
            for gen in self.generators:
                g2, u, v = xgcd(g, gen.payload)
                coeffs = [c * u for c in coeffs] + [v]
                g = g2
            return g, coeffs
        if isinstance(ring, PolynomialRing) and ring.base.is_field:
            g, coeffs = (), []
            for gen in self.generators:
                g2, u, v = ring.poly_xgcd(g, gen.payload)
                coeffs = [ring._mul(c, u) for c in coeffs] + [v]
                g = g2
            return g, coeffs
        return None

    @cached_property
    def _finite_table(self):
        """payload -> coefficient payload tuple, for finite rings."""
        ring = self.ring
        table = {ring.zero_payload(): ()}
        elems = [e.payload for e in ring.elements()]
        for gen in self.generators:
            new = {}
            for val, coeffs in table.items():
                for c in elems:
                    v = ring.add(val, ring.mul(c, gen.payload))
                    if v not in new:
                        new[v] = coeffs + (c,)
            table = new
        return table

    def members(self):
        """All elements of the ideal (finite rings only), in canonical order."""
        if not self.ring.is_finite:
            raise UndecidableError(f"cannot enumerate an ideal over {self.ring}")
        return [Elem(self.ring, p) for p in sorted(self._finite_table, key=payload_key)]

    def contains(self, x):
        x = self.ring.elem(x)
        return self.express(x) is not None

    def express(self, x):
        """Coefficients c with x = sum c_i * g_i, or None if x is not a member."""
        x = self.ring.elem(x)
        ring = self.ring
        if ring.is_finite:
            coeffs = self._finite_table.get(x.payload)
            if coeffs is None:
                return None
            return [Elem(ring, c) for c in coeffs]
        if isinstance(ring, FiberProductRing) and isinstance(ring.base, IntegerRing):
            return self._express_fiber_integer(x)
        data = self._euclidean_data
        if data is None:
            raise UndecidableError(f"ideal membership undecidable over {ring}")
        g, coeffs = data
        if isinstance(ring, IntegerRing):
            if g == 0:
                if x.payload != 0:
                    return None
                return [ring.zero() for _ in self.generators]
            if x.payload % g:
                return None
            q = x.payload // g
            return [Elem(ring, q * c) for c in coeffs]
        # polynomial ring over a field
        if not g:
            if x.payload:
                return None
            return [ring.zero() for _ in self.generators]
        d = ring.exact_divide(x.payload, g)
        if d is None:
            return None
        q = d[0]
        return [Elem(ring, ring._mul(q, c)) for c in coeffs]

    def _express_fiber_integer(self, x):
        """express over Z x_(Z/q) Z via a two-row Hermite reduction.

        A combination sum (c_k, d_k)*(u_k, v_k) with d_k = c_k (mod q) hits
        (x_u, x_v) exactly when (x_u, x_v) lies in the subgroup of Z^2
        generated by the pairs (u_k, v_k) and (0, q*v_k); the reduction keeps
        coefficient vectors so the witness comes out with the decision.
        """
        ring = self.ring
        q = 0
        for g in ring.ideal.generators:
            q = xgcd(q, g.payload)[0]
        m = len(self.generators)
        cols = [(g.payload[0], g.payload[1]) for g in self.generators]
        cols += [(0, q * g.payload[1]) for g in self.generators]
        unit = lambda k: tuple(1 if t == k else 0 for t in range(2 * m))

        def combine(s, vec_a, t, vec_b):
            return tuple(s * a + t * b for a, b in zip(vec_a, vec_b))

        pivot = (0, 0, tuple(0 for _ in range(2 * m)))
        tail = []
        for k, (p, r) in enumerate(cols):
            if p == 0:
                tail.append((r, unit(k)))
                continue
            g, alpha, beta = xgcd(pivot[0], p)
            residual_r = (p // g) * pivot[1] - (pivot[0] // g) * r
            residual_vec = combine(p // g, pivot[2], -(pivot[0] // g), unit(k))
            pivot = (g, alpha * pivot[1] + beta * r, combine(alpha, pivot[2], beta, unit(k)))
            if residual_r:
                tail.append((residual_r, residual_vec))
        d = 0
        d_vec = tuple(0 for _ in range(2 * m))
        for r, vec in tail:
            g, alpha, beta = xgcd(d, r)
            d_vec = combine(alpha, d_vec, beta, vec)
            d = g
        x_u, x_v = x.payload
        if pivot[0]:
            if x_u % pivot[0]:
                return None
            s = x_u // pivot[0]
        elif x_u:
            return None
        else:
            s = 0
        rem = x_v - s * pivot[1]
        if d:
            if rem % d:
                return None
            t = rem // d
        elif rem:
            return None
        else:
            t = 0
        coeffs = combine(s, pivot[2], t, d_vec)
        return [ring.elem((coeffs[k], coeffs[k] + q * coeffs[m + k])) for k in range(m)]

    def square(self):
        """The ideal generated by all pairwise products of the generators."""
        gens = []
        n = len(self.generators)
        for i in range(n):
            for j in range(i, n):
                gens.append(self.generators[i] * self.generators[j])
        return Ideal(self.ring, tuple(gens))

    def express_as_products(self, x):
        """Write x in I^2 as sum a_t*b_t with a_t, b_t in I, or None.

        Coefficient c on the product generator g_i*g_j becomes the pair
        (c*g_i, g_j); both factors are ideal members.
        """
        sq = self.square()
        coeffs = sq.express(x)
        if coeffs is None:
            return None
        pairs = []
        k = 0
        n = len(self.generators)
        for i in range(n):
            for j in range(i, n):
                c = coeffs[k]
                k += 1
                if not c.is_zero():
                    pairs.append((c * self.generators[i], self.generators[j]))
        return pairs

    def __repr__(self):
        gens = ", ".join(repr(g.payload) for g in self.generators)
        return f"Ideal({self.ring.short_name()}; {gens})"


# -- convenience constructors ------------------------------------------------

def Zring(dim=1):
    return IntegerRing(declared_dim=dim)


def Zmod(n, dim=0):
    return ModularRing(n, declared_dim=dim)


def Fp(p, dim=0):
    return PrimeField(p, declared_dim=dim)


def poly_ring(base, dim=None):
    return PolynomialRing(base, declared_dim=dim)


def poly_quot(base, modulus, dim=None):
    return PolynomialQuotientRing(base, tuple(modulus), declared_dim=dim)


def quotient(base, gens, dim=None):
    return QuotientRing(base, Ideal(base, tuple(gens)), declared_dim=dim)


def fiber(base, gens, dim=None):
    return FiberProductRing(base, Ideal(base, tuple(gens)), declared_dim=dim)


def fiber_lift(u, v, ideal):
    """Pair two congruent base elements into the fiber product ring."""
    ring = FiberProductRing(ideal.ring, ideal)
    u = ideal.ring.elem(u)
    v = ideal.ring.elem(v)
    return ring.elem((u.payload, v.payload))


# -- presentation of the fiber product as a polynomial quotient ---------------

@dataclass(frozen=True)
class PresentationReport:
    """Result of checking A[X]/(X^2 - s^2 X) -> A x_{A/s^2} A, a+bX -> (a+b*s^2, a)."""

    is_homomorphism: bool
    is_surjective: bool | None
    is_injective: bool
    domain_size: int | None
    codomain_size: int | None
    pairs_checked: int
    exhaustive: bool
    failures: tuple = ()


def polynomial_presentation_check(ring, s, sample_bound=12, pair_limit=1_200_000):
    """Check the quotient-by-(X^2 - s^2 X) presentation of the fiber product.

    For finite rings the element scan is exhaustive and the multiplicativity
    check covers all pairs up to pair_limit; over the integers a symmetric
    coefficient box [-sample_bound, sample_bound] is sampled instead.
    """
    s = ring.elem(s)
    s2 = s * s
    ideal = Ideal(ring, (s2,))
    fib = FiberProductRing(ring, ideal)
    # modulus X^2 - s^2 X has coefficients (0, -s^2, 1)
    dom = PolynomialQuotientRing(ring, (ring.zero_payload(), (-s2).payload, ring.one_payload()))

    def phi(p):
        # p is a domain payload: () or (a,) or (a, b)
        a = p[0] if len(p) >= 1 else ring.zero_payload()
        b = p[1] if len(p) >= 2 else ring.zero_payload()
        u = ring.add(a, ring.mul(b, s2.payload))
        return (u, a)

    failures = []
    if ring.is_finite:
        domain = [e.payload for e in dom.elements()]
        domain_size = len(domain)
        codomain_size = fib.size()
        exhaustive = True
    else:
        box = range(-sample_bound, sample_bound + 1)
        domain = [dom.normalize((ring.from_int_payload(a), ring.from_int_payload(b)))
                  for a in box for b in box]
        domain = list(dict.fromkeys(domain))
        domain_size = None
        codomain_size = None
        exhaustive = False

    images = [phi(p) for p in domain]
    for img in images:
        if not fib.congruent(*img):
            failures.append("image not congruent")
            break

    # injectivity on the scanned domain
    is_injective = len(set(images)) == len(images)

    # surjectivity only decidable on finite rings
    if ring.is_finite:
        target = {e.payload for e in fib.elements()}
        is_surjective = set(images) == target
    else:
        is_surjective = None

    # homomorphism: unit, additivity and multiplicativity over the pair grid
    is_hom = phi(dom.one_payload()) == fib.one_payload()
    pairs_checked = 0
    n = len(domain)
    if n * n <= pair_limit:
        pair_iter = ((p, q) for p in domain for q in domain)
    else:
        stride = max(1, (n * n) // pair_limit)
        pair_iter = (
            (domain[i], domain[j])
            for k, (i, j) in enumerate(itertools.product(range(n), range(n)))
            if k % stride == 0
        )
    for p, q in pair_iter:
        pairs_checked += 1
        lhs = phi(dom.add(p, q))
        rhs = fib.add(phi(p), phi(q))
        if lhs != rhs:
            is_hom = False
            failures.append(f"additivity fails at {p!r}, {q!r}")
            break
        lhs = phi(dom.mul(p, q))
        rhs = fib.mul(phi(p), phi(q))
        if lhs != rhs:
            is_hom = False
            failures.append(f"multiplicativity fails at {p!r}, {q!r}")
            break

    return PresentationReport(
        is_homomorphism=is_hom,
        is_surjective=is_surjective,
        is_injective=is_injective,
        domain_size=domain_size,
        codomain_size=codomain_size,
        pairs_checked=pairs_checked,
        exhaustive=exhaustive,
        failures=tuple(failures),
    )


# -- JSON wire format ---------------------------------------------------------

def ring_to_json(ring):
    if isinstance(ring, IntegerRing):
        d = {"type": "Z"}
    elif isinstance(ring, PrimeField):
        d = {"type": "Fp", "p": ring.n}
    elif isinstance(ring, ModularRing):
        d = {"type": "Zmod", "n": ring.n}
    elif isinstance(ring, PolynomialQuotientRing):
        d = {
            "type": "PolyQuot",
            "base": ring_to_json(ring.base),
            "modulus": [elem_to_json(Elem(ring.base, c)) for c in ring.modulus],
        }
    elif isinstance(ring, PolynomialRing):
        d = {"type": "Poly", "base": ring_to_json(ring.base)}
    elif isinstance(ring, QuotientRing):
        d = {
            "type": "Quot",
            "base": ring_to_json(ring.base),
            "ideal": [elem_to_json(g) for g in ring.ideal.generators],
        }
    elif isinstance(ring, FiberProductRing):
        d = {
            "type": "Fiber",
            "base": ring_to_json(ring.base),
            "ideal": [elem_to_json(g) for g in ring.ideal.generators],
        }
    else:
        raise TypeError(f"cannot serialize ring {ring!r}")
    if ring.declared_dim is not None:
        d["dim"] = ring.declared_dim
    return d


def ring_from_json(d):
    if not isinstance(d, dict) or "type" not in d:
        raise ValueError("ring descriptor must be an object with a 'type' field")
    t = d["type"]
    dim = d.get("dim")
    if t == "Z":
        return IntegerRing(declared_dim=dim if dim is not None else 1)
    if t == "Zmod":
        return ModularRing(int(d["n"]), declared_dim=dim if dim is not None else 0)
    if t == "Fp":
        return PrimeField(int(d["p"]), declared_dim=dim if dim is not None else 0)
    if t == "Poly":
        return PolynomialRing(ring_from_json(d["base"]), declared_dim=dim)
    if t == "PolyQuot":
        base = ring_from_json(d["base"])
        modulus = tuple(elem_from_json(base, c).payload for c in d["modulus"])
        return PolynomialQuotientRing(base, modulus, declared_dim=dim)
    if t == "Quot":
        base = ring_from_json(d["base"])
        gens = tuple(elem_from_json(base, g) for g in d["ideal"])
        return QuotientRing(base, Ideal(base, gens), declared_dim=dim)
    if t == "Fiber":
        base = ring_from_json(d["base"])
        gens = tuple(elem_from_json(base, g) for g in d["ideal"])
        return FiberProductRing(base, Ideal(base, gens), declared_dim=dim)
    raise ValueError(f"unknown ring type {t!r}")


def elem_to_json(x):
    p = x.payload
    ring = x.ring
    if isinstance(ring, FiberProductRing):
        return [elem_to_json(Elem(ring.base, p[0])), elem_to_json(Elem(ring.base, p[1]))]
    if isinstance(ring, (PolynomialRing, PolynomialQuotientRing)):
        return [elem_to_json(Elem(ring.base, c)) for c in p]
    if isinstance(ring, QuotientRing):
        return elem_to_json(Elem(ring.base, p))
    return p


def elem_from_json(ring, d):
    if isinstance(ring, FiberProductRing):
        if not isinstance(d, list) or len(d) != 2:
            raise ValueError("fiber element must be a two-element array")
        u = elem_from_json(ring.base, d[0])
        v = elem_from_json(ring.base, d[1])
        return ring.elem((u.payload, v.payload))
    if isinstance(ring, (PolynomialRing, PolynomialQuotientRing)):
        if isinstance(d, int):
            return ring.elem(d)
        if not isinstance(d, list):
            raise ValueError("polynomial element must be a coefficient array")
        coeffs = tuple(elem_from_json(ring.base, c).payload for c in d)
        return ring.elem(coeffs)
    if isinstance(ring, QuotientRing):
        return ring.elem(elem_from_json(ring.base, d).payload)
    if not isinstance(d, int):
        raise ValueError(f"integer element expected, got {d!r}")
    return ring.elem(d)
