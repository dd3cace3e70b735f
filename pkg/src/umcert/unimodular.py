"""Unimodular rows with witnesses, completion oracles, orbits, nil lifting.

A row v is unimodular when its entries generate the unit ideal; the witness w
with sum v_i*w_i = 1 is carried alongside.  Completion searches return words
that are always verified against the row before being handed out, and a depth
cutoff is reported as Inconclusive -- distinct from NoCompletionError, which
is only raised when the finite orbit has been exhausted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .elemgroup import Letter, Word, whitehead
from .linalg import RowVector, row_act, mat_vec, unit_row
from .rings import (
    Elem,
    FiberProductRing,
    Ideal,
    IntegerRing,
    NonUnitError,
    QuotientRing,
    RingMismatchError,
    SizeGuardError,
    payload_key,
)


class Inconclusive(RuntimeError):
    """A bounded search ran out of budget without an answer."""

    def __init__(self, stage, detail=""):
        super().__init__(f"inconclusive at {stage}" + (f": {detail}" if detail else ""))
        self.stage = stage
        self.detail = detail


class NoCompletionError(ValueError):
    """The full orbit was enumerated and the target is not in it."""


class NilpotencyError(ValueError):
    """An ideal generator failed the bounded nilpotency check."""


class VerificationError(ValueError):
    """A supplied certificate failed re-verification."""


@dataclass(frozen=True)
class NonUnimodular:
    """Typed negative result from verify_um."""

    vector: RowVector
    reason: str


@dataclass(frozen=True)
class UmVector:
    """A unimodular row plus a verified witness (and optional relative tags)."""

    vector: RowVector
    witness: RowVector
    relative: tuple | None = None  # (Ideal, "um" | "um1")

    def __post_init__(self):
        if not self.vector.dot(self.witness).is_one():
            raise VerificationError("witness does not pair to 1")

    @property
    def ring(self):
        return self.vector.ring

    def __len__(self):
        return len(self.vector)


def verify_um(row, relative=None, mode="um"):
    """Check unimodularity (and optional relative membership) of a row.

    Returns an UmVector on success and a NonUnimodular result otherwise.
    relative is an Ideal; mode "um1" asks only v1 in 1+I, mode "um" also
    asks v_i in I for i >= 2.
    """
    ring = row.ring
    ideal = Ideal(ring, row.entries)
    coeffs = ideal.express(ring.one())
    if coeffs is None:
        return NonUnimodular(row, "entries do not generate the unit ideal")
    witness = RowVector(ring, tuple(coeffs))
    tag = None
    if relative is not None:
        if mode not in ("um", "um1"):
            raise ValueError(f"unknown relative mode {mode!r}")
        if not relative.contains(row.entries[0] - ring.one()):
            return NonUnimodular(row, "first entry not congruent to 1 modulo the ideal")
        if mode == "um":
            for k, e in enumerate(row.entries[1:], start=2):
                if not relative.contains(e):
                    return NonUnimodular(row, f"entry {k} outside the ideal")
        tag = (relative, mode)
    return UmVector(row, witness, tag)


def apply_word_to_um(um, word):
    """Transport a unimodular row (and its witness) along a word."""
    m = word.evaluate()
    new_vec = row_act(um.vector, m)
    new_wit = mat_vec(word.inverse().evaluate(), um.witness)
    return UmVector(new_vec, new_wit, None)


# -- completion oracles ---------------------------------------------------------

@dataclass(frozen=True)
class FiniteBFS:
    """Bidirectional breadth-first search over a finite ring.

    depth bounds the total word length; entries, when given, restricts the
    generator entries used for moves; variants caps how many distinct
    completions iter_completions will yield.
    """

    depth: int = 8
    entries: tuple | None = None
    variants: int = 32


@dataclass(frozen=True)
class EuclideanGcd:
    """Division-chain reduction for integer rows (and unit-ideal fiber pairs)."""


_TABLE_CACHE = {}
_TABLE_CAP = 256


class _RingTables:
    """Interned finite-ring arithmetic: payloads become small ints."""

    def __init__(self, ring):
        size = ring.size()
        if size is None or size > _TABLE_CAP:
            raise SizeGuardError(f"ring too large for table-driven search ({size})")
        self.ring = ring
        self.elems = list(ring.elements())
        self.index = {e.payload: k for k, e in enumerate(self.elems)}
        m = len(self.elems)
        self.add = [[0] * m for _ in range(m)]
        self.mul = [[0] * m for _ in range(m)]
        self.neg = [0] * m
        for a in range(m):
            pa = self.elems[a].payload
            self.neg[a] = self.index[ring.neg(pa)]
            for b in range(m):
                pb = self.elems[b].payload
                self.add[a][b] = self.index[ring.add(pa, pb)]
                self.mul[a][b] = self.index[ring.mul(pa, pb)]
        self.zero = self.index[ring.zero_payload()]
        self.one = self.index[ring.one_payload()]
        # for each x: the distinct nonzero products x*g, with a canonical g each
        self.deltas = []
        self.delta_gen = []
        for a in range(m):
            seen = {}
            for g in range(m):
                d = self.mul[a][g]
                if d != self.zero and d not in seen:
                    seen[d] = g
            order = sorted(seen)
            self.deltas.append(order)
            self.delta_gen.append([seen[d] for d in order])


def _tables_for(ring):
    t = _TABLE_CACHE.get(ring)
    if t is None:
        t = _RingTables(ring)
        _TABLE_CACHE[ring] = t
    return t


def _bfs_completions(um, oracle):
    """Yield verified words moving the row to e1, shortest combined depth first."""
    ring = um.ring
    n = len(um)
    t = _tables_for(ring)
    allowed = None
    if oracle.entries is not None:
        allowed = {t.index[ring.elem(e).payload] for e in oracle.entries}
    start = tuple(t.index[e.payload] for e in um.vector.entries)
    target = tuple(t.one if k == 0 else t.zero for k in range(n))

    positions = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]

    def expand(state):
        for (i, j) in positions:
            vi = state[i - 1]
            vj = state[j - 1]
            deltas = t.deltas[vi]
            gens = t.delta_gen[vi]
            for d, g in zip(deltas, gens):
                if allowed is not None and g not in allowed:
                    continue
                new = state[:j - 1] + (t.add[vj][d],) + state[j:]
                yield (i, j, g), new

    def build_word(fw_path, bw_path):
        letters = [Letter(i, j, t.elems[g]) for (i, j, g) in fw_path]
        for (i, j, g) in reversed(bw_path):
            letters.append(Letter(i, j, t.elems[t.neg[g]]))
        return Word(ring, n, tuple(letters))

    emitted = 0

    def check_and_build(fw_path, bw_path):
        word = build_word(fw_path, bw_path)
        final = row_act(um.vector, word.evaluate())
        if final.payloads() != unit_row(ring, n).payloads():
            raise AssertionError("search produced an unverified completion")
        return word

    if start == target:
        yield Word(ring, n, ())
        emitted += 1
        if emitted >= oracle.variants:
            return

    fw = {start: ()}
    bw = {target: ()}
    fw_frontier = [start]
    bw_frontier = [target]
    used_depth = 0
    seen_words = set()

    while used_depth < oracle.depth:
        if not fw_frontier and not bw_frontier:
            raise NoCompletionError("orbit exhausted without reaching e1")
        # expand the smaller live frontier
        if fw_frontier and (not bw_frontier or len(fw_frontier) <= len(bw_frontier)):
            frontier, table, other = fw_frontier, fw, bw
            forward = True
        else:
            frontier, table, other = bw_frontier, bw, fw
            forward = False
        used_depth += 1
        new_frontier = []
        for state in frontier:
            path = table[state]
            for move, nxt in expand(state):
                if nxt in table:
                    continue
                table[nxt] = path + (move,)
                new_frontier.append(nxt)
                if nxt in other:
                    fw_path = table[nxt] if forward else other[nxt]
                    bw_path = other[nxt] if forward else table[nxt]
                    key = (fw_path, bw_path)
                    if key in seen_words:
                        continue
                    seen_words.add(key)
                    yield check_and_build(fw_path, bw_path)
                    emitted += 1
                    if emitted >= oracle.variants:
                        return
        if forward:
            fw_frontier = new_frontier
        else:
            bw_frontier = new_frontier
    if emitted == 0:
        if not fw_frontier and not bw_frontier:
            raise NoCompletionError("orbit exhausted without reaching e1")
        raise Inconclusive("complete", f"depth {oracle.depth} exhausted")


def _euclid_letters_integers(values):
    """Elementary moves reducing an integer unimodular row to e1 (as index/int ops)."""
    v = list(values)
    n = len(v)
    moves = []

    def apply(i, j, g):
        moves.append((i, j, g))
        v[j - 1] += v[i - 1] * g

    while True:
        nonzero = [(abs(x), idx + 1) for idx, x in enumerate(v) if x != 0]
        if not nonzero:
            raise NoCompletionError("zero row cannot be completed")
        if len(nonzero) == 1:
            break
        _, pivot = min(nonzero)
        pval = v[pivot - 1]
        for idx in range(1, n + 1):
            if idx == pivot or v[idx - 1] == 0:
                continue
            q = v[idx - 1] // pval
            if q:
                apply(pivot, idx, -q)
        # loop: remainders shrink until one slot remains
    idx0 = next(idx + 1 for idx, x in enumerate(v) if x != 0)
    u = v[idx0 - 1]
    if u not in (1, -1):
        raise NoCompletionError(f"gcd of the row is {abs(u)}, not 1")
    if idx0 != 1:
        apply(idx0, 1, u)       # slot 1 becomes u*u = 1
        apply(1, idx0, -u)      # clear the old slot
    elif u == -1:
        if n >= 2:
            apply(1, 2, -2)     # (-1, 0, ...) -> (-1, 2, ...)
            apply(2, 1, 1)      # -> (1, 2, ...)
            apply(1, 2, -2)     # -> (1, 0, ...)
        else:
            raise NoCompletionError("cannot fix a unit at n = 1 with elementary moves")
    return moves


def _euclid_completion(um):
    ring = um.ring
    n = len(um)
    if isinstance(ring, IntegerRing):
        moves = _euclid_letters_integers([e.payload for e in um.vector.entries])
        letters = tuple(Letter(i, j, ring.elem(g)) for (i, j, g) in moves)
        return Word(ring, n, letters)
    if isinstance(ring, FiberProductRing) and isinstance(ring.base, IntegerRing):
        if not ring.ideal.contains(ring.base.one()):
            raise SizeGuardError(
                "gcd strategy on fiber rings needs the unit ideal (independent components)"
            )
        first = _euclid_letters_integers([e.payload[0] for e in um.vector.entries])
        # the first-component moves used entries (g, 0); replay them to see the
        # second components they produced, then finish that side with (0, h)
        letters = [Letter(i, j, ring.elem((g, 0))) for (i, j, g) in first]
        partial = row_act(um.vector, Word(ring, n, tuple(letters)).evaluate())
        second = _euclid_letters_integers([e.payload[1] for e in partial.entries])
        letters.extend(Letter(i, j, ring.elem((0, g))) for (i, j, g) in second)
        return Word(ring, n, tuple(letters))
    raise SizeGuardError(f"gcd strategy does not apply over {ring}")


def iter_completions(um, oracle):
    """Yield verified completion words for the row, per the oracle's strategy."""
    if isinstance(oracle, EuclideanGcd):
        word = _euclid_completion(um)
        final = row_act(um.vector, word.evaluate())
        if final.payloads() != unit_row(um.ring, len(um)).payloads():
            raise AssertionError("gcd reduction failed verification")
        yield word
        return
    if isinstance(oracle, FiniteBFS):
        yield from _bfs_completions(um, oracle)
        return
    raise TypeError(f"unknown oracle {oracle!r}")


def complete(um, oracle):
    """First completion word from the oracle (verified), or a typed failure."""
    for word in iter_completions(um, oracle):
        return word
    raise Inconclusive("complete", "oracle yielded no completion")


# -- orbit enumeration ----------------------------------------------------------

@dataclass(frozen=True)
class OrbitReport:
    """Partition of Um_n(R) under right multiplication by elementary moves."""

    ring: object
    n: int
    orbits: tuple  # tuple of tuples of payload tuples, canonically ordered
    relative: object = None

    @property
    def sizes(self):
        return tuple(len(o) for o in self.orbits)

    def orbit_of(self, payloads):
        for k, orb in enumerate(self.orbits):
            if payloads in orb:
                return k
        return None


def orbit(ring, n, relative=None, guard=200_000):
    """Enumerate Um_n(ring) and partition it by elementary moves.

    relative, when given, is an Ideal: moves are restricted to entries from it
    and the rows themselves to the relative Um class (first entry 1 mod I,
    others in I).
    """
    size = ring.size()
    if size is None:
        raise SizeGuardError("orbit enumeration needs a finite ring")
    if size**n > guard:
        raise SizeGuardError(f"|R|^n = {size**n} exceeds the guard {guard}")
    t = _tables_for(ring)
    m = len(t.elems)

    if relative is not None:
        member_idx = sorted(t.index[e.payload] for e in relative.members())
        member_set = set(member_idx)
        entry_pool = [g for g in member_idx if g != t.zero]
    else:
        entry_pool = [g for g in range(m) if g != t.zero]

    def is_relative(state):
        if relative is None:
            return True
        first_ok = t.add[state[0]][t.neg[t.one]] in member_set
        return first_ok and all(x in member_set for x in state[1:])

    # collect the ground set
    rows = []
    for combo in itertools.product(range(m), repeat=n):
        if not is_relative(combo):
            continue
        row = RowVector(ring, tuple(t.elems[k] for k in combo))
        if isinstance(verify_um(row), UmVector):
            rows.append(combo)
    rows.sort()
    ground = set(rows)

    positions = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    seen = set()
    orbits = []
    for row in rows:
        if row in seen:
            continue
        comp = []
        frontier = [row]
        seen.add(row)
        while frontier:
            state = frontier.pop()
            comp.append(state)
            for (i, j) in positions:
                vi = state[i - 1]
                vj = state[j - 1]
                for g in entry_pool:
                    d = t.mul[vi][g]
                    if d == t.zero:
                        continue
                    nxt = state[: j - 1] + (t.add[vj][d],) + state[j:]
                    if nxt in seen:
                        continue
                    if nxt not in ground:
                        # moves stay inside the class; reaching outside means the
                        # ground set was mis-enumerated
                        raise AssertionError("elementary move left the ground set")
                    seen.add(nxt)
                    frontier.append(nxt)
        comp_payloads = tuple(
            sorted((tuple(t.elems[k].payload for k in state) for state in comp), key=payload_key)
        )
        orbits.append(comp_payloads)
    return OrbitReport(ring, n, tuple(orbits), relative)


# -- lifting along a nilpotent ideal ---------------------------------------------

def nil_lift_row(um, nil_ideal, quotient_word, power_bound=64):
    """Lift a completion over A/N to one over A when N is nilpotent.

    The generators' nilpotency is certified by repeated squaring up to
    power_bound.  The quotient word's letters lift by their canonical
    representatives; the leftover first entry is a unit 1 + nilpotent and is
    cleared by row moves plus a Whitehead word.
    """
    ring = um.ring
    n = len(um)
    for g in nil_ideal.generators:
        x = g
        exponent = 1
        while exponent < power_bound and not x.is_zero():
            x = x * x
            exponent *= 2
        if not x.is_zero():
            raise NilpotencyError(f"{g!r}^{exponent} != 0 (bound {power_bound})")
    q_ring = quotient_word.ring
    if not isinstance(q_ring, QuotientRing) or q_ring.base != ring or q_ring.ideal != nil_ideal:
        raise RingMismatchError("quotient word must live over base/N")
    reduced = RowVector(q_ring, tuple(q_ring.reduce(e).payload for e in um.vector.entries))
    final_bar = row_act(reduced, quotient_word.evaluate())
    if final_bar.payloads() != unit_row(q_ring, n).payloads():
        raise VerificationError("quotient word does not complete the reduced row")

    letters = [
        Letter(l.i, l.j, Elem(ring, ring.normalize(l.a.payload)), l.inv)
        for l in quotient_word.letters
    ]
    lifted = Word(ring, n, tuple(letters))
    moved = row_act(um.vector, lifted.evaluate())
    b = moved.entries[0]
    b_inv_payload = ring.try_inverse(b.payload)
    if b_inv_payload is None:
        raise NonUnitError("lifted first entry is not a unit; nilpotency bound too small?")
    b_inv = Elem(ring, b_inv_payload)
    cleanup = []
    for idx in range(2, n + 1):
        e = moved.entries[idx - 1]
        if not e.is_zero():
            cleanup.append(Letter(1, idx, -(b_inv * e)))
    word = lifted + Word(ring, n, tuple(cleanup))
    if not b.is_one():
        if n < 2:
            raise NoCompletionError("cannot normalize a non-trivial unit at n = 1")
        word = word + whitehead(b_inv, n, (1, 2))
    final = row_act(um.vector, word.evaluate())
    if final.payloads() != unit_row(ring, n).payloads():
        raise VerificationError("lifted word failed final verification")
    return word
