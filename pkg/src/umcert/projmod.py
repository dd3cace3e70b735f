"""Projective modules as idempotent presentations, and completion over A + P.

A module P is carried as an idempotent matrix e: elements are ambient rows q
with q*e = q, functionals are ambient columns f with e*f = f, and the pairing
is the dot product.  Diagonal pairing data (s, p_i, phi_i) turns row-level
completion certificates into automorphism words of A + P built from the two
generator shapes Delta (add a*phi(q) to the unit coordinate) and Gamma (add
b*m to the module coordinate); the end-to-end pipeline reduces modulo s^2,
lifts, normalizes, extracts coefficients, completes the coefficient row, and
re-verifies the assembled word by full evaluation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .elemgroup import FirstRowCol, Word, classify
from .fiberpatch import RelativeCompletion, StageRecord, complete_relative_row
from .linalg import Matrix, RowVector, ShapeError, mat_vec, row_act, unit_row
from .rings import Elem, Ideal, QuotientRing, RingMismatchError, SizeGuardError
from .unimodular import (
    Inconclusive,
    NoCompletionError,
    VerificationError,
    _tables_for,
)


class DivisibilityError(ValueError):
    """A first-row entry was not divisible by the pairing scalar."""


class LetterClassError(ValueError):
    """A letter fell outside the first-row/first-column shape."""


@dataclass(frozen=True)
class ProjPresentation:
    """A projective module presented by an idempotent matrix."""

    ring: object
    e: Matrix

    def __post_init__(self):
        if self.e.ring != self.ring:
            raise RingMismatchError("idempotent must live over the presentation ring")
        if self.e.rows != self.e.cols:
            raise ShapeError("idempotent must be square")
        if self.e @ self.e != self.e:
            raise VerificationError("presentation matrix is not idempotent")

    @property
    def n(self):
        return self.e.rows

    def is_member(self, q):
        return row_act(q, self.e) == q

    def is_functional(self, f):
        return mat_vec(self.e, f) == f

    def member_project(self, q):
        """The canonical retraction of an ambient row onto the module."""
        return row_act(q, self.e)

    def functional_project(self, f):
        return mat_vec(self.e, f)

    def pairing(self, q, f):
        return q.dot(f)

    def row(self, k):
        return self.e.row(k)

    def column(self, k):
        return RowVector(self.ring, self.e.col(k))


@dataclass(frozen=True)
class LindelData:
    """Diagonal pairing data: phi_i(p_j) = s on the diagonal, 0 off it."""

    scalar: Elem
    elements: tuple       # p_1..p_r, module members
    functionals: tuple    # phi_1..phi_r, module functionals

    def __post_init__(self):
        if len(self.elements) != len(self.functionals):
            raise ShapeError("need as many functionals as elements")

    @property
    def rank(self):
        return len(self.elements)


@dataclass(frozen=True)
class LindelReport:
    """Clause-by-clause verification of pairing data against a presentation.

    pairing_diagonal and spans_scaled_module gate the pipeline, as does
    regular_mod_nilradical when decidable; the remaining flags are
    informational (None = not decided at this scale).
    """

    pairing_diagonal: bool
    spans_scaled_module: bool
    span_coefficients: tuple | None
    regular_mod_nilradical: bool | None
    scalar_nonzero: bool | None
    annihilator_stable: bool | None
    localized_free: bool | None
    details: tuple

    @property
    def passed(self):
        gates = (self.pairing_diagonal, self.spans_scaled_module, self.regular_mod_nilradical)
        return all(g is not False for g in gates)


def verify_lindel(pres, data):
    """Check the pairing-data clauses against the presentation; never raises."""
    ring = pres.ring
    s = data.scalar
    details = []

    for p in data.elements:
        if not pres.is_member(p):
            details.append(f"element {p.payloads()!r} is not fixed by the idempotent")
    for f in data.functionals:
        if not pres.is_functional(f):
            details.append(f"functional {f.payloads()!r} is not fixed by the idempotent")
    membership_ok = not details

    pairing_ok = membership_ok
    if membership_ok:
        for i, f in enumerate(data.functionals, start=1):
            for j, p in enumerate(data.elements, start=1):
                want = s if i == j else ring.zero()
                got = pres.pairing(p, f)
                if got != want:
                    pairing_ok = False
                    details.append(
                        f"pairing ({i},{j}) gave {got.payload!r}, expected {want.payload!r}"
                    )

    span_ok = membership_ok
    span_coeffs = []
    if membership_ok:
        for k in range(1, pres.n + 1):
            target = pres.row(k).scale(s)
            coeffs = _express_in_elements(target, data, details, slot=k)
            if coeffs is None:
                span_ok = False
                span_coeffs = None
                break
            span_coeffs.append(coeffs)
    if not membership_ok:
        span_ok = False
        span_coeffs = None

    regular = _scalar_regular_mod_nil(ring, s, details)
    nonzero = not s.is_zero()
    ann_stable = _annihilator_stable(ring, s)
    localized_free = True if (pairing_ok and span_ok and nonzero) else None

    return LindelReport(
        pairing_diagonal=pairing_ok,
        spans_scaled_module=span_ok,
        span_coefficients=tuple(span_coeffs) if span_coeffs is not None else None,
        regular_mod_nilradical=regular,
        scalar_nonzero=nonzero,
        annihilator_stable=ann_stable,
        localized_free=localized_free,
        details=tuple(details),
    )


def _express_in_elements(target, data, details, slot):
    """Coefficients writing the target row as sum c_i * p_i, or None."""
    ring = target.ring
    if data.rank == 0:
        if target.is_zero():
            return ()
        details.append(f"s*row {slot} is nonzero but there are no elements")
        return None
    # first try the pairing-derived candidate phi_i(target) / s
    candidate = []
    for f in data.functionals:
        t = target.dot(f)
        d = ring.exact_divide(t.payload, data.scalar.payload)
        if d is None:
            candidate = None
            break
        candidate.append(Elem(ring, d[0]))
    if candidate is not None and _combine(data.elements, candidate) == target:
        return tuple(candidate)
    if not ring.is_finite:
        details.append(f"could not express s*row {slot} in the given elements")
        return None
    # finite fallback: exhaustive coefficient search, canonical order
    pools = [ring.elements()] * data.rank
    if ring.size() ** data.rank > 100_000:
        details.append(f"coefficient search space too large at row {slot}")
        return None
    for combo in itertools.product(*pools):
        if _combine(data.elements, combo) == target:
            return tuple(combo)
    details.append(f"s*row {slot} lies outside the span of the given elements")
    return None


def _combine(elements, coeffs):
    acc = elements[0].scale(coeffs[0])
    for p, c in zip(elements[1:], coeffs[1:]):
        acc = acc + p.scale(c)
    return acc


def _scalar_regular_mod_nil(ring, s, details):
    """s*x = 0 should force x nilpotent; exhaustive on finite rings."""
    if ring.is_finite:
        for x in ring.elements():
            if (s * x).is_zero() and not _is_nilpotent(x):
                details.append(f"{x.payload!r} kills s but is not nilpotent")
                return False
        return True
    from .rings import IntegerRing

    if isinstance(ring, IntegerRing):
        if s.is_zero():
            details.append("scalar 0 is a zero-divisor")
            return False
        return True
    return None


def _is_nilpotent(x, bound=64):
    y = x
    e = 1
    while e < bound:
        if y.is_zero():
            return True
        y = y * y
        e *= 2
    return y.is_zero()


def _annihilator_stable(ring, s):
    """(0 : s) = (0 : s^2), compared exhaustively when the ring is finite."""
    if ring.is_finite:
        s2 = s * s
        for x in ring.elements():
            if (s2 * x).is_zero() and not (s * x).is_zero():
                return False
        return True
    from .rings import IntegerRing

    if isinstance(ring, IntegerRing):
        return True  # annihilators are 0 or everything, stable either way
    return None


# -- module words ----------------------------------------------------------------

@dataclass(frozen=True)
class Delta:
    """(b, q) -> (b + a*phi(q), q)."""

    coeff: Elem
    functional: RowVector

    def negated(self):
        return Delta(-self.coeff, self.functional)


@dataclass(frozen=True)
class Gamma:
    """(b, q) -> (b, q + b*m)."""

    element: RowVector

    def negated(self):
        return Gamma(self.element.scale(-self.element.ring.one()))


@dataclass(frozen=True)
class ModuleWord:
    """A sequence of Delta/Gamma moves over one presentation."""

    pres: ProjPresentation
    letters: tuple

    def __post_init__(self):
        for l in self.letters:
            if isinstance(l, Delta):
                if not self.pres.is_functional(l.functional):
                    raise VerificationError("Delta carries a non-functional column")
            elif isinstance(l, Gamma):
                if not self.pres.is_member(l.element):
                    raise VerificationError("Gamma carries a non-member row")
            else:
                raise TypeError(f"unknown module letter {l!r}")

    def __len__(self):
        return len(self.letters)

    def __add__(self, other):
        if other.pres != self.pres:
            raise RingMismatchError("cannot concatenate words over different presentations")
        return ModuleWord(self.pres, self.letters + other.letters)

    def inverse(self):
        return ModuleWord(self.pres, tuple(l.negated() for l in reversed(self.letters)))


def apply_module_word(x, word):
    """Apply the letters in order to (b, q); module membership is re-checked."""
    b, q = x
    pres = word.pres
    if not pres.is_member(q):
        raise VerificationError("module component is not fixed by the idempotent")
    for l in word.letters:
        if isinstance(l, Delta):
            b = b + l.coeff * q.dot(l.functional)
        else:
            q = q + l.element.scale(b)
            if not pres.is_member(q):
                raise AssertionError("module membership lost during application")
    return b, q


@dataclass(frozen=True)
class TransvectionForm:
    """A module letter as 1 + (pair against f, then move along p), f(p) = 0.

    The witness certifies the unimodularity side condition: for a Delta letter
    the moved element (1, 0) is hit to 1 by the witness functional; for a
    Gamma letter the pairing functional (1, 0) hits the witness element to 1.
    """

    move_unit: Elem          # A-coordinate of the moved element p
    move_module: RowVector   # P-coordinate of p
    pair_unit: Elem          # A-coordinate of the functional f
    pair_module: RowVector   # P-coordinate (column) of f
    witness_unit: Elem
    witness_module: RowVector
    witness_kind: str        # "functional" (for Delta) or "element" (for Gamma)

    def pair(self, b, q):
        return self.pair_unit * b + q.dot(self.pair_module)

    def apply(self, b, q):
        t = self.pair(b, q)
        return b + t * self.move_unit, q + self.move_module.scale(t)


def transvection_form(letter, pres):
    """Exhibit a Delta/Gamma letter as an orthogonal transvection pair."""
    ring = pres.ring
    zero_row = RowVector(ring, tuple(ring.zero() for _ in range(pres.n)))
    if isinstance(letter, Delta):
        form = TransvectionForm(
            move_unit=ring.one(),
            move_module=zero_row,
            pair_unit=ring.zero(),
            pair_module=letter.functional.scale(letter.coeff),
            witness_unit=ring.one(),
            witness_module=zero_row,
            witness_kind="functional",
        )
    elif isinstance(letter, Gamma):
        form = TransvectionForm(
            move_unit=ring.zero(),
            move_module=letter.element,
            pair_unit=ring.one(),
            pair_module=zero_row,
            witness_unit=ring.one(),
            witness_module=zero_row,
            witness_kind="element",
        )
    else:
        raise TypeError(f"unknown module letter {letter!r}")
    if not form.pair(form.move_unit, form.move_module).is_zero():
        raise AssertionError("transvection pair is not orthogonal")
    return form


# -- the row-word lift -----------------------------------------------------------

def row_word_to_module_word(word, pres, data):
    """Translate a first-row/column word into Delta/Gamma letters.

    The word is read as acting on the coefficient column (b, c_1..c_r) by left
    multiplication, so its letters are mapped in reverse order: E_{i+1,1}(c)
    becomes Gamma(c*p_i) and E_{1,j+1}(s*x) becomes Delta(x, phi_j) -- any x
    with s*x equal to the entry acts identically, since the pairing returns
    exact multiples of s.
    """
    ring = pres.ring
    s = data.scalar
    if word.n != data.rank + 1:
        raise ShapeError(f"word size {word.n} does not match rank {data.rank} + 1")
    letters = []
    for l in reversed(word.letters):
        eff = l.entry()
        if l.j == 1 and l.i >= 2:
            letters.append(Gamma(data.elements[l.i - 2].scale(eff)))
        elif l.i == 1 and l.j >= 2:
            d = ring.exact_divide(eff.payload, s.payload)
            if d is None:
                raise DivisibilityError(
                    f"first-row entry {eff.payload!r} is not divisible by {s.payload!r}"
                )
            letters.append(Delta(Elem(ring, d[0]), data.functionals[l.j - 2]))
        else:
            raise LetterClassError(f"letter at ({l.i},{l.j}) touches neither row 1 nor column 1")
    return ModuleWord(pres, tuple(letters))


# -- the end-to-end pipeline ------------------------------------------------------

@dataclass(frozen=True)
class ModuleCompletion:
    """Certified output of complete_module_element, with all intermediates."""

    element: tuple                    # the original (b, q)
    pres: ProjPresentation
    data: LindelData
    word: ModuleWord
    quotient_word: ModuleWord | None
    lifted_pair: tuple
    normalized_pair: tuple
    coefficients: tuple | None
    row_completion: RelativeCompletion | None
    stages: tuple
    certificate: tuple                # witness (y, t_1..t_n) hitting 1


def _module_unimodular_witness(pres, b, q):
    """Solve b*y + q*(e*psi) = 1 over the ambient columns, or None."""
    ring = pres.ring
    gens = (b,) + tuple(q.dot(pres.column(k)) for k in range(1, pres.n + 1))
    coeffs = Ideal(ring, gens).express(ring.one())
    if coeffs is None:
        return None
    return tuple(coeffs)


def _quotient_module_bfs(pres_bar, b_bar, q_bar, guard=100_000):
    """Search Delta/Gamma moves over the quotient carrying (b, q) to (1, 0).

    Moves are single scaled columns/rows of the reduced idempotent; their
    compositions generate every Delta/Gamma move, so an exhausted search is a
    definitive negative.
    """
    ring = pres_bar.ring
    size = ring.size()
    n = pres_bar.n
    if size is None:
        raise Inconclusive("quotient", "no solver for an infinite quotient ring")
    if size ** (n + 1) > guard:
        raise SizeGuardError(f"quotient state space {size**(n+1)} exceeds {guard}")
    t = _tables_for(ring)
    cols = [
        tuple(t.index[pres_bar.column(k).entries[r].payload] for r in range(n))
        for k in range(1, n + 1)
    ]
    rows = [
        tuple(t.index[pres_bar.row(k).entries[r].payload] for r in range(n))
        for k in range(1, n + 1)
    ]

    def dot(state_q, col):
        acc = t.zero
        for a, bb in zip(state_q, col):
            acc = t.add[acc][t.mul[a][bb]]
        return acc

    start = (t.index[b_bar.payload], tuple(t.index[e.payload] for e in q_bar.entries))
    goal = (t.one, tuple(t.zero for _ in range(n)))
    if start == goal:
        return []
    parent = {start: None}
    frontier = [start]
    scalars = [g for g in range(len(t.elems)) if g != t.zero]
    while frontier:
        new_frontier = []
        for state in frontier:
            b_idx, q_idx = state
            for k in range(n):
                pk = dot(q_idx, cols[k])
                for x in scalars:
                    # Delta(x, col_k): b += x * (q . col_k)
                    nb = t.add[b_idx][t.mul[x][pk]]
                    nxt = (nb, q_idx)
                    if nxt not in parent:
                        parent[nxt] = (state, ("delta", k + 1, x))
                        if nxt == goal:
                            return _trace_moves(parent, nxt)
                        new_frontier.append(nxt)
                    # Gamma(x * row_k): q += b * x * row_k
                    coeff = t.mul[b_idx][x]
                    nq = tuple(
                        t.add[qq][t.mul[coeff][rr]] for qq, rr in zip(q_idx, rows[k])
                    )
                    nxt = (b_idx, nq)
                    if nxt not in parent:
                        parent[nxt] = (state, ("gamma", k + 1, x))
                        if nxt == goal:
                            return _trace_moves(parent, nxt)
                        new_frontier.append(nxt)
        frontier = new_frontier
    raise NoCompletionError("quotient orbit exhausted without reaching (1, 0)")


def _trace_moves(parent, state):
    moves = []
    while parent[state] is not None:
        state, move = parent[state]
        moves.append(move)
    moves.reverse()
    return moves


def _lift_functional(pres, f_bar):
    """A deterministic preimage functional: lift entries, then retract by e."""
    ring = pres.ring
    raw = RowVector(ring, tuple(Elem(ring, ring.normalize(e.payload)) for e in f_bar.entries))
    return pres.functional_project(raw)


def _lift_member(pres, m_bar):
    ring = pres.ring
    raw = RowVector(ring, tuple(Elem(ring, ring.normalize(e.payload)) for e in m_bar.entries))
    return pres.member_project(raw)


def _extract_coefficients(pres, data, q, membership_ideal, combo_guard=4096):
    """Coefficients c_i in the ideal with q = sum c_i p_i, via verified search.

    The pairing gives s*c_i = phi_i(q); division by s may be non-unique on
    non-reduced rings, so each slot ranges over its annihilator coset and the
    reconstruction is checked exactly before returning.
    """
    ring = pres.ring
    s = data.scalar
    if data.rank == 0:
        return () if q.is_zero() else None
    pools = []
    for f in data.functionals:
        t = q.dot(f)
        d = ring.exact_divide(t.payload, s.payload)
        if d is None:
            return None
        base = Elem(ring, d[0])
        if d[1]:
            candidates = [base]
        else:
            if not ring.is_finite:
                candidates = [base]
            else:
                ann = [x for x in ring.elements() if (s * x).is_zero()]
                candidates = [base + a for a in ann]
        filtered = [c for c in candidates if membership_ideal.contains(c)]
        if not filtered:
            return None
        filtered.sort(key=lambda e: (e != base, _payload_sort(e)))
        pools.append(filtered)
    total = 1
    for p in pools:
        total *= len(p)
    if total > combo_guard:
        raise SizeGuardError(f"coefficient search space {total} exceeds {combo_guard}")
    for combo in itertools.product(*pools):
        if _combine(data.elements, combo) == q:
            return tuple(combo)
    return None


def _payload_sort(e):
    from .rings import payload_key

    return payload_key(e.payload)


def complete_module_element(
    x,
    pres,
    data,
    quotient_solver=None,
    fiber_oracle=None,
    max_attempts=16,
):
    """Carry a unimodular (b, q) over A + P to (1, 0) by a verified word.

    Stages: certify unimodularity; reduce mod s^2 and solve there (internal
    search for finite quotients, injected solver otherwise); lift the solution
    letterwise; normalize the module component by Gamma(-q); extract
    coefficients with entries in (s^2); complete the coefficient row through
    the fiber patching pipeline and lift it back; assemble and re-verify.
    """
    ring = pres.ring
    b, q = x
    b = ring.elem(b)
    if not pres.is_member(q):
        raise VerificationError("module component is not fixed by the idempotent")
    witness = _module_unimodular_witness(pres, b, q)
    if witness is None:
        raise NoCompletionError("element is not unimodular over the presentation")
    s = data.scalar
    square_ideal = Ideal(ring, (s * s,))
    stages = [
        StageRecord("verify", "unimodularity witnessed over the ambient columns", True)
    ]
    zero_row = RowVector(ring, tuple(ring.zero() for _ in range(pres.n)))
    empty = ModuleWord(pres, ())

    if b.is_one() and q.is_zero():
        stages.append(StageRecord("assemble", "element already at (1, 0)", True))
        return ModuleCompletion(
            element=(b, q),
            pres=pres,
            data=data,
            word=empty,
            quotient_word=None,
            lifted_pair=(b, q),
            normalized_pair=(b, q),
            coefficients=None,
            row_completion=None,
            stages=tuple(stages),
            certificate=witness,
        )

    # stage 1: solve over the quotient by (s^2)
    q_ring = QuotientRing(ring, square_ideal)
    e_bar = Matrix(
        q_ring,
        pres.n,
        pres.n,
        tuple(q_ring.reduce(v) for v in pres.e.entries),
    )
    pres_bar = ProjPresentation(q_ring, e_bar)
    b_bar = q_ring.reduce(b)
    q_bar = RowVector(q_ring, tuple(q_ring.reduce(v) for v in q.entries))
    if quotient_solver is not None:
        quotient_word = quotient_solver(pres_bar, (b_bar, q_bar))
        check = apply_module_word((b_bar, q_bar), quotient_word)
        if not (check[0].is_one() and check[1].is_zero()):
            raise VerificationError("injected quotient solver returned a bad word")
    else:
        moves = _quotient_module_bfs(pres_bar, b_bar, q_bar)
        letters = []
        for kind, k, x_idx in moves:
            x_elem = _tables_for(q_ring).elems[x_idx]
            if kind == "delta":
                letters.append(Delta(x_elem, pres_bar.column(k)))
            else:
                letters.append(Gamma(pres_bar.row(k).scale(x_elem)))
        quotient_word = ModuleWord(pres_bar, tuple(letters))
        check = apply_module_word((b_bar, q_bar), quotient_word)
        if not (check[0].is_one() and check[1].is_zero()):
            raise AssertionError("quotient search produced an unverified word")
    stages.append(
        StageRecord("quotient", f"{len(quotient_word)} letters over {q_ring.short_name()}", True)
    )

    # stage 2: lift letterwise by deterministic preimages
    lifted_letters = []
    for l in quotient_word.letters:
        if isinstance(l, Delta):
            coeff = Elem(ring, ring.normalize(l.coeff.payload))
            lifted_letters.append(Delta(coeff, _lift_functional(pres, l.functional)))
        else:
            lifted_letters.append(Gamma(_lift_member(pres, l.element)))
    lifted_word = ModuleWord(pres, tuple(lifted_letters))
    b1, q1 = apply_module_word((b, q), lifted_word)
    if not square_ideal.contains(b1 - ring.one()):
        raise AssertionError("lifted unit coordinate escaped 1 + (s^2)")
    for v in q1.entries:
        if not square_ideal.contains(v):
            raise AssertionError("lifted module coordinate escaped (s^2)")
    stages.append(StageRecord("lift", "lifted pair lands in the relative class", True))

    # stage 3: replace q by q - b*q
    word = lifted_word
    if not q1.is_zero():
        word = word + ModuleWord(pres, (Gamma(q1.scale(-ring.one())),))
    b2, q2 = apply_module_word((b, q), word)
    if b2 != b1:
        raise AssertionError("normalization moved the unit coordinate")
    stages.append(StageRecord("normalize", "module component rescaled by 1 - b", True))

    # stage 4: coefficients of the module component, entries in (s^2)
    coeffs = _extract_coefficients(pres, data, q2, square_ideal)
    if coeffs is None:
        raise Inconclusive("coefficients", "no verified coefficient tuple in (s^2)")
    stages.append(
        StageRecord("coefficients", f"{len(coeffs)} coefficients verified in (s^2)", True)
    )

    # stage 5: complete the coefficient row and lift the word back
    coeff_row = RowVector(ring, (b2,) + coeffs)
    rc = complete_relative_row(
        coeff_row, s, oracle=fiber_oracle, column_form=True, max_attempts=max_attempts
    )
    mirrored = Word(
        ring,
        rc.word.n,
        tuple(l.transpose() for l in reversed(rc.word.letters)),
    )
    if not classify(mirrored, FirstRowCol(rc.level_ideal)):
        raise AssertionError("transposed completion left the first-row class")
    moved = mat_vec(mirrored.evaluate(), coeff_row)
    if moved.payloads() != unit_row(ring, rc.word.n).payloads():
        raise AssertionError("transposed word does not fix the coefficient column")
    row_word = row_word_to_module_word(mirrored, pres, data)
    word = word + row_word
    stages.append(
        StageRecord("row-complete", f"coefficient row factored in {rc.attempts} attempt(s)", True)
    )

    # stage 6: assemble and verify by full evaluation
    fb, fq = apply_module_word((b, q), word)
    if not (fb.is_one() and fq == zero_row):
        raise AssertionError("assembled word failed final evaluation")
    stages.append(StageRecord("assemble", f"{len(word)} letters send the element to (1, 0)", True))
    return ModuleCompletion(
        element=(b, q),
        pres=pres,
        data=data,
        word=word,
        quotient_word=quotient_word,
        lifted_pair=(b1, q1),
        normalized_pair=(b2, q2),
        coefficients=coeffs,
        row_completion=rc,
        stages=tuple(stages),
        certificate=witness,
    )


# -- JSON wire format --------------------------------------------------------------

def module_letter_to_json(l):
    from .linalg import row_to_json
    from .rings import elem_to_json

    if isinstance(l, Delta):
        return {
            "kind": "delta",
            "coeff": elem_to_json(l.coeff),
            "functional": row_to_json(l.functional),
        }
    return {"kind": "gamma", "element": row_to_json(l.element)}


def module_letter_from_json(pres, d):
    from .linalg import row_from_json
    from .rings import elem_from_json

    if d["kind"] == "delta":
        return Delta(
            elem_from_json(pres.ring, d["coeff"]),
            row_from_json(pres.ring, d["functional"]),
        )
    if d["kind"] == "gamma":
        return Gamma(row_from_json(pres.ring, d["element"]))
    raise ValueError(f"unknown module letter kind {d.get('kind')!r}")


def module_word_to_json(w):
    return {"letters": [module_letter_to_json(l) for l in w.letters]}


def module_word_from_json(pres, d):
    return ModuleWord(pres, tuple(module_letter_from_json(pres, l) for l in d["letters"]))
