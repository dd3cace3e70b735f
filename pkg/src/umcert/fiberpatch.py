"""Patching congruent unimodular rows and factoring the resulting completion.

Two rows over A that agree modulo an ideal I patch into a single unimodular
row over the fiber product A x_{A/I} A.  A completion word found there splits
through the two projections into a letter-aligned congruent pair of words,
whose discrepancy telescopes to a structured product with core entries in I.
For I = (s^2) that product lowers to Level((s)) and rewrites into first-row
(or first-column) form; every stage is re-verified by evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elemgroup import (
    FirstColRow,
    FirstRowCol,
    Letter,
    Level,
    Word,
    classify,
    discrepancy_telescope,
    level_to_firstcolrow,
    level_to_firstrowcol,
    relative_to_level,
)
from .linalg import RowVector, ShapeError, identity, row_act, unit_row
from .rings import (
    CongruenceError,
    Elem,
    FiberProductRing,
    Ideal,
    NonMemberError,
    RingMismatchError,
)
from .unimodular import (
    EuclideanGcd,
    FiniteBFS,
    Inconclusive,
    NonUnimodular,
    UmVector,
    VerificationError,
    iter_completions,
    verify_um,
)


@dataclass(frozen=True)
class PatchedRow:
    """A congruent pair of unimodular rows glued over the fiber product."""

    ring: object
    ideal: Ideal
    left: UmVector
    right: UmVector
    pair: UmVector


@dataclass(frozen=True)
class StageRecord:
    """One verified step of a factoring pipeline."""

    name: str
    detail: str
    verified: bool


@dataclass(frozen=True)
class RelativeCompletion:
    """Certified output of complete_relative_row, with all intermediates."""

    target: UmVector
    scalar: Elem
    square_ideal: Ideal
    level_ideal: Ideal
    patched: PatchedRow
    fiber_word: Word
    left_word: Word
    right_word: Word
    telescope: object
    level_word: Word
    word: Word
    column_form: bool
    stages: tuple
    attempts: int

    @property
    def ring(self):
        return self.target.vector.ring


def _as_um(row, relative=None, mode="um"):
    """Accept a RowVector or UmVector and return a freshly verified UmVector."""
    vec = row.vector if isinstance(row, UmVector) else row
    result = verify_um(vec, relative=relative, mode=mode)
    if isinstance(result, NonUnimodular):
        raise VerificationError(result.reason)
    if isinstance(row, UmVector):
        # keep the caller's witness, but only after checking it pairs to 1
        return UmVector(vec, row.witness, result.relative)
    return result


def patch_rows(v, w, ideal):
    """Glue two rows congruent mod the ideal into one row over the fiber ring.

    The paired witness combines the two given witnesses: with eta = a.w - 1
    (which lies in the ideal), the pair (a_i, a_i - eta*b_i) pairs to 1
    against (v_i, w_i) on both components.
    """
    v = v if isinstance(v, UmVector) else _as_um(v)
    w = w if isinstance(w, UmVector) else _as_um(w)
    ring = v.vector.ring
    if w.vector.ring != ring or ideal.ring != ring:
        raise RingMismatchError("rows and ideal must share one base ring")
    if len(v) != len(w):
        raise ShapeError(f"length mismatch {len(v)} != {len(w)}")
    for k, (x, y) in enumerate(zip(v.vector.entries, w.vector.entries), start=1):
        if not ideal.contains(x - y):
            raise CongruenceError(f"entries at slot {k} differ outside the ideal")
    pair_ring = FiberProductRing(ring, ideal)
    row = RowVector(
        pair_ring,
        tuple(pair_ring.elem((x.payload, y.payload)) for x, y in zip(v.vector.entries, w.vector.entries)),
    )
    eta = v.witness.dot(w.vector) - ring.one()
    if not ideal.contains(eta):
        raise AssertionError("witness discrepancy escaped the ideal")
    wit = RowVector(
        pair_ring,
        tuple(
            pair_ring.elem((a.payload, (a - eta * b).payload))
            for a, b in zip(v.witness.entries, w.witness.entries)
        ),
    )
    pair = UmVector(row, wit)
    return PatchedRow(ring, ideal, v, w, pair)


def split_word(word):
    """Project a fiber-ring word through both coordinates, letter by letter."""
    ring = word.ring
    if not isinstance(ring, FiberProductRing):
        raise RingMismatchError(f"expected a fiber-product word, got one over {ring}")
    base = ring.base
    left = tuple(Letter(l.i, l.j, base.elem(l.a.payload[0]), l.inv) for l in word.letters)
    right = tuple(Letter(l.i, l.j, base.elem(l.a.payload[1]), l.inv) for l in word.letters)
    return Word(base, word.n, left), Word(base, word.n, right)


def _identity_mod(matrix, ideal):
    """Entry-by-entry check that a matrix is congruent to the identity."""
    ident = identity(matrix.ring, matrix.rows)
    for i in range(1, matrix.rows + 1):
        for j in range(1, matrix.cols + 1):
            if not ideal.contains(matrix.at(i, j) - ident.at(i, j)):
                return False
    return True


def complete_relative_row(target, s, oracle=None, column_form=False, max_attempts=16):
    """Factor a completion of a row congruent to e1 mod s^2 through FirstRowCol(sA).

    Pipeline: verify the relative unimodularity of the target; patch it with
    e1 over (s^2); complete the patched row over the fiber ring; split the
    word through the projections; telescope the discrepancy; lower it to
    Level((s)) and rewrite into first-row form (first-column when
    column_form).  Each stage is re-verified by evaluation, and the lowering
    retries across oracle variants and both telescope orientations.
    """
    um = _as_um(target)
    ring = um.vector.ring
    n = len(um)
    s = ring.elem(s)
    square_ideal = Ideal(ring, (s * s,))
    level_ideal = Ideal(ring, (s,))
    um = _as_um(um, relative=square_ideal, mode="um")

    ones = unit_row(ring, n)
    e1 = _as_um(ones)
    patched = patch_rows(um, e1, square_ideal)
    pair_ring = patched.pair.vector.ring

    if oracle is None:
        size = pair_ring.size()
        oracle = FiniteBFS() if size is not None and size <= 256 else EuclideanGcd()

    mark = unit_row(ring, n).payloads()
    failures = []
    attempts = 0
    for fiber_word in iter_completions(patched.pair, oracle):
        if attempts >= max_attempts:
            break
        attempts += 1
        left, right = split_word(fiber_word)
        if row_act(um.vector, left.evaluate()).payloads() != mark:
            raise AssertionError("left projection does not complete the target")
        if row_act(ones, right.evaluate()).payloads() != mark:
            raise AssertionError("right projection does not fix e1")
        aligned = [
            (a.i, a.j, a.entry(), b.entry())
            for a, b in zip(left.letters, right.letters)
        ]
        for mirrored in (False, True):
            try:
                rel = discrepancy_telescope(
                    ring, n, aligned, square_ideal, right_prefixes=mirrored
                )
                delta = rel.evaluate()
                if delta != (left + right.inverse()).evaluate():
                    raise AssertionError("telescope does not reproduce the discrepancy")
                if not _identity_mod(delta, square_ideal):
                    raise AssertionError("discrepancy is not trivial mod s^2")
                level_word = relative_to_level(rel, level_ideal)
                if row_act(um.vector, level_word.evaluate()).payloads() != mark:
                    failures.append(f"attempt {attempts}: lowered word lost the target")
                    continue
                final = (
                    level_to_firstcolrow(level_word)
                    if column_form
                    else level_to_firstrowcol(level_word)
                )
                cls = FirstColRow(level_ideal) if column_form else FirstRowCol(level_ideal)
                if not classify(final, cls):
                    failures.append(f"attempt {attempts}: rewrite missed the class")
                    continue
                if row_act(um.vector, final.evaluate()).payloads() != mark:
                    raise AssertionError("rewrite changed the evaluation")
                form = "first-col-row" if column_form else "first-row-col"
                stages = (
                    StageRecord("verify", f"target unimodular relative to ({s.payload!r})^2", True),
                    StageRecord("patch", f"paired row over {pair_ring.short_name()}", True),
                    StageRecord("complete", f"fiber word of {len(fiber_word)} letters", True),
                    StageRecord("split", "projections complete the target and fix e1", True),
                    StageRecord(
                        "telescope",
                        f"{len(aligned)} aligned discrepancies"
                        + (", mirrored prefixes" if mirrored else ""),
                        True,
                    ),
                    StageRecord("rewrite", f"{len(final)} letters in {form} form", True),
                )
                return RelativeCompletion(
                    target=um,
                    scalar=s,
                    square_ideal=square_ideal,
                    level_ideal=level_ideal,
                    patched=patched,
                    fiber_word=fiber_word,
                    left_word=left,
                    right_word=right,
                    telescope=rel,
                    level_word=level_word,
                    word=final,
                    column_form=column_form,
                    stages=stages,
                    attempts=attempts,
                )
            except (NonMemberError, ShapeError) as exc:
                failures.append(
                    f"attempt {attempts}{' (mirrored)' if mirrored else ''}: {exc}"
                )
                continue
    detail = "; ".join(failures[-3:]) if failures else "no oracle completion admitted lowering"
    raise Inconclusive("factor", detail)
