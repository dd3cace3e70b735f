"""Words in elementary matrices and their verified factorizations.

A Word is a finite product of generators E_ij(a) = Id + a*e_ij; inverse
letters evaluate via entry negation, never matrix inversion.  Membership
classes are purely syntactic: Full (no constraint), Level(I) (every entry in
I), FirstRowCol(I) (column-1 letters free, row-1 letters with entry in I) and
its mirror FirstColRow(I), and Relative(I) for structured products of
conjugates w*g*w^-1, which are carried as (conjugator, core letter) pairs
because a flattened word cannot be recognized as such.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Matrix, ShapeError, elementary, identity
from .rings import Elem, Ideal, NonMemberError, NonUnitError, RingMismatchError, elem_from_json, elem_to_json


@dataclass(frozen=True)
class Letter:
    """A single generator E_ij(a), optionally marked as inverted."""

    i: int
    j: int
    a: Elem
    inv: bool = False

    def entry(self):
        """The effective entry: -a for inverted letters."""
        return -self.a if self.inv else self.a

    def inverse(self):
        return Letter(self.i, self.j, self.a, not self.inv)

    def transpose(self):
        return Letter(self.j, self.i, self.a, self.inv)


def gen(i, j, a, inv=False):
    return Letter(i, j, a, inv)


@dataclass(frozen=True)
class Word:
    """An ordered product of letters over a fixed ring and size n."""

    ring: object
    n: int
    letters: tuple = ()

    def __post_init__(self):
        for l in self.letters:
            if not (1 <= l.i <= self.n and 1 <= l.j <= self.n) or l.i == l.j:
                raise ShapeError(f"letter position ({l.i},{l.j}) invalid for n={self.n}")
            if l.a.ring != self.ring:
                raise RingMismatchError("letter entry from a different ring")

    def __len__(self):
        return len(self.letters)

    def __add__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        if other.ring != self.ring or other.n != self.n:
            raise RingMismatchError("cannot concatenate words over different groups")
        return Word(self.ring, self.n, self.letters + other.letters)

    def inverse(self):
        return Word(self.ring, self.n, tuple(l.inverse() for l in reversed(self.letters)))

    def evaluate(self):
        m = identity(self.ring, self.n)
        for l in self.letters:
            m = m @ elementary(self.ring, self.n, l.i, l.j, l.entry())
        return m

    def transpose_letters(self):
        """Same order, each letter transposed: evaluates to the reversed product's transpose."""
        return Word(self.ring, self.n, tuple(l.transpose() for l in self.letters))


@dataclass(frozen=True)
class RelativeWord:
    """A product of conjugates w*g*w^-1, kept structurally."""

    ring: object
    n: int
    items: tuple  # of (Word, Letter) pairs

    def flatten(self):
        letters = []
        for conj, core in self.items:
            letters.extend(conj.letters)
            letters.append(core)
            letters.extend(conj.inverse().letters)
        return Word(self.ring, self.n, tuple(letters))

    def evaluate(self):
        return self.flatten().evaluate()


# -- membership classes --------------------------------------------------------

@dataclass(frozen=True)
class Full:
    pass


@dataclass(frozen=True)
class Level:
    ideal: Ideal


@dataclass(frozen=True)
class Relative:
    ideal: Ideal


@dataclass(frozen=True)
class FirstRowCol:
    """Column-1 letters unrestricted; row-1 letters must have entry in the ideal."""

    ideal: Ideal


@dataclass(frozen=True)
class FirstColRow:
    """Mirror class: row-1 letters unrestricted, column-1 entries in the ideal."""

    ideal: Ideal


def classify(word, cls):
    """Purely syntactic class membership for a Word or RelativeWord."""
    if isinstance(word, RelativeWord):
        if isinstance(cls, Relative):
            return all(cls.ideal.contains(core.entry()) for _, core in word.items)
        return classify(word.flatten(), cls)
    if isinstance(cls, Full):
        return True
    if isinstance(cls, Level):
        return all(cls.ideal.contains(l.entry()) for l in word.letters)
    if isinstance(cls, FirstRowCol):
        for l in word.letters:
            if l.j == 1:
                continue
            if l.i == 1 and cls.ideal.contains(l.entry()):
                continue
            return False
        return True
    if isinstance(cls, FirstColRow):
        for l in word.letters:
            if l.i == 1:
                continue
            if l.j == 1 and cls.ideal.contains(l.entry()):
                continue
            return False
        return True
    if isinstance(cls, Relative):
        # a flat word cannot exhibit conjugate structure; only the empty word passes
        return len(word) == 0
    raise TypeError(f"unknown class {cls!r}")


# -- factorizations -------------------------------------------------------------

def commutator_split(ring, n, i, j, r, z, ideal):
    """Write E_ij(z), z in I^2, as a product of commutators with entries in I.

    Uses z = sum a_t*b_t and E_ij(a*b) = [E_ir(a), E_rj(b)] for distinct
    i, r, j.  Raises NonMemberError when z is not in I^2.
    """
    if len({i, j, r}) != 3:
        raise ShapeError("indices i, r, j must be pairwise distinct")
    if not all(1 <= k <= n for k in (i, j, r)):
        raise ShapeError(f"indices out of range for n={n}")
    z = ring.elem(z)
    pairs = ideal.express_as_products(z)
    if pairs is None:
        raise NonMemberError(f"{z!r} is not in the square of {ideal!r}")
    letters = []
    for a, b in pairs:
        letters.extend(
            [
                Letter(i, r, a),
                Letter(r, j, b),
                Letter(i, r, -a),
                Letter(r, j, -b),
            ]
        )
    return Word(ring, n, tuple(letters))


def _conjugate_letter(alpha, letter, ideal, n, aux_hint=None):
    """Letters for alpha * E_ij(y) * alpha^-1 (alpha a single letter).

    The three easy index cases give one or two letters whose entries are y and
    r*y, so they stay inside any ideal containing y.  The aligned hard case
    (alpha = E_ji(r)) requires y in I^2 and splits through commutators; its
    output entries lie in I only.
    """
    r = alpha.entry()
    y = letter.entry()
    i, j = letter.i, letter.j
    k, l = alpha.i, alpha.j
    ring = y.ring
    if l != i and j != k:
        return [Letter(i, j, y)]
    if j == k and l != i:
        return [Letter(i, j, y), Letter(i, l, -(r * y))]
    if l == i and j != k:
        return [Letter(i, j, y), Letter(k, j, r * y)]
    # hard case: alpha = E_ji(r) against E_ij(y); need y in I^2 and a third index
    if n < 3:
        raise ShapeError("aligned conjugation needs n >= 3")
    pairs = ideal.express_as_products(y)
    if pairs is None:
        raise NonMemberError(
            f"entry {y!r} not in the square of {ideal!r} during aligned conjugation"
        )
    aux = aux_hint
    if aux is None or aux in (i, j):
        aux = next(t for t in range(1, n + 1) if t not in (i, j))
    out = []
    for a, b in pairs:
        u = [Letter(i, aux, a), Letter(j, aux, r * a)]
        v = [Letter(aux, j, b), Letter(aux, i, -(r * b))]
        u_inv = [x.inverse() for x in reversed(u)]
        v_inv = [x.inverse() for x in reversed(v)]
        out.extend(u + v + u_inv + v_inv)
    return out


def conjugate_into_level(alpha, beta, ideal, n):
    """Word at Level(I) equal to alpha*beta*alpha^-1 for single letters.

    beta's entry must lie in I^2 (checked in the aligned case; the easy cases
    are verified against Level(I) membership afterwards).
    """
    letters = _conjugate_letter(alpha, beta, ideal, n)
    word = Word(alpha.a.ring, n, tuple(letters))
    if not classify(word, Level(ideal)):
        raise NonMemberError("conjugation produced entries outside the ideal")
    return word


def relative_to_level(rel_word, ideal):
    """Flatten a Relative(I^2)-structured word into a Level(I) word.

    Conjugator letters peel innermost-first.  Easy conjugations multiply
    entries by ring elements and so preserve ideal membership; an aligned hard
    case consumes squared membership and can make a *second* aligned case
    against the same chain fail, in which case the NonMemberError propagates
    to the caller (which may retry with a different certificate).
    """
    flat = rel_word.flatten()
    if classify(flat, Level(ideal)):
        return flat  # already syntactically at the target level
    letters = []
    for conj, core in rel_word.items:
        current = [core]
        for c in reversed(conj.letters):
            nxt = []
            for letter in current:
                nxt.extend(_conjugate_letter(c, letter, ideal, rel_word.n))
            current = nxt
        letters.extend(current)
    word = Word(rel_word.ring, rel_word.n, tuple(letters))
    if not classify(word, Level(ideal)):
        raise NonMemberError("lowered word has entries outside the target ideal")
    return word


def level_to_firstrowcol(word):
    """Rewrite interior letters via E_ij(x) = E_i1(1) E_1j(x) E_i1(-1) E_1j(-x).

    Letters already touching row or column 1 pass through, so a Level(I) input
    becomes a FirstRowCol(I) word with the same evaluation.
    """
    one = word.ring.one()
    letters = []
    for l in word.letters:
        if l.i == 1 or l.j == 1:
            letters.append(l)
            continue
        x = l.entry()
        letters.extend(
            [
                Letter(l.i, 1, one),
                Letter(1, l.j, x),
                Letter(l.i, 1, -one),
                Letter(1, l.j, -x),
            ]
        )
    return Word(word.ring, word.n, tuple(letters))


def level_to_firstcolrow(word):
    """Mirror rewriting E_ij(x) = E_i1(x) E_1j(1) E_i1(-x) E_1j(-1).

    Produces the FirstColRow(I) form whose letterwise transpose is a
    FirstRowCol(I) functional sequence (used by the module lift).
    """
    one = word.ring.one()
    letters = []
    for l in word.letters:
        if l.i == 1 or l.j == 1:
            letters.append(l)
            continue
        x = l.entry()
        letters.extend(
            [
                Letter(l.i, 1, x),
                Letter(1, l.j, one),
                Letter(l.i, 1, -x),
                Letter(1, l.j, -one),
            ]
        )
    return Word(word.ring, word.n, tuple(letters))


def discrepancy_telescope(ring, n, aligned, ideal, right_prefixes=False):
    """Express Psi * PsiTilde^-1 as a structured product of conjugates.

    `aligned` is a list of (i, j, u, v) with u = v (mod I) letterwise.  With
    Psi = prod E(u_t) and PsiTilde = prod E(v_t):

        Psi*PsiTilde^-1 = prod_{t=m..1} W_{t-1} E_{i_t j_t}(u_t - v_t) W_{t-1}^-1,

    where W_t is the Psi-prefix of length t.  With right_prefixes=True the
    mirrored ascending form with PsiTilde-prefixes is returned instead; both
    evaluate identically.
    """
    cores = []
    u_letters = []
    v_letters = []
    for (i, j, u, v) in aligned:
        u = ring.elem(u)
        v = ring.elem(v)
        diff = u - v
        if not ideal.contains(diff):
            raise NonMemberError(f"aligned entries {u!r}, {v!r} differ outside the ideal")
        cores.append(Letter(i, j, diff))
        u_letters.append(Letter(i, j, u))
        v_letters.append(Letter(i, j, v))
    items = []
    prefix_letters = v_letters if right_prefixes else u_letters
    order = range(len(cores)) if right_prefixes else range(len(cores) - 1, -1, -1)
    for t in order:
        conj = Word(ring, n, tuple(prefix_letters[:t]))
        items.append((conj, cores[t]))
    return RelativeWord(ring, n, tuple(items))


def whitehead(u, n, slot=(1, 2)):
    """The six-letter word evaluating to diag(u, u^-1) at the given slot."""
    ring = u.ring
    k, l = slot
    if not (1 <= k <= n and 1 <= l <= n) or k == l:
        raise ShapeError(f"bad slot ({k},{l}) for n={n}")
    inv = ring.try_inverse(u.payload)
    if inv is None:
        raise NonUnitError(f"{u!r} is not a unit")
    uinv = Elem(ring, inv)
    one = ring.one()
    return Word(
        ring,
        n,
        (
            Letter(k, l, u),
            Letter(l, k, -uinv),
            Letter(k, l, u),
            Letter(k, l, -one),
            Letter(l, k, one),
            Letter(k, l, -one),
        ),
    )


# -- JSON wire format -----------------------------------------------------------

def letter_to_json(l):
    return {"i": l.i, "j": l.j, "a": elem_to_json(l.a), "inv": l.inv}


def letter_from_json(ring, d):
    if not isinstance(d, dict) or "i" not in d or "j" not in d or "a" not in d:
        raise ValueError("letter must be an object with i/j/a")
    return Letter(int(d["i"]), int(d["j"]), elem_from_json(ring, d["a"]), bool(d.get("inv", False)))


def word_to_json(w):
    return {"n": w.n, "letters": [letter_to_json(l) for l in w.letters]}


def word_from_json(ring, d):
    if not isinstance(d, dict) or "n" not in d or "letters" not in d:
        raise ValueError("word must be an object with n/letters")
    n = int(d["n"])
    letters = tuple(letter_from_json(ring, l) for l in d["letters"])
    return Word(ring, n, letters)


def relative_word_to_json(w):
    out = []
    for conj, core in w.items:
        entry = letter_to_json(core)
        entry["conj"] = [letter_to_json(l) for l in conj.letters]
        out.append(entry)
    return {"n": w.n, "letters": out}


def relative_word_from_json(ring, d):
    if not isinstance(d, dict) or "n" not in d or "letters" not in d:
        raise ValueError("relative word must be an object with n/letters")
    n = int(d["n"])
    items = []
    for entry in d["letters"]:
        core = letter_from_json(ring, entry)
        conj = Word(ring, n, tuple(letter_from_json(ring, l) for l in entry.get("conj", [])))
        items.append((conj, core))
    return RelativeWord(ring, n, tuple(items))
