"""Tests for elementary-matrix words, classes, and factorizations."""

import random

import pytest

from umcert import (
    FirstColRow,
    FirstRowCol,
    Full,
    Ideal,
    Letter,
    Level,
    NonMemberError,
    NonUnitError,
    Relative,
    RelativeWord,
    ShapeError,
    Word,
    Zmod,
    classify,
    commutator_split,
    conjugate_into_level,
    discrepancy_telescope,
    elementary,
    gen,
    identity,
    letter_from_json,
    letter_to_json,
    level_to_firstcolrow,
    level_to_firstrowcol,
    mat_mul,
    relative_to_level,
    relative_word_from_json,
    relative_word_to_json,
    whitehead,
    word_from_json,
    word_to_json,
)

from oracles import eval_letters, zmod_table


def random_word(ring, n, rng, length=6, pool=None):
    letters = []
    for _ in range(length):
        i = rng.randrange(1, n + 1)
        j = rng.randrange(1, n + 1)
        while j == i:
            j = rng.randrange(1, n + 1)
        a = rng.choice(pool) if pool else ring.elem(rng.randrange(ring.size()))
        letters.append(Letter(i, j, a, rng.random() < 0.3))
    return Word(ring, n, tuple(letters))


def payload_grid(m):
    return [[m.at(i, j).payload for j in range(1, m.cols + 1)] for i in range(1, m.rows + 1)]


def test_letter_entry_and_inverse():
    """Inverted letters contribute -a; inverse() round-trips."""
    ring = Zmod(9)
    l = gen(1, 2, ring.elem(4))
    assert l.entry().payload == 4
    assert l.inverse().entry().payload == 5
    assert l.inverse().inverse() == l
    assert l.transpose().i == 2 and l.transpose().j == 1


def test_word_evaluates_like_oracle():
    """Word evaluation agrees with the plain-integer matrix oracle."""
    ring = Zmod(12)
    table = zmod_table(12)
    rng = random.Random(17)
    for n in (2, 3, 4):
        for _ in range(25):
            w = random_word(ring, n, rng, length=rng.randrange(0, 8))
            raw = [(l.i, l.j, l.a.payload, l.inv) for l in w.letters]
            assert payload_grid(w.evaluate()) == eval_letters(table, n, raw)


def test_word_inverse_and_concat():
    """w + w.inverse() is the identity; concatenation multiplies evaluations."""
    ring = Zmod(8)
    rng = random.Random(19)
    for _ in range(25):
        a = random_word(ring, 3, rng)
        b = random_word(ring, 3, rng)
        assert payload_grid((a + a.inverse()).evaluate()) == payload_grid(identity(ring, 3))
        assert payload_grid((a + b).evaluate()) == payload_grid(mat_mul(a.evaluate(), b.evaluate()))


def test_word_transpose_letters():
    """Letterwise transposition evaluates to the transpose of the reversed word."""
    ring = Zmod(10)
    rng = random.Random(21)
    for _ in range(20):
        w = random_word(ring, 3, rng)
        rev = Word(ring, 3, tuple(reversed(w.letters)))
        assert payload_grid(w.transpose_letters().evaluate()) == payload_grid(
            rev.evaluate().transpose()
        )


def test_word_validation():
    """Words reject out-of-range and diagonal letter positions."""
    ring = Zmod(5)
    with pytest.raises(ShapeError):
        Word(ring, 2, (Letter(1, 3, ring.elem(1)),))
    with pytest.raises(ShapeError):
        Word(ring, 2, (Letter(1, 1, ring.elem(1)),))


def test_classify_level_and_full():
    """Level membership is exactly entrywise ideal membership; Full is everything."""
    ring = Zmod(12)
    ideal = Ideal(ring, (ring.elem(4),))
    inside = Word(ring, 3, (gen(1, 2, ring.elem(4)), gen(3, 1, ring.elem(8), True)))
    outside = Word(ring, 3, (gen(1, 2, ring.elem(4)), gen(2, 3, ring.elem(2))))
    assert classify(inside, Level(ideal))
    assert not classify(outside, Level(ideal))
    assert classify(outside, Full())


def test_classify_first_row_col():
    """FirstRowCol: column-1 letters free, row-1 letters need entries in I."""
    ring = Zmod(12)
    ideal = Ideal(ring, (ring.elem(4),))
    good = Word(ring, 3, (gen(2, 1, ring.elem(7)), gen(1, 3, ring.elem(8))))
    assert classify(good, FirstRowCol(ideal))
    bad_row = Word(ring, 3, (gen(1, 3, ring.elem(5)),))
    assert not classify(bad_row, FirstRowCol(ideal))
    interior = Word(ring, 3, (gen(2, 3, ring.elem(4)),))
    assert not classify(interior, FirstRowCol(ideal))
    mirror = Word(ring, 3, (gen(1, 2, ring.elem(7)), gen(3, 1, ring.elem(4))))
    assert classify(mirror, FirstColRow(ideal))
    assert not classify(mirror, FirstRowCol(ideal))


def test_classify_relative():
    """Relative structure needs conjugate items with cores in the ideal."""
    ring = Zmod(12)
    ideal = Ideal(ring, (ring.elem(4),))
    conj = Word(ring, 3, (gen(2, 3, ring.elem(5)),))
    rel = RelativeWord(ring, 3, ((conj, gen(1, 2, ring.elem(8))),))
    assert classify(rel, Relative(ideal))
    rel_bad = RelativeWord(ring, 3, ((conj, gen(1, 2, ring.elem(5))),))
    assert not classify(rel_bad, Relative(ideal))
    flat_nonempty = Word(ring, 3, (gen(1, 2, ring.elem(4)),))
    assert not classify(flat_nonempty, Relative(ideal))
    assert classify(Word(ring, 3, ()), Relative(ideal))


def test_commutator_split_exhaustive():
    """E_ij(z) splits into commutators for every z in I^2 over Z/6 and Z/9."""
    for modulus, gens in ((6, (2,)), (6, (3,)), (9, (3,))):
        ring = Zmod(modulus)
        ideal = Ideal(ring, tuple(ring.elem(g) for g in gens))
        square = ideal.square()
        for z in square.members():
            for (i, r, j) in [(1, 3, 2), (2, 1, 3), (3, 2, 1)]:
                word = commutator_split(ring, 3, i, j, r, z, ideal)
                want = elementary(ring, 3, i, j, z)
                assert payload_grid(word.evaluate()) == payload_grid(want), (
                    f"split failed for z={z.payload} at ({i},{j}) aux {r} mod {modulus}"
                )
                assert classify(word, Level(ideal)), "split letters must stay in I"
                assert len(word) % 4 == 0, "split is a product of 4-letter commutators"


def test_commutator_split_rejects_nonmember():
    """z outside I^2 cannot be split."""
    ring = Zmod(9)
    ideal = Ideal(ring, (ring.elem(3),))
    with pytest.raises(NonMemberError):
        commutator_split(ring, 3, 1, 2, 3, ring.elem(3), ideal)
    with pytest.raises(ShapeError):
        commutator_split(ring, 3, 1, 2, 1, ring.elem(0), ideal)


def test_conjugation_easy_cases():
    """Disjoint and half-aligned conjugations stay in the ideal and match."""
    ring = Zmod(16)
    ideal = Ideal(ring, (ring.elem(2),))
    square = ideal.square()
    rng = random.Random(27)
    for _ in range(60):
        y = rng.choice([e for e in square.members()])
        z = ring.elem(rng.randrange(16))
        beta = gen(1, 2, y)
        for alpha in (gen(3, 1, z), gen(2, 3, z), gen(3, 2, z)):
            word = conjugate_into_level(alpha, beta, ideal, 3)
            want = mat_mul(
                mat_mul(
                    elementary(ring, 3, alpha.i, alpha.j, z),
                    elementary(ring, 3, 1, 2, y),
                ),
                elementary(ring, 3, alpha.i, alpha.j, -z),
            )
            assert payload_grid(word.evaluate()) == payload_grid(want), (
                f"conjugation by E_{alpha.i}{alpha.j}({z.payload}) of E_12({y.payload})"
            )
            assert classify(word, Level(ideal))


def test_conjugation_aligned_case():
    """The aligned case E_21(r) E_12(y) E_21(-r) needs y in I^2 and n >= 3."""
    ring = Zmod(16)
    ideal = Ideal(ring, (ring.elem(2),))
    square = ideal.square()
    for y in square.members():
        for r_payload in range(16):
            r = ring.elem(r_payload)
            alpha = gen(2, 1, r)
            beta = gen(1, 2, y)
            word = conjugate_into_level(alpha, beta, ideal, 3)
            want = mat_mul(
                mat_mul(elementary(ring, 3, 2, 1, r), elementary(ring, 3, 1, 2, y)),
                elementary(ring, 3, 2, 1, -r),
            )
            assert payload_grid(word.evaluate()) == payload_grid(want)
            assert classify(word, Level(ideal))
    with pytest.raises(NonMemberError):
        conjugate_into_level(gen(2, 1, ring.elem(1)), gen(1, 2, ring.elem(2)), ideal, 3)
    with pytest.raises(ShapeError):
        conjugate_into_level(gen(2, 1, ring.elem(1)), gen(1, 2, ring.elem(4)), ideal, 2)


def test_relative_to_level():
    """Structured conjugate products lower to Level words with equal value."""
    ring = Zmod(16)
    ideal = Ideal(ring, (ring.elem(2),))
    square = ideal.square()
    rng = random.Random(29)
    sq_members = list(square.members())
    for _ in range(40):
        items = []
        for _ in range(rng.randrange(1, 4)):
            conj = random_word(ring, 3, rng, length=rng.randrange(0, 3))
            i = rng.randrange(1, 4)
            j = rng.choice([t for t in (1, 2, 3) if t != i])
            core = gen(i, j, rng.choice(sq_members))
            items.append((conj, core))
        rel = RelativeWord(ring, 3, tuple(items))
        try:
            low = relative_to_level(rel, ideal)
        except NonMemberError:
            continue  # a double-aligned chain can legitimately fail
        assert payload_grid(low.evaluate()) == payload_grid(rel.evaluate())
        assert classify(low, Level(ideal))


def test_relative_to_level_flat_fast_path():
    """A word already at the level passes through unchanged."""
    ring = Zmod(16)
    ideal = Ideal(ring, (ring.elem(2),))
    conj = Word(ring, 3, ())
    rel = RelativeWord(ring, 3, ((conj, gen(1, 2, ring.elem(4))),))
    low = relative_to_level(rel, ideal)
    assert low.letters == rel.flatten().letters


def test_level_to_first_rewrites():
    """Interior letters push into first-row/column form with equal value."""
    ring = Zmod(16)
    ideal = Ideal(ring, (ring.elem(2),))
    members = [e for e in ideal.members()]
    rng = random.Random(31)
    for n in (3, 4):
        for _ in range(30):
            w = random_word(ring, n, rng, length=rng.randrange(1, 6), pool=members)
            rc = level_to_firstrowcol(w)
            cr = level_to_firstcolrow(w)
            assert payload_grid(rc.evaluate()) == payload_grid(w.evaluate())
            assert payload_grid(cr.evaluate()) == payload_grid(w.evaluate())
            assert classify(rc, FirstRowCol(ideal))
            assert classify(cr, FirstColRow(ideal))


def test_discrepancy_telescope_both_orientations():
    """Psi * PsiTilde^-1 telescopes into conjugated cores, both prefix styles."""
    ring = Zmod(16)
    ideal = Ideal(ring, (ring.elem(2),))
    rng = random.Random(33)
    members = [e.payload for e in ideal.members()]
    for _ in range(40):
        n = rng.choice((3, 4))
        aligned = []
        for _ in range(rng.randrange(1, 5)):
            i = rng.randrange(1, n + 1)
            j = rng.choice([t for t in range(1, n + 1) if t != i])
            u = rng.randrange(16)
            v = (u - rng.choice(members)) % 16
            aligned.append((i, j, ring.elem(u), ring.elem(v)))
        psi = Word(ring, n, tuple(gen(i, j, u) for (i, j, u, _) in aligned))
        tilde = Word(ring, n, tuple(gen(i, j, v) for (i, j, _, v) in aligned))
        want = payload_grid(mat_mul(psi.evaluate(), tilde.inverse().evaluate()))
        for right in (False, True):
            rel = discrepancy_telescope(ring, n, aligned, ideal, right_prefixes=right)
            assert classify(rel, Relative(ideal))
            assert payload_grid(rel.evaluate()) == want, f"telescope broken (right={right})"


def test_discrepancy_telescope_rejects_misaligned():
    """Entries that differ outside the ideal are rejected."""
    ring = Zmod(16)
    ideal = Ideal(ring, (ring.elem(2),))
    with pytest.raises(NonMemberError):
        discrepancy_telescope(ring, 3, [(1, 2, ring.elem(3), ring.elem(0))], ideal)


def test_whitehead_word():
    """The six-letter word realizes diag(u, u^-1) at the chosen slot."""
    ring = Zmod(9)
    for u_payload in (1, 2, 4, 5, 7, 8):
        u = ring.elem(u_payload)
        w = whitehead(u, 3, (2, 3))
        m = w.evaluate()
        grid = payload_grid(m)
        inv = ring.try_inverse(u_payload)
        want = [[1, 0, 0], [0, u_payload, 0], [0, 0, inv]]
        assert grid == want, f"whitehead({u_payload}) gave {grid}"
    with pytest.raises(NonUnitError):
        whitehead(ring.elem(3), 3)
    with pytest.raises(ShapeError):
        whitehead(ring.elem(2), 3, (1, 1))


def test_word_json_round_trip():
    """Letters, words, and relative words survive the JSON codec."""
    ring = Zmod(16)
    rng = random.Random(37)
    for _ in range(10):
        w = random_word(ring, 3, rng)
        assert word_from_json(ring, word_to_json(w)) == w
        for l in w.letters:
            assert letter_from_json(ring, letter_to_json(l)) == l
    conj = random_word(ring, 3, rng, length=2)
    rel = RelativeWord(ring, 3, ((conj, gen(1, 2, ring.elem(4))),))
    assert relative_word_from_json(ring, relative_word_to_json(rel)) == rel


def test_flat_word_parses_as_relative():
    """A flat word JSON (letters without conjugators) loads with empty conjugators."""
    ring = Zmod(16)
    w = Word(ring, 3, (gen(1, 2, ring.elem(4)), gen(2, 3, ring.elem(8))))
    rel = relative_word_from_json(ring, word_to_json(w))
    assert all(len(conj) == 0 for conj, _ in rel.items)
    assert rel.flatten().letters == w.letters
