"""Carry a unimodular element of A + P to (1, 0) for a projective module P."""

from umcert import (
    LindelData,
    Matrix,
    ProjPresentation,
    RowVector,
    Zmod,
    apply_module_word,
    complete_module_element,
    verify_lindel,
)
from umcert.projmod import Delta, Gamma

ring = Zmod(16)
e = Matrix(ring, 3, 3, tuple(ring.elem(v) for v in (1, 0, 14, 0, 1, 0, 0, 0, 0)))
pres = ProjPresentation(ring, e)
data = LindelData(
    ring.elem(2),
    (RowVector(ring, (1, 0, 14)), RowVector(ring, (0, 1, 0))),
    (RowVector(ring, (2, 0, 0)), RowVector(ring, (0, 2, 0))),
)

print(f"ring: {ring}")
print(f"projector acts on {ring}^{pres.n}; its image is the module P")

report = verify_lindel(pres, data)
print(f"pairing diagonal: {report.pairing_diagonal}")
print(f"spans s*P:        {report.spans_scaled_module}")
print(f"scalar regular:   {report.regular_mod_nilradical}")
assert report.passed

b = ring.elem(5)
q = RowVector(ring, (4, 0, 8))
print(f"\nelement: b = {b.payload}, q = {q.payloads()}")

result = complete_module_element((b, q), pres, data)
print("\nstages:")
for stage in result.stages:
    mark = "ok" if stage.verified else "FAILED"
    print(f"  {stage.name:12s} [{mark}] {stage.detail}")

kinds = {"Delta": 0, "Gamma": 0}
for letter in result.word.letters:
    kinds[type(letter).__name__] += 1
print(f"\nword: {len(result.word)} letters ({kinds['Delta']} Delta, {kinds['Gamma']} Gamma)")

fb, fq = apply_module_word((b, q), result.word)
print(f"(b, q) * word = ({fb.payload}, {fq.payloads()})")
assert fb.is_one() and fq.is_zero()

# applying the inverse word walks back to the original element
back_b, back_q = apply_module_word((fb, fq), result.word.inverse())
assert back_b == b and back_q == q
print("inverse word returns to the original element")
