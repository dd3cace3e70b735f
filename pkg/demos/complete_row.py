"""Verify a unimodular row and search for an elementary completion word."""

from umcert import FiniteBFS, NonUnimodular, RowVector, Zmod, complete, row_act, unit_row, verify_um

ring = Zmod(16)
row = RowVector(ring, (5, 4, 8))

print(f"ring: {ring}")
print(f"row:  {row.payloads()}")

um = verify_um(row)
if isinstance(um, NonUnimodular):
    raise SystemExit(f"not unimodular: {um.reason}")
witness = um.witness.payloads()
pairing = row.dot(um.witness)
print(f"witness: {witness}  (pairs to {pairing.payload})")

word = complete(um, oracle=FiniteBFS(depth=6))
print(f"completion word: {len(word)} letters")
for letter in word.letters:
    sign = "-" if letter.inv else "+"
    print(f"  E[{letter.i},{letter.j}]({sign}{letter.a.payload})")

moved = row_act(row, word.evaluate())
print(f"row * eval(word) = {moved.payloads()}")
assert moved == unit_row(ring, 3), "completion must land on the first unit row"

# the same verifier refuses rows whose entries sit inside a proper ideal
bad = verify_um(RowVector(ring, (2, 4, 8)))
print(f"(2, 4, 8) verdict: {type(bad).__name__} -- {bad.reason}")
