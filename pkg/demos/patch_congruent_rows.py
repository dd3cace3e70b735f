"""Glue a row to the unit row over a fiber product and factor the discrepancy."""

from umcert import Ideal, RowVector, Zmod, complete_relative_row, row_act, unit_row

ring = Zmod(16)
s = ring.elem(2)
target = RowVector(ring, (5, 4, 8))

print(f"ring: {ring}, scalar s = {s.payload}")
print(f"target row: {target.payloads()}  (congruent to (1,0,0) mod s^2)")

result = complete_relative_row(target, s)

print("\npipeline stages:")
for stage in result.stages:
    mark = "ok" if stage.verified else "FAILED"
    print(f"  {stage.name:10s} [{mark}] {stage.detail}")

pair_ring = result.patched.pair.vector.ring
print(f"\npair ring: {pair_ring}  (size {pair_ring.size()})")
print(f"glued row: {result.patched.pair.vector.payloads()}")
print(f"fiber completion: {len(result.fiber_word)} letters")
print(f"telescoped discrepancy: {len(result.level_word)} letters at level {result.level_ideal.generators[0].payload}")

word = result.word
print(f"\nfinal word: {len(word)} letters, first-row/column form")
for letter in word.letters[:6]:
    sign = "-" if letter.inv else "+"
    print(f"  E[{letter.i},{letter.j}]({sign}{letter.a.payload})")
if len(word) > 6:
    print(f"  ... and {len(word) - 6} more")

moved = row_act(target, word.evaluate())
print(f"\ntarget * eval(word) = {moved.payloads()}")
assert moved == unit_row(ring, 3)

# every letter obeys the first-row/column discipline for the ideal (2)
level = Ideal(ring, (s,))
for letter in word.letters:
    assert letter.j == 1 or (letter.i == 1 and level.contains(letter.entry()))
print("every letter touches column 1, or lives in row 1 with an entry in (2)")
