"""Pump L_(2,1) up a few degrees and watch the multi-fundamental L~_(2,1) appear
as the sum of its homogeneous pieces."""
from multihopf import hopf, ppartitions
from multihopf.series import BasisElement
from multihopf.shapes import SkewShape

base = BasisElement("L", {(2, 1): 1})
for i in range(4):
    print(f"pump {i}:", dict(hopf.pump(base, i).coeffs))

print("L~_(2,1) up to degree 5:", dict(hopf.ltilde_in_L((2, 1), 5).coeffs))

P = ppartitions.LabeledPoset.from_shape(SkewShape((3, 1)))
for n in (4, 5):
    print(f"multi-Jordan-Holder words of length {n}:",
          [str(w) for w in ppartitions.multi_jordan_holder(P, n)])
