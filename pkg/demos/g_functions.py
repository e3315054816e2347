"""Expand a few g functions in the Schur and monomial bases and cross-check them
against the operator route."""
from multihopf import operators, series
from multihopf.shapes import Partition, SkewShape

for lam in [(1,), (2, 1), (3, 2, 2)]:
    g = series.family_in_schur("g", SkewShape(Partition(lam)))
    print(f"g{lam} in s:", dict(sorted(g.coeffs.items(), key=lambda kv: (-sum(kv[0]), kv[0]))))
    print(f"g{lam} in m:", series.s_to_m(g.coeffs))

lam, nvars, degree = Partition((2, 1)), 3, 5
by_tableaux = series.family_poly("g", SkewShape(lam), nvars, degree)
by_operators = operators.series_via_operators("g", lam, nvars, degree)
print("operator route agrees with tableaux:", by_tableaux == by_operators)
