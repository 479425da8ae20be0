"""The sixteen-element cube of perfect elements, three ways.

Perfect elements evaluate to 0 or the whole space on every (by
construction indecomposable) catalog representation.  Each cube row has
a coatom description through the h's, an endomorphism description
through s/t/p, and a cumulative description; the suites check all three
agree semantically, and this demo spot-checks level 2.
"""

import json

from quadlat import (
    catalog,
    cube,
    eval_term,
    format_term,
    perfect_check,
    q_poly,
    s_poly,
    semantically_equal,
    t_poly,
)
from quadlat.endo import EndoSpec

print("q_12 =", format_term(q_poly(EndoSpec(1, 2))))
print("s_1  =", format_term(s_poly(1)))
print("t_1  =", format_term(t_poly(1)))
print("gamma_12(e-sum) -> s_2 =", format_term(s_poly(2))[:100], "...")

reps = catalog(2) + catalog(3) + catalog(5)
rows = cube(2)
print()
print("cube level 2, triple agreement per row:")
for row in rows:
    ok = semantically_equal(row.gp, row.cumulative, reps) and semantically_equal(
        row.herrmann, row.cumulative, reps
    )
    print(f"  row {row.row:2d} {row.label:14s} agree={ok}")

print()
print("perfectness of t_2 across the GF(3) catalog:",
      perfect_check(t_poly(2), catalog(3))["ok"])
values = sorted({eval_term(s_poly(2), r).dim == r.dim0 for r in catalog(3)})
print("s_2 image is the whole space on every GF(3) catalog rep:", values == [True])

print()
print("machine-readable cube row 16:")
row = rows[15]
print(json.dumps({"row": row.row, "label": row.label,
                  "cumulative": format_term(row.cumulative)[:80] + "..."}, indent=2))
