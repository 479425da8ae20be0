"""Atomic and admissible lattice polynomials in the four generators.

Terms print as S-expressions: (+ ...) is join, (* ...) is meet, I and 0
are the bounds.  The admissible elements e_alpha / f_alpha0 attach to
sequence classes; the recursive forms gp_e / gp_f rebuild them from
index sets, and the cumulative elements aggregate whole slices.
"""

from quadlat import (
    atomic,
    canonicalize,
    catalog,
    cumulative_e,
    cumulative_f0,
    e_alpha,
    f_alpha0,
    format_term,
    gp_e,
    gp_f,
    inv_cumulative_e,
    semantically_equal,
    seq_from_string,
    unified_e,
)

print("atomic tower a_n^{12}:")
for n in range(4):
    print(f"  n={n}:", format_term(atomic(1, 2, n)))

print()
for text in ("21", "121", "321", "2141"):
    c = canonicalize(seq_from_string(text))
    print(f"class of {text}: {c}")
    print("   e =", format_term(e_alpha(c)))
    print("   f =", format_term(f_alpha0(c)))

reps = catalog(2) + catalog(3) + catalog(5)
print()
print("recursive forms coincide with the table forms on small lengths:")
for text in ("21", "121", "321", "2341"):
    c = canonicalize(seq_from_string(text))
    same_e = semantically_equal(gp_e(seq_from_string(text)), e_alpha(c), reps)
    same_f = semantically_equal(gp_f(seq_from_string(text)), f_alpha0(c), reps)
    print(f"  alpha={text}: e agrees {same_e}, f agrees {same_f}")

print()
print("cumulative elements:")
print("  e_1(2) =", format_term(cumulative_e(1, 2)))
print("  f_0(2) =", format_term(cumulative_f0(2)))
print("  e_1^v(2) =", format_term(inv_cumulative_e(1, 2)))
print("  unified form with (r,s,t)=(0,0,1):", format_term(unified_e(1, 0, 0, 1)))
