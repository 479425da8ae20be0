"""Exact semantics: quadruples of subspaces and the derived representation.

A representation is four subspaces of GF(p)^d; terms evaluate into the
subspace lattice.  The derived space X0' collects the summand tuples of
R = Y1 (+) Y2 (+) Y3 (+) Y4 that sum to zero, carries the four elementary
maps phi_i back to X0, and drives all class-level checks.
"""

from quadlat import (
    QuadRep,
    Subspace,
    apply_map,
    canonicalize,
    catalog,
    coxeter_plus,
    e_alpha,
    eval_term,
    format_term,
    parse_term,
    phi_compose,
    prepend,
    semantically_equal,
    seq_from_string,
    tower,
)

# the four-distinct-lines representation of GF(3)^2
rep = QuadRep(3, 2, [
    Subspace.from_rows(3, 2, [[1, 0]]),
    Subspace.from_rows(3, 2, [[0, 1]]),
    Subspace.from_rows(3, 2, [[1, 1]]),
    Subspace.from_rows(3, 2, [[1, 2]]),
])
print("representation:", rep)

t = parse_term("(* e2 (+ e3 e4))")
print(f"evaluating {format_term(t)}: dim {eval_term(t, rep).dim} subspace")

st = coxeter_plus(rep)
print("derived space dimension:", st.plus.dim0)
print("phi_1 + phi_2 + phi_3 + phi_4 == 0:",
      not (sum(st.phi) % rep.p).any())

twr = tower(rep, 3)
m_sq = phi_compose(twr[:2], [1, 1])
m_tr = (phi_compose(twr, [1, 3, 2]) + phi_compose(twr, [1, 4, 2])) % rep.p
print("phi_1 phi_1 == 0:", not m_sq.any())
print("phi_1 phi_3 phi_2 + phi_1 phi_4 phi_2 == 0:", not m_tr.any())

# the class theorem: phi_i maps the class element one level down
c = canonicalize(seq_from_string("21"))
up = prepend(1, c)
lhs = apply_map(st.phi[0], eval_term(e_alpha(c), st.plus))
rhs = eval_term(e_alpha(up), rep)
print(f"phi_1 rho+(e_21) == rho(e_121): {lhs == rhs}")

reps = catalog(2) + catalog(3) + catalog(5)
print("catalog sizes (2, 3, 5):", [len(catalog(p)) for p in (2, 3, 5)])
print("e_1 e_2 == 0 over the catalog?",
      semantically_equal(parse_term("(* e1 e2)"), parse_term("0"), reps))
