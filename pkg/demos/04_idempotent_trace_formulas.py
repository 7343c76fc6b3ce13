"""The intertwining idempotent and the coset-sum trace formula.

Ind_B^G of a torus character chi∘diag has an e!-dimensional commutant
with a distinguished idempotent e_tau cutting out the one-dimensional
constituent chi∘det.  The trace of that constituent can be recovered
without ever building it, through the coset sum

    Tr pi_e(gamma) = (1/lam1) (dim pi_e / dim sigma) (|H|/|G|)
                     * sum over H\\G of [Tr e_tau](x gamma x^-1)

and through the full-group conjugation sum.  Both are checked against the
explicit subrepresentation.
"""

from hecke_forge import repth
from hecke_forge.finglq import MultChar, all_characters, get_field, gl_group, mat_det

E, Q = 2, 3
chi = MultChar(Q, 1)
G = gl_group(E, Q)
F = get_field(Q)

print(f"=== GL({E},{Q}), character k={chi.k} of F_{Q}^x ===")
basis = repth.finite_hecke_basis(E, Q, chi)
print(f"intertwining basis: {len(basis)} functions, "
      f"commutant dimension {repth.intertwining_dimension(E, Q, chi)}")

et = repth.e_tau(E, Q, chi)
print(f"e_tau(1) = {et(G.identity)}  "
      f"(1/(p(q)|B|) = lam1)")
print(f"dim tau = Tr(e_tau(1)) |G| = {repth.dim_from_e_tau(E, Q, chi)}")

ind = repth.induce(E, Q, chi)
sub = repth.subrep_from_idempotent(et, ind)
print(f"induced module dim {ind.dim}; cut-out constituent dim {sub.dim}")

print("\ntrace formula vs the explicit subrepresentation:")
for cls in G.conjugacy_classes():
    gamma = cls[0]
    via_formula = repth.trace_via_coset_sum(gamma, et, ind)
    via_module = sub.char_value(gamma)
    via_sum = repth.char_generalized_trivial(gamma, E, Q, chi)
    det_val = chi(mat_det(F, gamma))
    print(f"  class size {len(cls):2d}: coset sum {complex(via_formula):.3f}  "
          f"module {via_module:.3f}  full sum {complex(via_sum):.3f}  "
          f"chi(det) {complex(det_val):.3f}")

print("\nall characters of F_q^x give dim tau = 1:")
for c in all_characters(Q):
    print(f"  k={c.k}: dim = {repth.dim_from_e_tau(E, Q, c)}")
