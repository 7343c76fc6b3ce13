"""Extended affine Weyl group of GL_e: lengths, rotations, and volumes.

The group is Z^e ⋊ S_e.  Its length-zero generator Pi rotates the affine
diagram; Pi^e is the central uniformizer translation.  This script walks
through the three invariants pinning Pi down, compares the closed-form
length with the BFS word-length oracle, classifies parahoric types up to
rotation, and evaluates their q-power volumes.
"""

from hecke_forge import weyl

E = 3

print(f"=== rank e = {E} ===")
pi = weyl.pi_element(E)
print(f"Pi = translation {pi.trans}, permutation {pi.perm} (0-based images)")
print(f"length(Pi) = {weyl.length(pi)}")
print(f"Pi^{E} = {weyl.pi_power(E, E)}  <- the central translation")

print("\nconjugation by Pi rotates the affine generators:")
for i in range(E):
    s = weyl.simple_reflection(E, i)
    conj = weyl.mul(weyl.mul(pi, s), weyl.inv(pi))
    print(f"  Pi s_{i} Pi^-1 == s_{(i + 1) % E}: "
          f"{conj == weyl.simple_reflection(E, i + 1)}")

print("\nclosed-form length vs BFS word length (ball of radius 4):")
ball = weyl.bfs_ball(E, 4)
mismatches = sum(1 for x, d in ball.items() if weyl.length(x) != d)
print(f"  {len(ball)} elements, {mismatches} mismatches")

print("\nparahoric types up to rotation:")
for T in weyl.orbit_reps(E):
    u, n = weyl.period_and_n(T)
    print(f"  T={sorted(T.nodes) or '{}'}: simplex dim d={T.d}, "
          f"period u={u}, n={n}, rotation sign epsilon={weyl.epsilon(T)}")

print("\nvolumes at q = 2 (Iwahori has volume 1):")
for T in weyl.orbit_reps(E):
    print(f"  vol(P_T) for T={sorted(T.nodes) or '{}'}: "
          f"{weyl.parahoric_volume(T, 2)}")
print(f"full type equals the Poincare polynomial at q: "
      f"p_{E-1}(2) = {weyl.poincare_poly(E)(2)}")

print("\nthe empty-type sign rule epsilon = (-1)^(e-1):")
for e in range(1, 9):
    print(f"  e={e}: {weyl.epsilon(weyl.parahoric_type((), e)):+d}")
