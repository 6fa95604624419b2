"""Frozen sign and action conventions.

Sign conventions for cube slicings, symplectic pairings, and composition vary
across the literature.  Every choice this library makes is pinned here as a
constant, each one validated by an exact symbolic identity in the test suite
(and re-checked by `cube-lab verify`).  Nothing in this file is tunable: the
constants record the outcome of those computations.

1. Form action.  (g.q)(v) = q(v.g) for the row vector v = (x, y).  This is a
   left action of SL2.

2. Cube action.  Factor i of a matrix triple acts on tensor index i by
   e1 -> g[0][0] e1 + g[0][1] e2,  e2 -> g[1][0] e1 + g[1][1] e2  (the "row"
   convention).  With the fixed tensor dictionary this is the unique
   convention under which the torus-conjugate stabilizer matrices h(alpha)
   (cube_lab.centralizers.centralizer_matrix) fix the slice cube
   kostant_cube(a^2) exactly.  It composes as a right action:
   transformed(g).transformed(h) == transformed((g1 h1, g2 h2, g3 h3)).

3. Equivariance.  With the two conventions above,
       forms(C.transformed((g1,g2,g3)))[i] == act(g_i.transpose(), forms(C)[i]).
   The transpose is forced: cubes are vectors while forms are functions.

4. Compact determinant formula.  The explicit expansions
   det(M_i)x^2 + B_i xy + det(N_i)y^2 used by forms() equal
   +det(M_i x + N_i y); the compact formula -det(M_i x + N_i y) sometimes
   quoted in the literature has the opposite sign (COMPACT_DET_SIGN).

5. Gram formulation.  hyperdet_gram == GRAM_SIGN * hyperdet as polynomials
   in the 8 cube entries, for the pairing <e1(x)e1, e2(x)e2> = 1,
   <e1(x)e2, e2(x)e1> = -1.

6. Moment map.  For xi in sl2 acting in factor i (row-convention derivative),
   (1/2) omega(C, xi.C) == Tr(A*_i xi), where A*_i is the traceless matrix,
   under the dictionary (m, n; k, -m) <-> k x^2 + 2m xy - n y^2, of the
   MIRROR form (A_i, -B_i, C_i) of forms(C)[i], and omega is the product of
   the standard symplectic forms omega(e1, e2) = +1.  The mirror twist
   (y -> -y on the form side) is forced by the same vector-versus-function
   transpose as item 3; it is recorded here, not adjusted away.

7. Diagonalization of the slice.  The slice family is parametrized by a^2,
   so the root label a carries a gauge a -> -a.  The triple with all three
   factors (-1, 1/a; a, 1) sends kostant_cube(a^2) to
       -4 * (a^2, (0,0,0), -1/a, (0,0,0)),
   and the same display read with the other root (factors (-1, -1/a; -a, 1))
   sends it to -4 * (a^2, (0,0,0), +1/a, (0,0,0)); both are verified
   symbolically, so the quoted form of this identity with +1/a is the other
   gauge.  The stabilizer matrices are gauge-stable:
   h(alpha; -a) = h(1/alpha; a), matching the (a, alpha) -> (-a, 1/alpha)
   descent in the regular-centralizer coordinates.  One normalization fact
   remains and is recorded rather than adjusted: each factor of the triple
   has determinant -2 (it lives in GL2, not SL2; an SL2 rescale would need
   sqrt(-2)).  Neither fact affects the stabilizer statements: the image is
   a two-corner diagonal cube in both gauges, and conjugation is blind to
   scalar normalization.

8. Composition via cubes.  cube_from_forms(q1, q2) produces a cube whose
   first two forms are equivalent to q1 and q2 (positive definite); the
   third form is negative definite, and under the orientation convention
   [negative definite (p, m, r)] := class of (-p, m, -r)  (= the inverse of
   the class of -(p,m,r)) the three classes multiply to the identity.
   Equivalently: the third form represents the INVERSE of the composition
   class of q1 and q2 (THIRD_FORM_IS_INVERSE).

9. Slice discriminant signs.  cubic_disc(kostant_cubic(s)) == -s and
   quartic_ij(kostant_quartic(d, e)) == (-d, -e) exactly; statements in the
   literature describing these slices as plain sections elide the signs.
   pair_disc(kostant_pair(s)) == s with no sign.

10. Quartic slice versus 2-torsion.  The double cover z^2 = f(x, 1) of the
    quartic slice 4x^3 y + d xy^3 + e y^4 is z^2 = 4x^3 + dx + e, whose
    Jacobian is y^2 = x^3 + (d/4)x + (e/4) (integrally: Y^2 = X^3 + 4dX +
    16e), NOT y^2 = x^3 + dx + e.  quartic_stab_count_fp therefore uses the
    reparametrized slice 4x^3 y + 4d xy^3 + 4e y^4, whose PGL2(F_p)
    stabilizer order equals 1 + #{x in F_p : x^3 + dx + e = 0} on every
    nondegenerate fiber (verified exhaustively for p = 5, 7, 11).
"""

# explicit form expansions equal COMPACT_DET_SIGN * det(M_i x + N_i y)
COMPACT_DET_SIGN = 1

# hyperdet_gram == GRAM_SIGN * hyperdet
GRAM_SIGN = -1

# (1/2) omega(C, xi.C) == Tr(A*_i xi) with A*_i the matrix of the mirror
# form (A_i, -B_i, C_i)
MOMENT_MIRROR_TWIST = True

# third slicing form of a composition cube lies in the inverse of the
# composition class (after the negative-definite normalization of item 8)
THIRD_FORM_IS_INVERSE = True

# determinant of each factor of the diagonalizing triple of item 7
DIAG_TRIPLE_FACTOR_DET = -2

# image of kostant_cube(a^2) under the root-a diagonalizing triple is
# -4 * (a^2, 0, DIAG_IMAGE_LAST_SIGN * a^(-1), 0); the root -a gauge
# flips this sign
DIAG_IMAGE_LAST_SIGN = -1


def conventions_text() -> str:
    return __doc__
