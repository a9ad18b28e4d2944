"""Construction and classification of adapted lattice bases.

Setting: a rank-2g lattice U carrying a principal alternating form, with a
pair of orthogonal sublattices U_A (rank 2g-2, polarization type
(1, ..., 1, d)) and U_E (rank 2, type (d)).  An *adapted basis* is a basis
u_1, ..., u_g, u_{g+1}, ..., u_{2g-2}, u_{2g+1}, u_{2g+2} of U such that,
with the derived vectors

    u_{2g-1} = d * u_{2g+1} - u_g,      u_{2g} = d * u_{2g+2} - u_{g-1},

the tuple u_1..u_{g-1}, u_{g+1}..u_{2g-1} is a symplectic basis of U_A of
type (1, ..., 1, d) and u_g, u_{2g} is a symplectic basis of U_E of type
(d).  Such a basis always exists in the geometric situation; the
construction below mirrors the existence proof, made fully explicit:

1.  symplectic normal forms of U_A and U_E (W = U_A + U_E, type
    (1,...,1,d,d) with elementary-divisor product d^2, matrix determinant
    d^4);
2.  Smith normal form of the inclusion W -> U; the quotient must be
    (Z/d)^2, generated by two vectors v_1, v_2;
3.  re-choose v_1, v_2 so that the U_E-components of d*v_1, d*v_2 are
    exactly a symplectic pair (x, y) of U_E — possible precisely when the
    quotient projects isomorphically onto the discriminant group of U_E;
4.  translate v_2 by an element of U_A to force (a', a) = d, where
    d*v_1 = a + x and d*v_2 = a' + y;
5.  split off the rank-(2g-4) orthogonal complement of (a, a') inside U_A
    by an integral projection and bring it to principal form.

Basis changes: for M in SL_2(Z) acting on the pair (u_g, u_{2g}), the
transformed tuple is again adapted iff M is congruent to the identity mod
d.  ``change_basis`` performs the division step through exact lattice
arithmetic (solving in the old basis), so that equivalence is genuinely
executable rather than a congruence test on M.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InvariantViolation,
    NotUnimodular,
    QuotientNotBicyclic,
)
from .intlinalg import (
    IntMatrix,
    column_lattice_basis,
    combo,
    gram_in_basis,
    mat_vec,
    pairing,
    rank,
    smith_normal_form,
    solve_integer,
    xgcd,
)
from .lattice_core import (
    AlternatingForm,
    block_normal_gram,
    coprincipal_type,
    frobenius_basis,
    polarization_type,
    principal_type,
    standard_symplectic_gram,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class AdaptedBasisProblem:
    """Input data: ambient form plus column-generator matrices for U, U_A, U_E."""

    g: int
    d: int
    U: IntMatrix
    form: AlternatingForm
    U_A: IntMatrix
    U_E: IntMatrix


class _NotAdapted:
    """Sentinel: the transformed vectors do not form an adapted basis."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "NotAdapted"

    def __bool__(self) -> bool:
        return False


NOT_ADAPTED = _NotAdapted()


@dataclass(frozen=True)
class AdaptedBasis:
    """The 2g listed vectors of an adapted basis, in the order
    u_1..u_g, u_{g+1}..u_{2g-2}, u_{2g+1}, u_{2g+2} (ambient coordinates);
    u_{2g-1} and u_{2g} are derived."""

    g: int
    d: int
    vectors: tuple[Vector, ...]

    def __post_init__(self):
        if self.g < 2 or self.d < 2:
            raise DimensionMismatch("adapted bases need g >= 2 and d >= 2")
        if len(self.vectors) != 2 * self.g:
            raise DimensionMismatch(
                f"expected {2 * self.g} vectors, got {len(self.vectors)}"
            )
        n = len(self.vectors[0])
        if any(len(v) != n for v in self.vectors):
            raise DimensionMismatch("ambient dimensions differ between vectors")

    def u(self, i: int) -> Vector:
        """The section u_i, 1 <= i <= 2g+2 (derived vectors computed)."""
        g, d = self.g, self.d
        if 1 <= i <= 2 * g - 2:
            return self.vectors[i - 1]
        if i == 2 * g + 1:
            return self.vectors[2 * g - 2]
        if i == 2 * g + 2:
            return self.vectors[2 * g - 1]
        if i == 2 * g - 1:
            return combo([self.u(2 * g + 1), self.u(g)], [d, -1])
        if i == 2 * g:
            return combo([self.u(2 * g + 2), self.u(g - 1)], [d, -1])
        raise DimensionMismatch(f"section index {i} out of range")

    def listed_matrix(self) -> IntMatrix:
        return IntMatrix.from_columns(self.vectors)

    def u_a_part(self) -> list[Vector]:
        """u_1..u_{g-1}, u_{g+1}..u_{2g-1} — the symplectic basis of U_A."""
        g = self.g
        return [self.u(i) for i in range(1, g)] + [
            self.u(i) for i in range(g + 1, 2 * g)
        ]

    def u_e_part(self) -> tuple[Vector, Vector]:
        """u_g, u_{2g} — the symplectic basis of U_E."""
        return self.u(self.g), self.u(2 * self.g)


def canonical_problem(g: int, d: int) -> AdaptedBasisProblem:
    """The reference configuration: ambient Z^(2g) with the standard
    principal form, U the full lattice, and

        U_A = <eps_1..eps_{g-1}, eps_{g+1}..eps_{2g-2}, d*eps_{2g-1} - eps_g>,
        U_E = <eps_g, d*eps_{2g} - eps_{g-1}>.
    """
    n = 2 * g
    ident = IntMatrix.identity(n)
    eps = ident.columns()
    ua_cols = (
        eps[: g - 1]
        + eps[g : 2 * g - 2]
        + [combo([eps[2 * g - 2], eps[g - 1]], [d, -1])]
    )
    ue_cols = [eps[g - 1], combo([eps[2 * g - 1], eps[g - 2]], [d, -1])]
    return AdaptedBasisProblem(
        g=g,
        d=d,
        U=ident,
        form=AlternatingForm(standard_symplectic_gram(g)),
        U_A=IntMatrix.from_columns(ua_cols),
        U_E=IntMatrix.from_columns(ue_cols),
    )


def _validate_problem(p: AdaptedBasisProblem) -> None:
    g, d = p.g, p.d
    if g < 2:
        raise InvariantViolation("genus must be at least 2")
    if d < 2:
        raise InvariantViolation("associated degree must be at least 2")
    n = p.form.dim
    for name, mat, cols in (
        ("U", p.U, 2 * g),
        ("U_A", p.U_A, 2 * g - 2),
        ("U_E", p.U_E, 2),
    ):
        if mat.rows != n:
            raise InvariantViolation(f"{name} does not live in the ambient space")
        if mat.cols != cols:
            raise InvariantViolation(f"{name} must have {cols} generator columns")
    if rank(p.U) != 2 * g:
        raise InvariantViolation("U does not have full rank 2g")
    if solve_integer(p.U, p.U_A) is None:
        raise InvariantViolation("U_A is not contained in U")
    if solve_integer(p.U, p.U_E) is None:
        raise InvariantViolation("U_E is not contained in U")
    joint = IntMatrix.from_columns(p.U_A.columns() + p.U_E.columns())
    if rank(joint) != 2 * g:
        raise InvariantViolation("U_A and U_E intersect nontrivially")
    if polarization_type(AlternatingForm(gram_in_basis(p.form.gram, p.U))) != principal_type(g):
        raise InvariantViolation("form restricted to U is not principal")
    if polarization_type(AlternatingForm(gram_in_basis(p.form.gram, p.U_A))) != coprincipal_type(g - 1, d):
        raise InvariantViolation(
            f"form restricted to U_A is not of type {coprincipal_type(g - 1, d).divisors}"
        )
    if polarization_type(AlternatingForm(gram_in_basis(p.form.gram, p.U_E))) != coprincipal_type(1, d):
        raise InvariantViolation(f"form restricted to U_E is not of type ({d},)")
    if not (p.U_A.transpose() * p.form.gram * p.U_E).is_zero():
        raise InvariantViolation("U_A and U_E are not orthogonal")


def _coprime_congruent_pair(alpha: int, beta: int, d: int) -> tuple[int, int]:
    """Some (p, q) == (alpha, beta) mod d with gcd(p, q) = 1.

    Requires gcd(alpha, beta, d) = 1.  For every prime l dividing both the
    first coordinate and d, l cannot divide beta, so the scan below only has
    to dodge the primes of the first coordinate away from d; a valid offset
    exists within their radical.
    """
    a, b = alpha % d, beta % d
    if a == 0 and b == 0:
        raise InvariantViolation("frame is degenerate modulo d")
    if a == 0:
        return d, b  # gcd(d, beta) = 1 here
    if b == 0:
        return a, d
    k = 0
    while xgcd(a, b + k * d)[0] != 1:
        k += 1
    return a, b + k * d


def _divide_in_lattice(
    u: IntMatrix, numerator: Vector, d: int
) -> Vector:
    """The vector v in the column lattice of ``u`` with d*v = numerator."""
    coords = solve_integer(u, IntMatrix.from_columns([numerator]))
    assert coords is not None, "numerator does not lie in the lattice"
    col = coords.column(0)
    assert all(c % d == 0 for c in col), "numerator is not divisible"
    return mat_vec(u, tuple(c // d for c in col))


def construct_adapted_basis(p: AdaptedBasisProblem) -> AdaptedBasis:
    """Produce an adapted basis for a valid problem (see module docstring)."""
    _validate_problem(p)
    g, d, gram = p.g, p.d, p.form.gram

    # symplectic normal forms of the two sublattices
    basis_a, _ = frobenius_basis(AlternatingForm(gram_in_basis(gram, p.U_A)))
    cols_a = [mat_vec(p.U_A, c) for c in basis_a.columns()]  # e_1..e_{g-1}, f_1..f_{g-1}
    basis_e, _ = frobenius_basis(AlternatingForm(gram_in_basis(gram, p.U_E)))
    x, y = (mat_vec(p.U_E, c) for c in basis_e.columns())  # (x, y) = d

    w_cols = cols_a + [x, y]
    w_mat = IntMatrix.from_columns(w_cols)

    # quotient U / (U_A + U_E) via the Smith form of the inclusion
    coords = solve_integer(p.U, w_mat)
    assert coords is not None  # containment was validated
    snf = smith_normal_form(coords)
    expected = (1,) * (2 * g - 2) + (d, d)
    if snf.diagonal() != expected:
        raise QuotientNotBicyclic(
            f"U/(U_A + U_E) has invariant factors {snf.diagonal()}, "
            f"expected {expected}"
        )
    v1 = mat_vec(p.U, snf.s_inv.column(2 * g - 2))
    v2 = mat_vec(p.U, snf.s_inv.column(2 * g - 1))

    def split(v: Vector) -> tuple[Vector, Vector, tuple[int, ...]]:
        """d*v = a + b with a in U_A, b in U_E; returns (a, b, coords)."""
        dv = IntMatrix.from_columns([tuple(d * t for t in v)])
        c = solve_integer(w_mat, dv)
        if c is None:
            raise InvariantViolation("d * v does not lie in U_A + U_E")
        cv = c.column(0)
        a = combo(cols_a, cv[: 2 * g - 2])
        b = combo([x, y], cv[2 * g - 2 :])
        return a, b, cv

    # --- step 3: force the U_E-components to be exactly (x, y) -------------
    _, _, c1 = split(v1)
    _, _, c2 = split(v2)
    m_e = ((c1[2 * g - 2], c2[2 * g - 2]), (c1[2 * g - 1], c2[2 * g - 1]))
    det_e = m_e[0][0] * m_e[1][1] - m_e[0][1] * m_e[1][0]
    gcd_e, inv_det, _ = xgcd(det_e % d, d)
    if gcd_e != 1:
        raise InvariantViolation(
            "quotient of U by U_A + U_E does not project isomorphically "
            "onto the discriminant group of U_E"
        )
    # inverse of m_e modulo d, columns give the new generator combinations
    adj = ((m_e[1][1], -m_e[0][1]), (-m_e[1][0], m_e[0][0]))
    sel = [[(inv_det * adj[i][j]) % d for j in range(2)] for i in range(2)]
    v1, v2 = (
        combo([v1, v2], [sel[0][0], sel[1][0]]),
        combo([v1, v2], [sel[0][1], sel[1][1]]),
    )

    def settle(v: Vector, target: Vector, target_coords: tuple[int, int]) -> Vector:
        """Translate v by an element of U_E so the E-part of d*v equals target."""
        _, _, cv = split(v)
        cx, cy = cv[2 * g - 2], cv[2 * g - 1]
        qx, rx = divmod(cx - target_coords[0], d)
        qy, ry = divmod(cy - target_coords[1], d)
        assert rx == 0 and ry == 0, "generator change failed mod d"
        return combo([v, x, y], [1, -qx, -qy])

    v1 = settle(v1, x, (1, 0))
    v2 = settle(v2, y, (0, 1))
    a1, b1, _ = split(v1)
    a2, b2, _ = split(v2)
    assert b1 == x and b2 == y

    # --- step 4: normalize the U_A-side pairing to (a2, a1) = d ------------
    # (a1, a2) = -d + j*d^2 by integrality of (v1, v2).  Translating v1 by
    # w1 and v2 by w2 (both in U_A) shifts j by (v1,w2) + (w1,v2) + (w1,w2),
    # and j = 0 is always reachable: for g >= 3 a hyperbolic pair of U_A
    # kills any j exactly, and for g = 2 the coordinate frame of (a2, a1)
    # lifts from SL2(Z/d) to SL2(Z).
    pa = pairing(gram, a1, a2)
    j, rem = divmod(pa + d, d * d)
    assert rem == 0, "cross pairing inconsistent with an integral lattice"
    if j and g >= 3:
        e1, f1 = cols_a[0], cols_a[g - 1]  # (e1, f1) = 1
        k = 1 - pairing(gram, v1, f1)
        t = -j - k * pairing(gram, e1, v2)
        v1 = combo([v1, e1], [1, k])
        v2 = combo([v2, f1], [1, t])
        a1, b1, _ = split(v1)
        a2, b2, _ = split(v2)
        assert b1 == x and b2 == y
        pa = pairing(gram, a1, a2)
    elif j:  # g == 2: U_A = <e, f> with (e, f) = d
        coords_a = solve_integer(
            IntMatrix.from_columns(cols_a), IntMatrix.from_columns([a1, a2])
        )
        assert coords_a is not None
        (al1, al2), (be1, be2) = coords_a.entries()
        # (a1, a2) = -d + j*d^2 forces al_i, be_i to frame SL2(Z/d); lift
        # the frame to an exact determinant-1 pair of rows
        pq = _coprime_congruent_pair(al2, be2, d)
        _, lam, mu = xgcd(*pq)
        r0, s0 = -mu, lam  # pq[0]*s0 - pq[1]*r0 = 1
        k = (lam * (al1 - r0) + mu * (be1 - s0)) % d
        rs = (r0 + k * pq[0], s0 + k * pq[1])
        assert (rs[0] - al1) % d == 0 and (rs[1] - be1) % d == 0
        a2 = combo(cols_a, list(pq))
        a1 = combo(cols_a, list(rs))
        v1 = _divide_in_lattice(p.U, combo([a1, x], [1, 1]), d)
        v2 = _divide_in_lattice(p.U, combo([y, a2], [1, 1]), d)
        b1, b2 = x, y
        pa = pairing(gram, a1, a2)
    assert pa == -d, "normalization failed to reach (a1, a2) = -d"

    # --- step 5: orthogonal complement of (a1, a2) inside U_A ---------------
    if g == 2:
        k_e: list[Vector] = []
        k_f: list[Vector] = []
    else:
        projected = []
        for t in cols_a:
            # pi(t) = t + (t, v2)*a1 - (t, v1)*a2 kills pairings with a1, a2
            ct2 = pairing(gram, t, v2)
            ct1 = pairing(gram, t, v1)
            projected.append(combo([t, a1, a2], [1, ct2, -ct1]))
        k_cols = column_lattice_basis(IntMatrix.from_columns(projected))
        assert len(k_cols) == 2 * g - 4, "complement has unexpected rank"
        k_mat = IntMatrix.from_columns(k_cols)
        basis_k, ptype_k = frobenius_basis(
            AlternatingForm(gram_in_basis(gram, k_mat))
        )
        assert ptype_k == principal_type(g - 2), "complement is not principal"
        k_ambient = [mat_vec(k_mat, c) for c in basis_k.columns()]
        k_e, k_f = k_ambient[: g - 2], k_ambient[g - 2 :]

    vectors = tuple(k_e) + (a2, b1) + tuple(k_f) + (v1, v2)
    result = AdaptedBasis(g=g, d=d, vectors=vectors)
    assert is_adapted_basis(p, result), "construction postcondition failed"
    return result


def is_adapted_basis(p: AdaptedBasisProblem, b: AdaptedBasis) -> bool:
    """Exact predicate: the three defining conditions of an adapted basis."""
    if b.g != p.g or b.d != p.d:
        raise DimensionMismatch("basis and problem disagree on (g, d)")
    if len(b.vectors[0]) != p.form.dim:
        raise DimensionMismatch("basis vectors live in the wrong ambient space")
    g, d = p.g, p.d

    # (1) the listed vectors are a Z-basis of U
    coords = solve_integer(p.U, b.listed_matrix())
    if coords is None or coords.det() not in (1, -1):
        return False

    # (2) u_1..u_{g-1}, u_{g+1}..u_{2g-1} is a symplectic basis of U_A of
    #     type (1, ..., 1, d)
    part_a = IntMatrix.from_columns(b.u_a_part())
    coords_a = solve_integer(p.U_A, part_a)
    if coords_a is None or coords_a.det() not in (1, -1):
        return False
    if gram_in_basis(p.form.gram, part_a) != block_normal_gram(coprincipal_type(g - 1, d)):
        return False

    # (3) u_g, u_{2g} is a symplectic basis of U_E of type (d)
    part_e = IntMatrix.from_columns(list(b.u_e_part()))
    coords_e = solve_integer(p.U_E, part_e)
    if coords_e is None or coords_e.det() not in (1, -1):
        return False
    if gram_in_basis(p.form.gram, part_e) != IntMatrix([[0, d], [-d, 0]]):
        return False
    return True


def change_basis(
    b: AdaptedBasis, m: IntMatrix, d: int
) -> AdaptedBasis | _NotAdapted:
    """Act by M on (u_g, u_{2g}) and rebuild the glue vectors.

    Returns the new adapted basis, or NOT_ADAPTED when the division by d
    fails inside the lattice (which happens exactly when M is not congruent
    to the identity mod d).  The division is carried out by solving in the
    old basis, not by inspecting M mod d.
    """
    if m.rows != 2 or m.cols != 2:
        raise DimensionMismatch("basis change takes a 2x2 matrix")
    if m.det() != 1:
        raise NotUnimodular(f"determinant {m.det()} != 1")
    g = b.g
    u_g, u_2g = b.u_e_part()
    new_u_g = combo([u_g, u_2g], [m[0, 0], m[0, 1]])
    new_u_2g = combo([u_g, u_2g], [m[1, 0], m[1, 1]])

    old_basis = b.listed_matrix()
    candidates = []
    for num in (
        combo([new_u_g, b.u(2 * g - 1)], [1, 1]),
        combo([new_u_2g, b.u(g - 1)], [1, 1]),
    ):
        coords = solve_integer(old_basis, IntMatrix.from_columns([num]))
        assert coords is not None  # numerator manifestly lies in U
        col = coords.column(0)
        if any(c % d for c in col):
            return NOT_ADAPTED
        candidates.append(mat_vec(old_basis, tuple(c // d for c in col)))
    new_u_2g1, new_u_2g2 = candidates

    vectors = list(b.vectors)
    vectors[g - 1] = new_u_g
    vectors[2 * g - 2] = new_u_2g1
    vectors[2 * g - 1] = new_u_2g2
    return AdaptedBasis(g=g, d=d, vectors=tuple(vectors))
