"""Deterministic random generators shared by the test modules.

Everything takes an explicit ``random.Random`` so that every test run is
reproducible; no global seeding.
"""

from random import Random

from fibsurf import (
    AdaptedBasisProblem,
    AlternatingForm,
    IntMatrix,
    canonical_problem,
    gram_in_basis,
    invert_unimodular,
)

SL2_S = IntMatrix([[0, -1], [1, 0]])
SL2_T = IntMatrix([[1, 1], [0, 1]])
SL2_T_INV = IntMatrix([[1, -1], [0, 1]])


def random_unimodular(rng: Random, n: int, steps: int = 12) -> IntMatrix:
    """Product of row shears, swaps and sign flips; det is +-1 and the
    entries stay small because the shear coefficients are bounded."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        op = rng.randrange(3)
        if op == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            for k in range(n):
                m[i][k] += c * m[j][k]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    return IntMatrix(m)


def random_sl2_word(rng: Random, max_len: int = 8) -> IntMatrix:
    """Random word of length <= max_len in S and T (and T^-1)."""
    m = IntMatrix.identity(2)
    for _ in range(rng.randint(0, max_len)):
        m = m * rng.choice([SL2_S, SL2_T, SL2_T_INV])
    return m


def random_gamma_d_element(rng: Random, d: int, max_len: int = 8) -> IntMatrix:
    """Random word in A = [[1,d],[0,1]], B = [[1,0],[d,1]] and inverses;
    every such product is congruent to the identity modulo d."""
    gens = [
        IntMatrix([[1, d], [0, 1]]),
        IntMatrix([[1, -d], [0, 1]]),
        IntMatrix([[1, 0], [d, 1]]),
        IntMatrix([[1, 0], [-d, 1]]),
    ]
    m = IntMatrix.identity(2)
    for _ in range(rng.randint(1, max_len)):
        m = m * rng.choice(gens)
    return m


def random_symmetric(rng: Random, g: int, bound: int = 2) -> IntMatrix:
    rows = [[0] * g for _ in range(g)]
    for i in range(g):
        for j in range(i, g):
            v = rng.randint(-bound, bound)
            rows[i][j] = v
            rows[j][i] = v
    return IntMatrix(rows)


def random_symplectic(rng: Random, g: int, steps: int = 6) -> IntMatrix:
    """Random element of Sp(2g, Z) as a product of the standard generators
    [[I,B],[0,I]], [[I,0],[C,I]], [[A,0],[0,A^-T]] and J."""
    n = 2 * g
    j_rows = [[0] * n for _ in range(n)]
    for i in range(g):
        j_rows[i][g + i] = 1
        j_rows[g + i][i] = -1
    j_mat = IntMatrix(j_rows)
    m = IntMatrix.identity(n)
    for _ in range(steps):
        kind = rng.randrange(4)
        if kind == 0:
            b = random_symmetric(rng, g, bound=1)
            blk = [[0] * n for _ in range(n)]
            for i in range(n):
                blk[i][i] = 1
            for i in range(g):
                for jj in range(g):
                    blk[i][g + jj] = b[i, jj]
            m = m * IntMatrix(blk)
        elif kind == 1:
            c = random_symmetric(rng, g, bound=1)
            blk = [[0] * n for _ in range(n)]
            for i in range(n):
                blk[i][i] = 1
            for i in range(g):
                for jj in range(g):
                    blk[g + i][jj] = c[i, jj]
            m = m * IntMatrix(blk)
        elif kind == 2:
            a = random_unimodular(rng, g, steps=5)
            a_inv_t = invert_unimodular(a).transpose()
            blk = [[0] * n for _ in range(n)]
            for i in range(g):
                for jj in range(g):
                    blk[i][jj] = a[i, jj]
                    blk[g + i][g + jj] = a_inv_t[i, jj]
            m = m * IntMatrix(blk)
        else:
            m = m * j_mat
    return m


def randomized_problem(rng: Random, g: int, d: int) -> AdaptedBasisProblem:
    """The canonical configuration pushed through a random unimodular change
    of ambient coordinates, with the generator columns of each sublattice
    remixed by further unimodular matrices."""
    base = canonical_problem(g, d)
    n = 2 * g
    r = random_unimodular(rng, n, steps=14)
    r_inv = invert_unimodular(r)
    gram = gram_in_basis(base.form.gram, r_inv)
    c_u = random_unimodular(rng, n, steps=8)
    c_a = random_unimodular(rng, n - 2, steps=8)
    c_e = random_unimodular(rng, 2, steps=8)
    return AdaptedBasisProblem(
        g=g,
        d=d,
        U=r * base.U * c_u,
        form=AlternatingForm(gram),
        U_A=r * base.U_A * c_a,
        U_E=r * base.U_E * c_e,
    )
