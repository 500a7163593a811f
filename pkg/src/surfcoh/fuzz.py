"""Random generators for valid surface data, classes, forms, and moments.

Surfaces are assembled as direct sums of blocks that are valid by
construction (the four-torus block, a hyperbolic block with isotropic cup
image, cup-free degree-one generators, lattice summands with no cup
interaction), then conjugated by a random unimodular change of basis on
the degree-one generators.  Validity of every block is closed under direct
sum and basis change, and random_surface asserts validate() anyway.

Everything takes an explicit random.Random so corpora are reproducible.
"""

from __future__ import annotations

import random
from itertools import combinations

from .extalg import PRIMAL, ExtForm
from .lattice import Lattice, LatticeClass
from .relations import MomentSequence
from .surface import SurfaceTopology, abelian_surface


def random_class(rng: random.Random, lattice: Lattice, bound: int = 3) -> LatticeClass:
    return LatticeClass(tuple(rng.randint(-bound, bound) for _ in range(lattice.rank)))


def random_form(
    rng: random.Random,
    q: int,
    side: str,
    degree: int,
    max_terms: int = 3,
    min_terms: int = 0,
    bound: int = 3,
) -> ExtForm:
    """A random homogeneous form of the given degree (zero if impossible)."""
    if degree < 0 or degree > 2 * q:
        return ExtForm.zero(q, side)
    if degree == 0:
        coeff = rng.randint(-bound, bound)
        if coeff == 0 and min_terms > 0:
            coeff = rng.choice([x for x in range(-bound, bound + 1) if x])
        return ExtForm.scalar(q, side, coeff)
    terms = {}
    count = rng.randint(min_terms, max(min_terms, max_terms))
    for _ in range(count):
        indices = tuple(sorted(rng.sample(range(1, 2 * q + 1), degree)))
        coeff = rng.choice([x for x in range(-bound, bound + 1) if x])
        terms[indices] = coeff
    return ExtForm(q, side, terms)


def _characteristic_vector(rng: random.Random, gram) -> tuple[int, ...]:
    """A random small characteristic vector for the given gram matrix.

    Solves gram.k == diag(gram) mod 2 by brute force (the diagonal of a
    symmetric matrix over F_2 always lies in the column space), then lifts
    by an even perturbation.
    """
    r = len(gram)
    solutions = []
    for bits in range(1 << r):
        k = [(bits >> i) & 1 for i in range(r)]
        if all(
            sum(gram[i][j] * k[j] for j in range(r)) % 2 == gram[i][i] % 2
            for i in range(r)
        ):
            solutions.append(k)
    base = rng.choice(solutions)
    return tuple(b + 2 * rng.randint(-1, 1) for b in base)


def _abelian_block(rng: random.Random):
    s = abelian_surface()
    k = tuple(2 * rng.randint(-1, 1) for _ in range(s.h2.rank))
    return s.q, [list(row) for row in s.h2.gram], k, dict(s.cup)


def _hyperbolic_block(rng: random.Random):
    gram = [[0, 1], [1, 0]]
    k = (2 * rng.randint(-1, 1), 2 * rng.randint(-1, 1))
    t = rng.randint(-2, 2)
    image = (t, 0) if rng.random() < 0.5 else (0, t)
    cup = {(1, 2): LatticeClass(image)}
    return 1, gram, k, cup


def _cupfree_block(q: int):
    return q, [], (), {}


def _lattice_block(rng: random.Random, rank: int):
    gram = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(i, rank):
            gram[i][j] = gram[j][i] = rng.randint(-3, 3)
    return 0, gram, _characteristic_vector(rng, gram), {}


def _assemble(blocks, chi: int, pg_positive: bool) -> SurfaceTopology:
    q = sum(b[0] for b in blocks)
    rank = sum(len(b[1]) for b in blocks)
    gram = [[0] * rank for _ in range(rank)]
    k = []
    cup = {}
    gen_off = 0
    lat_off = 0
    for bq, bgram, bk, bcup in blocks:
        for i, row in enumerate(bgram):
            for j, v in enumerate(row):
                gram[lat_off + i][lat_off + j] = v
        k.extend(bk)
        for (a, b), cls in bcup.items():
            coords = [0] * rank
            for i, v in enumerate(cls.coords):
                coords[lat_off + i] = v
            cup[(gen_off + a, gen_off + b)] = LatticeClass(tuple(coords))
        gen_off += 2 * bq
        lat_off += len(bgram)
    lattice = Lattice(tuple(tuple(row) for row in gram))
    return SurfaceTopology(q, chi, lattice, LatticeClass(tuple(k)), cup, pg_positive)


def _change_basis(rng: random.Random, s: SurfaceTopology) -> SurfaceTopology:
    """Conjugate the cup table by a random unimodular map on degree one."""
    n = 2 * s.q
    if n == 0 or not s.cup:
        return s
    t = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(0, n + 2)):
        a, b = rng.sample(range(n), 2)
        lam = rng.choice([-1, 1])
        for i in range(n):
            t[i][a] += lam * t[i][b]
    cup = {}
    for a, b in combinations(range(1, n + 1), 2):
        acc = s.h2.zero()
        for (i, j), w in s.cup.items():
            factor = t[i - 1][a - 1] * t[j - 1][b - 1] - t[j - 1][a - 1] * t[i - 1][b - 1]
            if factor:
                acc = acc + factor * w
        if not acc.is_zero():
            cup[(a, b)] = acc
    return SurfaceTopology(s.q, s.chi, s.h2, s.k, cup, s.pg_positive)


def random_surface(
    rng: random.Random,
    max_q: int = 3,
    max_rank: int = 8,
    pg_positive: bool | None = None,
) -> SurfaceTopology:
    """A random valid surface within the given size budget."""
    blocks = []
    q_left, rank_left = max_q, max_rank
    if q_left >= 2 and rank_left >= 6 and rng.random() < 0.4:
        blocks.append(_abelian_block(rng))
        q_left -= 2
        rank_left -= 6
    while q_left >= 1 and rank_left >= 2 and rng.random() < 0.4:
        blocks.append(_hyperbolic_block(rng))
        q_left -= 1
        rank_left -= 2
    if q_left >= 1 and rng.random() < 0.3:
        bq = rng.randint(1, q_left)
        blocks.append(_cupfree_block(bq))
        q_left -= bq
    while rank_left >= 1 and rng.random() < 0.5:
        r = rng.randint(1, min(2, rank_left))
        blocks.append(_lattice_block(rng, r))
        rank_left -= r
    if sum(len(b[1]) for b in blocks) == 0:
        blocks.append(_lattice_block(rng, rng.randint(1, min(2, max_rank))))
    rng.shuffle(blocks)
    if pg_positive is None:
        pg_positive = rng.random() < 0.5
    s = _assemble(blocks, rng.randint(-4, 12), pg_positive)
    s = _change_basis(rng, s)
    problems = s.validate()
    assert not problems, problems
    return s


def random_moments(
    rng: random.Random,
    s: SurfaceTopology,
    m: LatticeClass,
    max_terms: int = 2,
) -> MomentSequence:
    """A random sequence satisfying the degree invariant for class m."""
    mmk = s.h2.dot(m, m - s.k)
    if mmk < 0:
        return MomentSequence(s.q, m, ())
    moments = []
    nonzero = False
    for i in range(mmk // 2 + 1):
        deg = mmk - 2 * i
        a = random_form(rng, s.q, PRIMAL, deg, max_terms=max_terms)
        nonzero = nonzero or not a.is_zero()
        moments.append(a)
    if not nonzero:
        i = len(moments) - 1
        moments[i] = random_form(rng, s.q, PRIMAL, mmk - 2 * i, max_terms=max_terms, min_terms=1)
    return MomentSequence(s.q, m, tuple(moments))
