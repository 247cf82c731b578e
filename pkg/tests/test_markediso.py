import itertools
import math
import random

import pytest

from ckext.corpus import A5, A6, FIBONACCI, cuntz_rows
from ckext.invariants import validate
from ckext.markediso import (
    MarkedGroup,
    MarkerCountMismatchError,
    NotFiniteError,
    TooLargeError,
    TorsionTooLargeError,
    _marker_orders_match,
    _mod_p_orders_match,
    ck_isomorphic,
    marked_group,
    marked_iso_bruteforce,
    marked_isomorphic,
)


# --- contract examples ---------------------------------------------------

def test_z2_marked_points_differ():
    assert not marked_isomorphic(marked_group(0, (2,), ((1,),)),
                                 marked_group(0, (2,), ((0,),)))


def test_z3_units_act():
    assert marked_isomorphic(marked_group(0, (3,), ((1,),)),
                             marked_group(0, (3,), ((2,),)))


def test_free_pair_sign_orbit():
    a = marked_group(1, (), ((4,), (3,)))
    assert marked_isomorphic(a, marked_group(1, (), ((-4,), (-3,))))
    assert not marked_isomorphic(a, marked_group(1, (), ((4,), (-3,))))


def test_bruteforce_klein_transitivity():
    assert marked_iso_bruteforce(marked_group(0, (2, 2), ((1, 0),)),
                                 marked_group(0, (2, 2), ((1, 1),)))


def test_bruteforce_z4_order_obstruction():
    assert not marked_iso_bruteforce(marked_group(0, (4,), ((2,),)),
                                     marked_group(0, (4,), ((1,),)))


def test_descriptor_mismatch_is_false():
    assert not marked_isomorphic(marked_group(0, (4,), ((1,),)),
                                 marked_group(0, (2, 2), ((1, 0),)))
    assert not marked_isomorphic(marked_group(1, (), ((0,),)),
                                 marked_group(0, (), ((),)))


def test_zero_markers_reduce_to_descriptor_equality():
    assert marked_isomorphic(marked_group(1, (2,), ()), marked_group(1, (2,), ()))
    assert not marked_isomorphic(marked_group(1, (2,), ()), marked_group(1, (4,), ()))


# --- errors --------------------------------------------------------------

def test_marker_count_mismatch_raises():
    with pytest.raises(MarkerCountMismatchError):
        marked_isomorphic(marked_group(0, (2,), ((1,),)), marked_group(0, (2,), ()))
    with pytest.raises(MarkerCountMismatchError):
        marked_iso_bruteforce(marked_group(0, (2,), ((1,),)), marked_group(0, (2,), ()))


def test_torsion_bound_enforced():
    big = marked_group(0, (1024,), ((1,),))
    with pytest.raises(TorsionTooLargeError):
        marked_isomorphic(big, big)
    assert marked_isomorphic(big, big, torsion_bound=2048)


def test_bruteforce_domain_errors():
    free = marked_group(1, (), ((1,),))
    with pytest.raises(NotFiniteError):
        marked_iso_bruteforce(free, free)
    huge = marked_group(0, (512,), ((1,),))
    with pytest.raises(TooLargeError):
        marked_iso_bruteforce(huge, huge)
    wide = marked_group(0, (2,) * 6, (tuple([1] + [0] * 5),))
    with pytest.raises(TooLargeError):
        marked_iso_bruteforce(wide, wide, max_candidates=10_000)


# --- relation properties -------------------------------------------------

def _random_marked(rng, free_rank, torsion, k):
    markers = [tuple(rng.randint(-4, 4) for _ in range(free_rank))
               + tuple(rng.randrange(d) for d in torsion) for _ in range(k)]
    return marked_group(free_rank, torsion, markers)


SMALL_SHAPES = [(0, (2,)), (0, (4,)), (0, (2, 2)), (0, (3,)), (0, (2, 4)),
                (1, ()), (1, (2,)), (2, ()), (1, (2, 2)), (0, (6,)), (2, (3,))]


def test_reflexive_and_negation_invariant():
    rng = random.Random(31)
    for free_rank, torsion in SMALL_SHAPES:
        for _ in range(8):
            k = rng.choice([1, 2, 3])
            x = _random_marked(rng, free_rank, torsion, k)
            assert marked_isomorphic(x, x)
            negated = MarkedGroup(x.group, tuple(m.negate() for m in x.markers))
            assert marked_isomorphic(x, negated)


def test_symmetric():
    rng = random.Random(32)
    for free_rank, torsion in SMALL_SHAPES:
        for _ in range(10):
            k = rng.choice([1, 2])
            x = _random_marked(rng, free_rank, torsion, k)
            y = _random_marked(rng, free_rank, torsion, k)
            assert marked_isomorphic(x, y) == marked_isomorphic(y, x)


def test_transitive_on_small_shapes():
    rng = random.Random(33)
    for free_rank, torsion in SMALL_SHAPES[:6]:
        trios = 0
        while trios < 40:
            k = rng.choice([1, 2])
            x = _random_marked(rng, free_rank, torsion, k)
            y = _random_marked(rng, free_rank, torsion, k)
            z = _random_marked(rng, free_rank, torsion, k)
            trios += 1
            if marked_isomorphic(x, y) and marked_isomorphic(y, z):
                assert marked_isomorphic(x, z)


def test_filters_accept_true_pairs():
    rng = random.Random(34)
    for free_rank, torsion in SMALL_SHAPES:
        for _ in range(10):
            k = rng.choice([1, 2])
            x = _random_marked(rng, free_rank, torsion, k)
            y = _random_marked(rng, free_rank, torsion, k)
            if marked_isomorphic(x, y):
                assert _marker_orders_match(x, y)
                assert _mod_p_orders_match(x, y)


# --- oracle agreement ----------------------------------------------------

def test_agrees_with_bruteforce_on_random_finite_cases():
    rng = random.Random(35)
    shapes = [(2,), (3,), (4,), (8,), (2, 2), (2, 4), (3, 3), (2, 2, 2),
              (4, 4), (2, 2, 4), (12,), (2, 6), (2, 2, 2, 2)]
    for torsion in shapes:
        for _ in range(25):
            k = rng.choice([1, 1, 2, 2, 3])
            x = _random_marked(rng, 0, torsion, k)
            if rng.random() < 0.4:
                y = MarkedGroup(x.group, tuple(m.scale(rng.choice([1, -1]))
                                               for m in x.markers))
            else:
                y = _random_marked(rng, 0, torsion, k)
            assert marked_isomorphic(x, y) == marked_iso_bruteforce(x, y)


def _fp_left_nullspace(rows, p):
    """Row-reduced basis of {c : sum_i c_i * rows_i = 0 (mod p)}, canonical."""
    k = len(rows)
    t = len(rows[0]) if rows else 0
    # transpose: solve M^T c = 0 over F_p
    m = [[rows[i][j] % p for i in range(k)] for j in range(t)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, t) if m[i][col] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(t):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free_cols = [c for c in range(k) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [0] * k
        vec[fc] = 1
        for row_i, pc in enumerate(pivots):
            vec[pc] = (-m[row_i][fc]) % p
        basis.append(tuple(vec))
    return sorted(basis)


def _all_torsion_automorphisms(ds):
    """Every automorphism of + Z/d_s by dumb generator-image enumeration."""
    t = len(ds)
    order = math.prod(ds)
    elems = list(itertools.product(*[range(d) for d in ds]))

    def add(u, v):
        return tuple((a + b) % d for a, b, d in zip(u, v, ds))

    def smul(c, u):
        return tuple(c * a % d for a, d in zip(u, ds))

    def apply(imgs, coeffs):
        acc = (0,) * t
        for c, u in zip(coeffs, imgs):
            acc = add(acc, smul(c, u))
        return acc

    for imgs in itertools.product(elems, repeat=t):
        if any(any(ds[s] * imgs[s][j] % ds[j] for j in range(t)) for s in range(t)):
            continue
        if len({apply(imgs, coeffs) for coeffs in elems}) == order:
            yield lambda u, imgs=imgs: apply(imgs, u)


def test_shift_subgroup_against_direct_enumeration():
    """For free rank 1 every isomorphism is (eps, psi, alpha) with eps = +-1,
    psi in T and alpha in Aut(T); compare the decision procedure against a
    literal search over that product."""
    rng = random.Random(37)
    for ds in [(2,), (3,), (4,), (2, 2), (6,), (2, 4)]:
        elems = list(itertools.product(*[range(d) for d in ds]))
        autos = list(_all_torsion_automorphisms(ds))

        def add(u, v):
            return tuple((a + b) % d for a, b, d in zip(u, v, ds))

        def smul(c, u):
            return tuple(c * a % d for a, d in zip(u, ds))

        for _ in range(20):
            k = rng.choice([1, 2, 2, 3])
            xm = [(rng.randint(-3, 3), tuple(rng.randrange(d) for d in ds))
                  for _ in range(k)]
            ym = list(xm) if rng.random() < 0.35 else \
                [(rng.randint(-3, 3), tuple(rng.randrange(d) for d in ds))
                 for _ in range(k)]
            expected = any(
                all(eps * xf == yf and add(alpha(xt), smul(xf, psi)) == yt
                    for (xf, xt), (yf, yt) in zip(xm, ym))
                for eps in (1, -1) for psi in elems for alpha in autos)
            x = marked_group(1, ds, [(xf,) + xt for xf, xt in xm])
            y = marked_group(1, ds, [(yf,) + yt for yf, yt in ym])
            assert marked_isomorphic(x, y) == expected


def test_elementary_abelian_oracle():
    """Over a vector space, marker tuples are equivalent iff their linear
    relation spaces coincide; check the full search against that criterion."""
    rng = random.Random(36)
    for p, t in [(2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2)]:
        torsion = (p,) * t
        for _ in range(30):
            k = rng.choice([1, 2] if p ** t > 32 else [1, 2, 3])
            x = _random_marked(rng, 0, torsion, k)
            y = _random_marked(rng, 0, torsion, k)
            xr = [m.torsion_coords for m in x.markers]
            yr = [m.torsion_coords for m in y.markers]
            expected = _fp_left_nullspace(xr, p) == _fp_left_nullspace(yr, p)
            assert marked_isomorphic(x, y) == expected


# --- the classification criterion ----------------------------------------

def test_ck_isomorphic_reflexive():
    a = validate(A5)
    assert ck_isomorphic(a, a)


def test_ck_isomorphic_separates_transposed_pair():
    assert not ck_isomorphic(validate(A5), validate(A6))


def test_ck_isomorphic_fibonacci_is_cuntz_2():
    assert ck_isomorphic(validate(FIBONACCI), validate(cuntz_rows(2)))


def test_ck_isomorphic_cuntz_algebras_distinct():
    mats = [validate(cuntz_rows(n)) for n in (2, 3, 4, 5)]
    for i, j in itertools.combinations(range(4), 2):
        assert not ck_isomorphic(mats[i], mats[j])
