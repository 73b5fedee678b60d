import pytest

from avcodes.gf import ZERO, ONE
from avcodes.mindex import MonomialOrder
from avcodes.transform import Spectrum, Word, omega_space
from avcodes.ideal import vanishing_gb
from avcodes.maps import (PointSet, evaluate, proper_transform, canonical_iso,
                          transpose_check, MapError, VanishingError)
from avcodes.golden import (RS_PSI, RS_SEED, RS_RESTRICTION, RS_OMEGA_WORD,
                            EV_GEN_SPECTRA, EV_GEN_WORDS, DUAL_SEEDS, DUAL_CODEWORDS,
                            CROSS_PSI)


@pytest.fixture(scope="module")
def rs_setup(f8_module):
    psi = PointSet(f8_module, 1, RS_PSI)
    gb, delta = vanishing_gb(psi, MonomialOrder("lex"))
    return psi, gb, delta


@pytest.fixture(scope="session")
def f8_module():
    from avcodes.gf import Field

    return Field(2, 3, (1, 1, 0, 1))


def test_pointset_invariants(f8_module):
    with pytest.raises(MapError):
        PointSet(f8_module, 1, ((1,), (1,)))
    with pytest.raises(MapError):
        PointSet(f8_module, 2, ((1,),))
    ps = PointSet(f8_module, 1, RS_PSI)
    assert len(ps) == 4 and (3,) in ps


def test_pointset_text_roundtrip(f9):
    ps = PointSet(f9, 2, ((-1, 3), (0, 2), (7, -1)))
    assert PointSet.parse(f9, 2, ps.lines()).points == ps.points


def test_evaluate_worked_examples(f8_module, rs_setup):
    psi, gb, delta = rs_setup
    for spec_terms, want in zip(EV_GEN_SPECTRA, EV_GEN_WORDS):
        got = evaluate(Spectrum(f8_module, 1, dict(spec_terms)), psi)
        assert tuple(got.values[p] for p in psi.points) == want
    ones = evaluate(Spectrum(f8_module, 1, {(0,): ONE}), psi)
    assert all(v == ONE for v in ones.values.values())


def test_proper_transform_inverts_canonical(f8_module, rs_setup):
    psi, gb, delta = rs_setup
    word = Word(f8_module, 1, {p: v for p, v in zip(psi.points, RS_RESTRICTION)})
    back = proper_transform(word, delta)
    assert back.values == RS_SEED


def test_proper_transform_basics(f8_module, rs_setup):
    psi, gb, delta = rs_setup
    zero = Word(f8_module, 1, {p: ZERO for p in psi.points})
    assert all(v == ZERO for v in proper_transform(zero, delta).values.values())
    # single unit at psi = alpha: h_d = alpha^d
    unit = Word(f8_module, 1, {p: (ONE if p == (1,) else ZERO) for p in psi.points})
    h = proper_transform(unit, delta)
    for (d,), v in h.values.items():
        assert v == f8_module.pow(1, d)
    with pytest.raises(MapError):
        proper_transform(unit, frozenset({(0,)}))


def test_canonical_iso_worked_example(f8_module, rs_setup):
    psi, gb, delta = rs_setup
    word, omega = canonical_iso(Spectrum(f8_module, 1, dict(RS_SEED)), gb, psi,
                                return_omega=True)
    assert tuple(word.values[p] for p in psi.points) == RS_RESTRICTION
    pts = omega_space(f8_module, 1)
    assert tuple(omega.values[p] for p in pts) == RS_OMEGA_WORD
    for seed_terms, cw in zip(DUAL_SEEDS, DUAL_CODEWORDS):
        padded = {(a,): seed_terms.get((a,), ZERO) for a in range(4)}
        got = canonical_iso(Spectrum(f8_module, 1, padded), gb, psi)
        assert tuple(got.values[p] for p in psi.points) == cw


def test_canonical_roundtrip(f8_module, f9, hermitian, hcrs, rng):
    cases = [
        (f8_module, PointSet(f8_module, 1, RS_PSI), MonomialOrder("lex")),
        (f8_module, PointSet(f8_module, 2, CROSS_PSI), MonomialOrder("lex")),
        (f9, hermitian.psi, hermitian.order),
        (f9, hcrs.psi, hcrs.order),
    ]
    for f, psi, order in cases:
        gb, delta = vanishing_gb(psi, order)
        for _ in range(3):
            h = Spectrum(f, psi.ndim,
                         {d: rng.randrange(-1, f.q - 1) for d in delta.members})
            word = canonical_iso(h, gb, psi)
            assert proper_transform(word, delta).values == h.values
            c = Word(f, psi.ndim,
                     {p: rng.randrange(-1, f.q - 1) for p in psi.points})
            again = canonical_iso(proper_transform(c, delta), gb, psi)
            assert again.values == c.values


def test_vanishing_on_basis_vectors(f8_module, rs_setup):
    psi, gb, delta = rs_setup
    inside = set(psi.points)
    for d in delta.members:
        unit = Spectrum(f8_module, 1,
                        {e: (ONE if e == d else ZERO) for e in delta.members})
        _, omega = canonical_iso(unit, gb, psi, return_omega=True)
        for p, v in omega.values.items():
            if p not in inside:
                assert v == ZERO


def test_vanishing_violation_detected(f8_module, rs_setup):
    psi, gb, delta = rs_setup
    # restricting the target point set without changing the basis makes the
    # prolonged word nonzero off the smaller set
    smaller = PointSet(f8_module, 1, RS_PSI[:3])
    h = Spectrum(f8_module, 1, {d: ONE for d in delta.members})
    with pytest.raises(VanishingError):
        canonical_iso(h, gb, smaller)


def test_transpose_check(f8_module, f9, rs_setup, hermitian):
    psi, gb, delta = rs_setup
    assert transpose_check(delta, psi)
    single = PointSet(f8_module, 1, ((4,),))
    _, d1 = vanishing_gb(single, MonomialOrder("lex"))
    assert transpose_check(d1, single)
    omega = PointSet(f8_module, 1, tuple((w,) for w in f8_module.elements()))
    _, do = vanishing_gb(omega, MonomialOrder("lex"))
    assert transpose_check(do, omega)
    assert transpose_check(hermitian.delta, hermitian.psi)
    # size mismatch short-circuits to False
    assert not transpose_check(delta, single)


def test_evaluate_injective(f8_module, rs_setup, rng):
    psi, gb, delta = rs_setup
    seen = set()
    for _ in range(30):
        h = Spectrum(f8_module, 1,
                     {d: rng.randrange(-1, 7) for d in delta.members})
        w = evaluate(h, psi)
        key = tuple(sorted(h.values.items()))
        val = tuple(w.values[p] for p in psi.points)
        for k2, v2 in seen:
            if k2 != key:
                assert v2 != val
        seen.add((key, val))
