import pytest

from conftest import d8, d16, heisenberg, q8, q8_three_gen, sd16, q16
from pgcap.errors import ResourceError
from pgcap.families import FamilyParams, build_family, catalog_presentation
from pgcap.isomorphism import are_isomorphic, extend_map, fingerprint, verify_isomorphism
from pgcap.pcgroup import PcPresentation, cyclic, direct_product, enumerate_elements, parse_presentation, format_presentation


def test_reflexive_with_witness():
    for G in (d8(), q8(), heisenberg(), d16()):
        res = are_isomorphic(G, G)
        assert res.isomorphic and verify_isomorphism(G, G, res.images)


def test_product_order_irrelevant():
    A = direct_product(d8(), cyclic(2, 2))
    B = direct_product(cyclic(2, 2), d8())
    assert A != B
    res = are_isomorphic(A, B)
    assert res and verify_isomorphism(A, B, res.images)


def test_d8_not_q8():
    res = are_isomorphic(d8(), q8())
    assert not res
    assert fingerprint(d8()).order_histogram != fingerprint(q8()).order_histogram


def test_q8_two_presentations():
    res = are_isomorphic(q8(), q8_three_gen())
    assert res and verify_isomorphism(q8(), q8_three_gen(), res.images)


def test_t1i_111_is_d8():
    # brute force: T1i(1,1,1) has five involutions, as does D8
    G = build_family(FamilyParams("T1i", 2, 1, 1, 1))
    assert fingerprint(G).order_histogram == ((1, 1), (2, 5), (4, 2))
    D8 = catalog_presentation(2, 1, 1, 1, 0, 0)
    assert are_isomorphic(G, D8)


def test_heisenberg_vs_exponent_nine():
    H = heisenberg()
    M = catalog_presentation(3, 1, 1, 1, 0, 1)
    fa, fb = fingerprint(H), fingerprint(M)
    assert fa.exponent == 3 and fb.exponent == 9
    assert not are_isomorphic(H, M)


def test_symmetric_on_corpus():
    corpus = [catalog_presentation(2, a, b, 1, r1, r2) for a, b, r1, r2 in [(1, 2, 0, 0), (2, 1, 0, 0), (1, 2, 1, 0), (2, 1, 0, 1), (1, 2, 0, 1), (2, 1, 1, 0)]]
    for A in corpus:
        for B in corpus:
            ab, ba = are_isomorphic(A, B), are_isomorphic(B, A)
            assert bool(ab) == bool(ba)
            if ab:
                assert fingerprint(A) == fingerprint(B)
                assert verify_isomorphism(A, B, ab.images) and verify_isomorphism(B, A, ba.images)


def test_swapped_generators_isomorphic():
    # a^4 = b^2 = 1 versus a^2 = b^4 = 1 present the same group
    A = build_family(FamilyParams("T1i", 2, 2, 1, 1))
    B = build_family(FamilyParams("T1i", 2, 1, 2, 1))
    assert are_isomorphic(A, B)


def test_reimported_export():
    for G in (d16(), sd16(), q16(), build_family(FamilyParams("T2ii", 3, 2, 2, 1))):
        G2 = parse_presentation(format_presentation(G))
        assert are_isomorphic(G, G2)


def test_extend_map_identity():
    G = heisenberg()
    phi = extend_map(G, G, [G.gen(i) for i in range(G.n)])
    assert all(phi[x] == x for x in enumerate_elements(G))


def test_non_bijective_rejected():
    G = heisenberg()
    assert not verify_isomorphism(G, G, [G.gen(0), G.gen(0), G.identity])


def test_cap():
    big = direct_product(cyclic(2, 6), cyclic(2, 5))
    with pytest.raises(ResourceError):
        are_isomorphic(big, big)


def test_fingerprint_trivial_group():
    T = PcPresentation(2, [], None, None)
    f = fingerprint(T)
    assert (f.order, f.nilpotency_class, f.abelian_invariants, f.exponent, f.center_order) == (1, 0, (), 1, 1)
    assert (f.derived_order, f.d, f.order_histogram, f.frattini_order, f.derived_cyclic) == (1, 0, ((1, 1),), 1, True)
