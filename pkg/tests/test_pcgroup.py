import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import (
    Mat3,
    Perm,
    check_representation,
    concrete_comm,
    d8,
    d16,
    heisenberg,
    q8,
    q8_three_gen,
    quat_mul,
    sd16,
    q16,
    wreath_c3_c3,
)
from pgcap.errors import InputError, ParseError, ResourceError
from pgcap.families import FamilyParams, build_family
from pgcap.pcgroup import (
    PcPresentation,
    check_consistency,
    commutator,
    consistency_test_words,
    cyclic,
    direct_product,
    element_order,
    enumerate_elements,
    format_presentation,
    hall_witt_check,
    inverse,
    left_normed,
    multiply,
    parse_presentation,
    power,
    random_element,
    conjugate,
)

A, B, C = (1, 0, 0), (0, 1, 0), (0, 0, 1)
E = (0, 0, 0)


class TestArithmetic:
    def test_heisenberg_products(self, H27):
        assert multiply(H27, A, B) == (1, 1, 0)
        assert multiply(H27, B, A) == (1, 1, 2)

    def test_identity_law(self, H27):
        for x in enumerate_elements(H27):
            assert multiply(H27, E, x) == x == multiply(H27, x, E)

    def test_d8_square_of_a(self, D8):
        assert power(D8, A, 2) == E

    def test_inverse_examples(self, H27):
        assert inverse(H27, E) == E
        assert inverse(H27, (1, 1, 0)) == (2, 2, 2)

    def test_inverse_brute_force(self, H27):
        for x in enumerate_elements(H27):
            sols = [y for y in enumerate_elements(H27) if multiply(H27, x, y) == E]
            assert sols == [inverse(H27, x)]

    def test_power_examples(self, H27):
        G = build_family(FamilyParams("T2ii", 3, 2, 2, 1))
        a = (0, 1)
        assert power(G, a, 9) == (0, 0)
        assert power(H27, (1, 1, 0), 3) == E
        assert all(power(H27, x, 3) == E for x in enumerate_elements(H27))

    def test_negative_powers(self, H27):
        for x in enumerate_elements(H27):
            assert power(H27, x, -1) == inverse(H27, x)
            assert multiply(H27, power(H27, x, -2), power(H27, x, 2)) == E
        assert power(H27, (1, 2, 1), 0) == E

    def test_commutators(self, H27):
        assert commutator(H27, A, B) == C
        assert commutator(H27, B, A) == (0, 0, 2)
        for x in enumerate_elements(H27):
            assert commutator(H27, x, x) == E
        G = build_family(FamilyParams("T2ii", 3, 2, 2, 1))
        b, a = (1, 0), (0, 1)
        assert commutator(G, a, b) == (0, 3)

    def test_commutator_definition(self, H27):
        for x in enumerate_elements(H27):
            for y in [A, B, (1, 2, 1)]:
                direct = multiply(H27, multiply(H27, inverse(H27, x), inverse(H27, y)), multiply(H27, x, y))
                assert commutator(H27, x, y) == direct
                assert conjugate(H27, x, y) == multiply(H27, multiply(H27, inverse(H27, y), x), y)

    def test_left_normed(self):
        G = d16()
        s, r = (1, 0), (0, 1)
        assert left_normed(G, r, s, s) == commutator(G, commutator(G, r, s), s)
        assert left_normed(G, r, s, s) != (0, 0)

    def test_element_orders(self, H27):
        assert element_order(H27, E) == 1
        assert element_order(H27, C) == 3
        Q = q8()
        assert element_order(Q, (1, 0)) == 4
        for x in enumerate_elements(Q):
            assert 8 % element_order(Q, x) == 0

    def test_malformed_elements(self, H27):
        with pytest.raises(InputError):
            multiply(H27, (1, 0), A)
        with pytest.raises(InputError):
            multiply(H27, (3, 0, 0), A)
        with pytest.raises(InputError):
            inverse(H27, (0, -1, 0))


class TestConcreteOracles:
    """Pc arithmetic agrees with permutation, matrix and quaternion models."""

    def test_d8_as_permutations(self):
        s = (0, 3, 2, 1)
        r = (1, 2, 3, 0)
        sr = Perm.mul(s, r)
        imgs = [s, sr, concrete_comm(Perm.mul, Perm.inv, s, sr)]
        assert check_representation(d8(), imgs, Perm.mul, Perm.identity(4))

    def test_q8_as_quaternions(self):
        i, j = (0, 1, 0, 0), (0, 0, 1, 0)
        one = (1, 0, 0, 0)
        # b, a ordering: b -> j, a -> i
        assert check_representation(q8(), [j, i], quat_mul, one)
        assert check_representation(q8_three_gen(), [i, j, (-1, 0, 0, 0)], quat_mul, one)

    def test_heisenberg_as_matrices(self):
        M = Mat3(3)
        a = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
        b = ((1, 0, 0), (0, 1, 1), (0, 0, 1))
        c = ((1, 0, 1), (0, 1, 0), (0, 0, 1))
        assert check_representation(heisenberg(), [a, b, c], M.mul, M.identity())

    @pytest.mark.parametrize("builder, rot", [(d16, -1), (sd16, 3)])
    def test_metacyclic_16_as_permutations(self, builder, rot):
        r = tuple((i + 1) % 8 for i in range(8))
        s = tuple((rot * i) % 8 for i in range(8))
        assert check_representation(builder(), [s, r], Perm.mul, Perm.identity(8))

    def test_q16_order_histogram(self):
        # Q16 has a single involution, ten elements of order 4 and four of order 8
        G = q16()
        hist = {}
        for x in enumerate_elements(G):
            o = element_order(G, x)
            hist[o] = hist.get(o, 0) + 1
        assert hist == {1: 1, 2: 1, 4: 10, 8: 4}

    def test_wreath_as_permutations(self):
        t = (3, 4, 5, 6, 7, 8, 0, 1, 2)
        x1 = (1, 2, 0, 3, 4, 5, 6, 7, 8)
        x2 = concrete_comm(Perm.mul, Perm.inv, x1, t)
        x3 = concrete_comm(Perm.mul, Perm.inv, x2, t)
        assert check_representation(wreath_c3_c3(), [t, x1, x2, x3], Perm.mul, Perm.identity(9))


def _axioms_exhaustive(G):
    elems = list(enumerate_elements(G))
    c = G.collector
    ident = G.identity
    table = {(x, y): c.mul(x, y) for x in elems for y in elems}
    for x in elems:
        assert table[(ident, x)] == x == table[(x, ident)]
        assert table[(x, c.inv(x))] == ident == table[(c.inv(x), x)]
    for x in elems:
        for y in elems:
            xy = table[(x, y)]
            for z in elems:
                assert table[(xy, z)] == table[(x, table[(y, z)])]


SMALL = {
    "H27": heisenberg,
    "D8": d8,
    "Q8": q8,
    "D16": d16,
    "Q16": q16,
    "SD16": sd16,
    "C3wrC3": wreath_c3_c3,
    "T1i(2,1,1)": lambda: build_family(FamilyParams("T1i", 2, 2, 1, 1)),
    "T2ii(2,2,1)": lambda: build_family(FamilyParams("T2ii", 3, 2, 2, 1)),
}


@pytest.mark.parametrize("name", sorted(SMALL))
def test_group_axioms_exhaustive(name):
    _axioms_exhaustive(SMALL[name]())


@pytest.mark.parametrize(
    "params",
    [FamilyParams("T1i", 2, 3, 3, 2), FamilyParams("T1ii", 2, 4, 3, 2, 1), FamilyParams("T2i", 3, 2, 2, 2)],
)
def test_group_axioms_sampled(params):
    G = build_family(params)
    assert G.order > 81
    rng = random.Random(7)
    c = G.collector
    for _ in range(10_000):
        x, y, z = (random_element(G, rng) for _ in range(3))
        assert c.mul(c.mul(x, y), z) == c.mul(x, c.mul(y, z))
    for x in enumerate_elements(G):
        assert c.mul(x, c.inv(x)) == G.identity


class TestConsistency:
    def test_heisenberg_consistent(self, H27):
        rep = check_consistency(H27)
        assert rep.ok and H27.consistency_checked

    def test_inconsistent_reports_word(self):
        # g1^2 = g2 forces g2 to commute with g1, contradicting [g2, g1] = g2
        G = PcPresentation(2, [1, 1], {0: (0, 1)}, {(1, 0): (0, 1)})
        rep = check_consistency(G)
        assert not rep.ok and rep.word
        assert not G.consistency_checked

    def test_support_violation_is_input_error(self):
        with pytest.raises(InputError):
            PcPresentation(2, [1, 1, 1], None, {(2, 1): (0, 1, 0)})
        with pytest.raises(InputError):
            PcPresentation(2, [1, 1], {1: (1, 0)}, None)

    def test_test_words_cover_all_kinds(self, H27):
        words = [w for w, *_ in consistency_test_words(H27)]
        assert len(words) == len(set(words))
        # kji triples, two mixed power words per pair, one power word per generator
        assert len(words) == 1 + 2 * 3 + 3


@st.composite
def random_presentations(draw):
    """Random tails on random relative orders, total order at most 81."""
    p = draw(st.sampled_from([2, 3]))
    if p == 2:
        exps = draw(st.lists(st.integers(1, 2), min_size=2, max_size=5).filter(lambda e: sum(e) <= 6))
    else:
        exps = [1] * draw(st.integers(2, 4))
    n = len(exps)
    orders = [p**e for e in exps]

    def tail(i):
        return tuple(draw(st.integers(0, orders[k] - 1)) if k > i else 0 for k in range(n))

    power = {i: tail(i) for i in range(n) if draw(st.booleans())}
    comm = {(j, i): tail(i) for j in range(n) for i in range(j) if draw(st.booleans())}
    return PcPresentation(p, exps, power, comm)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(random_presentations())
def test_consistency_iff_associative(G):
    """The test words pass exactly when the normal-form product is associative."""
    elems = list(enumerate_elements(G))
    assert len(elems) <= 81
    c = G.collector
    assoc = all(c.mul(c.mul(x, y), z) == c.mul(x, c.mul(y, z)) for x in elems for y in elems for z in elems)
    assert bool(check_consistency(G)) == assoc


class TestHallWitt:
    def test_full_identity_everywhere(self):
        rng = random.Random(3)
        for build in SMALL.values():
            G = build()
            for _ in range(100):
                x, y, z = (random_element(G, rng) for _ in range(3))
                assert hall_witt_check(G, x, y, z).full

    def test_unconjugated_form_class2(self, H27):
        rep = hall_witt_check(H27, A, B, (1, 1, 0))
        assert rep.full and rep.unconjugated

    def test_class3_witness_samples(self):
        from pgcap.capability import witness_search

        H = witness_search(d8(), 1).witness.H
        rng = random.Random(5)
        for _ in range(100):
            x, y, z = (random_element(H, rng) for _ in range(3))
            rep = hall_witt_check(H, x, y, z)
            assert rep.full
            if rep.hypothesis:
                assert rep.unconjugated


class TestTextFormat:
    def test_round_trip_byte_identical(self):
        for build in SMALL.values():
            G = build()
            text = format_presentation(G)
            G2 = parse_presentation(text)
            assert G2 == G
            assert format_presentation(G2) == text

    def test_parse_example(self):
        G = parse_presentation("p 3\ngens 3\nrelorder 1 1\nrelorder 2 1\nrelorder 3 1\ncomm 2 1 : 3^2 # [b,a]\n")
        assert G == heisenberg()

    @pytest.mark.parametrize(
        "text, line",
        [
            ("p 4\n", 1),
            ("p 2\ngens 2\nrelorder 1 1\nrelorder 2 1\nfoo 1\n", 5),
            ("p 2\ngens 2\nrelorder 1 1\nrelorder 1 1\n", 4),
            ("p 2\ngens 2\nrelorder 1 1\nrelorder 2 1\ncomm 1 2 : 1^1\n", 5),
            ("p 2\ngens 2\nrelorder 1 1\nrelorder 2 1\npow 2 : 1^1\n", 5),
            ("p 2\ngens 2\nrelorder 1 1\nrelorder 2 1\npow 1 : 2^2\n", 5),
            ("p 2\ngens 2\nrelorder 1 1\nrelorder 2 1\npow 1 : 2^1\npow 1 : 2^1\n", 6),
            ("relorder 1 1\n", 1),
        ],
    )
    def test_strict_errors(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_presentation(text)
        assert exc.value.line == line

    def test_missing_relorder(self):
        with pytest.raises(ParseError):
            parse_presentation("p 2\ngens 2\nrelorder 1 1\n")


class TestEnumeration:
    def test_counts(self, H27, D8):
        assert len(list(enumerate_elements(D8))) == 8
        elems = list(enumerate_elements(H27))
        assert len(elems) == 27 and elems[0] == E and elems == sorted(elems)
        assert len(list(enumerate_elements(build_family(FamilyParams("T1i", 2, 2, 1, 1))))) == 16

    def test_cap(self):
        G = cyclic(2, 14)
        assert G.order == 2**14
        with pytest.raises(ResourceError):
            next(enumerate_elements(direct_product(G, cyclic(2, 1))))
        with pytest.raises(ResourceError):
            next(enumerate_elements(G, cap=1024))

    def test_env_cap(self, monkeypatch):
        monkeypatch.setenv("PGCAP_ORDER_CAP", "16")
        with pytest.raises(ResourceError):
            next(enumerate_elements(cyclic(2, 5)))
