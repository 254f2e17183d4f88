import itertools

import pytest

from pgcap.errors import ConsistencyError, InputError, ResourceError
from pgcap.families import (
    CONDITION_TEXT,
    FamilyParams,
    build_extraspecial,
    build_family,
    capability_condition,
    enumerate_2gen_class2,
    export_catalog,
    family_grid,
    family_instances,
    satisfied_clause,
)
from pgcap.isomorphism import are_isomorphic
from pgcap.pcgroup import check_consistency, parse_presentation
from pgcap.structure import center, derived_subgroup, is_cyclic, minimal_generators, nilpotency_class

# isomorphism-class counts of 2-generated class-2 groups with cyclic gamma_2,
# from the small-group census: order 8 (D8, Q8), 16 (M16, C4:C4, (C4xC2):C2),
# 27 (both extraspecial groups), 81 (three groups)
CENSUS = {2: {8: 2, 16: 3}, 3: {27: 2, 81: 3}}


class TestParams:
    def test_validation(self):
        with pytest.raises(InputError):
            FamilyParams("T3", 2, 1, 1, 1).validate()
        with pytest.raises(InputError):
            FamilyParams("T1i", 3, 1, 1, 1).validate()
        with pytest.raises(InputError):
            FamilyParams("T2i", 2, 1, 1, 1).validate()
        with pytest.raises(InputError):
            FamilyParams("T2i", 9, 1, 1, 1).validate()
        with pytest.raises(InputError):
            FamilyParams("T1i", 2, 0, 1, 1).validate()
        with pytest.raises(InputError):
            FamilyParams("T1i", 2, 1, 1, 1, 1).validate()
        with pytest.raises(InputError):
            FamilyParams("T1i", 2, 1, 2, 2).validate()
        with pytest.raises(InputError):
            FamilyParams("T2ii", 3, 1, 1, 1).validate()
        with pytest.raises(InputError):
            FamilyParams("T1ii", 2, 3, 3, 1).validate()
        with pytest.raises(InputError):
            FamilyParams("T1ii", 2, 3, 3, 1, 1).validate()  # sigma < gamma

    def test_sigma_zero(self):
        p = FamilyParams("T1ii", 2, 3, 3, 1, 0)
        assert p.validate() is p
        with pytest.raises(InputError):
            p.validate(literal=True)

    def test_orders(self):
        assert FamilyParams("T1i", 2, 2, 1, 1).order == 16
        assert FamilyParams("T1ii", 2, 4, 3, 2, 1).order == 2**8
        assert FamilyParams("T2ii", 3, 2, 2, 1).order == 81
        assert FamilyParams("T2i", 3, 1, 1, 1).order == 27


class TestCondition:
    def test_examples(self):
        assert not capability_condition(FamilyParams("T1i", 2, 3, 1, 1))
        # pure arithmetic: applies even where the tuple does not name a consistent presentation
        assert capability_condition(FamilyParams("T1ii", 2, 3, 3, 1, 1))
        assert satisfied_clause(FamilyParams("T1ii", 2, 3, 3, 1, 1)) == "α = β and γ < β − 1"
        assert satisfied_clause(FamilyParams("T1ii", 2, 3, 2, 2, 1)) == "α = β + 1 = γ + 1 = σ + 2"
        assert satisfied_clause(FamilyParams("T1i", 2, 2, 1, 1)) == "α = β + 1 = γ + 1"
        assert satisfied_clause(FamilyParams("T1i", 2, 1, 2, 1)) == "α = β + 1 = γ + 1"
        assert satisfied_clause(FamilyParams("T1i", 2, 2, 2, 1)) == "α = β"
        assert satisfied_clause(FamilyParams("T2i", 3, 2, 2, 1)) == "α = β ≥ γ"
        assert not capability_condition(FamilyParams("T2i", 3, 2, 1, 1))
        assert satisfied_clause(FamilyParams("T2ii", 3, 2, 2, 1)) == "α = β ≥ 2γ"
        assert not capability_condition(FamilyParams("T2ii", 3, 3, 2, 2))

    def test_clause_texts_are_quoted_verbatim(self):
        assert CONDITION_TEXT["T1i"] == ("α = β", "α = β + 1 = γ + 1")
        assert CONDITION_TEXT["T2i"] == ("α = β ≥ γ",)

    @pytest.mark.parametrize("variant, p, N", [("T1i", 2, 8), ("T2i", 3, 5)])
    def test_swap_invariance(self, variant, p, N):
        for fp in family_grid(variant, p, N):
            sw = FamilyParams(variant, p, fp.beta, fp.alpha, fp.gamma)
            if are_isomorphic(build_family(fp), build_family(sw)):
                assert capability_condition(fp) == capability_condition(sw)


class TestBuild:
    @pytest.mark.parametrize("variant, p, N", [("T1i", 2, 8), ("T1ii", 2, 8), ("T2i", 3, 5), ("T2ii", 3, 5)])
    def test_members(self, variant, p, N):
        built = 0
        for fp in family_grid(variant, p, N):
            try:
                G = build_family(fp)
            except ConsistencyError as exc:
                assert exc.word
                continue
            built += 1
            D = derived_subgroup(G)
            assert G.order == fp.order
            assert nilpotency_class(G) == 2
            assert minimal_generators(G) == 2
            assert is_cyclic(D) and D.order == p**fp.gamma
        assert built > 0

    def test_inconsistent_tuple_reports_word(self):
        # found by grid scan: the amalgamation forces [a,b] to have order below 2^gamma
        bad = [fp for fp in family_grid("T1ii", 2, 10) if not check_consistency(_raw(fp))]
        assert bad
        with pytest.raises(ConsistencyError) as exc:
            build_family(bad[0])
        assert exc.value.word

    def test_sweep_mode_skips(self):
        listed = {fp for fp, _ in family_instances(2, 7)}
        grid = set(family_grid("T1i", 2, 7, exact=True)) | set(family_grid("T1ii", 2, 7, exact=True))
        assert listed < grid
        assert all(check_consistency(_raw(fp)) for fp in listed)

    def test_literal_drops_sigma_zero(self):
        lit = {fp for fp, _ in family_instances(2, 6, literal=True)}
        ext = {fp for fp, _ in family_instances(2, 6)}
        assert lit < ext
        assert all(fp.sigma == 0 for fp in ext - lit)


def _raw(fp):
    from pgcap.families import _raw_family

    return _raw_family(fp)


class TestExtraspecial:
    def test_examples(self):
        D8 = build_extraspecial(2, 1, "D")
        assert are_isomorphic(D8, build_family(FamilyParams("T1i", 2, 1, 1, 1)))
        E = build_extraspecial(2, 2, "DD")
        assert E.order == 32 and minimal_generators(E) == 4
        D = derived_subgroup(E)
        assert D.order == 2 and is_cyclic(D) and center(E).members == D.members
        H = build_extraspecial(3, 1, "+")
        assert are_isomorphic(H, build_family(FamilyParams("T2i", 3, 1, 1, 1)))

    @pytest.mark.parametrize("p, n, kind", [(2, 2, "DQ"), (2, 3, "Q"), (3, 2, "+"), (3, 2, "-"), (5, 1, "+")])
    def test_properties(self, p, n, kind):
        E = build_extraspecial(p, n, kind)
        Z, D = center(E), derived_subgroup(E)
        assert E.order == p ** (1 + 2 * n)
        assert Z.order == p and Z.members == D.members
        assert minimal_generators(E) == 2 * n

    def test_bad_kind(self):
        with pytest.raises(InputError):
            build_extraspecial(2, 2, "X")
        with pytest.raises(InputError):
            build_extraspecial(3, 1, "D")
        with pytest.raises(InputError):
            build_extraspecial(4, 1)


class TestCatalog:
    @pytest.mark.parametrize("p, max_order", [(2, 16), (3, 81)])
    def test_census(self, p, max_order):
        cat = enumerate_2gen_class2(p, max_order)
        counts = {}
        for e in cat:
            counts[e.order] = counts.get(e.order, 0) + 1
        assert counts == CENSUS[p]

    def test_filters(self):
        for e in enumerate_2gen_class2(2, 32):
            G = e.presentation
            assert nilpotency_class(G) == 2 and minimal_generators(G) == 2

    def test_duplicate_free_64(self):
        cat = enumerate_2gen_class2(2, 64)
        for a, b in itertools.combinations(cat, 2):
            if a.order == b.order:
                assert not are_isomorphic(a.presentation, b.presentation)

    @pytest.mark.parametrize("p, logs", [(2, range(3, 7)), (3, range(3, 5))])
    def test_every_family_member_in_catalog(self, p, logs):
        cat = enumerate_2gen_class2(p, p ** max(logs))
        for k in logs:
            for fp, G in family_instances(p, k):
                assert any(e.order == G.order and are_isomorphic(G, e.presentation) for e in cat), fp.label()

    def test_cap(self):
        with pytest.raises(ResourceError):
            enumerate_2gen_class2(2, 2048)
        assert enumerate_2gen_class2(2, 4) == []

    def test_export(self, tmp_path):
        cat = enumerate_2gen_class2(3, 27)
        index = export_catalog(cat, tmp_path, lambda G: "x")
        rows = index.read_text().splitlines()
        assert len(rows) == 3 and rows[0].startswith("id\tfile")
        fname = rows[1].split("\t")[1]
        G = parse_presentation((tmp_path / fname).read_text())
        assert are_isomorphic(G, cat[0].presentation)
