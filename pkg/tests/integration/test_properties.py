"""
Property tests on random polynomial data, random fibers and random
constant frames.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from courant_tduality.courant import (
    BFieldMap,
    TwistedCourant,
    bfield_defect_check,
    courant_axioms_check,
    is_bracket_homomorphism,
    pairing,
    random_sections,
    sample_triples,
)
from courant_tduality.exterior import (
    Chart,
    DifferentialForm,
    Frame,
    PolyMatrix,
    RandomSource,
    SamplePlan,
    ext_d,
)
from courant_tduality.genmetric import GeneralisedMetric, orthogonality_check, tau_involution_check
from courant_tduality.reduction import FoliationSubbundle
from courant_tduality.relations import FiberSpace, FiberSubspace, compose, identity_relation
from courant_tduality.tduality import TDualityProblem, rank_law, relate

small = st.integers(min_value=-3, max_value=3)


@pytest.mark.integration
@pytest.mark.slow
class TestCourantProperties:
    """Axioms and B-field symmetries on random sections."""

    @settings(max_examples=10, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_axioms_hold_for_random_closed_flux(self, seed):
        """Test every axiom for H = dβ on a 4-dimensional chart."""
        chart = Chart(("x", "y", "z", "w"))
        E = TwistedCourant(chart, RandomSource(chart, seed=seed).closed_three_form())
        triples, functions = sample_triples(E, 4, seed, max_degree=1)
        assert courant_axioms_check(E, triples, functions, seed=seed).passed

    @settings(max_examples=10, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_exact_bfield_is_symmetry(self, seed):
        """Test that e^{dA} preserves the pairing and the bracket."""
        chart = Chart(("x", "y", "z"))
        source = RandomSource(chart, seed=seed, max_degree=1)
        b = BFieldMap(ext_d(source.form(1)))
        sections = random_sections(source, 3)
        E = TwistedCourant(chart, source.closed_three_form())
        assert is_bracket_homomorphism(E, b, sections)
        for e1 in sections:
            for e2 in sections:
                assert pairing(b.apply(e1), b.apply(e2)) == pairing(e1, e2)


@pytest.mark.integration
@pytest.mark.slow
class TestSeededScale:
    """Axioms and the B-field defect on a hundred-odd seeded samples."""

    @pytest.mark.parametrize("k", [0, 3])
    def test_axioms_on_hundred_triples(self, k, chart_xyz, volume_form):
        """Test every axiom on 100 degree-2 triples for H = 0 and H = k dx∧dy∧dz."""
        E = TwistedCourant(chart_xyz, volume_form.scale(k))
        triples, functions = sample_triples(E, 100, seed=2024 + k, max_degree=2)
        report = courant_axioms_check(E, triples, functions, seed=2024 + k)
        assert report.passed
        assert len(triples) == 100

    def test_bfield_defect_on_fifty_pairs(self, chart_xyz):
        """Test the defect ι_Y ι_X dB of a non-closed B on 50 random pairs."""
        x, y, z = chart_xyz.gens()
        source = RandomSource(chart_xyz, seed=77, max_degree=2)
        B = DifferentialForm.from_terms(chart_xyz, 2, [((1, 2), x), ((0, 1), z * z)])
        b = BFieldMap(B + ext_d(source.form(1)))
        assert not ext_d(b.B).is_zero()
        sections = random_sections(source, 100)
        pairs = list(zip(sections[::2], sections[1::2]))
        H = ext_d(DifferentialForm.from_terms(chart_xyz, 2, [((0, 2), y)]))
        report = bfield_defect_check(TwistedCourant(chart_xyz, H), b, pairs)
        assert report.passed
        assert report.details == {"pairs": 50, "closed_B": False}


@pytest.mark.integration
@pytest.mark.slow
class TestMetricProperties:
    """τ on random constant-det metrics."""

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_tau_with_random_b(self, seed):
        """Test τ² = 1 and V⁺ ⊥ V⁻ for g = 1 and a random polynomial b."""
        chart = Chart(("x", "y", "z"))
        source = RandomSource(chart, seed=seed)
        rows = [[chart.zero] * 3 for _ in range(3)]
        for i, j in ((0, 1), (0, 2), (1, 2)):
            p = source.polynomial()
            rows[i][j], rows[j][i] = p, -p
        G = GeneralisedMetric(PolyMatrix.identity(chart, 3), PolyMatrix.from_rows(chart, rows))
        assert tau_involution_check(G).passed
        assert orthogonality_check(G).passed


@pytest.mark.integration
@pytest.mark.slow
class TestFiberProperties:
    """Linear algebra of random subspaces."""

    @settings(max_examples=30, deadline=None)
    @given(vectors=st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4))
    def test_double_perp(self, vectors):
        """Test S^⊥⊥ = S and dim S + dim S^⊥ = 4."""
        S = FiberSubspace(FiberSpace.single(2), vectors)
        assert S.perp().perp() == S
        assert S.dim + S.perp().dim == 4

    @settings(max_examples=30, deadline=None)
    @given(vectors=st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4))
    def test_identity_is_neutral(self, vectors):
        """Test I∘S = S for a relation S ⊆ E × Ē."""
        S = FiberSubspace(FiberSpace.relation(1, 1), vectors)
        assert compose(identity_relation(1), S).relation == S


def _constant_problem(seed):
    """
    A random constant-coefficient frame with K₁ and K₂ spanned by frame fields.

    Coordinates are split into common, K₁-only, K₂-only and horizontal
    groups with |K₁-only| = |K₂-only|; the fields of each K are combinations
    of its own coordinate directions, the horizontal ones are arbitrary.
    """
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    coords = tuple(f"u{i}" for i in range(n))
    chart = Chart(coords)
    order = list(range(n))
    rng.shuffle(order)
    pair = rng.randint(0, (n - 1) // 2)
    common = order[: rng.randint(0 if pair else 1, n - 1 - 2 * pair)]
    rest = order[len(common):]
    only1, only2 = rest[:pair], rest[pair: 2 * pair]
    horizontal = rest[2 * pair:]
    rows = [[0] * n for _ in range(n)]
    for pos, c in enumerate(common):
        rows[c][c] = 1
        for later in common[pos + 1:]:
            rows[c][later] = rng.randint(-2, 2)
    for i in only1 + only2:
        rows[i][i] = 1
        for c in common:
            rows[i][c] = rng.randint(-2, 2)
    for h in horizontal:
        rows[h][h] = 1
        for j in common + only1 + only2:
            rows[h][j] = rng.randint(-2, 2)
    frame = Frame(chart, PolyMatrix.from_rows(chart, rows))
    K1 = FoliationSubbundle(
        frame, sorted(common + only1), [coords[i] for i in common + only1], name="K1"
    )
    K2 = FoliationSubbundle(
        frame, sorted(common + only2), [coords[i] for i in common + only2], name="K2"
    )
    G1 = GeneralisedMetric(PolyMatrix.identity(K1.quotient_chart, K1.quotient_chart.dim))
    return TDualityProblem(TwistedCourant.untwisted(chart), K1, K2, G1, name=f"random_{seed}")


@pytest.mark.integration
@pytest.mark.slow
class TestRelationProperties:
    """The T-duality relation on random constant frames."""

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=100_000))
    def test_rank_law_and_dirac(self, seed):
        """Test rk R = 2n − 2 rk K₁ and that R is Dirac at every sample point."""
        P = _constant_problem(seed)
        relation = relate(P, SamplePlan.generate(P.chart.dim, samples=3, seed=seed))
        n = P.chart.dim
        assert relation.rank == rank_law(P) == 2 * n - 2 * P.K1.rank
        assert relation.report.child("relate.rank").passed
        assert relation.report.child("relate.dirac").passed
