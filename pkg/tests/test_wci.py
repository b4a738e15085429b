"""Geometry layer: well-formedness, quasi-smoothness, index, classification, base loci."""

import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from wcikit.errors import DomainError, UsageError
from wcikit.hilbert import h0
from wcikit.pairs import is_h_regular
from wcikit.verify import SearchBounds, enumerate_instances
from wcikit.wci import (
    WciFamily,
    WeightClasses,
    _index_value,
    _selection_exists,
    augment,
    base_locus,
    canonical_degree,
    classify,
    fundamental_index,
    is_linear_cone,
    is_quasi_smooth,
    is_smooth,
    quasi_smooth,
    space_well_formed,
    stratum_meets,
    wci_well_formed,
)

X888_GOOD = WciFamily.parse("8,8,8 / 2^4,3^5,5^3")
X888_BAD = WciFamily.parse("8,8,8 / 2^3,3^4,5^3")
X35 = WciFamily.parse("35 / 5,7,2^5,3^5")
X231 = WciFamily.parse("231,231,26 / 3^2,7^2,11^2,1^447")
X6 = WciFamily.parse("6 / 1,2,3")
X66 = WciFamily.parse("6,6 / 1^2,2^2,3^2")


# -- construction and codec ---------------------------------------------------------


def test_weight_classes_round_trip():
    wc = WeightClasses.from_weights([3, 2, 2, 1, 3])
    assert wc.classes == ((3, 2), (2, 2), (1, 1))
    assert wc.expand() == (3, 3, 2, 2, 1)
    assert wc.total == 5
    assert wc.multiplicity(2) == 2
    assert wc.multiplicity(7) == 0


def test_family_encode_round_trip():
    assert X231.encode() == "231,231,26/11^2,7^2,3^2,1^447"
    assert WciFamily.parse(X231.encode()) == X231
    assert X66.codim == 2
    assert X66.nvars == 6
    assert X66.dim == 3


def test_family_codim_bound():
    with pytest.raises(UsageError):
        WciFamily.of((2, 2, 2), (1, 1, 1))
    WciFamily.of((), (1, 1))  # ambient space itself is fine


# -- ambient space ------------------------------------------------------------------


def test_space_well_formed_examples():
    assert space_well_formed([1, 1, 1])
    assert not space_well_formed([1, 2, 2])
    assert space_well_formed([3, 3, 7, 7, 11, 11] + [1] * 447)
    with pytest.raises(UsageError):
        space_well_formed([5])


def test_linear_cone_examples():
    assert is_linear_cone(WciFamily.parse("2/2,1^2"))
    assert not is_linear_cone(X6)
    assert not is_linear_cone(X231)


# -- quasi-smoothness ---------------------------------------------------------------


def test_quasi_smooth_known_examples():
    assert is_quasi_smooth(X888_GOOD)
    assert not is_quasi_smooth(X888_BAD)
    assert is_quasi_smooth(X35)
    assert not is_quasi_smooth(augment(X35, 6))
    assert is_quasi_smooth(X6)
    assert is_quasi_smooth(X66)
    assert is_quasi_smooth(X231)


def test_quasi_smooth_report_structure():
    report = quasi_smooth(X888_BAD)
    assert not report.verdict
    fails = [s for s in report.strata if s.outcome == "FAIL"]
    assert fails and fails[0].values == (5,)
    assert all(s.outcome in ("Q1", "Q2", "FAIL") for s in report.strata)
    report = quasi_smooth(X888_GOOD)
    assert report.verdict
    assert not any(s.outcome == "FAIL" for s in report.strata)


def test_quasi_smooth_rejects_cones():
    with pytest.raises(DomainError):
        quasi_smooth(WciFamily.parse("2/2,1^2"))


def test_quasi_smooth_ambient_trivial():
    assert is_quasi_smooth(WciFamily.of((), (1, 2, 3)))


# -- well-formedness of the family ---------------------------------------------------


def test_wci_well_formed_examples():
    assert wci_well_formed(X66)
    assert wci_well_formed(WciFamily.parse("231,231,26 / 3^2,7^2,11^2"))
    with pytest.raises(DomainError):
        wci_well_formed(WciFamily.parse("6/1,2,2"))


# -- stratum analysis ----------------------------------------------------------------


def test_stratum_meets_examples():
    assert stratum_meets(X35, {2})
    assert not stratum_meets(X66, {3})
    assert stratum_meets(X66, {1, 2, 3})
    with pytest.raises(UsageError):
        stratum_meets(X66, {4})
    with pytest.raises(UsageError):
        stratum_meets(X66, set())


# -- fundamental index ----------------------------------------------------------------


def test_fundamental_index_examples():
    report = fundamental_index(X35)
    assert report.index == 6
    contributing = {s.values: s for s in report.contributors}
    assert contributing[(2,)].meets and not contributing[(2,)].condition_i_holds
    assert fundamental_index(X66).index == 1
    assert fundamental_index(X231).index == 1
    assert fundamental_index(X6).index == 1


def test_fundamental_index_gate():
    with pytest.raises(DomainError):
        fundamental_index(WciFamily.parse("2/2,1^2"))  # linear cone
    with pytest.raises(DomainError):
        fundamental_index(X888_BAD)  # not quasi-smooth


# -- classification -------------------------------------------------------------------


def test_classify_examples():
    assert canonical_degree(X66) == 0
    assert classify(X66).kind == "calabi_yau"
    c = classify(X231)
    assert (c.kind, c.fano_index) == ("fano", 1)
    m = 2
    fuji = WciFamily.of(((2 * m + 1) * (2 * m + 2),), (1,) * (1 + 2 * m * (2 * m + 1)) + (2 * m + 1, 2 * m + 2))
    assert classify(fuji) == classify(fuji)
    assert classify(fuji).kind == "fano" and classify(fuji).fano_index == 2
    assert classify(WciFamily.parse("8/3,2,1^2")).kind == "general"
    with pytest.raises(DomainError):
        classify(WciFamily.parse("7/1,2,3"))  # the {3} stratum point sits on X in codim 1


def test_classify_rejects_ambient():
    with pytest.raises(DomainError):
        classify(WciFamily.of((), (1, 2, 3)))


# -- smoothness ------------------------------------------------------------------------


def test_is_smooth_examples():
    assert is_smooth(X231)
    assert not is_smooth(X35)
    assert is_smooth(X6)  # both singular points of P(1,2,3) miss a general member
    assert is_smooth(X66)
    assert not is_smooth(X888_GOOD)


# -- base locus ------------------------------------------------------------------------


def test_base_locus_curve_example():
    comps = base_locus(X231, 1)
    assert len(comps) == 1
    comp = comps[0]
    assert comp.values == (3, 7, 11)
    assert comp.family.encode() == "231,231,26/11^2,7^2,3^2"
    assert not is_quasi_smooth(comp.family)


def test_base_locus_free_cases():
    assert base_locus(X6, 6) == []
    assert base_locus(X6, 2) == []
    assert base_locus(X66, 6) == []


def test_base_locus_x66_degree_one():
    # only the two weight-1 sections exist, so |O(1)| cuts the curve on P(2^2,3^2)
    comps = base_locus(X66, 1)
    assert [c.family.encode() for c in comps] == ["6,6/3^2,2^2"]


def test_base_locus_usage():
    with pytest.raises(UsageError):
        base_locus(X6, 0)
    with pytest.raises(UsageError):
        base_locus(X6, -3)


def test_base_locus_components_maximal():
    comps = base_locus(X35, 1)
    value_sets = [set(c.values) for c in comps]
    for a in value_sets:
        assert not any(a < b for b in value_sets)


# -- augment ---------------------------------------------------------------------------


def test_augment_examples():
    assert augment(X35, 6) == WciFamily.parse("35,6/5,7,2^5,3^5")
    assert augment(WciFamily.of((), (1, 2, 3)), 6) == X6
    cone = augment(X66, 1)
    assert is_linear_cone(cone)
    with pytest.raises(UsageError):
        augment(X6, 0)


# -- structural invariants over a small exhaustive universe -----------------------------------


def _geometric_universe():
    bounds = SearchBounds(
        max_codim=2,
        max_vars=4,
        max_weight=6,
        max_degree=15,
        require_quasi_smooth=True,
        require_well_formed=True,
        exclude_linear_cones=True,
    )
    return [WciFamily.parse(enc) for enc, _ in enumerate_instances(bounds, kind="families")]


def test_invariants_on_small_universe():
    families = _geometric_universe()
    assert len(families) > 100
    for fam in families:
        ix = fundamental_index(fam).index
        # smooth families: every singular class divides enough degrees, index 1
        if is_smooth(fam):
            assert ix == 1
            for (g, k) in ((v, m) for v, m in fam.weights.classes if v > 1):
                assert sum(1 for d in fam.degrees if d % g == 0) >= k
        # weight value dividing no degree forces its divisibility into the index
        for v, _m in fam.weights.classes:
            if v > 1 and all(d % v != 0 for d in fam.degrees):
                assert ix % v == 0
        # the underlying pair is regular at level h = index
        assert is_h_regular(fam.pair(), ix)
        # base-point-free fundamental class has sections
        if base_locus(fam, ix) == []:
            assert h0(fam, ix) >= 1


# -- value-subset reduction vs index-level brute force -----------------------------------


def test_reduction_matches_oracle_randomized():
    rng = random.Random(411)
    for _ in range(150):
        n1 = rng.randint(2, 7)
        c = rng.randint(1, min(3, n1 - 1))
        ws = tuple(sorted((rng.randint(1, 10) for _ in range(n1)), reverse=True))
        ds = tuple(sorted((rng.randint(1, 30) for _ in range(c)), reverse=True))
        fam = WciFamily.of(ds, ws)
        if not is_linear_cone(fam):
            assert is_quasi_smooth(fam) == oracles.quasi_smooth(ds, ws)
        if space_well_formed(list(ws)):
            assert wci_well_formed(fam) == oracles.wci_well_formed(ds, ws)
        assert _index_value(fam) == oracles.fundamental_index(ds, ws)


@settings(max_examples=250, deadline=None)
@given(
    r=st.integers(min_value=1, max_value=4),
    mults=st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=4),
    data=st.data(),
)
def test_selection_search_matches_brute_force(r, mults, data):
    n_classes = len(mults)
    t = data.draw(st.integers(min_value=1, max_value=3))
    masks = tuple(
        data.draw(st.integers(min_value=0, max_value=(1 << n_classes) - 1))
        for _ in range(t)
    )
    # expand classes into individual coordinates for the reference search
    ids = []
    offset = 0
    for m in mults:
        ids.append(tuple(range(offset, offset + m)))
        offset += m
    avail = [
        tuple(e for cls in range(n_classes) if mask >> cls & 1 for e in ids[cls])
        for mask in masks
    ]
    expected = oracles._q2_subset(avail, r, tuple(range(offset)))
    assert _selection_exists(r, masks, tuple(mults)) == expected
