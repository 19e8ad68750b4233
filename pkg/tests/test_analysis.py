import numpy as np
import pytest

from kunigraph.analysis import ame_support_check, rank_spectrum, rank_split_check
from kunigraph.codes import LinearCode
from kunigraph.dense import apply_fourier, apply_x, apply_z, state_from_code


# ---------------------------------------------------------------------------
# rank spectra
# ---------------------------------------------------------------------------

def test_spectrum_covers_all_subsets_up_to_half(phi60):
    spec = rank_spectrum(phi60)
    sizes = {len(s) for s in spec.by_subset}
    assert sizes == {1, 2, 3}
    assert len(spec.by_subset) == 6 + 15 + 20


def test_62_state_triple_ranks_are_capped_by_message_count(phi60):
    spec = rank_spectrum(phi60)
    for subset, rank in spec.by_subset.items():
        if len(subset) == 3:
            assert rank <= 25, subset


def test_ghz_every_reduction_has_rank_q(f5):
    ghz = state_from_code(LinearCode.from_entries(f5, [[1, 1]]))
    spec = rank_spectrum(ghz)
    assert set(spec.by_subset.values()) == {5}


def test_kuni_reductions_have_full_rank(phi60):
    # for a 2-uniform state every reduction of size <= 2 has rank q^|S|
    spec = rank_spectrum(phi60, max_size=2)
    for subset, rank in spec.by_subset.items():
        assert rank == 5 ** len(subset)


def test_spectrum_json_and_equality(phi50):
    spec = rank_spectrum(phi50)
    payload = spec.to_json()
    assert payload["n"] == 5 and payload["q"] == 5
    assert payload["ranks"]["1,2"] == 25
    assert spec == rank_spectrum(phi50)


def test_rank_spectrum_is_lu_invariant(phi50):
    rng = np.random.default_rng(13)
    rotated = phi50
    for _ in range(6):
        qudit = int(rng.integers(1, 6))
        gate = rng.choice(["x", "z", "f"])
        if gate == "x":
            rotated = apply_x(rotated, qudit, int(rng.integers(1, 5)))
        elif gate == "z":
            rotated = apply_z(rotated, qudit, int(rng.integers(1, 5)))
        else:
            rotated = apply_fourier(rotated, qudit)
    assert rank_spectrum(rotated) == rank_spectrum(phi50)


# ---------------------------------------------------------------------------
# split-subset rank discrimination
# ---------------------------------------------------------------------------

def test_base_and_level1_states_are_distinguished(phi60, phi62):
    report = rank_split_check(phi60, phi62, 2, 2, 1, labels=("6:2", "6:2+2:1"))
    assert report.verdict == "distinguished"
    assert report.subsets_checked == 12  # C(4,2) * C(2,1)
    assert report.distinguishing_subsets[0] == (1, 2, 5)
    assert report.ranks[(1, 2, 5)] == (25, 125)
    # every split subset separates this pair
    assert len(report.distinguishing_subsets) == 12


def test_identical_states_are_not_distinguished(phi60):
    report = rank_split_check(phi60, phi60, 2, 2, 1)
    assert report.verdict == "not distinguished"
    assert report.distinguishing_subsets == ()


def test_split_check_preconditions(phi50, phi52, phi60):
    with pytest.raises(ValueError):
        rank_split_check(phi50, phi52, 2, 2, 1)  # k + k* = 3 > floor(5/2)
    with pytest.raises(ValueError):
        rank_split_check(phi60, phi50, 2, 2, 1)  # different registers


def test_split_report_json(phi60, phi62):
    payload = rank_split_check(phi60, phi62, 2, 2, 1).to_json()
    assert payload["verdict"] == "distinguished"
    assert payload["subsets_checked"] == 12
    assert payload["distinguishing_subsets"][0] == [1, 2, 5]
    assert payload["ranks"]["1,2,5"] == [25, 125]


# ---------------------------------------------------------------------------
# AME support discrimination
# ---------------------------------------------------------------------------

def test_ame_pair_support_separation(phi50, phi52):
    report = ame_support_check(phi50, phi52, labels=("5:2", "5:2+2:1"))
    assert report.supports == (25, 125)
    assert report.verdict == "distinguished"


def test_same_state_supports_are_equal(phi50):
    report = ame_support_check(phi50, phi50)
    assert report.supports == (25, 25)
    assert report.verdict == "not distinguished by this test"


def test_support_check_requires_odd_register(phi60, phi62):
    with pytest.raises(ValueError):
        ame_support_check(phi60, phi62)


def test_support_check_requires_ame_inputs(f5, phi50):
    not_ame = state_from_code(LinearCode.from_entries(f5, [[1, 1, 1, 1]]))  # 1-uniform
    with pytest.raises(ValueError):
        ame_support_check(not_ame, phi50)


def test_missing_mds_block_surfaces_as_construction_error():
    # GF(2) has no 2x3 block with all minors nonsingular, so the 5-qubit
    # AME pair cannot even be built; the error comes from the code layer
    from kunigraph.codes import mds_code
    from kunigraph.field import PrimeField

    with pytest.raises(ValueError):
        mds_code(PrimeField(2), 5, 2)


def test_smallest_odd_register_pair_over_gf2():
    # q=2, n=3: the repetition code is MDS, so the pair does build and
    # the support separation is 2 vs 4
    from kunigraph.codes import mds_code
    from kunigraph.dense import hierarchy_state_from_codes
    from kunigraph.field import PrimeField

    f2 = PrimeField(2)
    base = state_from_code(mds_code(f2, 3, 1))
    hier = hierarchy_state_from_codes(mds_code(f2, 3, 1), mds_code(f2, 2, 1))
    report = ame_support_check(base, hier)
    assert report.supports == (2, 4)
    assert report.verdict == "distinguished"


def test_support_report_json(phi50, phi52):
    payload = ame_support_check(phi50, phi52).to_json()
    assert payload["supports"] == [25, 125]
    assert payload["subsets_checked"] == 0
    assert "note" in payload
