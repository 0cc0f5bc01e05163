import pytest

from plactic import properties as props
from plactic.core import parse_identity
from plactic.identities import SearchBounds, check_identity
from plactic.monoid import ALL_MONOIDS, equivalent

SMALL = SearchBounds(2, 3)


def test_sylv_is_left_but_not_right_cancellative():
    assert not props.check_left_cancellative("sylv", SMALL).found
    cx = props.check_right_cancellative("sylv", SMALL)
    assert cx.found
    a, u, v = cx.assignment["a"], cx.assignment["u"], cx.assignment["v"]
    assert equivalent("sylv", u + a, v + a) and not equivalent("sylv", u, v)


def test_sylvsharp_is_right_cancellative():
    assert not props.check_right_cancellative("sylvsharp", SMALL).found
    assert props.check_left_cancellative("sylvsharp", SMALL).found


@pytest.mark.parametrize("m", ["sylv", "sylvsharp", "baxt"])
def test_sameeval(m):
    assert not props.check_sameeval_lemma(m, bounds=SMALL).found


def test_sameeval_wrong_side_fails_for_sylv():
    assert props.check_sameeval_lemma("sylv", "left", SMALL).found


@pytest.mark.parametrize("m", ALL_MONOIDS)
def test_congruence_and_evaluation(m):
    b = SearchBounds(2, 3)
    assert not props.check_congruence(m, b).found
    assert not props.check_evaluation_invariance(m, b).found


@pytest.mark.parametrize("finer,coarser", [("sylv", "hypo"), ("sylvsharp", "hypo"), ("stal", "taig"),
                                           ("baxt", "sylv"), ("baxt", "sylvsharp"), ("plac", "hypo")])
def test_refinements(finer, coarser):
    assert not props.check_refinement(finer, coarser, SearchBounds(3, 3)).found


def test_non_refinement_is_detected():
    assert props.check_refinement("hypo", "sylv", SearchBounds(2, 3)).found


def test_baxter_factorization():
    assert not props.check_baxter_factorization(SearchBounds(2, 3)).found


@pytest.mark.parametrize("m,prefix", [("sylv", 2), ("sylvsharp", 3)])
def test_uxx_family_refuted(m, prefix):
    family = props.uxx_vyx_family(m, prefix)
    assert family
    v = props.check_uxx_vyx_family(m, prefix)
    assert not v.found and v.substitutions_tested == len(family)


def test_uxx_family_unsupported():
    with pytest.raises(props.UnsupportedCheck):
        props.uxx_vyx_family("plac", 1)


def test_free_submonoid():
    v = props.check_free_submonoid("lps", [(2, 1), (1,)], 8)
    assert not v.found and v.substitutions_tested == 511
    cx = props.check_free_submonoid("stal", [(1, 2), (2, 1)], 2)
    assert cx.found and "block sequences" in cx.note


def test_rps_rank_identity_text():
    assert str(props.rps_rank_identity(2)) == "xyxyxy=xyxyyx"
    assert str(props.rps_rank_identity(1)) == "xyxy=xyyx"
    with pytest.raises(ValueError):
        props.check_rps_rank_identity(2, SearchBounds(3, 2))


def test_adian_identity_and_pq():
    assert str(props.adian_identity()) == "xyyxxyxyyx=xyyxyxxyyx"
    pq = props.plac3_pq_identity()
    assert len(pq.lhs) == len(pq.rhs) == 50 and pq.arity == 2


def test_plac_is_not_commutative():
    assert check_identity("plac", parse_identity("xy=yx"), SearchBounds(2, 1)).found
