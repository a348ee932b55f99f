"""Smoke test for the idsball extension module.

Run after `maturin develop` (or installing the built wheel):

    python crates/python/python/smoke_test.py
"""

import json

import idsball
from idsball import Sequence


def main():
    x = Sequence("0000", 2)
    members = [str(z) for z in idsball.ball(x, t=1, s=1, p=1)]
    excluded = {"1111", "1110", "1101", "1011", "0111"}
    assert set(members) == {format(v, "04b") for v in range(16)} - excluded
    assert idsball.ball_size(x, t=1, s=1, p=1) == 11
    assert idsball.min_ball_bound(4, 2, t=1, s=1, p=1) == 11

    report = idsball.minimality_predicate(x, t=1, s=1, p=1)
    assert report == {"bound": 11, "minimal_predicted": True, "conditions": ["r(x)=1"]}
    assert not idsball.minimality_predicate(Sequence("01", 2), t=1, s=1)["minimal_predicted"]

    assert idsball.binomial(100, 50) == 100891344545564193334812497256
    assert idsball.size_insertion_ball(4, 3, 4) == 1697
    assert idsball.size_zero_ball(4, 3, t=4, p=2) == 5281
    assert idsball.levenshtein_intersection_max(3, 2, 2) == 6

    assert idsball.matching_set(Sequence("110", 3), Sequence("21010", 3)) == [2, 4, 5]

    y, centre = Sequence("20100100", 3), Sequence("1001", 3)
    trace = idsball.bijection_insertion(y, centre, 4)
    assert trace["I"] == [2, 4, 5, 7] and str(trace["z"]) == "01100210"
    assert idsball.bijection_insertion_inverse(trace["z"], centre, 4) == y
    trace = idsball.injection_idp(y, centre, 4, 2)
    assert (trace["I"], trace["J"], trace["K"]) == ([2, 4], [1, 3], [1, 2, 3, 4])
    assert str(trace["z"]) == "00110100"

    assert str(idsball.witness_swap_flip(Sequence("01", 2), 1, 0)["z"]) == "10"
    pair = idsball.witness_deletion_pair(Sequence("01", 2), 1)
    assert (str(pair["u"]), str(pair["v"])) == ("0", "1")
    w = idsball.witness_nonsurjective(centre, 4, 2)
    assert w["member"] and w["prefix_differs"] and w["tail_not_embedded"]

    assert Sequence([0, 1, 2], 3) == Sequence("012", 3)
    assert len(Sequence("", 2)) == 0
    for bad in (lambda: Sequence("2", 2), lambda: idsball.ball(x, s=5)):
        try:
            bad()
        except idsball.IdsballError:
            pass
        else:
            raise AssertionError("expected IdsballError")
    try:
        idsball.ball(x, t=3, word_cap=10)
    except idsball.WordCapError:
        pass
    else:
        raise AssertionError("expected WordCapError")

    result = idsball.run_verification(q_values=[2], n_max=3, budget_max=1)
    assert result.passed and result.failures == 0 and result.cases_run > 0
    assert json.loads(result.to_json())["summary"]["failures"] == 0

    print("idsball smoke test passed")


if __name__ == "__main__":
    main()
