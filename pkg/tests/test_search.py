import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_alpha, fam
from kneser_extremal import bounds as B
from kneser_extremal.constructions import constellation, hilton_milner, star, thm1_extremal
from kneser_extremal.families import is_intersecting, is_star
from kneser_extremal.kneser import Family, induce
from kneser_extremal.pattern import PatternGraph, complete, complete_bipartite, contains_pattern, path
from kneser_extremal.search import (
    InstanceTooLarge,
    anchor_representatives,
    exhaustive_oracle,
    is_constellation,
    max_intersecting_nontrivial,
    max_pattern_free,
    verify_thm1_structure,
)
from kneser_extremal.setcore import FamilyMember, GroundParams

FULL72 = Family.full(GroundParams(7, 2))
PATTERNS = [complete(2), complete(3), path(3), complete_bipartite(2, 2), path(4)]


def test_k2_at_4_2_has_nonstar_optimum():
    cert = max_pattern_free(GroundParams(4, 2), complete(2), enumerate_all=True)
    assert cert.optimum == 3
    assert any(is_star(f) is None for f in cert.all_extrema)
    # stars at 4 elements plus the two triangles {12,13,23}-type families
    assert cert.extrema_count == exhaustive_oracle(GroundParams(4, 2), complete(2)).extrema_count


def test_petersen_alpha():
    cert = max_pattern_free(GroundParams(5, 2), complete(2))
    assert cert.optimum == 4 == brute_alpha(Family.full(GroundParams(5, 2)))


def test_anchor_representatives():
    assert anchor_representatives(complete(4)) == [0]
    assert anchor_representatives(path(4)) == [0, 1]
    assert anchor_representatives(complete_bipartite(2, 3)) == [0, 2]


@pytest.mark.parametrize("g", PATTERNS, ids=str)
@pytest.mark.parametrize("nk", [(4, 2), (5, 2), (6, 2)])
def test_branch_and_bound_matches_oracle(g, nk):
    p = GroundParams(*nk)
    bnb = max_pattern_free(p, g, enumerate_all=True)
    orc = exhaustive_oracle(p, g)
    assert bnb.optimum == orc.optimum
    assert sorted(f.to_sets() for f in bnb.all_extrema) == sorted(f.to_sets() for f in orc.all_extrema)
    for f in bnb.all_extrema[:20]:
        assert contains_pattern(induce(f), g) is None


@settings(max_examples=25, deadline=None)
@given(st.sets(st.integers(0, 20), max_size=13), st.sampled_from(PATTERNS))
def test_random_hosts_match_oracle(idx, g):
    host = FULL72.subfamily(idx)
    if not len(host):
        return
    bnb = max_pattern_free(host.params, g, host=host)
    assert bnb.optimum == exhaustive_oracle(host.params, g, host=host).optimum
    assert contains_pattern(induce(bnb.witness), g) is None
    assert set(bnb.witness.members) <= set(host.members)


@settings(max_examples=20, deadline=None)
@given(st.sets(st.integers(0, 20), min_size=1, max_size=14), st.permutations(range(1, 8)), st.sampled_from(PATTERNS))
def test_ground_permutation_invariance(idx, perm, g):
    host = FULL72.subfamily(idx)
    p = host.params
    moved = Family.from_members(p, [FamilyMember.of(p, [perm[e - 1] for e in m.elements]) for m in host])
    a = max_pattern_free(p, g, host=host).optimum
    assert a == max_pattern_free(p, g, host=moved).optimum


def test_monotone_in_pattern():
    # a larger pattern is harder to contain, so the optimum can only grow
    p = GroundParams(6, 2)
    chain = [complete(2), path(3), path(4), complete_bipartite(2, 2)]
    opts = [max_pattern_free(p, g).optimum for g in chain]
    assert opts == sorted(opts)
    edgeless_plus = PatternGraph.from_edges(3, [(0, 1)])
    assert max_pattern_free(p, edgeless_plus).optimum >= max_pattern_free(p, complete(2)).optimum


def test_optimum_at_least_constructions():
    p = GroundParams(6, 2)
    assert max_pattern_free(p, complete(3)).optimum >= len(constellation(p, [1, 2]))
    fam_, rep = thm1_extremal(GroundParams(6, 2), [1], [FamilyMember.of(p, [2, 3])], complete_bipartite(2, 2))
    assert rep.valid
    assert max_pattern_free(p, complete_bipartite(2, 2)).optimum >= len(fam_)


def test_caps():
    with pytest.raises(InstanceTooLarge):
        exhaustive_oracle(GroundParams(8, 2), complete(2))
    with pytest.raises(InstanceTooLarge):
        exhaustive_oracle(GroundParams(4, 2), complete(8))
    with pytest.raises(ValueError):
        max_pattern_free(GroundParams(4, 2), complete(2), mode="parallel_bnb")


def test_mode_dispatch_and_threads_note():
    p = GroundParams(5, 2)
    assert max_pattern_free(p, complete(3), mode="exhaustive_oracle").mode == "exhaustive_oracle"
    cert = max_pattern_free(p, complete(3), threads=4)
    assert cert.notes and cert.optimum == 10  # Petersen is triangle-free


def test_enumeration_cap_flags_overflow():
    cert = max_pattern_free(GroundParams(5, 2), complete(2), enumerate_all=True, enum_cap=2)
    assert cert.extrema_overflow and cert.extrema_count == 2


@pytest.mark.parametrize("nk", [(5, 2), (6, 2), (6, 3)])
def test_nontrivial_intersecting_matches_oracle(nk):
    p = GroundParams(*nk)
    host = None
    if nk == (6, 3):
        host = Family.full(p).subfamily(range(20))
    bnb = max_intersecting_nontrivial(p, host=host)
    orc = max_intersecting_nontrivial(p, mode="exhaustive_oracle", host=host)
    assert bnb.optimum == orc.optimum
    assert is_intersecting(bnb.witness) and is_star(bnb.witness) is None


@pytest.mark.parametrize("n,k", [(5, 2), (7, 2), (7, 3)])
def test_nontrivial_equals_hilton_milner(n, k):
    p = GroundParams(n, k)
    assert max_intersecting_nontrivial(p).optimum == len(hilton_milner(p)) == B.hm_bound(n, k)


@settings(max_examples=25, deadline=None)
@given(st.sets(st.integers(0, 20), max_size=12))
def test_nontrivial_random_hosts(idx):
    host = FULL72.subfamily(idx)
    a = max_intersecting_nontrivial(host.params, host=host).optimum
    assert a == max_intersecting_nontrivial(host.params, mode="exhaustive_oracle", host=host).optimum


def test_verify_thm1_structure():
    p = GroundParams(8, 2)
    c = constellation(p, [2, 5])
    assert verify_thm1_structure(c, complete(3)) == ((2, 5), ())
    assert is_constellation(c, 2) == (2, 5)
    assert is_constellation(star(p, 1), 2) is None
    f, _ = thm1_extremal(GroundParams(7, 2), [3], [FamilyMember.of(GroundParams(7, 2), [1, 2])], complete_bipartite(2, 2))
    L, extras = verify_thm1_structure(f, complete_bipartite(2, 2))
    assert L == (3,) and [m.elements for m in extras] == [(1, 2)]
    with pytest.raises(ValueError):
        verify_thm1_structure(star(p, 1), complete(3))
    # right size but not the extremal shape: a star minus one member plus a disjoint pair
    s = star(GroundParams(6, 2), 1)
    odd = fam(6, 2, [*(m.elements for m in s.members[1:]), (2, 3), (4, 5)])
    assert verify_thm1_structure(odd, complete_bipartite(2, 2)) is None


def test_certificate_json():
    doc = max_pattern_free(GroundParams(5, 2), complete(2), enumerate_all=True).to_json()
    assert doc["optimum"] == 4 and doc["extrema_count"] == 5
    assert all(len(f) == 4 for f in doc["all_extrema"])
