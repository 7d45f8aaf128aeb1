import pytest

from vaguesets import Judgment, Region, Universe, build_matrix


@pytest.fixture
def u80():
    return Universe(0, 80)


@pytest.fixture
def three_subject_matrix(u80):
    """One name, three subjects with regions [10,30), [15,25), [20,40)."""
    judgments = [
        Judgment("s1", "young", Region.from_pairs([(10, 30)], u80)),
        Judgment("s2", "young", Region.from_pairs([(15, 25)], u80)),
        Judgment("s3", "young", Region.from_pairs([(20, 40)], u80)),
    ]
    return build_matrix(judgments, u80)


@pytest.fixture
def two_subject_matrix(u80):
    """Two names, two subjects: x rows [10,30)/[15,25), y rows [20,40)/[5,18)."""
    judgments = [
        Judgment("m1", "x", Region.from_pairs([(10, 30)], u80)),
        Judgment("m2", "x", Region.from_pairs([(15, 25)], u80)),
        Judgment("m1", "y", Region.from_pairs([(20, 40)], u80)),
        Judgment("m2", "y", Region.from_pairs([(5, 18)], u80)),
    ]
    return build_matrix(judgments, u80)


@pytest.fixture
def polarized_matrix(u80):
    """Two subjects with both for and against judgments for one name."""
    judgments = [
        Judgment("p1", "young", Region.from_pairs([(10, 30)], u80), "for"),
        Judgment("p2", "young", Region.from_pairs([(10, 20)], u80), "for"),
        Judgment("p1", "young", Region.from_pairs([(40, 80)], u80), "against"),
        Judgment("p2", "young", Region.from_pairs([(25, 80)], u80), "against"),
    ]
    return build_matrix(judgments, u80)
