"""Shared fixture profiles used across the suite.

The names track the recurring cast: a small tensor-module profile (tm), an
eventually-constant positive profile (pos), one- and two-sided staircases
(stair, dstair), a finite-J Fock profile (ft), a two-infinite-class Fock
profile (fock1), and the alternating singleton profile whose wedge set is not
initial (nonex).
"""

import pytest

from glpieri.profiles import (
    OMEGA,
    ClassSpec,
    Plain,
    Split,
    TailSpec,
    WeightProfile,
    validate_profile,
)


def plain_body(*pairs):
    return tuple(ClassSpec(v, Plain(s)) for v, s in pairs)


@pytest.fixture
def p_tm():
    return validate_profile(
        WeightProfile(body=plain_body((1, 1), (0, OMEGA), (-1, 1)))
    )


@pytest.fixture
def p_pos():
    return validate_profile(
        WeightProfile(body=plain_body((3, 1), (1, 1), (0, OMEGA)))
    )


@pytest.fixture
def p_stair():
    return validate_profile(
        WeightProfile(
            body=(),
            right_tail=TailSpec(-1, -1, (Plain(OMEGA),)),
        )
    )


@pytest.fixture
def p_dstair():
    return validate_profile(
        WeightProfile(
            body=(),
            left_tail=TailSpec(1, 1, (Plain(OMEGA),)),
            right_tail=TailSpec(0, -1, (Plain(OMEGA),)),
        )
    )


@pytest.fixture
def p_ft():
    return validate_profile(
        WeightProfile(
            body=(
                ClassSpec(1, Split(1, 0)),
                ClassSpec(0, Split(OMEGA, OMEGA)),
                ClassSpec(-1, Split(0, 1)),
            )
        )
    )


@pytest.fixture
def p_fock1():
    return validate_profile(
        WeightProfile(
            body=(
                ClassSpec(0, Split(OMEGA, OMEGA)),
                ClassSpec(-1, Split(OMEGA, OMEGA)),
            )
        )
    )


@pytest.fixture
def p_nonex():
    return validate_profile(
        WeightProfile(
            body=(),
            right_tail=TailSpec(-1, -1, (Split(0, 1), Split(1, 0))),
        )
    )
