import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hemicube import ClassicalCode, QuotientComplex, build


@pytest.fixture(scope="session")
def rep_instances():
    """CodeInstances for every repetition quotient with 3 <= n <= 8."""
    out = {}
    for n in range(3, 9):
        for p in range(1, n - 1):
            out[(n, p)] = build(QuotientComplex(ClassicalCode.repetition(n), p))
    return out


@pytest.fixture(scope="session")
def code_624():
    return ClassicalCode.from_generators(6, [0b111100, 0b001111])


@pytest.fixture(scope="session")
def inst_624_p1(code_624):
    return build(QuotientComplex(code_624, 1))
