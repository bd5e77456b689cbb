import json
from pathlib import Path

import pytest

from constadesign.services.constacyclic import build_code
from constadesign.services.gf import build_tower
from constadesign.utils.numbers import FAMILY_A, FAMILY_B, admissible_r, split_prime_power

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

SMALL_Q = (2, 3, 4, 5)


@pytest.fixture(scope="session")
def towers():
    return {q: build_tower(*split_prime_power(q)) for q in SMALL_Q}


@pytest.fixture(scope="session")
def family_codes(towers):
    """(q, family, r) -> code, for every admissible r at q <= 5"""
    codes = {}
    for q, tower in towers.items():
        for family in (FAMILY_A, FAMILY_B):
            for r in admissible_r(q, family):
                codes[(q, family, r)] = build_code(tower, r, family)
    return codes


@pytest.fixture(scope="session")
def worked_examples():
    with open(DATA_DIR / "worked_examples.json") as f:
        return json.load(f)


def codes_for(family_codes, q):
    return [code for (cq, _, _), code in sorted(family_codes.items()) if cq == q]
