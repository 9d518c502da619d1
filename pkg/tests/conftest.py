import random

import pytest

from sphmoduli import build_context, build_root_system, weyl_dimension

# Groups of total rank <= 3 exercised by the cross-check battery.
BATTERY_GROUPS = [
    "A1", "A1xA1", "A2", "A1xA1xA1", "A2xA1", "A3", "B2", "B3", "C3", "G2",
]

SAMPLES_PER_GROUP = 3
IRREP_DIM_LIMIT = 300
SEED = 20250808


def sample_context(rs, rng, max_coord=2):
    """One random context with an independent dominant basis of small
    coordinates whose irreducibles stay below the dimension limit."""
    n = rs.rank
    while True:
        r = rng.randint(1, n)
        basis = [tuple(rng.randint(0, max_coord) for _ in range(n)) for _ in range(r)]
        if any(weyl_dimension(rs, w) > IRREP_DIM_LIMIT for w in basis):
            continue
        try:
            return build_context(rs, basis)
        except ValueError:
            continue


def make_battery():
    rng = random.Random(SEED)
    battery = [
        ("a1a1-crossed", build_context(build_root_system("A1xA1"), [(2, 0), (4, 2)])),
        ("sl2-even", build_context(build_root_system("A1"), [(2,)])),
    ]
    for group in BATTERY_GROUPS:
        rs = build_root_system(group)
        for k in range(SAMPLES_PER_GROUP):
            battery.append((f"{group}#{k}", sample_context(rs, rng)))
    return battery


@pytest.fixture(scope="session")
def battery():
    return make_battery()


@pytest.fixture(scope="session")
def crossed_lines():
    return build_context(build_root_system("A1xA1"), [(2, 0), (4, 2)])


@pytest.fixture(scope="session")
def sl2_even():
    return build_context(build_root_system("A1"), [(2,)])


def catalog_by_name(rs):
    from sphmoduli import spherical_root_catalog
    return {r.name(): r for r in spherical_root_catalog(rs)}
