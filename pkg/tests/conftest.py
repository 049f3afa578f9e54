"""Shared helpers: seeded random generators for specs, terms, matrices,
plus the acceptance-criteria verdict report."""

import random

from gauge4 import ManifoldSpec, Moore, Pi1Descriptor, Point, Sphere, SuspCP2, Wedge

ODD_PRIMES = (3, 5, 7, 11)

_ACCEPTANCE_LINES = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.line(line)


def random_pi1(rng: random.Random, max_free=5, max_cyclic=4, max_r=3) -> Pi1Descriptor:
    m = rng.randint(0, max_free)
    k = rng.randint(0, max_cyclic)
    factors = tuple((rng.choice(ODD_PRIMES), rng.randint(1, max_r)) for _ in range(k))
    return Pi1Descriptor(m, factors)


def random_spec(rng: random.Random, **kw) -> ManifoldSpec:
    pi1 = random_pi1(rng, **kw)
    b2 = rng.randint(0, 6)
    # The nontrivial top-cell flag needs a 2-cell to hang the CP^2 block on.
    trivial = True if b2 == 0 else rng.random() < 0.5
    return ManifoldSpec(pi1, b2, trivial)


def random_atom(rng: random.Random):
    roll = rng.randrange(3)
    if roll == 0:
        return Sphere(rng.randint(1, 5))
    if roll == 1:
        return Moore(rng.randint(2, 5), rng.randint(2, 30))
    return SuspCP2()


def random_term(rng: random.Random, depth=2):
    """An arbitrary (possibly nested, unnormalized) space term."""
    roll = rng.randrange(8)
    if roll == 0:
        return Point()
    if roll <= 4 or depth == 0:
        return random_atom(rng)
    parts = tuple(random_term(rng, depth - 1) for _ in range(rng.randint(0, 4)))
    return Wedge(parts)


def random_matrix_rows(rng: random.Random, max_side=4, bound=9):
    rows = rng.randint(1, max_side)
    cols = rng.randint(1, max_side)
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
