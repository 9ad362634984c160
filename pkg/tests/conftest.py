import numpy as np
import pytest

import ringlab as rl


@pytest.fixture(scope="session")
def z6():
    return rl.zmod(6)


@pytest.fixture(scope="session")
def z12():
    return rl.zmod(12)


@pytest.fixture(scope="session")
def m2z2():
    return rl.matrix_ring(2, rl.zmod(2))


@pytest.fixture(scope="session")
def m2z3():
    return rl.matrix_ring(2, rl.zmod(3))


# ---------------------------------------------------------------------------
# independent oracles, deliberately written against the raw definitions


def oracle_units(ring):
    """Brute-force pair scan: a is a unit iff some b has a*b == 1."""
    out = set()
    for a in range(ring.card):
        for b in range(ring.card):
            if ring.mul(a, b) == ring.one:
                out.add(a)
                break
    return out


def oracle_nilpotents(ring):
    """Power iteration up to card steps."""
    out = set()
    for a in range(ring.card):
        x = a
        for _ in range(ring.card):
            if x == ring.zero:
                out.add(a)
                break
            x = ring.mul(x, a)
    return out


def oracle_idempotents(ring):
    return {a for a in range(ring.card) if ring.mul(a, a) == a}


def oracle_jacobson_two_sided(ring):
    """{x : 1 - r*x*s is a unit for all r, s}, the two-sided definition."""
    units = oracle_units(ring)
    out = set()
    for x in range(ring.card):
        good = True
        for r in range(ring.card):
            rx = ring.mul(r, x)
            for s in range(ring.card):
                if ring.sub(ring.one, ring.mul(rx, s)) not in units:
                    good = False
                    break
            if not good:
                break
        if good:
            out.add(x)
    return out


def oracle_center(ring):
    return {
        x
        for x in range(ring.card)
        if all(ring.mul(x, r) == ring.mul(r, x) for r in range(ring.card))
    }


def oracle_weakly_nil_clean_elem(ring, a, nil=None):
    nil = oracle_nilpotents(ring) if nil is None else nil
    for e in oracle_idempotents(ring):
        if ring.sub(a, e) in nil or ring.add(a, e) in nil:
            return True
    return False


def mat_of(index, k, n):
    """Decode a matrix-ring index over Z(n), row-major most significant first."""
    digits = []
    for _ in range(k * k):
        index, d = divmod(index, n)
        digits.append(d)
    digits.reverse()
    return [digits[i * k : (i + 1) * k] for i in range(k)]


def index_of(mat, k, n):
    acc = 0
    for i in range(k):
        for j in range(k):
            acc = acc * n + (mat[i][j] % n)
    return acc


def mat_mul_mod(A, B, k, n):
    return [
        [sum(A[i][l] * B[l][j] for l in range(k)) % n for j in range(k)]
        for i in range(k)
    ]


def mat_add_mod(A, B, k, n):
    return [[(A[i][j] + B[i][j]) % n for j in range(k)] for i in range(k)]


def flags_of(ring):
    return rl.classify(ring).flags
