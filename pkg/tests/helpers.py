"""Shared random generators for property tests; all take an explicit rng."""

import math

from quatbox import QMatrix, QVector, Quaternion, Register, is_unitary, matmul, qmat, rotation


def random_quaternion(rng, scale=2.0) -> Quaternion:
    return Quaternion(*(scale * rng.uniform(-1.0, 1.0, size=4)))


def random_unit_quaternion(rng) -> Quaternion:
    q = Quaternion(*rng.normal(size=4))
    return q * (1.0 / q.norm())


def random_unit_complex(rng) -> Quaternion:
    theta = rng.uniform(0.0, 2.0 * math.pi)
    return Quaternion(math.cos(theta), math.sin(theta), 0.0, 0.0)


def _phase_diag(p: Quaternion, q: Quaternion) -> QMatrix:
    return qmat([[p, 0], [0, q]])


def random_unitary(rng) -> QMatrix:
    """Random 2x2 quaternionic unitary: unit-phase diagonals around a rotation."""
    u = _phase_diag(random_unit_quaternion(rng), random_unit_quaternion(rng))
    v = _phase_diag(random_unit_quaternion(rng), random_unit_quaternion(rng))
    m = matmul(matmul(u, rotation(rng.uniform(0.0, 2.0 * math.pi))), v)
    assert is_unitary(m)
    return m


def random_complex_unitary(rng) -> QMatrix:
    """Random 2x2 unitary with all entries in the complex subfield."""
    u = _phase_diag(random_unit_complex(rng), random_unit_complex(rng))
    v = _phase_diag(random_unit_complex(rng), random_unit_complex(rng))
    m = matmul(matmul(u, rotation(rng.uniform(0.0, 2.0 * math.pi))), v)
    assert is_unitary(m) and m.in_complex_subfield()
    return m


def random_state(rng, dim: int) -> QVector:
    amps = [Quaternion(*rng.normal(size=4)) for _ in range(dim)]
    norm = math.sqrt(math.fsum(a.norm_sq() for a in amps))
    return QVector(tuple(a * (1.0 / norm) for a in amps))


def random_register(rng, n_parties: int) -> Register:
    return Register(n_parties, random_state(rng, 2**n_parties))
