"""Dense vectors and matrices over the quaternions.

The scalars do not commute, so a module convention is load-bearing: state
vectors form a right module over the quaternions, and operators (and scalar
phases) act by multiplying amplitudes from the LEFT.  Every entry product
below keeps strict left-to-right order -- A[r][k] * B[k][c] for matrix
products, gate[r][c] * amp[c] for actions -- because reordering factors
changes answers.  Under this convention the *later* of two operations
contributes the left factor of an accumulated phase.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .quaternion import ONE, ZERO, Quaternion, as_quaternion

#: entry-wise tolerance for accepting a matrix as unitary
UNITARY_TOL = 1e-10

#: component tolerance below which an entry counts as real / complex
SUBFIELD_TOL = 1e-14

INV_SQRT2 = math.sqrt(0.5)


@dataclass(frozen=True)
class QVector:
    """Column vector of quaternion amplitudes."""

    amps: tuple[Quaternion, ...]

    @property
    def dim(self) -> int:
        return len(self.amps)

    def __len__(self) -> int:
        return len(self.amps)

    def __iter__(self) -> Iterator[Quaternion]:
        return iter(self.amps)

    def __getitem__(self, idx: int) -> Quaternion:
        return self.amps[idx]

    def norm_sq(self) -> float:
        return math.fsum(a.norm_sq() for a in self.amps)

    def norm(self) -> float:
        return math.sqrt(self.norm_sq())

    def is_normalized(self, tol: float = 1e-10) -> bool:
        return abs(self.norm_sq() - 1.0) <= tol

    def approx_eq(self, other: QVector, tol: float = 1e-12) -> bool:
        return self.dim == other.dim and all(
            a.approx_eq(b, tol) for a, b in zip(self.amps, other.amps)
        )


@dataclass(frozen=True)
class QMatrix:
    """Row-major matrix of quaternion entries."""

    entries: tuple[tuple[Quaternion, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, r: int) -> tuple[Quaternion, ...]:
        return self.entries[r]

    def dagger(self) -> QMatrix:
        """Transpose followed by entry-wise quaternionic conjugation."""
        return QMatrix(
            tuple(
                tuple(self.entries[r][c].conjugate() for r in range(self.rows))
                for c in range(self.cols)
            )
        )

    def is_real(self, tol: float = SUBFIELD_TOL) -> bool:
        return all(e.is_real(tol) for row in self.entries for e in row)

    def in_complex_subfield(self, tol: float = SUBFIELD_TOL) -> bool:
        return all(e.in_complex_subfield(tol) for row in self.entries for e in row)

    def approx_eq(self, other: QMatrix, tol: float = 1e-12) -> bool:
        return self.shape == other.shape and all(
            a.approx_eq(b, tol)
            for ra, rb in zip(self.entries, other.entries)
            for a, b in zip(ra, rb)
        )

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            return matmul(self, other)
        if isinstance(other, QVector):
            return matvec(self, other)
        return NotImplemented


def qvec(values: Iterable) -> QVector:
    return QVector(tuple(as_quaternion(v) for v in values))


def qmat(rows: Iterable[Iterable]) -> QMatrix:
    entries = tuple(tuple(as_quaternion(v) for v in row) for row in rows)
    if entries and any(len(row) != len(entries[0]) for row in entries):
        raise ValueError("ragged rows")
    return QMatrix(entries)


def identity(n: int) -> QMatrix:
    return QMatrix(tuple(tuple(ONE if r == c else ZERO for c in range(n)) for r in range(n)))


def diag(*values) -> QMatrix:
    qs = [as_quaternion(v) for v in values]
    n = len(qs)
    return QMatrix(tuple(tuple(qs[r] if r == c else ZERO for c in range(n)) for r in range(n)))


def dagger(m: QMatrix) -> QMatrix:
    return m.dagger()


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    """Matrix product with entry factors kept in left-to-right order."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.shape} @ {b.shape}")
    out = []
    for r in range(a.rows):
        row = []
        for c in range(b.cols):
            acc = ZERO
            for k in range(a.cols):
                acc = acc + a.entries[r][k] * b.entries[k][c]
            row.append(acc)
        out.append(tuple(row))
    return QMatrix(tuple(out))


def matvec(m: QMatrix, v: QVector) -> QVector:
    """Left action: out[r] = sum_c M[r][c] * v[c], products in that order."""
    if m.cols != v.dim:
        raise ValueError(f"shape mismatch: {m.shape} @ vector of dim {v.dim}")
    out = []
    for r in range(m.rows):
        acc = ZERO
        for c in range(m.cols):
            acc = acc + m.entries[r][c] * v.amps[c]
        out.append(acc)
    return QVector(tuple(out))


def inner(u: QVector, v: QVector) -> Quaternion:
    """<u|v> = sum_i conj(u_i) * v_i; conjugate-linear in the left slot."""
    if u.dim != v.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs {v.dim}")
    acc = ZERO
    for a, b in zip(u.amps, v.amps):
        acc = acc + a.conjugate() * b
    return acc


def is_unitary(m: QMatrix, tol: float = UNITARY_TOL) -> bool:
    """True iff M * dagger(M) deviates from the identity by at most tol per entry."""
    if m.rows != m.cols:
        raise ValueError("unitarity is only defined for square matrices")
    prod = matmul(m, m.dagger())
    eye = identity(m.rows)
    return all(
        (p - e).norm() <= tol
        for rp, re_ in zip(prod.entries, eye.entries)
        for p, e in zip(rp, re_)
    )


def hadamard() -> QMatrix:
    """Real Hadamard; maps the computational basis to the +/- basis."""
    s = INV_SQRT2
    return qmat([[s, s], [s, -s]])


def phase_gate(phase) -> QMatrix:
    """diag(1, q) for a unit-norm quaternion q."""
    q = as_quaternion(phase)
    if abs(q.norm() - 1.0) > 1e-12:
        raise ValueError(f"phase must have unit norm, got |q| = {q.norm()!r}")
    return diag(ONE, q)


def rotation(theta: float) -> QMatrix:
    """Real rotation [[cos t, sin t], [-sin t, cos t]]; a basis change by angle t."""
    c, s = math.cos(theta), math.sin(theta)
    return qmat([[c, s], [-s, c]])
