"""Syndrome decoding by filling: map (sigma_X, sigma_Z) to a Pauli correction.

X and Z are decoded independently: the X-side syndrome is a boundary in the
quotient and gets filled, the Z-side syndrome is a coboundary and gets
cofilled. Residuals are classified against the stabilizer spaces.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import csscode, filler, quotient
from .csscode import CodeInstance
from .cube import Chain
from .errors import (
    InvalidSyndrome,
    NotABoundary,
    NotACoboundary,
    NotACocycle,
    NotACycle,
    Unsupported,
)


@dataclass(frozen=True)
class Syndrome:
    """Check values as face chains: sigma_x on (p-1)-faces, sigma_z on
    (p+1)-faces, both canonical."""

    sigma_x: Chain
    sigma_z: Chain


@dataclass(frozen=True)
class Correction:
    """Candidate error supports; both chains live on qubit faces."""

    e_x: Chain
    e_z: Chain


@dataclass(frozen=True)
class VerifyResult:
    success: bool
    logical_x_failure: bool
    logical_z_failure: bool


def syndrome_of(ci: CodeInstance, error: Correction) -> Syndrome:
    qc = ci.qc
    return Syndrome(
        quotient.q_boundary(qc, error.e_x), quotient.q_coboundary(qc, error.e_z)
    )


def empty_correction(ci: CodeInstance) -> Correction:
    n, p = ci.qc.n, ci.qc.p
    return Correction(Chain(n, p, frozenset()), Chain(n, p, frozenset()))


def decode(ci: CodeInstance, s: Syndrome) -> Correction:
    """Correction reproducing both syndromes exactly; raises InvalidSyndrome
    when no Pauli error can produce them (corrupted measurement input)."""
    qc = ci.qc
    n, p = qc.n, qc.p
    if s.sigma_x.n != n or s.sigma_x.p != p - 1:
        raise ValueError("sigma_x must be a (p-1)-chain")
    if s.sigma_z.n != n or s.sigma_z.p != p + 1:
        raise ValueError("sigma_z must be a (p+1)-chain")
    try:
        if qc.k == 1:
            word = qc.code.generators[0]
            fx = filler.sym_fill(n, p, quotient.lift(qc, s.sigma_x), word)
            fz = filler.sym_cofill(n, p, quotient.lift(qc, s.sigma_z), word)
        elif qc.k == 2:
            fx = filler.gen_fill_k2(qc, quotient.lift(qc, s.sigma_x))
            fz = filler.gen_cofill_k2(qc, quotient.lift(qc, s.sigma_z))
        else:
            raise Unsupported(f"no filling decoder for k={qc.k} quotients")
    except (NotACycle, NotABoundary, NotACocycle, NotACoboundary) as exc:
        raise InvalidSyndrome(str(exc)) from exc
    out = Correction(quotient.project(qc, fx), quotient.project(qc, fz))
    got = syndrome_of(ci, out)
    if got != s:
        raise InvalidSyndrome("filling does not reproduce the requested syndrome")
    return out


def verify(ci: CodeInstance, true_error: Correction, decoded: Correction) -> VerifyResult:
    """Classify the residual true + decoded: success iff both sides are
    stabilizers. Both corrections must carry the same syndrome."""
    if syndrome_of(ci, true_error) != syndrome_of(ci, decoded):
        raise ValueError("corrections have different syndromes")
    res_x = true_error.e_x ^ decoded.e_x
    res_z = true_error.e_z ^ decoded.e_z
    x_fail = not csscode.is_stabilizer_x(ci, res_x)
    z_fail = not csscode.is_stabilizer_z(ci, res_z)
    return VerifyResult(not (x_fail or z_fail), x_fail, z_fail)


def guaranteed_radius(ci: CodeInstance) -> int:
    """Largest error weight w with w < d_min / (2 p (n-p)); every error up to
    this weight decodes successfully. Only proved for the antipodal quotient."""
    qc = ci.qc
    if qc.k != 1:
        raise Unsupported("the decoding radius is only established for k=1")
    _, _, d_min = csscode.distance_formula(ci)
    denom = 2 * qc.p * (qc.n - qc.p)
    return (d_min - 1) // denom
