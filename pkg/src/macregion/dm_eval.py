"""Achievable-rate evaluation for discrete memoryless state-dependent MACs.

A channel instance is described by a factorized joint law over the variables
(Q, S, U1, X1, X2, Y):

    p(q) p(s) p(u1|s,q) p(x1|u1,s,q) p(x2|q) p(y|x1,x2,s)

where Q is a time-sharing variable, S the channel state known only to encoder
1, U1 the binning auxiliary of the informed encoder, X1/X2 the channel inputs
and Y the output.  The achievable pentagon is evaluated exactly from the
induced joint table:

    c1  = I(U1; Y | X2, Q) - I(U1; S | Q)
    c2  = I(X2; Y | U1, Q)
    c12 = I(U1, X2; Y | Q)  - I(U1; S | Q)

with each cap clamped at zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .info_measures import (
    PROB_TOL,
    JointTable,
    Pmf,
    conditional_mutual_information,
)
from .region_geometry import RatePentagon

# Variable order of the induced joint table.
Q, S, U1, X1, X2, Y = range(6)

#: Advisory cardinality caps: larger alphabets never help the bound.
MAX_TIME_SHARING = 4


def _table(value, name: str, ndim: int) -> np.ndarray:
    arr = np.asarray(value, dtype=float)
    if arr.ndim != ndim:
        raise ValueError(f"{name} must have {ndim} axes, got {arr.ndim}")
    return arr


@dataclass(frozen=True)
class DmChannelSpec:
    """Finite-alphabet channel specification in the factorized form above.

    Conditional tables are indexed with the conditioning variables first, in
    the order their names state, e.g. ``u1_given_sq[s, q, u1]`` and
    ``y_given_x1x2s[x1, x2, s, y]``.
    """

    q_dist: Pmf
    s_dist: Pmf
    u1_given_sq: np.ndarray
    x1_given_u1sq: np.ndarray
    x2_given_q: np.ndarray
    y_given_x1x2s: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "u1_given_sq", _table(self.u1_given_sq, "u1_given_sq", 3))
        object.__setattr__(
            self, "x1_given_u1sq", _table(self.x1_given_u1sq, "x1_given_u1sq", 4)
        )
        object.__setattr__(self, "x2_given_q", _table(self.x2_given_q, "x2_given_q", 2))
        object.__setattr__(
            self, "y_given_x1x2s", _table(self.y_given_x1x2s, "y_given_x1x2s", 4)
        )

    @property
    def alphabet_sizes(self) -> dict[str, int]:
        return {
            "Q": len(self.q_dist),
            "S": len(self.s_dist),
            "U1": self.u1_given_sq.shape[2],
            "X1": self.x1_given_u1sq.shape[3],
            "X2": self.x2_given_q.shape[1],
            "Y": self.y_given_x1x2s.shape[3],
        }


@dataclass(frozen=True)
class Diagnostic:
    level: str  # "error" or "advisory"
    location: str
    message: str


def _check_rows(arr: np.ndarray, name: str, out: list[Diagnostic]) -> None:
    """Flag conditional rows that are not valid pmfs."""
    rows = arr.reshape(-1, arr.shape[-1])
    for flat_i, row in enumerate(rows):
        idx = np.unravel_index(flat_i, arr.shape[:-1]) if arr.ndim > 1 else ()
        loc = name + "".join(f"[{i}]" for i in idx)
        if np.any(row < -PROB_TOL):
            out.append(Diagnostic("error", loc, f"negative probability {row.min()!r}"))
        total = float(row.sum())
        if abs(total - 1.0) > PROB_TOL:
            out.append(Diagnostic("error", loc, f"row sums to {total!r}, not 1"))


def validate_spec(spec: DmChannelSpec) -> list[Diagnostic]:
    """Normalization, shape-consistency, and cardinality diagnostics.

    Returns an empty list for a fully consistent spec.  Cardinality findings
    are advisories: alphabets beyond the caps cannot enlarge the region but
    are still evaluated.
    """
    out: list[Diagnostic] = []
    sizes = spec.alphabet_sizes
    nq, ns, nu, nx1, nx2 = sizes["Q"], sizes["S"], sizes["U1"], sizes["X1"], sizes["X2"]

    expect = {
        "u1_given_sq": (ns, nq, nu),
        "x1_given_u1sq": (nu, ns, nq, nx1),
        "x2_given_q": (nq, nx2),
        "y_given_x1x2s": (nx1, nx2, ns, sizes["Y"]),
    }
    for name, shape in expect.items():
        arr = getattr(spec, name)
        if arr.shape != shape:
            out.append(
                Diagnostic(
                    "error",
                    name,
                    f"shape {arr.shape} inconsistent with alphabets, expected {shape}",
                )
            )

    for name in ("u1_given_sq", "x1_given_u1sq", "x2_given_q", "y_given_x1x2s"):
        _check_rows(getattr(spec, name), name, out)

    if nq > MAX_TIME_SHARING:
        out.append(
            Diagnostic(
                "advisory",
                "q_dist",
                f"|Q| = {nq} exceeds {MAX_TIME_SHARING}; no larger alphabet is needed",
            )
        )
    u1_cap = nx1 * nx2 * ns + 4
    if nu > u1_cap:
        out.append(
            Diagnostic(
                "advisory",
                "u1_given_sq",
                f"|U1| = {nu} exceeds |X1||X2||S|+4 = {u1_cap}; no larger alphabet is needed",
            )
        )
    return out


def induced_joint(spec: DmChannelSpec) -> JointTable:
    """Joint table over (Q, S, U1, X1, X2, Y) induced by the factorization.

    Raises ValueError on inconsistent alphabet sizes or broken normalization
    (advisory-level diagnostics do not block evaluation).
    """
    errors = [d for d in validate_spec(spec) if d.level == "error"]
    if errors:
        d = errors[0]
        raise ValueError(f"invalid channel spec at {d.location}: {d.message}"
                         + (f" (+{len(errors) - 1} more)" if len(errors) > 1 else ""))
    mass = np.einsum(
        "q,s,squ,usqa,qb,absy->qsuaby",
        spec.q_dist.atoms,
        spec.s_dist.atoms,
        spec.u1_given_sq,
        spec.x1_given_u1sq,
        spec.x2_given_q,
        spec.y_given_x1x2s,
        optimize=True,
    )
    return JointTable(mass)


def inner_bound_pentagon(spec: DmChannelSpec) -> RatePentagon:
    """Achievable pentagon of the channel spec, computed exactly.

    The informed encoder's binning against the state costs I(U1; S | Q) on
    both the R1 and the sum cap; negative raw caps clamp to zero.
    """
    t = induced_joint(spec)
    leak = conditional_mutual_information(t, U1, S, (Q,))
    c1 = conditional_mutual_information(t, U1, Y, (X2, Q)) - leak
    c2 = conditional_mutual_information(t, X2, Y, (U1, Q))
    c12 = conditional_mutual_information(t, (U1, X2), Y, (Q,)) - leak
    return RatePentagon(c1, c2, c12)


def degrade_output(spec: DmChannelSpec, kernel: Sequence[Sequence[float]]) -> DmChannelSpec:
    """Replace the output law with a stochastic degradation y -> y'.

    ``kernel[y][y']`` is a row-stochastic matrix; processing the output can
    only shrink the achievable pentagon.
    """
    k = np.asarray(kernel, dtype=float)
    ny = spec.y_given_x1x2s.shape[3]
    if k.ndim != 2 or k.shape[0] != ny:
        raise ValueError(f"kernel must have {ny} rows, got shape {k.shape}")
    return DmChannelSpec(
        q_dist=spec.q_dist,
        s_dist=spec.s_dist,
        u1_given_sq=spec.u1_given_sq,
        x1_given_u1sq=spec.x1_given_u1sq,
        x2_given_q=spec.x2_given_q,
        y_given_x1x2s=spec.y_given_x1x2s @ k,
    )


__all__ = [
    "DmChannelSpec",
    "Diagnostic",
    "RatePentagon",
    "validate_spec",
    "induced_joint",
    "inner_bound_pentagon",
    "degrade_output",
]
