"""The dual-phosphorylation instance: parameters, sign cases, and coefficients.

The 12 reaction rate constants reduce to the 8-dimensional parameter vector
eta = (K1..K4, k3, k6, k9, k12) via the Michaelis-Menten constants.  The signs
of a(eta) and b(eta) split parameter space into four cases; in case 4 the
restricted polynomial on the hexagonal face has ten positive coefficients and
one negative coefficient at m = (2, 1), and each circuit cover yields a
sufficient certificate of nonnegativity (hence monostationarity).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .circuits import cover_theta_sum
from .geometry import (
    A1, A2, A3, A4, A5, A6, B1, B2, I1, I2,
    HEXAGON_POSITIVE,
    LatticePoint,
)


@dataclass(frozen=True)
class KappaVector:
    """The twelve positive reaction rate constants."""

    k: tuple[float, ...]

    def __post_init__(self):
        if len(self.k) != 12:
            raise ValueError(f"need 12 rate constants, got {len(self.k)}")
        if not all(v > 0 for v in self.k):
            raise ValueError("all rate constants must be strictly positive")

    def __getitem__(self, i: int) -> float:
        """1-based access matching the conventional numbering kappa_1..kappa_12."""
        return self.k[i - 1]


@dataclass(frozen=True)
class EtaPoint:
    """Reduced parameters (K1, K2, K3, K4, k3, k6, k9, k12), all positive."""

    K1: float
    K2: float
    K3: float
    K4: float
    k3: float
    k6: float
    k9: float
    k12: float

    def __post_init__(self):
        if not all(v > 0 for v in self.as_tuple()):
            raise ValueError("all eta components must be strictly positive")

    def as_tuple(self) -> tuple[float, ...]:
        return (self.K1, self.K2, self.K3, self.K4, self.k3, self.k6, self.k9, self.k12)

    def swapped(self) -> "EtaPoint":
        """The (K1 <-> K4, K2 <-> K3) swap relating the two mirror covers."""
        return EtaPoint(self.K4, self.K3, self.K2, self.K1, self.k3, self.k6, self.k9, self.k12)


def reduce(kappa: KappaVector) -> EtaPoint:
    """Michaelis-Menten reduction of the 12 rate constants to eta."""
    k = kappa
    return EtaPoint(
        K1=(k[2] + k[3]) / k[1],
        K2=(k[5] + k[6]) / k[4],
        K3=(k[8] + k[9]) / k[7],
        K4=(k[11] + k[12]) / k[10],
        k3=k[3], k6=k[6], k9=k[9], k12=k[12],
    )


def ab_values(eta: EtaPoint) -> tuple[float, float]:
    """a = k3*k12 - k6*k9 and b = (K2+K3)*k3*k12 - (K1+K4)*k6*k9."""
    a = eta.k3 * eta.k12 - eta.k6 * eta.k9
    b = (eta.K2 + eta.K3) * eta.k3 * eta.k12 - (eta.K1 + eta.K4) * eta.k6 * eta.k9
    return a, b


class Case(enum.Enum):
    CASE1_MONOSTATIONARY = 1
    CASE2_MULTISTATIONARY = 2
    CASE3_A_ZERO_B_NEG = 3
    CASE4_A_POS_B_NEG = 4


@dataclass(frozen=True)
class SignCase:
    tag: Case
    a_value: float
    b_value: float


def classify(eta: EtaPoint) -> SignCase:
    """Sign-exact case split on (a, b); no epsilon, exact comparison to zero."""
    a, b = ab_values(eta)
    if a < 0:
        tag = Case.CASE2_MULTISTATIONARY
    elif a >= 0 and b >= 0:
        tag = Case.CASE1_MONOSTATIONARY
    elif a == 0:
        tag = Case.CASE3_A_ZERO_B_NEG
    else:
        tag = Case.CASE4_A_POS_B_NEG
    return SignCase(tag, a, b)


@dataclass(frozen=True)
class HexCoefficients:
    """Coefficients of the restricted polynomial on the hexagonal face.

    ``coeffs`` maps the ten positive support points to their coefficients;
    ``c_m`` is the coefficient of x1^2*x3 (negative in case 4).
    """

    coeffs: dict[LatticePoint, float]
    c_m: float


def _raw_hex_coefficients(K1, K2, K3, K4, k3, k6, k9, k12, a, b):
    """Shared scalar/array coefficient formulas, keyed by point label.

    Works with floats or numpy arrays alike; order matches the canonical
    hexagon point order.
    """
    return {
        A1: K1**3 * K3**2 * k6**3 * k12**2,
        A2: K1**2 * K2 * K3 * K4 * k3 * k6**2 * k9 * k12,
        A3: K1 * K2**2 * K4 * k3**2 * k6 * k9**2,
        A4: a * K2**2 * K4 * k3**2 * k9,
        A5: a * K1 * K2 * K3 * k3 * k6 * k12,
        A6: K1**2 * K3**2 * k6**3 * k12**2,
        B1: K1**2 * K2 * K3**2 * k3 * k6**2 * k12**2,
        B2: a * K2**2 * K3 * k3**2 * k12,
        I1: 2 * K1**2 * K2 * K3 * k3 * k6**2 * k12**2,
        I2: 2 * K1 * K2 * K3 * K4 * k3**2 * k6 * k9 * k12,
    }


def negative_prefactor(eta: EtaPoint) -> float:
    """K1*K2*K3*k3*k6*k12, the factor multiplying b in the coefficient of m."""
    return eta.K1 * eta.K2 * eta.K3 * eta.k3 * eta.k6 * eta.k12


def hex_coefficients(eta: EtaPoint, require_case4: bool = True) -> HexCoefficients:
    """The eleven monomial coefficients of the hexagon-restricted polynomial.

    With ``require_case4`` (the default) non-case-4 input is rejected: outside
    case 4 the three a-multiplied coefficients are not all positive and the
    object's invariant cannot hold.
    """
    sc = classify(eta)
    if require_case4 and sc.tag is not Case.CASE4_A_POS_B_NEG:
        raise ValueError(f"hex coefficients require case 4 input, got {sc.tag.name}")
    coeffs = _raw_hex_coefficients(*eta.as_tuple(), sc.a_value, sc.b_value)
    return HexCoefficients(coeffs=coeffs, c_m=sc.b_value * negative_prefactor(eta))


def eval_p_eta(eta: EtaPoint, x1: float, x2: float, x3: float) -> float:
    """Direct evaluation of the full trivariate polynomial at positive x."""
    if not (x1 > 0 and x2 > 0 and x3 > 0):
        raise ValueError("x must be strictly positive")
    K1, K2, K3, K4, k3, k6, k9, k12 = eta.as_tuple()
    a, b = ab_values(eta)
    value = K2 * k3 * a * (
        K2 * K4 * k3 * k9 * x1**4 * x3**2
        + K1 * K3 * k6 * k12 * (x1**3 * x2**2 * x3 + x1**2 * x2**3 * x3 + x1**2 * x2**2 * x3**2)
        + K2 * K3 * k3 * k12 * x1**3 * x2 * x3**2
    )
    value += K1 * K2 * K3 * k3 * k6 * k12 * b * x1**2 * x2**2 * x3
    value += K1 * k6 * (
        K2**2 * K4 * k3**2 * k9**2 * x1**4 * x3
        + 2 * K2 * K3 * K4 * k3**2 * k9 * k12 * x1**3 * x2 * x3
        + K1 * K2 * K3 * k3 * k6 * k12 * (k9 + k12) * x1**2 * x2**3
        + K1 * K2 * K3 * K4 * k3 * k6 * k9 * k12 * x1**2 * x2**2
        + K1 * K3**2 * k6 * k12**2 * (k3 + k6) * x1 * x2**4
        + 2 * K1 * K2 * K3 * k3 * k6 * k12**2 * x1 * x2**3 * x3
        + K1 * K2 * K3**2 * k3 * k6 * k12**2 * x1 * x2**3
        + K1 * K3**2 * k6**2 * k12**2 * x2**4 * x3
        + K1**2 * K3**2 * k6**2 * k12**2 * x2**4
    )
    return value


def eval_hex_poly(coeffs: HexCoefficients, x1, x3):
    """Evaluate the hexagon-restricted bivariate polynomial from its coefficients."""
    value = coeffs.c_m * x1**2 * x3
    for p, c in coeffs.coeffs.items():
        value = value + c * x1**p.x * x3**p.z
    return value


CLOSED_FORM_IDS = (4, 9, 10, 12, 15)


def closed_form_bound(cover_id: int, eta: EtaPoint) -> float:
    """Right-hand side of the displayed sufficient condition for one cover.

    The certificate holds iff -b(eta) <= closed_form_bound(cover_id, eta); the
    bound equals the cover's Theta sum divided by the prefactor K1*K2*K3*k3*k6*k12.
    The bound for cover 9 has no displayed simplification and is defined via the
    generic Theta-sum path.
    """
    K1, K2, K3, K4, k3, k6, k9, k12 = eta.as_tuple()
    a, b = ab_values(eta)
    if not (a > 0 and b < 0):
        raise ValueError("closed-form bounds require case 4 (a > 0, b < 0)")
    x = k3 * k6**2 * k9**2 * k12  # shared radicand of the mixed-row segments
    if cover_id == 15:
        return (
            4 * math.sqrt(K1 * K4 * k6 * k9 * a)
            + 2 * math.sqrt(K2 * K3 * k3 * k12 * a)
            + 3 * (K1 * K2 * K3 * K4 * x) ** (1 / 3)
            * ((K2 * K4) ** (1 / 3) / K2 + (K1 * K3) ** (1 / 3) / K3)
        )
    if cover_id == 4:
        return (
            4 * (K1 * K2 * K3 * K4 * k3 * k6 * k9 * k12) ** 0.25 * math.sqrt(2 * a)
            + 3 * (K1 * K2 * K3 * K4 * x) ** (1 / 3)
            * ((K2 * K4) ** (1 / 3) / K2 + (K1 * K3) ** (1 / 3) / K3)
        )
    if cover_id == 10:
        return (
            4 / K2 * (K1**2 * K2**3 * K3 * K4**2 * x * a) ** 0.25
            + 3 * (K1 * K4**2 * k6**2 * k9**2 * a) ** (1 / 3)
            + 2 * math.sqrt(K2 * K3 * k3 * k12 * a)
            + 3 / K3 * (K1**2 * K2 * K3**2 * K4 * x) ** (1 / 3)
        )
    if cover_id == 12:
        return (
            4 / K3 * (K1**2 * K2 * K3**3 * K4**2 * x * a) ** 0.25
            + 3 * (K1**2 * K4 * k6**2 * k9**2 * a) ** (1 / 3)
            + 2 * math.sqrt(K2 * K3 * k3 * k12 * a)
            + 3 / K2 * (K1 * K2**2 * K3 * K4**2 * x) ** (1 / 3)
        )
    if cover_id == 9:
        from .covers import cover_fixture

        coeffs = hex_coefficients(eta)
        return cover_theta_sum(cover_fixture(9), coeffs.coeffs) / negative_prefactor(eta)
    raise ValueError(f"no closed-form bound for cover {cover_id}; supported: {CLOSED_FORM_IDS}")
