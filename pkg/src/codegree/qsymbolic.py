"""Integer polynomials in q and a shift-certificate dominance prover.

A claim p(q) > s(q) for every integer q >= q0 is certified by expanding
(p - s)(q0 + t) in t: if every coefficient is nonnegative and the constant
term is positive, the claim holds for all t >= 0. When that fails at q0 the
prover looks for a larger threshold q1 where it succeeds and checks the
finitely many integers in [q0, q1) directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

ZERO_DEGREE = -1  # degree reported for the zero polynomial

IntLike = Union[int, "QPolynomial"]


class QPolynomial:
    """Univariate polynomial with arbitrary-precision integer coefficients;
    ``coeffs[i]`` is the coefficient of q**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[int, ...] = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "QPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPolynomial":
        return cls([0] * k + [c])

    @staticmethod
    def _coerce(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial([other])
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return QPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = QPolynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "QPolynomial") -> "QPolynomial":
        """self(inner(t))."""
        acc = QPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, a: int) -> "QPolynomial":
        """Coefficients of self(a + t) in t."""
        return self.compose(QPolynomial([a, 1]))

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def exact_div(self, d: int) -> "QPolynomial":
        if d == 0:
            raise ZeroDivisionError("division by zero")
        out = []
        for c in self.coeffs:
            qv, rem = divmod(c, d)
            if rem:
                raise ValueError(f"{d} does not divide the content of {self}")
            out.append(qv)
        return QPolynomial(out)

    def to_json(self) -> List[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def format(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = format


Q = QPolynomial([0, 1])


def poly_from_factors(
    qexp: int, factors: Sequence[Tuple[int, int]], scale: Union[int, Fraction] = 1
) -> QPolynomial:
    """scale * q**qexp * prod (q**d + c) over the (d, c) pairs.

    A fractional scale must divide every coefficient exactly; otherwise the
    caller has to substitute a parity-constrained parameterization first.
    """
    poly = QPolynomial.monomial(qexp)
    for d, c in factors:
        poly = poly * (QPolynomial.monomial(d) + c)
    scale = Fraction(scale)
    poly = poly * scale.numerator
    if scale.denominator != 1:
        poly = poly.exact_div(scale.denominator)
    return poly


@dataclass(frozen=True)
class Substitution:
    """q expressed as a polynomial in a new integer variable."""

    name: str
    var: str
    q_of_var: QPolynomial

    def apply(self, p: QPolynomial) -> QPolynomial:
        return p.compose(self.q_of_var)

    def to_json(self) -> dict:
        return {"name": self.name, "var": self.var, "q_of_var": self.q_of_var.to_json()}


ODD_Q = Substitution("q = 2s+1", "s", QPolynomial([1, 2]))
# q = 2^(2n+1) = 2u^2 with u = 2^n; the prover treats u as any integer.
TWISTED_2 = Substitution("q = 2u^2, u = 2^n", "u", QPolynomial([0, 0, 2]))


FALLBACK_LIMIT = 1 << 12


@dataclass
class DominanceProof:
    lhs: QPolynomial
    rhs: QPolynomial
    q0: int
    shifted_coeffs: List[int]
    verdict: str
    path: str = "shift"
    shift_q0: Optional[int] = None
    checked_range: Optional[Tuple[int, int]] = None
    failing_index: Optional[int] = None
    counterexample: Optional[int] = None
    substitution: Optional[Substitution] = None
    var: str = "q"
    label: str = ""
    notes: List[str] = field(default_factory=list)

    @property
    def proven(self) -> bool:
        return self.verdict == "proven"

    def to_json(self) -> dict:
        out = {
            "label": self.label,
            "var": self.var,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "lhs_display": self.lhs.format(self.var),
            "rhs_display": self.rhs.format(self.var),
            "q0": self.q0,
            "shift_q0": self.shift_q0,
            "shifted_coeffs": list(self.shifted_coeffs),
            "path": self.path,
            "verdict": self.verdict,
            "substitution": self.substitution.to_json() if self.substitution else None,
        }
        if self.checked_range is not None:
            out["checked_range"] = list(self.checked_range)
        if self.failing_index is not None:
            out["failing_index"] = self.failing_index
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _shift_certifies(coeffs: Sequence[int]) -> bool:
    return bool(coeffs) and coeffs[0] > 0 and all(c >= 0 for c in coeffs)


def _first_negative(coeffs: Sequence[int]) -> Optional[int]:
    if not coeffs or coeffs[0] <= 0:
        return 0
    for i, c in enumerate(coeffs):
        if c < 0:
            return i
    return None


def prove_dominance(
    lhs: QPolynomial,
    rhs: QPolynomial,
    q0: int,
    substitution: Optional[Substitution] = None,
    label: str = "",
    fallback_limit: int = FALLBACK_LIMIT,
) -> DominanceProof:
    """Certify lhs(x) > rhs(x) for every integer x >= q0.

    ``x`` is q itself, or the substitution variable when one is given (lhs
    and rhs must then already be written in that variable).
    """
    var = substitution.var if substitution else "q"
    diff = lhs - rhs
    coeffs = list(diff.shift(q0).coeffs)
    proof = DominanceProof(
        lhs, rhs, q0, coeffs, "not-proven", shift_q0=q0, substitution=substitution,
        var=var, label=label,
    )
    if _shift_certifies(coeffs):
        proof.verdict = "proven"
        return proof
    proof.failing_index = _first_negative(coeffs)
    if diff.is_zero() or diff.leading() < 0:
        return proof
    # Fallback: a larger threshold plus a finite check of the gap.
    step = 1
    while step <= fallback_limit:
        q1 = q0 + step
        shifted = list(diff.shift(q1).coeffs)
        if _shift_certifies(shifted):
            for x in range(q0, q1):
                if diff(x) <= 0:
                    proof.counterexample = x
                    return proof
            proof.verdict = "proven"
            proof.path = "shift+finite-check"
            proof.shift_q0 = q1
            proof.shifted_coeffs = shifted
            proof.checked_range = (q0, q1)
            return proof
        step *= 2
    return proof


def prove_log_gate(
    mbound: QPolynomial,
    sylow_profile: QPolynomial,
    q0: int,
    den: Union[int, QPolynomial] = 1,
    substitution: Optional[Substitution] = None,
    label: str = "",
) -> DominanceProof:
    """Certify 2*m > log_r |H|_r from m >= mbound/den and
    log_r |H|_r <= sylow_profile/den, with den positive on the domain."""
    den = QPolynomial._coerce(den)
    proof = prove_dominance(2 * mbound, sylow_profile, q0, substitution, label)
    if den.degree > 0:
        positive = prove_dominance(den, QPolynomial(), q0, substitution)
        if not positive.proven:
            proof.verdict = "not-proven"
            proof.notes.append("denominator not certified positive")
    elif den(0) <= 0:
        proof.verdict = "not-proven"
        proof.notes.append("denominator not positive")
    return proof


def verify_shift_certificate(proof: DominanceProof) -> bool:
    """Independent re-check of a proof object: re-expand the shifted
    coefficients and compare with lhs - rhs."""
    diff = proof.lhs - proof.rhs
    back = QPolynomial(proof.shifted_coeffs).shift(-proof.shift_q0)
    if back != diff:
        return False
    if proof.verdict != "proven":
        return True
    if not _shift_certifies(proof.shifted_coeffs):
        return False
    if proof.checked_range:
        lo, hi = proof.checked_range
        return lo == proof.q0 and hi == proof.shift_q0 and all(diff(x) > 0 for x in range(lo, hi))
    return proof.shift_q0 == proof.q0
