"""Order formulas, multiplier data and dimension bounds for the covered
families of simple groups of Lie type.

Order formulas are structured factor lists, so the numeric gates and the
polynomial prover read the same source.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

from .exactnum import (
    Factorization,
    PrimePower,
    cyclotomic_value,
    divisors,
    factor_rpart,
    factorize,
    rpart,
    valuation,
)

KINDS = ("E8", "F4", "G2", "3D4", "E6", "E7", "2B2", "2G2", "2F4", "PSL", "PSp")


class InadmissibleError(ValueError):
    """Parameters outside the range the characterization covers."""


@dataclass(frozen=True)
class LieFamily:
    kind: str
    n: Optional[int] = None
    eps: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InadmissibleError(f"unknown family {self.kind!r}")
        if self.kind in ("PSL", "PSp"):
            if self.n is None:
                raise InadmissibleError(f"{self.kind} needs a rank n")
        elif self.n is not None:
            raise InadmissibleError(f"{self.kind} takes no rank parameter")
        if self.kind == "E6":
            if self.eps not in (1, -1):
                raise InadmissibleError("E6 needs eps = +1 or -1")
        elif self.eps is not None:
            raise InadmissibleError(f"{self.kind} takes no twist sign")

    @classmethod
    def parse(cls, name: str, n: Optional[int] = None) -> "LieFamily":
        key = name.strip()
        aliases = {"2E6": ("E6", -1), "E6": ("E6", 1), "E6+": ("E6", 1), "E6-": ("E6", -1)}
        if key in aliases:
            kind, eps = aliases[key]
            return cls(kind, eps=eps)
        upper = {k.upper(): k for k in KINDS}
        if key.upper() in upper:
            kind = upper[key.upper()]
            return cls(kind, n=n if kind in ("PSL", "PSp") else None)
        raise InadmissibleError(f"unknown family {name!r}")

    @property
    def label(self) -> str:
        if self.kind == "E6":
            return "E6" if self.eps == 1 else "2E6"
        return self.kind

    def name(self, q: int) -> str:
        if self.kind == "PSL":
            return f"L{self.n}({q})"
        if self.kind == "PSp":
            return f"S{2 * self.n}({q})"
        return f"{self.label}({q})"

    def check(self, q: PrimePower) -> None:
        """Raise InadmissibleError naming the violated range."""
        k, p, f = self.kind, q.p, q.f
        if k == "PSL":
            if self.n < 4:
                raise InadmissibleError(f"PSL_n needs n >= 4, got n={self.n}")
            if (self.n, q.q) == (4, 2):
                raise InadmissibleError("PSL_4(2) is excluded (isomorphic to A8)")
        elif k == "PSp":
            if self.n < 2:
                raise InadmissibleError(f"PSp_2n needs n >= 2, got n={self.n}")
            if (self.n, q.q) == (2, 2):
                raise InadmissibleError("PSp_4(2) is excluded (not simple)")
        elif k in ("2B2", "2F4"):
            if p != 2 or f % 2 == 0 or q.q < 8:
                raise InadmissibleError(f"{k} needs q = 2^(2k+1) >= 8, got q={q.q}")
        elif k == "2G2":
            if p != 3 or f % 2 == 0 or q.q < 27:
                raise InadmissibleError(f"2G2 needs q = 3^(2k+1) >= 27, got q={q.q}")
        elif k == "G2":
            if q.q == 2:
                raise InadmissibleError("G2(2) is excluded (not simple)")


def _as_pp(q) -> PrimePower:
    return q if isinstance(q, PrimePower) else PrimePower.from_int(int(q))


def twist_exponent(q: PrimePower) -> int:
    """The k with q = p^(2k+1) for the Suzuki and Ree families."""
    return (q.f - 1) // 2


@dataclass(frozen=True)
class OrderFormula:
    """q^qexp * prod (q^d - sign)^mult / center(q)."""

    qexp: int
    factors: Tuple[Tuple[int, int, int], ...]
    center: Callable[[int], int] = field(compare=False)
    center_label: str = "1"

    def product(self, q: int) -> int:
        num, den = q**self.qexp, 1
        for d, sign, mult in self.factors:
            term = q**d - sign
            if mult > 0:
                num *= term**mult
            else:
                den *= term ** (-mult)
        value, rem = divmod(num, den)
        assert rem == 0
        return value

    def evaluate(self, q: int) -> int:
        prod = self.product(q)
        c = self.center(q)
        value, rem = divmod(prod, c)
        if rem:
            raise ArithmeticError("center divisor does not divide the order product")
        return value

    def describe(self) -> str:
        parts = [f"q^{self.qexp}"] if self.qexp else []
        for d, sign, mult in self.factors:
            base = f"(q^{d}{'-' if sign == 1 else '+'}1)" if d > 1 else f"(q{'-' if sign == 1 else '+'}1)"
            parts.append(base if mult == 1 else f"{base}^{mult}")
        body = "".join(parts)
        return body if self.center_label == "1" else f"{body}/{self.center_label}"

    def to_json(self) -> dict:
        return {
            "qexp": self.qexp,
            "factors": [list(t) for t in self.factors],
            "center": self.center_label,
        }


def _one(q: int) -> int:
    return 1


def order_formula(fam: LieFamily) -> OrderFormula:
    k = fam.kind
    plain = lambda *ds: tuple((d, 1, 1) for d in ds)
    if k == "E8":
        return OrderFormula(120, plain(2, 8, 12, 14, 18, 20, 24, 30), _one)
    if k == "F4":
        return OrderFormula(24, plain(2, 6, 8, 12), _one)
    if k == "G2":
        return OrderFormula(6, plain(2, 6), _one)
    if k == "3D4":
        # q^8 + q^4 + 1 = (q^12 - 1)/(q^4 - 1)
        return OrderFormula(12, plain(2, 6, 12) + ((4, 1, -1),), _one)
    if k == "E6":
        e = fam.eps
        return OrderFormula(
            36,
            ((2, 1, 1), (5, e, 1), (6, 1, 1), (8, 1, 1), (9, e, 1), (12, 1, 1)),
            lambda q, e=e: math.gcd(3, q - e),
            "gcd(3,q-1)" if e == 1 else "gcd(3,q+1)",
        )
    if k == "E7":
        return OrderFormula(
            63, plain(2, 6, 8, 10, 12, 14, 18), lambda q: math.gcd(2, q - 1), "gcd(2,q-1)"
        )
    if k == "2B2":
        return OrderFormula(2, ((1, 1, 1), (2, -1, 1)), _one)
    if k == "2G2":
        return OrderFormula(3, ((1, 1, 1), (3, -1, 1)), _one)
    if k == "2F4":
        return OrderFormula(12, ((1, 1, 1), (3, -1, 1), (4, 1, 1), (6, -1, 1)), _one)
    n = fam.n
    if k == "PSL":
        return OrderFormula(
            n * (n - 1) // 2,
            plain(*range(2, n + 1)),
            lambda q, n=n: math.gcd(n, q - 1),
            f"gcd({n},q-1)",
        )
    return OrderFormula(
        n * n, plain(*range(2, 2 * n + 1, 2)), lambda q: math.gcd(2, q - 1), "gcd(2,q-1)"
    )


def order(fam: LieFamily, q) -> int:
    q = _as_pp(q)
    fam.check(q)
    return order_formula(fam).evaluate(q.q)


def _cyclotomic_exponents(fam: LieFamily) -> Dict[int, int]:
    exps: Dict[int, int] = {}
    for d, sign, mult in order_formula(fam).factors:
        ks = divisors(d) if sign == 1 else [k for k in divisors(2 * d) if d % k]
        for k in ks:
            exps[k] = exps.get(k, 0) + mult
    assert all(e >= 0 for e in exps.values())
    return exps


def order_factorization(fam: LieFamily, q) -> Factorization:
    """|H| factored through its cyclotomic pieces Phi_k(q), which are far
    smaller than |H| itself."""
    q = _as_pp(q)
    fam.check(q)
    form = order_formula(fam)
    acc = Factorization({q.p: q.f * form.qexp})
    for k, e in _cyclotomic_exponents(fam).items():
        if e:
            piece = factorize(cyclotomic_value(k, q.q))
            acc = acc.merge({p: v * e for p, v in piece.items()})
    acc = acc.merge(factorize(form.center(q.q)), sign=-1)
    return acc


def sylow_order(fam: LieFamily, q, r: int) -> int:
    """|H|_r, assembled factor by factor from closed-form r-parts."""
    q = _as_pp(q)
    fam.check(q)
    form = order_formula(fam)
    if r == q.p:
        return r ** (q.f * form.qexp)
    num, den = 1, rpart(form.center(q.q), r)
    for d, sign, mult in form.factors:
        part = factor_rpart(q.q, d, sign, r)
        if mult > 0:
            num *= part**mult
        else:
            den *= part ** (-mult)
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def sylow_trace(fam: LieFamily, q, r: int) -> str:
    """Symbolic form of |H|_r, e.g. '2^2·(q^2-1)_2^7'."""
    q = _as_pp(q)
    fam.check(q)
    form = order_formula(fam)
    if r == q.p:
        return f"{r}^{q.f * form.qexp}"
    from .exactnum import mult_order

    bases = {}
    # exponent of the constant r-power; the center divisor can make it negative
    v = -valuation(form.center(q.q), r)
    j = None if r == 2 else mult_order(q.q, r)
    for d, sign, mult in form.factors:
        if r == 2:
            if d % 2:
                label = "(q-1)_2" if sign == 1 else "(q+1)_2"
                extra = 1
            elif sign == 1:
                label, extra = "(q^2-1)_2", rpart(d // 2, 2)
            else:
                label, extra = None, 2
        else:
            part = factor_rpart(q.q, d, sign, r)
            if part == 1:
                continue
            base = rpart(q.q**j - 1, r)
            label = f"(q^{j}-1)_{r}" if j > 1 else f"(q-1)_{r}"
            extra = part // base
        if label:
            bases[label] = bases.get(label, 0) + mult
        v += valuation(extra, r) * mult
    parts = []
    if v or not bases:
        parts.append(f"{r}^{v}")
    for label, m in bases.items():
        if m:
            parts.append(label if m == 1 else f"{label}^{m}")
    return "·".join(parts)


def psl_kappa(n: int, q: int, r: int) -> int:
    """1 iff r divides (q^n - 1)/(q - 1)."""
    return 1 if ((q**n - 1) // (q - 1)) % r == 0 else 0


def lsz_bound(fam: LieFamily, q, kappa: Optional[int] = None) -> int:
    """Lower bound for the degree of a nontrivial cross-characteristic
    projective representation."""
    q = _as_pp(q)
    fam.check(q)
    k, Q = fam.kind, q.q
    if k == "E8":
        return Q**27 * (Q**2 - 1)
    if k == "F4":
        if Q == 2:
            return 52
        if Q % 2:
            return Q**6 * (Q**2 - 1)
        return Q**7 * (Q**3 - 1) * (Q - 1) // 2
    if k == "G2":
        return {3: 14, 4: 12}.get(Q, Q * (Q**2 - 1))
    if k == "3D4":
        return Q**3 * (Q**2 - 1)
    if k == "E7":
        return Q**15 * (Q**2 - 1)
    if k == "E6":
        return Q**9 * (Q**2 - 1)
    if k == "2B2":
        if Q == 8:
            return 8
        return 2 ** twist_exponent(q) * (Q - 1)
    if k == "2G2":
        return Q * (Q - 1)
    if k == "2F4":
        return 2 ** twist_exponent(q) * Q**4 * (Q - 1)
    n = fam.n
    if k == "PSp":
        if (n, Q) == (3, 2):
            return 7
        if Q % 2:
            return (Q**n - 1) // 2
        return Q ** (n - 1) * (Q ** (n - 1) - 1) * (Q - 1) // 2
    if kappa not in (0, 1):
        raise ValueError("PSL bound needs kappa in {0, 1}")
    if (n, Q) == (4, 3):
        return 26
    if (n, Q) == (6, 2):
        return 62 - kappa
    if (n, Q) == (6, 3):
        return 363 - kappa
    return (Q**n - Q) // (Q - 1) - kappa


def min_module_dim(fam: LieFamily, p: int) -> int:
    """Smallest dimension of a nontrivial irreducible module in the
    defining characteristic p."""
    k = fam.kind
    fixed = {"E8": 248, "3D4": 8, "E7": 56, "E6": 27, "2B2": 4, "2G2": 7, "2F4": 26}
    if k in fixed:
        return fixed[k]
    if k == "F4":
        return 26 - (p == 3)
    if k == "G2":
        return 7 - (p == 2)
    if k == "PSL":
        return fam.n
    return 2 * fam.n


def spin_module_dim(fam: LieFamily, q) -> Optional[int]:
    q = _as_pp(q)
    if fam.kind == "PSp" and q.p == 2 and 4 <= fam.n <= 6:
        return 2**fam.n
    return None


def second_min_dim(fam: LieFamily, q=None) -> int:
    """Lower bound for a restricted module of dimension above the natural one."""
    if fam.kind == "PSL":
        return fam.n * (fam.n - 1) // 2
    if fam.kind == "PSp":
        generic = 2 * fam.n**2 - fam.n - 2
        spin = spin_module_dim(fam, q) if q is not None else None
        return min(generic, spin) if spin else generic
    raise ValueError("second_min_dim is defined for PSL and PSp only")


def schur_order(fam: LieFamily, q) -> Factorization:
    q = _as_pp(q)
    fam.check(q)
    k, Q = fam.kind, q.q
    if k == "F4":
        m = 2 if Q == 2 else 1
    elif k == "G2":
        m = {3: 3, 4: 2}.get(Q, 1)
    elif k == "E6":
        m = 12 if (fam.eps == -1 and Q == 2) else math.gcd(3, Q - fam.eps)
    elif k == "E7":
        m = math.gcd(2, Q - 1)
    elif k == "2B2":
        m = 4 if Q == 8 else 1
    elif k == "PSL":
        m = math.gcd(fam.n, Q - 1)
    elif k == "PSp":
        m = 2 if (fam.n, Q) == (3, 2) else math.gcd(2, Q - 1)
    else:
        m = 1
    return factorize(m)


def schur_structure(fam: LieFamily, q) -> str:
    q = _as_pp(q)
    k, Q = fam.kind, q.q
    if k == "E6" and fam.eps == -1 and Q == 2:
        return "Z2 x Z6"
    if k == "2B2" and Q == 8:
        return "Z2 x Z2"
    m = schur_order(fam, q).value()
    return "1" if m == 1 else f"Z{m}"


# Cyclotomic-product degrees used for the Schur covers of E6, 2E6, E7.
_PHI_DEGREES = {
    ("E7", None): {1: 4, 3: 2, 4: 1, 5: 1, 6: 1, 7: 1, 8: 1, 9: 1, 12: 1, 18: 1},
    ("E6", 1): {3: 2, 6: 1, 9: 1, 12: 1},
    ("E6", -1): {3: 1, 6: 2, 12: 1, 18: 1},
}


def exceptional_degree_condition(fam: LieFamily, q) -> Optional[str]:
    """None when the generic nontrivial-multiplier case applies, else the reason it does not."""
    q = _as_pp(q)
    Q = q.q
    if fam.kind == "E7":
        return None if Q % 2 else "E7(q) with q even has trivial multiplier"
    if fam.kind == "E6" and fam.eps == 1:
        return None if (Q - 1) % 3 == 0 else "E6(q) needs 3 | q-1"
    if fam.kind == "E6" and fam.eps == -1:
        if Q == 2:
            return "2E6(2) has an exceptional multiplier and is handled by cited data"
        return None if (Q + 1) % 3 == 0 else "2E6(q) needs 3 | q+1"
    return f"no cyclotomic-product degree is recorded for {fam.label}"


def exceptional_degree_phi(fam: LieFamily) -> Dict[int, int]:
    return dict(_PHI_DEGREES[(fam.kind, fam.eps)])


def exceptional_degree_D(fam: LieFamily, q) -> int:
    q = _as_pp(q)
    fam.check(q)
    why = exceptional_degree_condition(fam, q)
    if why:
        raise InadmissibleError(why)
    D = 1
    for m, e in exceptional_degree_phi(fam).items():
        D *= cyclotomic_value(m, q.q) ** e
    return D


def exceptional_degree_multiplicities(fam: LieFamily, q) -> Dict[str, int]:
    """Multiplicity of the degree D in the simply connected group L and in
    its adjoint dual L*."""
    Q = _as_pp(q).q
    if fam.kind == "E7":
        adj = (Q - 1) // 2 if (Q - 1) % 3 else (Q - 3) // 2
        return {"L": (Q - 1) // 2, "L*": adj}
    if fam.eps == 1:
        return {"L": Q - 2, "L*": Q - 4}
    return {"L": Q, "L*": Q - 2}


@dataclass(frozen=True)
class CitedFact:
    key: str
    group: str
    statement: str
    citation: str
    data: Tuple[Tuple[str, int], ...] = ()

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "group": self.group,
            "statement": self.statement,
            "citation": self.citation,
            "data": dict(self.data),
            "status": "ASSUMED-CITED",
        }


CITED_FACTS: Dict[str, CitedFact] = {
    f.key: f
    for f in [
        CitedFact(
            "2.F4(2):faithful-52",
            "2.F4(2)",
            "2.F4(2) has a faithful irreducible character of degree 52; "
            "the smallest nontrivial degree of F4(2) is 833",
            "GAP character table library (CTblLib), table '2.F4(2)'",
            (("r", 2), ("degree", 52), ("min_degree_H", 833)),
        ),
        CitedFact(
            "F4(2):hiss-malle-52",
            "F4(2)",
            "every nontrivial cross-characteristic representation of F4(2) has degree >= 52",
            "Hiss-Malle, low-dimensional representations of quasi-simple groups",
            (("bound", 52),),
        ),
        CitedFact(
            "3.G2(3):faithful-27",
            "3.G2(3)",
            "3.G2(3) has a faithful irreducible character of degree 27; 9 is not a degree of G2(3)",
            "GAP character table library (CTblLib), table '3.G2(3)'",
            (("r", 3), ("degree", 27)),
        ),
        CitedFact(
            "2.G2(4):faithful-12",
            "2.G2(4)",
            "2.G2(4) has a faithful irreducible character of degree 12; 6 is not a degree of G2(4)",
            "GAP character table library (CTblLib), table '2.G2(4)'",
            (("r", 2), ("degree", 12)),
        ),
        CitedFact(
            "2.2E6(2):faithful-2432",
            "2.2E6(2)",
            "2.2E6(2) has a faithful irreducible character of degree 2432; "
            "1216 is not a degree of 2E6(2), whose smallest nontrivial degree is 1938",
            "GAP character table library (CTblLib), table '2.2E6(2)'",
            (("r", 2), ("degree", 2432), ("min_degree_H", 1938)),
        ),
        CitedFact(
            "3.2E6(2):faithful-46683",
            "3.2E6(2)",
            "3.2E6(2) has a faithful irreducible character of degree 46683; "
            "15561 is not a degree of 2E6(2)",
            "GAP character table library (CTblLib), table '3.2E6(2)'",
            (("r", 3), ("degree", 46683)),
        ),
        CitedFact(
            "2.Sz(8):faithful-40",
            "2.2B2(8)",
            "2.2B2(8) has a faithful irreducible character of degree 40; 20 is not a degree of 2B2(8)",
            "GAP character table library (CTblLib), table '2.Sz8'",
            (("r", 2), ("degree", 40)),
        ),
        CitedFact(
            "SL4(3):faithful-40",
            "SL4(3) = 2.L4(3)",
            "SL4(3) has a faithful irreducible character of degree 40; 20 is not a degree of L4(3)",
            "GAP character table library (CTblLib), table '2.L4(3)'",
            (("r", 2), ("degree", 40)),
        ),
        CitedFact(
            "2.S6(2):faithful-8",
            "2.S6(2)",
            "2.S6(2) has a faithful irreducible character of degree 8; 4 is not a degree of S6(2)",
            "GAP character table library (CTblLib), table '2.S6(2)'",
            (("r", 2), ("degree", 8)),
        ),
        CitedFact(
            "L4(3):min-degree-26",
            "L4(3)",
            "the smallest degree of a nontrivial cross-characteristic projective "
            "representation of L4(3) is 26, below the generic (q^n-q)/(q-1) - kappa",
            "Kleidman-Liebeck, Table 5.3.A; Guralnick-Tiep 1999, Theorem 1.1 exceptions",
            (("bound", 26),),
        ),
        CitedFact(
            "Dempwolff:faithful-248",
            "2^5.GL5(2) (Dempwolff group)",
            "the nonsplit extension 2^5.GL5(2) has a faithful irreducible character "
            "of degree 248 = 2^3 * 31, and 248/2^5 is not a degree of L5(2)",
            "GAP character table library (CTblLib), table '2^5.L5(2)'",
            (("degree", 248),),
        ),
        CitedFact(
            "H2(SLn(q),natural)=0",
            "SL_n(q), n >= 5",
            "H^2(SL_n(q), V) = 0 for the natural module V when n >= 5, except SL_5(2)",
            "Bell, 'On the cohomology of the finite special linear groups', Table I",
        ),
        CitedFact(
            "L5(2),L6(2):direct",
            "L5(2), L6(2)",
            "the natural-module split extensions over L5(2) and L6(2) have faithful "
            "characters violating the divisibility condition (direct computation)",
            "GAP character table library (CTblLib)",
        ),
        CitedFact(
            "Lubeck:E7-degree",
            "E7(q)_sc, q odd",
            "E7(q)_sc has a degree D = Phi1^4 Phi3^2 Phi4 Phi5 Phi6 Phi7 Phi8 Phi9 Phi12 Phi18 "
            "with multiplicity (q-1)/2, and D/2 is not a degree",
            "F. Luebeck, character degrees of groups of Lie type (online tables)",
        ),
        CitedFact(
            "Lubeck:E6-degree",
            "E6(q)_sc, 3 | q-1",
            "E6(q)_sc has a degree D = Phi3^2 Phi6 Phi9 Phi12 with multiplicity q-2 "
            "and no degree D/3; the adjoint group has D with multiplicity q-4 and no degree 3D",
            "F. Luebeck, character degrees of groups of Lie type (online tables)",
        ),
        CitedFact(
            "Lubeck:2E6-degree",
            "2E6(q)_sc, 3 | q+1, q > 2",
            "2E6(q)_sc has a degree D = Phi3 Phi6^2 Phi12 Phi18 with multiplicity q "
            "and no degree D/3; the adjoint group has D with multiplicity q-2 and no degree 3D",
            "F. Luebeck, character degrees of groups of Lie type (online tables)",
        ),
        CitedFact(
            "TZ:weil-min-degree",
            "PSL_n(q)",
            "every nontrivial irreducible degree of PSL_n(q), n >= 4, (n,q) != (4,3), "
            "is at least (q^n-q)/(q-1); SL_n(q) has Weil characters of degree (q^n-1)/(q-1)",
            "Tiep-Zalesskii, minimal characters of the finite classical groups, Theorem 1.1",
        ),
        CitedFact(
            "TZ:sp-weil",
            "Sp_2n(q), q odd",
            "Sp_2n(q) has a faithful irreducible character of degree (q^n-a)/2 with "
            "4 | q^n-a, a = +-1; every nontrivial degree of PSp_2n(q) is >= (q^n-1)/2",
            "Tiep-Zalesskii, Lemma 2.6; Kleidman-Liebeck, Table 5.3.A",
        ),
        CitedFact(
            "GT05:module-bound",
            "all families",
            "a faithful irreducible F_p H-module N satisfies |N| >= p^(D f)",
            "Guralnick-Tiep 2005, Lemma 4.2",
        ),
        CitedFact(
            "KL:tensor-cases",
            "SL_n(q), Sp_2n(q)",
            "irreducible modules in defining characteristic decompose as twisted "
            "tensor products of restricted modules (Steinberg)",
            "Kleidman-Liebeck, Proposition 5.4.6; Luebeck's small-degree tables",
        ),
        CitedFact(
            "PSL:induction-tail",
            "PSL_n(q), n beyond the swept range",
            "q^(n-2) > n^2 for q >= 5, n >= 4 and for q in {2,3,4} outside the listed "
            "small cases, by induction on n",
            "elementary induction on n",
        ),
    ]
}


def cited(key: str) -> CitedFact:
    return CITED_FACTS[key]


def catalog_dump() -> dict:
    """JSON-ready description of every family record."""
    fams = [
        LieFamily("E8"), LieFamily("F4"), LieFamily("G2"), LieFamily("3D4"),
        LieFamily("E6", eps=1), LieFamily("E6", eps=-1), LieFamily("E7"),
        LieFamily("2B2"), LieFamily("2G2"), LieFamily("2F4"),
    ]
    records = []
    bounds = {
        "E8": "q^27(q^2-1)",
        "F4": "q^6(q^2-1) (q odd); q^7(q^3-1)(q-1)/2 (q even > 2); 52 (q = 2)",
        "G2": "q(q^2-1) (q >= 5); 14 (q = 3); 12 (q = 4)",
        "3D4": "q^3(q^2-1)",
        "E6": "q^9(q^2-1)",
        "2E6": "q^9(q^2-1)",
        "E7": "q^15(q^2-1)",
        "2B2": "2^k(q-1) for q = 2^(2k+1) > 8; 8 (q = 8)",
        "2G2": "q(q-1)",
        "2F4": "2^k q^4 (q-1) for q = 2^(2k+1)",
    }
    multipliers = {
        "E8": "1", "F4": "Z2 if q = 2 else 1", "G2": "Z3 (q=3), Z2 (q=4), else 1",
        "3D4": "1", "E6": "gcd(3,q-1)", "2E6": "gcd(3,q+1); Z2 x Z6 for q = 2",
        "E7": "gcd(2,q-1)", "2B2": "Z2 x Z2 (q = 8), else 1", "2G2": "1", "2F4": "1",
    }
    dims = {
        "E8": "248", "F4": "26 - [p=3]", "G2": "7 - [p=2]", "3D4": "8", "E6": "27",
        "2E6": "27", "E7": "56", "2B2": "4", "2G2": "7", "2F4": "26",
    }
    for fam in fams:
        records.append(
            {
                "family": fam.label,
                "order": order_formula(fam).to_json(),
                "order_display": order_formula(fam).describe(),
                "lsz_bound": bounds[fam.label],
                "min_module_dim": dims[fam.label],
                "schur_multiplier": multipliers[fam.label],
            }
        )
    records.append(
        {
            "family": "PSL",
            "order": {"qexp": "n(n-1)/2", "factors": "(q^i - 1), i = 2..n", "center": "gcd(n,q-1)"},
            "lsz_bound": "(q^n-q)/(q-1) - kappa_n; 26 for L4(3); 62 - kappa for L6(2); 363 - kappa for L6(3)",
            "min_module_dim": "n",
            "second_min_dim": "n(n-1)/2",
            "schur_multiplier": "gcd(n,q-1)",
        }
    )
    records.append(
        {
            "family": "PSp",
            "order": {"qexp": "n^2", "factors": "(q^(2i) - 1), i = 1..n", "center": "gcd(2,q-1)"},
            "lsz_bound": "(q^n-1)/2 (q odd); q^(n-1)(q^(n-1)-1)(q-1)/2 (q even); 7 for S6(2)",
            "min_module_dim": "2n",
            "second_min_dim": "2n^2-n-2; spin module 2^n for q even, 4 <= n <= 6",
            "schur_multiplier": "gcd(2,q-1); Z2 for S6(2)",
        }
    )
    return {
        "families": records,
        "cited_facts": [f.to_json() for f in CITED_FACTS.values()],
    }


def write_catalog(path) -> None:
    with open(path, "w") as fh:
        json.dump(catalog_dump(), fh, indent=2, sort_keys=True)
        fh.write("\n")
