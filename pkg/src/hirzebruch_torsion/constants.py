"""Exact arithmetic in the Q-span of the transcendental constants of the engine.

Every symbolic quantity produced by the pipelines (torsion values, heights,
closed-form integrals) is a Q-linear combination of a fixed basis of atoms:

    1,  log(pi),  log(p) for primes p,  zeta'(-1),  zeta(-1).

Working in this basis makes equality of differently derived expressions
decidable by normal form: log(2*pi), log(n+1), log((n+2)/2) all reduce to
prime logarithms plus log(pi).  zeta(-1) is kept as an atom for display even
though it equals -1/12; numerical evaluation substitutes the exact rational.

Values are immutable and all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

RationalLike = Union[int, Fraction]

# Reference values, >= 20 significant digits (float() rounds correctly).
LOG_PI_REFERENCE = "1.144729885849400174143427351353058711647"
ZETA_PRIME_M1_REFERENCE = "-0.165421143700450929213919660242780642764"
ZETA_M1_RATIONAL = Fraction(-1, 12)


class NonRationalProduct(ArithmeticError):
    """Product of two non-rational exact constants: a pipeline bug by contract."""


# ---------------------------------------------------------------------------
# Atoms
# ---------------------------------------------------------------------------

_KIND_RANK = {"one": 0, "log_pi": 1, "log_prime": 2, "zeta_prime_m1": 3, "zeta_m1": 4}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, order=False)
class ConstantAtom:
    """One basis element: the rational unit, log(pi), log(p), zeta'(-1) or zeta(-1)."""

    kind: str
    prime: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        if self.kind == "log_prime":
            if not _is_prime(self.prime):
                raise ValueError(f"log_prime atom needs a prime argument, got {self.prime}")
        elif self.prime:
            raise ValueError(f"{self.kind} atom carries no prime")

    def sort_key(self) -> Tuple[int, int]:
        return (_KIND_RANK[self.kind], self.prime)

    def value(self) -> float:
        if self.kind == "one":
            return 1.0
        if self.kind == "log_pi":
            return float(LOG_PI_REFERENCE)
        if self.kind == "log_prime":
            return math.log(self.prime)
        if self.kind == "zeta_prime_m1":
            return float(ZETA_PRIME_M1_REFERENCE)
        return float(ZETA_M1_RATIONAL)

    def label(self) -> str:
        return {
            "one": "1",
            "log_pi": "log(pi)",
            "log_prime": f"log({self.prime})",
            "zeta_prime_m1": "zeta'(-1)",
            "zeta_m1": "zeta(-1)",
        }[self.kind]


ONE = ConstantAtom("one")
LOG_PI = ConstantAtom("log_pi")
ZETA_PRIME_M1 = ConstantAtom("zeta_prime_m1")
ZETA_M1 = ConstantAtom("zeta_m1")


def log_prime_atom(p: int) -> ConstantAtom:
    return ConstantAtom("log_prime", p)


def _factor(m: int) -> Dict[int, int]:
    """Prime factorization by trial division; inputs here are desk-scale."""
    out: Dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


# ---------------------------------------------------------------------------
# ExactConstant
# ---------------------------------------------------------------------------


class ExactConstant:
    """A finite Q-linear combination of atoms, stored in normal form.

    Normal form: no zero coefficients, atoms canonically ordered.  Equality is
    coefficient-wise, sound under the working assumption that the atoms are
    Q-linearly independent.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[ConstantAtom, RationalLike] | None = None):
        norm: Dict[ConstantAtom, Fraction] = {}
        for atom, c in (coeffs or {}).items():
            q = Fraction(c)
            if q:
                norm[atom] = norm.get(atom, Fraction(0)) + q
        self._coeffs = {a: q for a, q in sorted(norm.items(), key=lambda kv: kv[0].sort_key()) if q}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "ExactConstant":
        return ExactConstant()

    @staticmethod
    def rational(q: RationalLike) -> "ExactConstant":
        return ExactConstant({ONE: Fraction(q)})

    @staticmethod
    def atom(a: ConstantAtom, q: RationalLike = 1) -> "ExactConstant":
        return ExactConstant({a: Fraction(q)})

    # -- inspection --------------------------------------------------------

    @property
    def coeffs(self) -> Dict[ConstantAtom, Fraction]:
        return dict(self._coeffs)

    def coefficient(self, a: ConstantAtom) -> Fraction:
        return self._coeffs.get(a, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_rational(self) -> bool:
        return all(a == ONE for a in self._coeffs)

    @property
    def rational_part(self) -> Fraction:
        return self._coeffs.get(ONE, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "ExactConstant") -> "ExactConstant":
        merged = dict(self._coeffs)
        for a, q in other._coeffs.items():
            merged[a] = merged.get(a, Fraction(0)) + q
        return ExactConstant(merged)

    def __neg__(self) -> "ExactConstant":
        return ExactConstant({a: -q for a, q in self._coeffs.items()})

    def __sub__(self, other: "ExactConstant") -> "ExactConstant":
        return self + (-other)

    def scale(self, q: RationalLike) -> "ExactConstant":
        q = Fraction(q)
        return ExactConstant({a: c * q for a, c in self._coeffs.items()})

    def __mul__(self, other: Union["ExactConstant", RationalLike]) -> "ExactConstant":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.is_rational:
            return other.scale(self.rational_part)
        if other.is_rational:
            return self.scale(other.rational_part)
        raise NonRationalProduct(
            f"product of non-rational constants ({self}) * ({other}); "
            "results of the pipelines are linear in transcendental atoms"
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactConstant) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    # -- evaluation / io ----------------------------------------------------

    def to_float(self) -> float:
        return math.fsum(float(q) * a.value() for a, q in self._coeffs.items())

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for a, q in self._coeffs.items():
            mag = abs(q)
            if a == ONE:
                body = str(mag)
            elif mag == 1:
                body = a.label()
            else:
                body = f"{mag}*{a.label()}"
            parts.append(("- " if q < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"ExactConstant({self})"

    def to_json_dict(self) -> dict:
        log_atoms: Dict[str, str] = {}
        for a, q in self._coeffs.items():
            if a.kind == "log_pi":
                log_atoms["pi"] = str(q)
            elif a.kind == "log_prime":
                log_atoms[str(a.prime)] = str(q)
        return {
            "rational": str(self.rational_part),
            "log_atoms": log_atoms,
            "zeta_prime_m1": str(self.coefficient(ZETA_PRIME_M1)),
            "zeta_m1": str(self.coefficient(ZETA_M1)),
        }

    @staticmethod
    def from_json_dict(d: dict) -> "ExactConstant":
        coeffs: Dict[ConstantAtom, Fraction] = {ONE: Fraction(d["rational"])}
        for key, q in d.get("log_atoms", {}).items():
            atom = LOG_PI if key == "pi" else log_prime_atom(int(key))
            coeffs[atom] = Fraction(q)
        coeffs[ZETA_PRIME_M1] = Fraction(d.get("zeta_prime_m1", 0))
        coeffs[ZETA_M1] = Fraction(d.get("zeta_m1", 0))
        return ExactConstant(coeffs)


# ---------------------------------------------------------------------------
# Module-level operation surface
# ---------------------------------------------------------------------------


def add(a: ExactConstant, b: ExactConstant) -> ExactConstant:
    return a + b


def scale(q: RationalLike, a: ExactConstant) -> ExactConstant:
    return a.scale(q)


def mul(a: ExactConstant, b: ExactConstant) -> ExactConstant:
    """Product with at least one rational operand; anything else is rejected."""
    return a * b


def log_rational(q: RationalLike) -> ExactConstant:
    """Decompose log(q) for q > 0 into prime-log atoms."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"log_rational needs a positive rational, got {q}")
    coeffs: Dict[ConstantAtom, Fraction] = {}
    for p, e in _factor(q.numerator).items():
        coeffs[log_prime_atom(p)] = coeffs.get(log_prime_atom(p), Fraction(0)) + e
    for p, e in _factor(q.denominator).items():
        coeffs[log_prime_atom(p)] = coeffs.get(log_prime_atom(p), Fraction(0)) - e
    return ExactConstant(coeffs)


def log_2pi() -> ExactConstant:
    return log_rational(2) + ExactConstant.atom(LOG_PI)


def to_float(a: ExactConstant) -> float:
    return a.to_float()


def atom_table() -> Iterable[Tuple[str, str]]:
    """(label, reference value) rows for the named atoms, for reporting."""
    return [
        ("1", "1"),
        ("log(pi)", LOG_PI_REFERENCE),
        ("log(p)", "math.log(p) per prime p"),
        ("zeta'(-1)", ZETA_PRIME_M1_REFERENCE),
        ("zeta(-1)", f"{ZETA_M1_RATIONAL} (exact)"),
    ]
