from __future__ import annotations

from dataclasses import dataclass
from functools import cache, total_ordering
from typing import Final


class OrdinalArithmeticError(ArithmeticError):
    """Cantor標準形の演算が定義域の外で呼ばれた。"""


Term = tuple["Cnf", int]


@total_ordering
@dataclass(frozen=True)
class Cnf:
    """ε₀ 未満の順序数 ω^{e_1}・c_1 + ... + ω^{e_k}・c_k (e_1 > ... > e_k, c_i > 0)。"""

    terms: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        for i, (exponent, coefficient) in enumerate(self.terms):
            if coefficient <= 0:
                msg = f"係数は正である必要があります: {coefficient}"
                raise OrdinalArithmeticError(msg)
            if i and not exponent < self.terms[i - 1][0]:
                msg = "指数は狭義に減少している必要があります。"
                raise OrdinalArithmeticError(msg)

    @classmethod
    def of(cls, n: int) -> Cnf:
        if n < 0:
            msg = f"順序数は非負である必要があります: {n}"
            raise OrdinalArithmeticError(msg)
        return ZERO if n == 0 else cls(((ZERO, n),))

    @classmethod
    def power(cls, exponent: Cnf | int, coefficient: int = 1) -> Cnf:
        """ω^exponent・coefficient を返す。"""
        return cls(((coerce(exponent), coefficient),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(exponent.is_zero for exponent, _ in self.terms)

    @property
    def is_limit(self) -> bool:
        """0 でも後続順序数でもないか。"""
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def leading_exponent(self) -> Cnf:
        return self.terms[0][0] if self.terms else ZERO

    def finite_value(self) -> int:
        if not self.is_finite:
            msg = f"{self} は有限の順序数ではありません。"
            raise OrdinalArithmeticError(msg)
        return self.terms[0][1] if self.terms else 0

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Cnf.of(other)
        if not isinstance(other, Cnf):
            return NotImplemented
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms, strict=False):
            if e1 != e2:
                return e1 < e2
            if c1 != c2:
                return c1 < c2
        return len(self.terms) < len(other.terms)

    def __add__(self, other: Cnf | int) -> Cnf:
        other = coerce(other)
        if other.is_zero:
            return self
        lead, coefficient = other.terms[0]
        kept = [term for term in self.terms if lead < term[0]]
        same = [c for exponent, c in self.terms if exponent == lead]
        if same:
            return Cnf((*kept, (lead, same[0] + coefficient), *other.terms[1:]))
        return Cnf((*kept, *other.terms))

    def __radd__(self, other: int) -> Cnf:
        return coerce(other) + self

    def __mul__(self, other: Cnf | int) -> Cnf:
        other = coerce(other)
        if self.is_zero or other.is_zero:
            return ZERO
        lead, lead_coefficient = self.terms[0]
        result = ZERO
        for exponent, coefficient in other.terms:
            if exponent.is_zero:
                result += Cnf(((lead, lead_coefficient * coefficient), *self.terms[1:]))
            else:
                result += Cnf.power(lead + exponent, coefficient)
        return result

    def __rmul__(self, other: int) -> Cnf:
        return coerce(other) * self

    def __str__(self) -> str:
        return format_cnf(self)


ZERO: Final = Cnf()
ONE: Final = Cnf(((ZERO, 1),))
OMEGA: Final = Cnf(((ONE, 1),))


def coerce(value: Cnf | int) -> Cnf:
    return value if isinstance(value, Cnf) else Cnf.of(value)


def divide_by_omega(alpha: Cnf) -> Cnf:
    """左除法で α = ω・β となる β を返す。α は ω² 以上の極限順序数であること。"""
    if not alpha.is_limit:
        msg = f"{alpha} は極限順序数ではありません。"
        raise OrdinalArithmeticError(msg)
    if alpha < Cnf.power(2):
        msg = f"{alpha} は ω² より小さいため β >= ω が取れません。"
        raise OrdinalArithmeticError(msg)
    terms: list[Term] = []
    for exponent, coefficient in alpha.terms:
        if exponent.is_finite:
            terms.append((Cnf.of(exponent.finite_value() - 1), coefficient))
        else:
            terms.append((exponent, coefficient))
    beta = Cnf(tuple(terms))
    if OMEGA * beta != alpha:
        msg = f"{alpha} を ω で割り切れませんでした。"
        raise OrdinalArithmeticError(msg)
    return beta


def weight(alpha: Cnf) -> int:
    """weight(Σ ω^{e_i}・c_i) = Σ c_i・(1 + weight(e_i))。各重みの順序数は有限個。"""
    return sum(coefficient * (1 + weight(exponent)) for exponent, coefficient in alpha.terms)


@cache
def _term_lists(total: int, below: Cnf | None) -> tuple[tuple[Term, ...], ...]:
    if total == 0:
        return ((),)
    lists: list[tuple[Term, ...]] = []
    for exponent_weight in range(total):
        unit = 1 + exponent_weight
        for exponent in ordinals_of_weight(exponent_weight):
            if below is not None and not exponent < below:
                continue
            for coefficient in range(1, total // unit + 1):
                lists.extend(
                    ((exponent, coefficient), *rest)
                    for rest in _term_lists(total - coefficient * unit, exponent)
                )
    return tuple(lists)


@cache
def ordinals_of_weight(total: int) -> tuple[Cnf, ...]:
    """重みが total の順序数を昇順で返す。"""
    return tuple(sorted(Cnf(terms) for terms in _term_lists(total, None)))


def format_cnf(alpha: Cnf) -> str:
    """`w^2*3 + w*5 + 3` の形の文字列を返す。"""
    if alpha.is_zero:
        return "0"
    parts: list[str] = []
    for exponent, coefficient in alpha.terms:
        if exponent.is_zero:
            parts.append(str(coefficient))
            continue
        if exponent == ONE:
            base = "w"
        elif exponent.is_finite:
            base = f"w^{exponent.finite_value()}"
        else:
            base = f"w^{{{format_cnf(exponent)}}}"
        parts.append(base if coefficient == 1 else f"{base}*{coefficient}")
    return " + ".join(parts)
