"""
Funções Especiais Escalares

log-gamma com sinal, digamma/poligamma e símbolos de Pochhammer
para deslocamentos inteiros de qualquer sinal.
"""
import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from scipy import special

from config.settings import settings
from core.errors import PoleError


# ============================================
# VALOR COM LOG E SINAL
# ============================================

class SignedLog(NamedTuple):
    """Número real representado por ln|x| e sinal (zero: log_abs = -inf, sign = 0)"""
    log_abs: float
    sign: int

    def times(self, other: "SignedLog") -> "SignedLog":
        if self.sign == 0 or other.sign == 0:
            return ZERO
        return SignedLog(self.log_abs + other.log_abs, self.sign * other.sign)

    def inverse(self) -> "SignedLog":
        if self.sign == 0:
            raise PoleError("Inverso de zero em SignedLog")
        return SignedLog(-self.log_abs, self.sign)

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.log_abs)
        except OverflowError:
            return math.copysign(math.inf, self.sign)

    @classmethod
    def from_float(cls, x: float) -> "SignedLog":
        if x == 0.0:
            return ZERO
        return cls(math.log(abs(x)), 1 if x > 0 else -1)


ZERO = SignedLog(-math.inf, 0)
ONE = SignedLog(0.0, 1)


# ============================================
# POLOS
# ============================================

def _tolerance(tol: Optional[float]) -> float:
    return settings.POLE_TOLERANCE if tol is None else tol


def nearest_integer(z: float, tol: Optional[float] = None) -> Optional[int]:
    """Retorna o inteiro mais próximo de z se estiver dentro da tolerância, senão None"""
    r = round(z)
    if abs(z - r) <= _tolerance(tol):
        return int(r)
    return None


def is_gamma_pole(z: float, tol: Optional[float] = None) -> bool:
    """True se z for (dentro da tolerância) um inteiro não positivo"""
    r = nearest_integer(z, tol)
    return r is not None and r <= 0


def _check_pole(fn_name: str, z: float, tol: Optional[float]) -> None:
    if is_gamma_pole(z, tol):
        raise PoleError(f"{fn_name}({z!r}): argumento em polo (inteiro não positivo)")


# ============================================
# GAMMA E POLIGAMMA
# ============================================

def log_gamma(z: float, tol: Optional[float] = None) -> SignedLog:
    """
    ln|Γ(z)| com o sinal de Γ(z)

    Args:
        z: Argumento real
        tol: Distância absoluta a um inteiro não positivo tratada como polo

    Returns:
        SignedLog de Γ(z)

    Raises:
        PoleError: Se z for inteiro não positivo
    """
    _check_pole("log_gamma", z, tol)
    return SignedLog(float(special.gammaln(z)), int(special.gammasgn(z)))


def digamma(z: float, tol: Optional[float] = None) -> float:
    """ψ(z) = Γ'(z)/Γ(z)"""
    _check_pole("digamma", z, tol)
    return float(special.psi(z))


def polygamma(k: int, z: float, tol: Optional[float] = None) -> float:
    """
    Derivada de ordem k de ψ (k = 0 devolve o próprio digamma)

    Raises:
        ValueError: Se k for negativo
        PoleError: Se z for inteiro não positivo
    """
    if k < 0:
        raise ValueError(f"Ordem de poligamma deve ser >= 0, recebido {k}")
    if k == 0:
        return digamma(z, tol)
    _check_pole("polygamma", z, tol)
    return float(special.polygamma(k, z))


def trigamma(z: float, tol: Optional[float] = None) -> float:
    """ψ'(z)"""
    return polygamma(1, z, tol)


# ============================================
# POCHHAMMER
# ============================================

def _direct_rising(a: float, n: int, tol: float) -> SignedLog:
    # a(a+1)...(a+n-1)
    logs = []
    sign = 1
    for j in range(n):
        f = a + j
        if abs(f) <= tol:
            return ZERO
        logs.append(math.log(abs(f)))
        if f < 0:
            sign = -sign
    return SignedLog(math.fsum(logs), sign)


def _direct_falling_inverse(a: float, k: int, tol: float) -> SignedLog:
    # 1 / ((a-1)(a-2)...(a-k))
    logs = []
    sign = 1
    for j in range(1, k + 1):
        f = a - j
        if abs(f) <= tol:
            raise PoleError(f"pochhammer({a!r}, {-k}): produto descendente cruza zero em a-{j}")
        logs.append(math.log(abs(f)))
        if f < 0:
            sign = -sign
    return SignedLog(-math.fsum(logs), sign)


@lru_cache(maxsize=1 << 16)
def _pochhammer(a: float, n: int, tol: float, direct_limit: int) -> SignedLog:
    if n == 0:
        return ONE
    near_int = nearest_integer(a, tol) is not None
    if abs(n) <= direct_limit or near_int:
        if n > 0:
            return _direct_rising(a, n, tol)
        return _direct_falling_inverse(a, -n, tol)
    top = log_gamma(a + n, tol)
    bottom = log_gamma(a, tol)
    return SignedLog(top.log_abs - bottom.log_abs, top.sign * bottom.sign)


def pochhammer(
    a: float,
    n: int,
    tol: Optional[float] = None,
    direct_limit: Optional[int] = None,
) -> SignedLog:
    """
    Símbolo de Pochhammer (a)_n = Γ(a+n)/Γ(a) para qualquer inteiro n

    Para n >= 0 é o produto a(a+1)...(a+n-1); para n < 0 vale
    1/((a-1)(a-2)...(a+n)). Com |n| até o limite direto o produto é
    acumulado termo a termo; acima dele usa diferença de log-gamma.

    Args:
        a: Base real
        n: Deslocamento inteiro
        tol: Tolerância de polo (default: settings.POLE_TOLERANCE)
        direct_limit: Limite do produto direto (default: settings.POCHHAMMER_DIRECT_LIMIT)

    Returns:
        SignedLog de (a)_n (sinal 0 quando o produto ascendente atinge zero)

    Raises:
        PoleError: Se n < 0 e o produto descendente cruzar zero
    """
    n = int(n)
    limit = settings.POCHHAMMER_DIRECT_LIMIT if direct_limit is None else direct_limit
    return _pochhammer(float(a), n, _tolerance(tol), limit)


def pochhammer_value(a: float, n: int, tol: Optional[float] = None) -> float:
    """(a)_n como float"""
    return pochhammer(a, n, tol).to_float()


def pochhammer_exact(a: int, n: int) -> Fraction:
    """
    (a)_n exato para base inteira

    Raises:
        PoleError: Se n < 0 e algum fator (a-j) for zero
    """
    if n >= 0:
        prod = 1
        for j in range(n):
            prod *= a + j
        return Fraction(prod)
    prod = 1
    for j in range(1, -n + 1):
        prod *= a - j
    if prod == 0:
        raise PoleError(f"pochhammer_exact({a}, {n}): produto descendente cruza zero")
    return Fraction(1, prod)
