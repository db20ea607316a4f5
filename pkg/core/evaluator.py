"""
Avaliação Numérica por Soma Truncada em Camadas

Cada camada s contém todos os multi-índices de grau total s, percorridos em
ordem lexicográfica crescente; a soma de cada camada usa math.fsum e o valor
final é a soma compensada das camadas vezes o prefator.
"""
import math
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from config.settings import settings
from core.errors import ArityError, HornError, NotConvergedError, PoleError
from core.schemas import (
    ConstAtom,
    DerivativeExpansion,
    EvalOptions,
    EvalResult,
    GammaRatioAtom,
    HornSeries,
    ParamLinearAtom,
    PrefactorAtom,
    VarPowerAtom,
)
from core.special_math import ONE, ZERO, SignedLog, pochhammer
from utils.logger import log_evaluation, log_step_start

TermFunction = Callable[[tuple[int, ...]], float]


# ============================================
# PREFATOR
# ============================================

def atom_log(atom: PrefactorAtom, series: HornSeries) -> SignedLog:
    """
    Valor de um átomo do prefator como SignedLog

    Raises:
        PoleError: Átomo singular nos valores ligados
    """
    if isinstance(atom, ConstAtom):
        return SignedLog.from_float(float(atom.fraction))
    if isinstance(atom, VarPowerAtom):
        x = series.x_values[atom.var]
        if x == 0.0:
            if atom.exponent < 0:
                raise PoleError(f"x_{atom.var}^{atom.exponent} com x_{atom.var} = 0")
            return ONE if atom.exponent == 0 else ZERO
        base = SignedLog.from_float(x)
        sign = -1 if (base.sign < 0 and atom.exponent % 2) else 1
        return SignedLog(atom.exponent * base.log_abs, sign)
    value = series.get_parameter(atom.param).value
    if isinstance(atom, ParamLinearAtom):
        lin = SignedLog.from_float(value + atom.offset)
        if atom.exponent == -1:
            if lin.sign == 0:
                raise PoleError(f"1/({atom.param}{atom.offset:+d}) com {atom.param} = {value!r}")
            return lin.inverse()
        return lin
    if isinstance(atom, GammaRatioAtom):
        # Γ(p+u)/Γ(p+v) = (p+v)_{u-v}
        return pochhammer(value + atom.offset_denominator, atom.offset_numerator - atom.offset_denominator)
    raise TypeError(f"Átomo desconhecido: {atom!r}")


def prefactor_log(series: HornSeries) -> SignedLog:
    """Produto dos átomos do prefator (vazio = 1)"""
    acc = ONE
    for atom in series.prefactor:
        acc = acc.times(atom_log(atom, series))
    return acc


def prefactor_value(series: HornSeries) -> float:
    return prefactor_log(series).to_float()


# ============================================
# TERMOS
# ============================================

@lru_cache(maxsize=4096)
def _log_factorial(k: int) -> float:
    return math.lgamma(k + 1)


class CompiledSeries:
    """Dados numéricos da série prontos para a soma (bases, coeficientes, ln|x|)"""

    def __init__(self, series: HornSeries):
        values = series.param_values
        # Fatores com coeficientes todos nulos valem (z)_0 = 1
        self.factors = [
            (f.base(values), f.coeffs, f.sign)
            for f in series.factors
            if any(f.coeffs)
        ]
        self.n_vars = series.n_vars
        self.x_sign = []
        self.log_x = []
        for x in series.x_values:
            lx = SignedLog.from_float(x)
            self.x_sign.append(lx.sign)
            self.log_x.append(lx.log_abs)
        # (fator, q·n) -> SignedLog; o mesmo q·n se repete em muitos índices
        self._factor_cache: dict[tuple[int, int], SignedLog] = {}

    def _factor_log(self, i: int, n: int) -> SignedLog:
        key = (i, n)
        cached = self._factor_cache.get(key)
        if cached is not None:
            return cached
        z, _, s = self.factors[i]
        if s > 0:
            p = pochhammer(z, n)
        elif n > 0:
            p = pochhammer(z, n)
            if p.sign == 0:
                raise PoleError(f"Fator do denominador nulo: ({z!r})_{n}")
            p = p.inverse()
        else:
            # 1/(z)_n = (z+n)_{-n}
            p = pochhammer(z + n, -n)
        self._factor_cache[key] = p
        return p

    def term_log(self, idx: Sequence[int]) -> SignedLog:
        logs = []
        sign = 1
        for i, (_, q, _) in enumerate(self.factors):
            n = sum(qi * ii for qi, ii in zip(q, idx))
            if n == 0:
                continue
            try:
                p = self._factor_log(i, n)
            except PoleError as e:
                raise PoleError(f"{e} no índice {tuple(idx)}") from e
            if p.sign == 0:
                return ZERO
            logs.append(p.log_abs)
            sign *= p.sign
        for r, k in enumerate(idx):
            if k == 0:
                continue
            if self.x_sign[r] == 0:
                return ZERO
            logs.append(k * self.log_x[r] - _log_factorial(k))
            if self.x_sign[r] < 0 and k % 2:
                sign = -sign
        return SignedLog(math.fsum(logs), sign)

    def term(self, idx: Sequence[int]) -> float:
        return self.term_log(idx).to_float()


def term_value(series: HornSeries, idx: Sequence[int]) -> float:
    """
    Termo da série no multi-índice (sem o prefator)

    Args:
        series: Série válida
        idx: Multi-índice com uma entrada >= 0 por variável

    Returns:
        ∏ (z)_{q·idx}^{±1} · ∏ x_r^{idx_r}/idx_r!

    Raises:
        ArityError: Multi-índice com tamanho diferente do número de variáveis
        PoleError: Polo atingido (série não validada)
    """
    idx = tuple(int(i) for i in idx)
    if len(idx) != series.n_vars:
        raise ArityError(f"Multi-índice com {len(idx)} entradas para série de {series.n_vars} variáveis")
    if any(i < 0 for i in idx):
        raise ValueError(f"Multi-índice deve ser não negativo: {idx}")
    return CompiledSeries(series).term(idx)


# ============================================
# SOMA POR CAMADAS
# ============================================

def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def shell_indices(s: int, n_vars: int, active: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """
    Multi-índices de grau total s em ordem lexicográfica crescente

    Só as variáveis ativas (x != 0) recebem grau; as demais ficam em 0.
    """
    if not active:
        if s == 0:
            yield (0,) * n_vars
        return
    for comp in _compositions(s, len(active)):
        idx = [0] * n_vars
        for r, k in zip(active, comp):
            idx[r] = k
        yield tuple(idx)


def _sum_shells(
    series: HornSeries,
    term_fn: TermFunction,
    opts: EvalOptions,
    scale: float,
) -> tuple[EvalResult, list[float]]:
    active = [r for r, x in enumerate(series.x_values) if x != 0.0]
    shell_sums: list[float] = []
    magnitudes: list[float] = []
    terms = 0
    finite = True
    converged = False

    for s in range(opts.max_total_order + 1):
        vals = []
        for idx in shell_indices(s, series.n_vars, active):
            t = term_fn(idx)
            terms += 1
            if not math.isfinite(t):
                finite = False
                break
            vals.append(t)
        if not finite:
            break
        shell_sums.append(math.fsum(vals))
        magnitudes.append(math.fsum(abs(v) for v in vals) * abs(scale))
        if len(magnitudes) >= opts.min_shells:
            value = math.fsum(shell_sums) * scale
            tol = max(opts.abs_tol, opts.rel_tol * abs(value))
            if max(magnitudes[-opts.min_shells:]) <= tol:
                converged = True
                break

    value = math.fsum(shell_sums) * scale
    if finite and magnitudes:
        tail = max(magnitudes[-opts.min_shells:])
    else:
        tail = math.inf
    result = EvalResult(
        value=value,
        tail_estimate=tail,
        shells_used=len(shell_sums),
        terms_used=terms,
        converged=converged,
    )
    return result, magnitudes


def sum_shells(
    series: HornSeries,
    term_fn: TermFunction,
    opts: EvalOptions,
    scale: float = 1.0,
) -> EvalResult:
    """
    Soma term_fn sobre as camadas 0..max_total_order

    Para na primeira camada em que as últimas min_shells magnitudes
    (Σ|termo|·|scale|) ficam abaixo de max(abs_tol, rel_tol·|valor|).
    Um termo não finito interrompe a soma com cauda infinita.

    Args:
        series: Define variáveis e quais estão ativas
        term_fn: Termo no multi-índice
        opts: Truncamento e tolerâncias
        scale: Fator aplicado ao total (prefator)

    Returns:
        EvalResult com valor, cauda e contagens
    """
    return _sum_shells(series, term_fn, opts, scale)[0]


# ============================================
# OPERAÇÕES PÚBLICAS
# ============================================

def evaluate(series: HornSeries, opts: Optional[EvalOptions] = None) -> EvalResult:
    """
    Valor numérico da série (prefator incluído)

    Args:
        series: Série válida
        opts: Opções de truncamento (default: EvalOptions.from_settings())

    Returns:
        EvalResult; converged=False quando a tolerância não é atingida

    Raises:
        PoleError: Polo no prefator ou em algum termo
    """
    opts = opts or EvalOptions.from_settings()
    compiled = CompiledSeries(series)
    scale = prefactor_value(series)
    return sum_shells(series, compiled.term, opts, scale)


def evaluate_expansion(expansion: DerivativeExpansion, opts: Optional[EvalOptions] = None) -> EvalResult:
    """
    Soma dos membros de uma expansão

    Caudas e contagens de termos se somam; converged só se todos convergirem.

    Raises:
        HornError: Erro de um membro, anotado com a posição do membro
    """
    opts = opts or EvalOptions.from_settings()
    log_step_start("evaluate_expansion", f"{len(expansion.terms)} membros")
    if not expansion.terms:
        return EvalResult(value=0.0, tail_estimate=0.0, shells_used=0, terms_used=0, converged=True)

    results = []
    for i, member in enumerate(expansion.terms):
        try:
            results.append(evaluate(member, opts))
        except HornError as e:
            raise e.with_context(f"Membro {i}") from e

    total = EvalResult(
        value=math.fsum(r.value for r in results),
        tail_estimate=math.fsum(r.tail_estimate for r in results),
        shells_used=max(r.shells_used for r in results),
        terms_used=sum(r.terms_used for r in results),
        converged=all(r.converged for r in results),
    )
    log_evaluation("evaluate_expansion", total)
    return total


def geometric_ratio(magnitudes: Sequence[float], min_shells: int) -> Optional[float]:
    """
    Razão geométrica ajustada das magnitudes finais

    Ajusta ln m_s = c + s·ln ρ + α·ln s por mínimos quadrados na metade
    final das camadas (pelo menos min_shells+1), separando o crescimento
    polinomial s^α da taxa geométrica ρ. None com menos de 4 pontos úteis.
    """
    total = len(magnitudes)
    window = max(min_shells + 1, total // 2)
    s = np.arange(total, dtype=float)[-window:]
    m = np.asarray(magnitudes[-window:], dtype=float)
    keep = (s >= 1) & (m > 0) & np.isfinite(m)
    if keep.sum() < 4:
        return None
    s, m = s[keep], m[keep]
    design = np.column_stack([np.ones_like(s), s, np.log(s)])
    coef, *_ = np.linalg.lstsq(design, np.log(m), rcond=None)
    return float(np.exp(coef[1]))


def converges_at(series: HornSeries, opts: Optional[EvalOptions] = None) -> bool:
    """
    Teste empírico de convergência (heurístico)

    Verdadeiro se a soma atinge a tolerância, ou se as magnitudes das
    camadas finais decrescem geometricamente com razão ajustada
    <= HORN_CONVERGENCE_MAX_RATIO. Decaimento só polinomial (série
    harmônica, borda da região) dá falso.
    """
    opts = opts or EvalOptions.from_settings()
    compiled = CompiledSeries(series)
    result, magnitudes = _sum_shells(series, compiled.term, opts, prefactor_value(series))
    if result.converged:
        return True
    if not math.isfinite(result.tail_estimate):
        return False
    ratio = geometric_ratio(magnitudes, opts.min_shells)
    return ratio is not None and ratio <= settings.HORN_CONVERGENCE_MAX_RATIO


def require_converged(result: EvalResult) -> EvalResult:
    """
    Devolve o resultado se convergiu

    Raises:
        NotConvergedError: Caso contrário
    """
    if not result.converged:
        raise NotConvergedError(result)
    return result
