"""
Derivada de Uma Ocorrência do Parâmetro

Para um fator (p + s)_{q·n}^{±1} a derivada em p vale
±(p+s)_{q·n}^{±1} [ψ(p+s+q·n) - ψ(p+s)]. A diferença de digammas é
decomposta índice a índice (ξ) e em ramos γ ∈ [0, |q_ξ|-1]; cada ramo
vira uma série com um índice novo k ligado a x_ξ, depois da troca
n_ξ = n' + k + 1. Também trata a regra do produto nos átomos do prefator.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from core.errors import PoleError
from core.evaluator import atom_log
from core.schemas import (
    ConstAtom,
    GammaRatioAtom,
    HornSeries,
    ParamLinearAtom,
    PochhammerFactor,
    PrefactorAtom,
    VarPowerAtom,
    Variable,
    pad_variable,
)
from core.special_math import is_gamma_pole, pochhammer_exact


# ============================================
# RAMOS
# ============================================

@dataclass(frozen=True)
class Branch:
    """Um termo da decomposição: índice ξ, ramo γ e sinal total"""
    xi: int
    gamma: int
    q_xi: int
    # deslocamento c_γ: γ para q_ξ > 0, -γ-1 para q_ξ < 0
    c_gamma: int
    sign: int


@dataclass
class OccurrenceDerivative:
    """
    Ocorrência do parâmetro em um fator e os ramos que ela gera

    Gera Σ_{ξ: q_ξ≠0} |q_ξ| membros, na ordem ξ crescente e γ crescente.
    """
    factor_index: int
    param: str
    placement_sign: int
    coeffs: tuple[int, ...]
    shift: int
    branches: List[Branch] = field(default_factory=list)

    @classmethod
    def from_factor(cls, series: HornSeries, factor_index: int) -> "OccurrenceDerivative":
        f = series.factors[factor_index]
        occ = cls(
            factor_index=factor_index,
            param=f.param,
            placement_sign=f.sign,
            coeffs=f.coeffs,
            shift=f.shift,
        )
        for xi, q in enumerate(f.coeffs):
            if q == 0:
                continue
            q_sign = 1 if q > 0 else -1
            for gamma in range(abs(q)):
                occ.branches.append(Branch(
                    xi=xi,
                    gamma=gamma,
                    q_xi=q,
                    c_gamma=gamma if q > 0 else -gamma - 1,
                    sign=q_sign * f.sign,
                ))
        return occ

    @property
    def member_count(self) -> int:
        return len(self.branches)

    def build_members(self, series: HornSeries) -> List[HornSeries]:
        """
        Séries em φ+1 variáveis, uma por ramo

        Raises:
            PoleError: Base da ocorrência em polo de Γ ou átomo gerado singular
        """
        value = series.get_parameter(self.param).value
        base = value + self.shift
        if is_gamma_pole(base):
            raise PoleError(
                f"Valor excepcional: {self.param}{self.shift:+d} = {base!r} é inteiro não positivo"
            )
        return [self._member(series, b) for b in self.branches]

    def _member(self, series: HornSeries, branch: Branch) -> HornSeries:
        xi = branch.xi
        n = series.n_vars
        e_new = (0,) * n + (1,)
        e_xi = tuple(1 if r == xi else 0 for r in range(n)) + (0,)

        factors: List[PochhammerFactor] = []
        new_atoms: List[PrefactorAtom] = [VarPowerAtom(var=xi, exponent=1)]
        const = Fraction(branch.sign)

        # n_ξ -> n' + k + 1: cada fator ganha a entrada k e desloca a base em q_gξ
        for g in series.factors:
            qg = g.coeffs[xi]
            factors.append(PochhammerFactor(
                param=g.param,
                coeffs=g.coeffs + (qg,),
                placement=g.placement,
                shift=g.shift + qg,
            ))
            if qg == 0:
                continue
            if g.param is None:
                ratio = pochhammer_exact(g.shift, qg)
                if ratio == 0 and g.placement == "denominator":
                    raise PoleError(f"Fator numérico do denominador nulo: ({g.shift})_{qg}")
                const *= ratio if g.placement == "numerator" else 1 / ratio
            elif g.placement == "numerator":
                new_atoms.append(GammaRatioAtom(
                    param=g.param, offset_numerator=g.shift + qg, offset_denominator=g.shift,
                ))
            else:
                new_atoms.append(GammaRatioAtom(
                    param=g.param, offset_numerator=g.shift, offset_denominator=g.shift + qg,
                ))

        # 1/(n'+k+1)! = (1)_{n'} (1)_k / (2)_{n'+k} · 1/(n'! k!)
        factors.append(PochhammerFactor(param=None, coeffs=e_new, placement="numerator", shift=1))
        factors.append(PochhammerFactor(param=None, coeffs=e_xi, placement="numerator", shift=1))
        factors.append(PochhammerFactor(
            param=None,
            coeffs=tuple(a + b for a, b in zip(e_xi, e_new)),
            placement="denominator",
            shift=2,
        ))

        # 1/(B + M) = (1/B) (B)_M / (B+1)_M com M = Σ_{λ<ξ} q_λ n_λ + q_ξ k
        z_shift = self.shift + branch.c_gamma
        beta_coeffs = tuple(q if r < xi else 0 for r, q in enumerate(self.coeffs)) + (branch.q_xi,)
        factors.append(PochhammerFactor(
            param=self.param, coeffs=beta_coeffs, placement="numerator", shift=z_shift,
        ))
        factors.append(PochhammerFactor(
            param=self.param, coeffs=beta_coeffs, placement="denominator", shift=z_shift + 1,
        ))
        new_atoms.append(ParamLinearAtom(param=self.param, offset=z_shift, exponent=-1))
        if const != 1:
            new_atoms.append(ConstAtom.of(const))

        member = HornSeries(
            variables=series.variables + (Variable(value=series.variables[xi].value),),
            parameters=series.parameters,
            factors=tuple(f for f in factors if any(f.coeffs)),
            prefactor=series.prefactor + tuple(new_atoms),
        )
        for atom in new_atoms:
            atom_log(atom, member)
        return member


# ============================================
# REGRA DO PRODUTO NO PREFATOR
# ============================================

def _atom_derivative(atom: PrefactorAtom, param: str) -> List[List[PrefactorAtom]]:
    """
    Derivada de um átomo como lista de produtos de átomos (um por parcela)

    Cada parcela substitui o átomo original; lista vazia quando não depende de param.
    """
    if isinstance(atom, ParamLinearAtom) and atom.param == param:
        if atom.exponent == 1:
            return [[]]
        # d/dp (p+o)^-1 = -(p+o)^-1 (p+o)^-1
        return [[ConstAtom.of(-1), atom, ParamLinearAtom(param=param, offset=atom.offset, exponent=-1)]]

    if isinstance(atom, GammaRatioAtom) and atom.param == param:
        u, v = atom.offset_numerator, atom.offset_denominator
        if u > v:
            # ∏_{j=v}^{u-1} (p+j): remove um fator por vez
            parts = []
            for j in range(v, u):
                left = GammaRatioAtom(param=param, offset_numerator=j, offset_denominator=v)
                right = GammaRatioAtom(param=param, offset_numerator=u, offset_denominator=j + 1)
                parts.append([a for a in (left, right) if a.offset_numerator != a.offset_denominator])
            return parts
        if u < v:
            return [
                [ConstAtom.of(-1), atom, ParamLinearAtom(param=param, offset=j, exponent=-1)]
                for j in range(u, v)
            ]
    return []


def prefactor_members(series: HornSeries, param: str) -> List[HornSeries]:
    """
    Membros vindos da derivada dos átomos do prefator

    Cada membro recebe uma variável inerte para manter φ+1 variáveis.

    Raises:
        PoleError: Átomo gerado singular nos valores ligados
    """
    padded = pad_variable(series)
    members = []
    for i, atom in enumerate(series.prefactor):
        for replacement in _atom_derivative(atom, param):
            prefactor = series.prefactor[:i] + tuple(replacement) + series.prefactor[i + 1:]
            member = padded.model_copy(update={"prefactor": prefactor})
            for new_atom in replacement:
                atom_log(new_atom, member)
            members.append(member)
    return members
