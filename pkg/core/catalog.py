"""
Construtores das Funções Nomeadas

pFq, Appell F1-F4, Horn H1/H3/G3, Kampé de Fériet multivariável,
Lauricella generalizada e Lauricella FA/FB/FC/FD em n variáveis.
Convenção de variáveis: x ↔ primeiro índice (m), y ↔ segundo índice (n).
"""
import math
import re
from typing import Any, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from config.catalog_config import (
    CATALOG,
    DENOMINATOR_PARAM_BOX,
    NUMERATOR_PARAM_BOX,
    CatalogEntry,
    get_catalog_names,
    get_entry,
)
from core.errors import ArityError, UnknownParameterError
from core.schemas import HornSeries, Parameter, PochhammerFactor, Variable
from utils.validators import ensure_valid

PFQ_PATTERN = re.compile(r"^(\d+)F(\d+)$")

# Nomes clássicos; demais pFq usam a1..ap, b1..bq
CLASSIC_PFQ_NAMES = {
    (1, 0): ("a",),
    (1, 1): ("a", "b"),
    (2, 1): ("a", "b", "c"),
}

FactorLayout = list[tuple[str, tuple[int, ...], str]]


# ============================================
# ESPECIFICAÇÕES DE ENTRADA
# ============================================

class KdFLayout(BaseModel):
    """Quantidades de parâmetros de uma Kampé de Fériet em n variáveis"""
    model_config = ConfigDict(extra="forbid")

    common_numerator: int = Field(ge=0, description="p: parâmetros com índice s_1+...+s_n")
    per_variable_numerator: list[int] = Field(description="q_i por variável")
    common_denominator: int = Field(ge=0, description="l")
    per_variable_denominator: list[int] = Field(description="m_i por variável")


class GenLauricellaLayout(BaseModel):
    """Coeficientes inteiros θ, φ, ψ, δ de uma Lauricella generalizada"""
    model_config = ConfigDict(extra="forbid")

    theta: list[list[int]] = Field(default_factory=list, description="Vetor por parâmetro superior comum")
    phi: list[list[int]] = Field(default_factory=list, description="Por variável: coeficientes dos b^(i)")
    psi: list[list[int]] = Field(default_factory=list, description="Vetor por parâmetro inferior comum")
    delta: list[list[int]] = Field(default_factory=list, description="Por variável: coeficientes dos d^(i)")


class CatalogSpec(BaseModel):
    """Forma abreviada {catalog, params, vars, slopes}"""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    name: str = Field(alias="catalog")
    params: Union[list[float], dict[str, float]] = Field(default_factory=list)
    vars: list[float]
    slopes: dict[str, float] = Field(default_factory=dict)
    p: Optional[int] = Field(default=None, ge=0)
    q: Optional[int] = Field(default=None, ge=0)
    layout: Optional[Union[GenLauricellaLayout, KdFLayout]] = None


# ============================================
# LAYOUTS DE FATORES
# ============================================

TWO_VARIABLE_LAYOUTS: dict[str, FactorLayout] = {
    "F1": [
        ("a", (1, 1), "numerator"),
        ("b1", (1, 0), "numerator"),
        ("b2", (0, 1), "numerator"),
        ("c", (1, 1), "denominator"),
    ],
    "F2": [
        ("a", (1, 1), "numerator"),
        ("b1", (1, 0), "numerator"),
        ("b2", (0, 1), "numerator"),
        ("c1", (1, 0), "denominator"),
        ("c2", (0, 1), "denominator"),
    ],
    "F3": [
        ("a1", (1, 0), "numerator"),
        ("a2", (0, 1), "numerator"),
        ("b1", (1, 0), "numerator"),
        ("b2", (0, 1), "numerator"),
        ("c", (1, 1), "denominator"),
    ],
    "F4": [
        ("a", (1, 1), "numerator"),
        ("b", (1, 1), "numerator"),
        ("c1", (1, 0), "denominator"),
        ("c2", (0, 1), "denominator"),
    ],
    "H1": [
        ("a", (1, -1), "numerator"),
        ("b", (1, 1), "numerator"),
        ("c", (0, 1), "numerator"),
        ("d", (1, 0), "denominator"),
    ],
    "H3": [
        ("a", (2, 1), "numerator"),
        ("b", (0, 1), "numerator"),
        ("c", (1, 1), "denominator"),
    ],
    "G3": [
        ("a", (-1, 2), "numerator"),
        ("b", (2, -1), "numerator"),
    ],
}

EXAMPLE_LAYOUTS = {
    "KdF": (
        KdFLayout(
            common_numerator=1,
            per_variable_numerator=[1, 1],
            common_denominator=1,
            per_variable_denominator=[0, 0],
        ),
        [0.3, 0.5, 0.7, 1.1],
        [0.25, 0.1],
    ),
    "GenLauricella": (
        GenLauricellaLayout(theta=[[2, 1]], phi=[[], [1]], psi=[[1, 1]], delta=[[], []]),
        [0.7, 0.9, 1.3],
        [0.08, 0.15],
    ),
}


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if r == i else 0 for r in range(n))


def pfq_param_names(p: int, q: int) -> tuple[str, ...]:
    """Nomes dos parâmetros de pFq: numeradores primeiro, depois denominadores"""
    if (p, q) in CLASSIC_PFQ_NAMES:
        return CLASSIC_PFQ_NAMES[(p, q)]
    return tuple(f"a{i}" for i in range(1, p + 1)) + tuple(f"b{j}" for j in range(1, q + 1))


def pfq_layout(p: int, q: int) -> FactorLayout:
    names = pfq_param_names(p, q)
    return [(n, (1,), "numerator") for n in names[:p]] + [(n, (1,), "denominator") for n in names[p:]]


def lauricella_layout(kind: str, n: int) -> FactorLayout:
    """Layout de FA, FB, FC ou FD em n variáveis"""
    if n < 1:
        raise ArityError(f"Lauricella {kind} exige pelo menos 1 variável")
    ones = (1,) * n
    idx = range(1, n + 1)
    if kind == "FA":
        return (
            [("a", ones, "numerator")]
            + [(f"b{i}", _unit(n, i - 1), "numerator") for i in idx]
            + [(f"c{i}", _unit(n, i - 1), "denominator") for i in idx]
        )
    if kind == "FB":
        return (
            [(f"a{i}", _unit(n, i - 1), "numerator") for i in idx]
            + [(f"b{i}", _unit(n, i - 1), "numerator") for i in idx]
            + [("c", ones, "denominator")]
        )
    if kind == "FC":
        return (
            [("a", ones, "numerator"), ("b", ones, "numerator")]
            + [(f"c{i}", _unit(n, i - 1), "denominator") for i in idx]
        )
    if kind == "FD":
        return (
            [("a", ones, "numerator")]
            + [(f"b{i}", _unit(n, i - 1), "numerator") for i in idx]
            + [("c", ones, "denominator")]
        )
    raise ValueError(f"Lauricella desconhecida: {kind}")


def gen_lauricella_layout(layout: GenLauricellaLayout, n: int) -> FactorLayout:
    """
    Layout da Lauricella generalizada (coeficientes inteiros de qualquer sinal)

    Raises:
        ArityError: Vetores com tamanho diferente de n
    """
    for label, vectors in (("theta", layout.theta), ("psi", layout.psi)):
        for j, v in enumerate(vectors):
            if len(v) != n:
                raise ArityError(f"{label}[{j}] tem {len(v)} entradas; esperado {n}")
    for label, per_var in (("phi", layout.phi), ("delta", layout.delta)):
        if per_var and len(per_var) != n:
            raise ArityError(f"{label} deve ter uma lista por variável ({n}), recebido {len(per_var)}")

    out: FactorLayout = []
    out += [(f"a{j}", tuple(v), "numerator") for j, v in enumerate(layout.theta, start=1)]
    for i, coeffs in enumerate(layout.phi, start=1):
        out += [(f"b{i}_{j}", tuple(c * e for e in _unit(n, i - 1)), "numerator") for j, c in enumerate(coeffs, start=1)]
    out += [(f"c{j}", tuple(v), "denominator") for j, v in enumerate(layout.psi, start=1)]
    for i, coeffs in enumerate(layout.delta, start=1):
        out += [(f"d{i}_{j}", tuple(c * e for e in _unit(n, i - 1)), "denominator") for j, c in enumerate(coeffs, start=1)]
    return out


def kdf_as_gen_lauricella(layout: KdFLayout) -> GenLauricellaLayout:
    """Kampé de Fériet como Lauricella generalizada com coeficientes 0/1"""
    n = len(layout.per_variable_numerator)
    if len(layout.per_variable_denominator) != n:
        raise ArityError("per_variable_numerator e per_variable_denominator com tamanhos diferentes")
    return GenLauricellaLayout(
        theta=[[1] * n for _ in range(layout.common_numerator)],
        phi=[[1] * k for k in layout.per_variable_numerator],
        psi=[[1] * n for _ in range(layout.common_denominator)],
        delta=[[1] * k for k in layout.per_variable_denominator],
    )


# ============================================
# RESOLUÇÃO DE NOMES
# ============================================

def resolve_entry(name: str) -> CatalogEntry:
    """
    Entrada do registro para um nome (aceita 'pFq' genérico como '4F3')

    Raises:
        LookupError: Nome desconhecido
    """
    entry = get_entry(name)
    if entry is not None:
        return entry
    if PFQ_PATTERN.match(name):
        return CATALOG["pFq"]
    raise LookupError(
        f"Função '{name}' não encontrada no catálogo (disponíveis: {', '.join(get_catalog_names())})"
    )


def _pfq_orders(spec: CatalogSpec) -> tuple[int, int]:
    m = PFQ_PATTERN.match(spec.name)
    if m:
        return int(m.group(1)), int(m.group(2))
    if spec.p is None or spec.q is None:
        raise ArityError("pFq exige os campos 'p' e 'q' (ou um nome como '2F1')")
    return spec.p, spec.q


def layout_for(spec: CatalogSpec) -> tuple[FactorLayout, int]:
    """
    Layout de fatores e número de variáveis de uma especificação

    Raises:
        ArityError: Número de variáveis ou layout incompatível
        LookupError: Nome desconhecido
    """
    entry = resolve_entry(spec.name)
    n = len(spec.vars)
    if entry.family == "pFq":
        p, q = _pfq_orders(spec)
        layout = pfq_layout(p, q)
    elif spec.name in TWO_VARIABLE_LAYOUTS:
        layout = TWO_VARIABLE_LAYOUTS[spec.name]
    elif spec.name in ("FA", "FB", "FC", "FD"):
        layout = lauricella_layout(spec.name, n)
    elif spec.name == "KdF":
        if not isinstance(spec.layout, KdFLayout):
            raise ArityError("KdF exige 'layout' com common_numerator, per_variable_numerator, ...")
        layout = gen_lauricella_layout(kdf_as_gen_lauricella(spec.layout), n)
    elif spec.name == "GenLauricella":
        if not isinstance(spec.layout, GenLauricellaLayout):
            raise ArityError("GenLauricella exige 'layout' com theta, phi, psi, delta")
        layout = gen_lauricella_layout(spec.layout, n)
    else:
        raise LookupError(f"Função '{spec.name}' sem construtor")

    if entry.n_vars is not None and n != entry.n_vars:
        raise ArityError(f"{spec.name} exige {entry.n_vars} variável(is), recebido {n}")
    if any(len(coeffs) != n for _, coeffs, _ in layout):
        raise ArityError(f"Layout de {spec.name} incompatível com {n} variável(is)")
    return layout, n


# ============================================
# CONSTRUÇÃO
# ============================================

def _bind_values(spec: CatalogSpec, names: list[str]) -> list[float]:
    if isinstance(spec.params, dict):
        for key in spec.params:
            if key not in names:
                raise UnknownParameterError(key, names)
        missing = [n for n in names if n not in spec.params]
        if missing:
            raise ArityError(f"{spec.name}: faltam valores para {', '.join(missing)}")
        return [float(spec.params[n]) for n in names]
    if len(spec.params) != len(names):
        raise ArityError(
            f"{spec.name} exige {len(names)} parâmetro(s) ({', '.join(names) or 'nenhum'}), "
            f"recebido {len(spec.params)}"
        )
    return [float(v) for v in spec.params]


def build(spec: CatalogSpec) -> HornSeries:
    """
    Constrói e valida a série de uma especificação do catálogo

    Args:
        spec: Nome, valores de parâmetros/variáveis e slopes opcionais

    Returns:
        HornSeries com layout de fatores da definição da família

    Raises:
        ArityError: Quantidades incompatíveis com a família
        UnknownParameterError: Slope ou parâmetro nomeado inexistente
        SeriesValidationError: Valores em polo
    """
    layout, n = layout_for(spec)
    names = [name for name, _, _ in layout]
    values = _bind_values(spec, names)
    for key in spec.slopes:
        if key not in names:
            raise UnknownParameterError(key, names)

    series = HornSeries(
        variables=tuple(Variable(value=float(x)) for x in spec.vars),
        parameters=tuple(
            Parameter(name=name, value=value, epsilon_slope=float(spec.slopes.get(name, 0.0)))
            for name, value in zip(names, values)
        ),
        factors=tuple(
            PochhammerFactor(param=name, coeffs=coeffs, placement=placement)
            for name, coeffs, placement in layout
        ),
    )
    return ensure_valid(series)


def build_named(name: str, params: Any = (), xs: Any = (), **kwargs) -> HornSeries:
    """Atalho: build(CatalogSpec(name=..., params=..., vars=...))"""
    if not isinstance(params, dict):
        params = list(params)
    return build(CatalogSpec(name=name, params=params, vars=list(xs), **kwargs))


def example_spec(name: str) -> CatalogSpec:
    """
    Especificação de exemplo de uma entrada do catálogo

    Raises:
        LookupError: Nome desconhecido ou sem exemplo (pFq genérica)
    """
    if name in EXAMPLE_LAYOUTS:
        layout, params, xs = EXAMPLE_LAYOUTS[name]
        return CatalogSpec(name=name, params=params, vars=xs, layout=layout)
    entry = resolve_entry(name)
    if entry.name == "pFq" and not PFQ_PATTERN.match(name):
        raise LookupError("pFq genérica não tem exemplo; use um nome como '2F1'")
    if entry.name == "pFq":
        p, q = _pfq_orders(CatalogSpec(name=name, vars=[0.0]))
        return CatalogSpec(name=name, params=[0.5] * p + [1.5] * q, vars=[0.3])
    return CatalogSpec(name=name, params=list(entry.example_params), vars=list(entry.example_vars))


def describe(name: str) -> dict:
    """Entrada do registro mais o layout de fatores da instância de exemplo"""
    entry = resolve_entry(name)
    series = build(example_spec(name))
    return {
        "name": name,
        "display_name": entry.display_name,
        "family": entry.family,
        "description": entry.description,
        "parameters": series.param_names,
        "n_vars": series.n_vars,
        "region": entry.region,
        "factors": [
            {"param": f.param, "coeffs": list(f.coeffs), "placement": f.placement}
            for f in series.factors
        ],
        "example": series.model_dump(mode="json", by_alias=True),
    }


# ============================================
# REGIÃO DE CONVERGÊNCIA E AMOSTRAGEM
# ============================================

def known_region(name: str, xs: list[float], p: Optional[int] = None, q: Optional[int] = None) -> Optional[bool]:
    """
    Pertinência à região clássica de convergência (None quando não catalogada)

    pFq: inteira se p <= q, |x| < 1 se p = q+1, só x = 0 se p > q+1.
    F1/F3/FB/FD: max|x| < 1; F2/FA: Σ|x| < 1; F4/FC: Σ√|x| < 1.
    """
    entry = resolve_entry(name)
    absx = [abs(x) for x in xs]
    if entry.region == "pfq":
        m = PFQ_PATTERN.match(name)
        if m:
            p, q = int(m.group(1)), int(m.group(2))
        if p is None or q is None:
            return None
        if p <= q:
            return True
        if p == q + 1:
            return absx[0] < 1.0
        return absx[0] == 0.0
    if entry.region == "max_abs":
        return max(absx) < 1.0
    if entry.region == "sum_abs":
        return sum(absx) < 1.0
    if entry.region == "sum_sqrt":
        return math.fsum(math.sqrt(x) for x in absx) < 1.0
    return None


def region_box(name: str, n_vars: Optional[int] = None, fraction: float = 0.9) -> float:
    """
    Meia-largura da caixa de variáveis que alcança fraction da borda da região

    Com |x_r| <= box em todas as variáveis: max|x| <= fraction (max_abs e pFq
    com p = q+1), Σ|x| <= fraction (sum_abs) ou Σ√|x| <= fraction (sum_sqrt).
    Sem região catalogada devolve o var_box da entrada.
    """
    entry = resolve_entry(name)
    n = n_vars or entry.n_vars or 1
    if entry.region == "max_abs":
        return fraction
    if entry.region == "sum_abs":
        return fraction / n
    if entry.region == "sum_sqrt":
        return (fraction / n) ** 2
    if entry.region == "pfq":
        m = PFQ_PATTERN.match(name)
        if m and int(m.group(1)) == int(m.group(2)) + 1:
            return fraction
    return entry.var_box


def sample_points(
    name: str,
    count: int,
    seed: int = 20241019,
    n_vars: Optional[int] = None,
    var_box: Optional[float] = None,
) -> list[CatalogSpec]:
    """
    Pontos internos pseudoaleatórios (gerador numpy com semente fixa)

    Parâmetros de numerador em NUMERATOR_PARAM_BOX, de denominador em
    DENOMINATOR_PARAM_BOX; variáveis uniformes em [-var_box, var_box].

    Args:
        name: Nome do catálogo (com exemplo definido)
        count: Quantidade de pontos
        seed: Semente do gerador
        n_vars: Número de variáveis para famílias Lauricella
        var_box: Meia-largura da caixa de variáveis (default: var_box da entrada)

    Returns:
        Lista de CatalogSpec
    """
    entry = resolve_entry(name)
    base = example_spec(name)
    if n_vars is not None and name in ("FA", "FB", "FC", "FD"):
        base = CatalogSpec(name=name, vars=[0.1] * n_vars)
    layout, _ = layout_for(base)
    placements = [placement for _, _, placement in layout]

    rng = np.random.default_rng(seed)
    n = len(base.vars)
    box = entry.var_box if var_box is None else var_box
    out = []
    for _ in range(count):
        params = [
            float(rng.uniform(*(NUMERATOR_PARAM_BOX if pl == "numerator" else DENOMINATOR_PARAM_BOX)))
            for pl in placements
        ]
        xs = [float(v) for v in rng.uniform(-box, box, size=n)]
        out.append(CatalogSpec(name=name, params=params, vars=xs, p=base.p, q=base.q, layout=base.layout))
    return out
