"""
Registro das Funções do Catálogo
"""
from typing import Dict, List, Optional
from dataclasses import dataclass


@dataclass(frozen=True)
class CatalogEntry:
    """Descreve uma família de séries construível pelo catálogo"""
    name: str
    display_name: str
    family: str
    param_names: tuple[str, ...]
    n_vars: Optional[int]  # None: número de variáveis livre (Lauricella)
    description: str = ""
    example_params: tuple[float, ...] = ()
    example_vars: tuple[float, ...] = ()
    var_box: float = 0.1  # |x_r| máximo na amostragem
    region: Optional[str] = None  # max_abs | sum_abs | sum_sqrt | pfq


# Caixas de amostragem de parâmetros (numerador / denominador)
NUMERATOR_PARAM_BOX = (0.2, 0.85)
DENOMINATOR_PARAM_BOX = (1.05, 1.9)


# ============================================
# DEFINIÇÃO DAS FUNÇÕES DISPONÍVEIS
# ============================================

CATALOG: Dict[str, CatalogEntry] = {

    # ----------------------------------------
    # HIPERGEOMÉTRICAS DE UMA VARIÁVEL
    # ----------------------------------------
    "pFq": CatalogEntry(
        name="pFq",
        display_name="pFq genérica",
        family="pFq",
        param_names=(),
        n_vars=1,
        description="Σ ∏(a_i)_n / ∏(b_j)_n · x^n/n!; use p e q ou nomes como '3F2'.",
        region="pfq",
    ),
    "0F0": CatalogEntry(
        name="0F0",
        display_name="₀F₀ (exponencial)",
        family="pFq",
        param_names=(),
        n_vars=1,
        description="Σ x^n/n! = e^x.",
        example_vars=(0.7,),
        var_box=0.9,
        region="pfq",
    ),
    "1F0": CatalogEntry(
        name="1F0",
        display_name="₁F₀ (binomial)",
        family="pFq",
        param_names=("a",),
        n_vars=1,
        description="(1-x)^(-a).",
        example_params=(2.0,),
        example_vars=(0.5,),
        var_box=0.5,
        region="pfq",
    ),
    "1F1": CatalogEntry(
        name="1F1",
        display_name="₁F₁ (Kummer)",
        family="pFq",
        param_names=("a", "b"),
        n_vars=1,
        description="Função confluente de Kummer M(a; b; x).",
        example_params=(0.5, 1.5),
        example_vars=(0.7,),
        var_box=0.9,
        region="pfq",
    ),
    "2F1": CatalogEntry(
        name="2F1",
        display_name="₂F₁ (Gauss)",
        family="pFq",
        param_names=("a", "b", "c"),
        n_vars=1,
        description="Função hipergeométrica de Gauss.",
        example_params=(1.0, 1.0, 2.0),
        example_vars=(0.5,),
        var_box=0.5,
        region="pfq",
    ),
    "3F2": CatalogEntry(
        name="3F2",
        display_name="₃F₂ (Clausen)",
        family="pFq",
        param_names=("a1", "a2", "a3", "b1", "b2"),
        n_vars=1,
        description="Série generalizada com três parâmetros superiores e dois inferiores.",
        example_params=(0.5, 0.7, 0.9, 1.3, 1.6),
        example_vars=(0.4,),
        var_box=0.5,
        region="pfq",
    ),

    # ----------------------------------------
    # APPELL
    # ----------------------------------------
    "F1": CatalogEntry(
        name="F1",
        display_name="Appell F1",
        family="appell",
        param_names=("a", "b1", "b2", "c"),
        n_vars=2,
        description="(a)_{m+n}(b1)_m(b2)_n / (c)_{m+n}.",
        example_params=(0.3, 0.5, 0.7, 1.1),
        example_vars=(0.25, 0.1),
        var_box=0.4,
        region="max_abs",
    ),
    "F2": CatalogEntry(
        name="F2",
        display_name="Appell F2",
        family="appell",
        param_names=("a", "b1", "b2", "c1", "c2"),
        n_vars=2,
        description="(a)_{m+n}(b1)_m(b2)_n / ((c1)_m(c2)_n).",
        example_params=(0.3, 0.5, 0.7, 1.1, 1.2),
        example_vars=(0.2, 0.15),
        var_box=0.3,
        region="sum_abs",
    ),
    "F3": CatalogEntry(
        name="F3",
        display_name="Appell F3",
        family="appell",
        param_names=("a1", "a2", "b1", "b2", "c"),
        n_vars=2,
        description="(a1)_m(a2)_n(b1)_m(b2)_n / (c)_{m+n}.",
        example_params=(0.3, 0.4, 0.5, 0.7, 1.1),
        example_vars=(0.25, 0.2),
        var_box=0.4,
        region="max_abs",
    ),
    "F4": CatalogEntry(
        name="F4",
        display_name="Appell F4",
        family="appell",
        param_names=("a", "b", "c1", "c2"),
        n_vars=2,
        description="(a)_{m+n}(b)_{m+n} / ((c1)_m(c2)_n).",
        example_params=(0.3, 0.4, 1.1, 1.2),
        example_vars=(0.15, 0.15),
        var_box=0.1,
        region="sum_sqrt",
    ),

    # ----------------------------------------
    # HORN (DUAS VARIÁVEIS)
    # ----------------------------------------
    "H1": CatalogEntry(
        name="H1",
        display_name="Horn H1",
        family="horn",
        param_names=("a", "b", "c", "d"),
        n_vars=2,
        description="(a)_{m-n}(b)_{m+n}(c)_n / (d)_m.",
        example_params=(0.8, 0.6, 0.7, 1.2),
        example_vars=(0.1, 0.1),
        var_box=0.1,
    ),
    "H3": CatalogEntry(
        name="H3",
        display_name="Horn H3",
        family="horn",
        param_names=("a", "b", "c"),
        n_vars=2,
        description="(a)_{2m+n}(b)_n / (c)_{m+n}.",
        example_params=(0.7, 0.9, 1.3),
        example_vars=(0.08, 0.15),
        var_box=0.1,
    ),
    "G3": CatalogEntry(
        name="G3",
        display_name="Horn G3",
        family="horn",
        param_names=("a", "b"),
        n_vars=2,
        description="(a)_{2n-m}(b)_{2m-n}.",
        example_params=(0.6, 0.7),
        example_vars=(0.05, 0.04),
        var_box=0.05,
    ),

    # ----------------------------------------
    # LAYOUT EXPLÍCITO
    # ----------------------------------------
    "KdF": CatalogEntry(
        name="KdF",
        display_name="Kampé de Fériet (multivariável)",
        family="kampe_de_feriet",
        param_names=(),
        n_vars=None,
        description="Parâmetros comuns com índice s_1+...+s_n e parâmetros próprios de cada variável.",
    ),
    "GenLauricella": CatalogEntry(
        name="GenLauricella",
        display_name="Lauricella generalizada",
        family="lauricella",
        param_names=(),
        n_vars=None,
        description="Coeficientes θ, φ, ψ, δ inteiros arbitrários por parâmetro.",
    ),

    # ----------------------------------------
    # LAURICELLA (n VARIÁVEIS)
    # ----------------------------------------
    "FA": CatalogEntry(
        name="FA",
        display_name="Lauricella FA",
        family="lauricella",
        param_names=(),
        n_vars=None,
        description="(a)_{|s|} ∏(b_i)_{s_i} / ∏(c_i)_{s_i}.",
        example_params=(0.3, 0.5, 0.6, 0.7, 1.1, 1.2, 1.3),
        example_vars=(0.1, 0.15, 0.2),
        var_box=0.2,
        region="sum_abs",
    ),
    "FB": CatalogEntry(
        name="FB",
        display_name="Lauricella FB",
        family="lauricella",
        param_names=(),
        n_vars=None,
        description="∏(a_i)_{s_i}(b_i)_{s_i} / (c)_{|s|}.",
        example_params=(0.3, 0.4, 0.5, 0.5, 0.6, 0.7, 1.1),
        example_vars=(0.1, 0.15, 0.2),
        var_box=0.3,
        region="max_abs",
    ),
    "FC": CatalogEntry(
        name="FC",
        display_name="Lauricella FC",
        family="lauricella",
        param_names=(),
        n_vars=None,
        description="(a)_{|s|}(b)_{|s|} / ∏(c_i)_{s_i}.",
        example_params=(0.3, 0.4, 1.1, 1.2, 1.3),
        example_vars=(0.03, 0.04, 0.05),
        var_box=0.04,
        region="sum_sqrt",
    ),
    "FD": CatalogEntry(
        name="FD",
        display_name="Lauricella FD",
        family="lauricella",
        param_names=(),
        n_vars=None,
        description="(a)_{|s|} ∏(b_i)_{s_i} / (c)_{|s|}.",
        example_params=(0.3, 0.5, 0.6, 0.7, 1.1),
        example_vars=(0.1, 0.15, 0.2),
        var_box=0.3,
        region="max_abs",
    ),
}

# Matriz usada nas verificações de aceitação
ACCEPTANCE_FUNCTIONS: List[str] = ["2F1", "3F2", "F1", "F2", "F3", "F4", "H1", "H3", "G3"]


# ============================================
# FUNÇÕES AUXILIARES
# ============================================

def get_catalog_names() -> List[str]:
    """Retorna todos os nomes registrados"""
    return list(CATALOG.keys())


def get_entry(name: str) -> CatalogEntry | None:
    """Busca uma entrada pelo nome exato"""
    return CATALOG.get(name)


def get_entries_by_family(family: str) -> List[CatalogEntry]:
    """Retorna as entradas de uma família"""
    return [e for e in CATALOG.values() if e.family == family]
