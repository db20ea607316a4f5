#!/usr/bin/env python3
"""
Script de Validação - Critérios de Aceitação
Roda a matriz completa (20/50 pontos por função, semente fixa) contra os
oráculos independentes.

Uso:
    python validate_acceptance.py
"""
import contextlib
import io
import math
import sys
import time
from functools import lru_cache
from typing import Callable, List, Tuple

from config.catalog_config import ACCEPTANCE_FUNCTIONS
from core.catalog import build, build_named, region_box, sample_points
from core.derivatives.engine import differentiate, differentiate_n
from core.derivatives.epsilon import epsilon_expand
from core.evaluator import converges_at, evaluate, evaluate_expansion
from core.oracle import (
    central_difference,
    digamma_derivative,
    epsilon_coefficient_oracle,
    observed_order,
)
from core.schemas import EvalOptions, HornSeries, swap_values
from utils.logger import get_logger


class Colors:
    GREEN = '\033[92m'
    RED = '\033[91m'
    YELLOW = '\033[93m'
    BLUE = '\033[94m'
    BOLD = '\033[1m'
    END = '\033[0m'


def print_header(text: str):
    """Imprime cabeçalho"""
    print(f"\n{Colors.BOLD}{Colors.BLUE}{'='*70}{Colors.END}")
    print(f"{Colors.BOLD}{Colors.BLUE}{text:^70}{Colors.END}")
    print(f"{Colors.BOLD}{Colors.BLUE}{'='*70}{Colors.END}\n")


ORACLE_POINTS = 20
SYMMETRY_POINTS = 10
CONVERGENCE_POINTS = 50
CONVERGENCE_FRACTION = 0.9
CONVERGENCE_MAX_ORDER = 40
ORDER_POINTS = 2
FD_STEP = 1e-4

# (função, parâmetro, parceiro, pares de parâmetros trocados)
SYMMETRY_CASES = [
    ("F1", "b1", "b2", [("b1", "b2")]),
    ("F2", "b1", "b2", [("b1", "b2"), ("c1", "c2")]),
    ("F2", "c1", "c2", [("b1", "b2"), ("c1", "c2")]),
    ("F3", "a1", "a2", [("a1", "a2"), ("b1", "b2")]),
    ("F4", "c1", "c2", [("c1", "c2")]),
]


def _matrix(count: int):
    for name in ACCEPTANCE_FUNCTIONS:
        for index, series in enumerate(_points(name, count)):
            for param in series.param_names:
                yield name, index, series, param


@lru_cache(maxsize=None)
def _points(name: str, count: int) -> tuple[HornSeries, ...]:
    return tuple(build(spec) for spec in sample_points(name, count))


@lru_cache(maxsize=None)
def _engine_derivative(name: str, count: int, index: int, param: str) -> float:
    # critérios 1 e 2 compartilham a mesma derivada do motor
    series = _points(name, count)[index]
    return evaluate_expansion(differentiate(series, param), EvalOptions.from_settings()).value


def check_oracle_equivalence() -> Tuple[bool, str]:
    """
    Critério 1: motor × oráculo digamma em 20 pontos por função
    """
    opts = EvalOptions.from_settings()
    failures = []
    total = 0
    worst = 0.0
    for name, index, series, param in _matrix(ORACLE_POINTS):
        total += 1
        engine = _engine_derivative(name, ORACLE_POINTS, index, param)
        oracle = digamma_derivative(series, param, opts).value
        dev = abs(engine - oracle) / max(1.0, abs(oracle))
        worst = max(worst, dev)
        if not dev <= 1e-9:
            failures.append(f"{name} d/d{param}: desvio relativo {dev:.2e}")

    if failures:
        return False, f"{len(failures)}/{total} casos fora de 1e-9: " + "; ".join(failures[:5])
    return True, f"{total} casos, pior desvio relativo {worst:.2e}"


def check_finite_differences() -> Tuple[bool, str]:
    """
    Critério 2: motor × diferenças centrais (h = 1e-4) e ordem observada
    """
    opts = EvalOptions.from_settings()
    failures = []
    total = 0
    for name, index, series, param in _matrix(ORACLE_POINTS):
        total += 1
        engine = _engine_derivative(name, ORACLE_POINTS, index, param)
        fd = central_difference(series, param, FD_STEP, opts)
        if not abs(engine - fd) <= 1e-6:
            failures.append(f"{name} d/d{param}: |motor - DF| = {abs(engine - fd):.2e}")

    orders = []
    undefined = 0
    for name, _, series, param in _matrix(ORDER_POINTS):
        for order in observed_order(series, param, opts=opts):
            if math.isnan(order):
                undefined += 1
                continue
            orders.append(order)
            if not 1.8 <= order <= 2.2:
                failures.append(f"{name} d/d{param}: ordem observada {order:.3f}")

    if failures:
        return False, f"{len(failures)} falha(s): " + "; ".join(failures[:5])
    if not orders:
        return False, f"{total} casos; nenhuma ordem observada acima do piso de arredondamento"
    return True, (
        f"{total} casos; {len(orders)} ordens observadas em [{min(orders):.3f}, {max(orders):.3f}]"
        f" ({undefined} abaixo do piso de arredondamento)"
    )


def check_structural_closure() -> Tuple[bool, str]:
    """
    Critério 3: membros com n+1 variáveis e contagem Σ|q| por ocorrência única
    """
    failures = []
    total = 0
    for name in ACCEPTANCE_FUNCTIONS:
        series = build(sample_points(name, 1)[0])
        for param in series.param_names:
            total += 1
            expansion = differentiate(series, param)
            if any(m.n_vars != series.n_vars + 1 for m in expansion.terms):
                failures.append(f"{name} d/d{param}: aridade dos membros")
            occurrences = [series.factors[i] for i in series.occurrences(param)]
            if len(occurrences) == 1:
                expected = sum(abs(q) for q in occurrences[0].coeffs)
                if len(expansion.terms) != expected:
                    failures.append(f"{name} d/d{param}: {len(expansion.terms)} membros, esperado {expected}")

    for name in ("H3", "G3"):
        series = build(sample_points(name, 1)[0])
        if len(differentiate(series, "a").terms) != 3:
            failures.append(f"{name} d/da deveria ter 3 membros")

    if failures:
        return False, "; ".join(failures[:5])
    return True, f"{total} expansões com aridade n+1 e contagens corretas"


def check_symmetry() -> Tuple[bool, str]:
    """
    Critério 4: identidades de troca F1/F2/F3/F4 em 10 pontos cada
    """
    opts = EvalOptions.from_settings()
    failures = []
    worst = 0.0
    for name, param, partner, pairs in SYMMETRY_CASES:
        for spec in sample_points(name, SYMMETRY_POINTS):
            series = build(spec)
            swapped = swap_values(series, param_pairs=pairs, var_pairs=[(0, 1)])
            lhs = evaluate_expansion(differentiate(series, param), opts).value
            rhs = evaluate_expansion(differentiate(swapped, partner), opts).value
            dev = abs(lhs - rhs)
            worst = max(worst, dev)
            if not dev <= 1e-10:
                failures.append(f"{name} {param}↔{partner}: {dev:.2e}")

    if failures:
        return False, f"{len(failures)} falha(s): " + "; ".join(failures[:5])
    return True, f"{len(SYMMETRY_CASES)} identidades × {SYMMETRY_POINTS} pontos, pior desvio {worst:.2e}"


def check_convergence_preservation() -> Tuple[bool, str]:
    """
    Critério 5: converges_at(F) implica converges_at em todos os membros de dF

    Pontos até 0.9 da borda da região conhecida (ou na caixa padrão quando a
    região não é catalogada), com o mesmo teste empírico nos dois lados.
    """
    opts = EvalOptions.from_settings(max_total_order=CONVERGENCE_MAX_ORDER)
    counterexamples = []
    checked = 0
    for name in ACCEPTANCE_FUNCTIONS:
        box = region_box(name, fraction=CONVERGENCE_FRACTION)
        for spec in sample_points(name, CONVERGENCE_POINTS, var_box=box):
            series = build(spec)
            if not converges_at(series, opts):
                continue
            for param in series.param_names:
                checked += 1
                for i, member in enumerate(differentiate(series, param).terms):
                    if not converges_at(member, opts):
                        counterexamples.append(f"{name} d/d{param} membro {i} em x={list(series.x_values)}")

    if counterexamples:
        return False, f"{len(counterexamples)} contraexemplo(s): " + "; ".join(counterexamples[:3])
    return True, f"{checked} derivadas de séries convergentes, nenhum membro divergente"


def check_closed_forms() -> Tuple[bool, str]:
    """
    Critério 6: ₂F₁(1,1;2;x) e derivadas de ₁F₀ contra formas fechadas
    """
    failures = []
    for x in (0.1, 0.3, -0.4, 0.5):
        got = evaluate(build_named("2F1", [1.0, 1.0, 2.0], [x])).value
        want = -math.log1p(-x) / x
        if not abs(got - want) <= 1e-12:
            failures.append(f"₂F₁ em x={x}: {abs(got - want):.2e}")

    for a, x in ((2.0, 0.5), (0.7, 0.3), (1.5, -0.4), (0.3, 0.2)):
        series = build_named("1F0", [a], [x])
        log1mx = math.log1p(-x)
        first = evaluate_expansion(differentiate(series, "a")).value
        want1 = -((1 - x) ** -a) * log1mx
        if not abs(first - want1) <= 1e-10:
            failures.append(f"d/da ₁F₀({a};{x}): {abs(first - want1):.2e}")
        second = evaluate_expansion(differentiate_n(series, {"a": 2})).value
        want2 = (1 - x) ** -a * log1mx ** 2
        if not abs(second - want2) <= 1e-8:
            failures.append(f"d²/da² ₁F₀({a};{x}): {abs(second - want2):.2e}")

    if failures:
        return False, "; ".join(failures)
    return True, "₂F₁ em 4 pontos, d/da e d²/da² de ₁F₀ em 4 pontos"


def check_epsilon_expansion() -> Tuple[bool, str]:
    """
    Critério 7: ₂F₁(1,1;2-ε;0.3) até ε², sinal de k=1 oposto a d/dc
    """
    series = build_named("2F1", [1.0, 1.0, 2.0], [0.3], slopes={"c": -1.0})
    coefficients = [evaluate_expansion(e).value for e in epsilon_expand(series, 2)]
    failures = []
    for k, value in enumerate(coefficients):
        oracle = epsilon_coefficient_oracle(series, k).value
        if not abs(value - oracle) <= 1e-8:
            failures.append(f"k={k}: {abs(value - oracle):.2e}")

    d_dc = evaluate_expansion(differentiate(series, "c")).value
    if not abs(coefficients[1] + d_dc) <= 1e-10:
        failures.append(f"k=1 ({coefficients[1]:.12f}) ≠ -d/dc ({-d_dc:.12f})")

    if failures:
        return False, "; ".join(failures)
    return True, "coeficientes: " + ", ".join(f"{c:.12f}" for c in coefficients)


def _run_cli(argv: List[str]) -> str:
    from cli import main as cli_main

    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        cli_main(argv)
    return buffer.getvalue()


def check_determinism() -> Tuple[bool, str]:
    """
    Critério 8: saídas JSON idênticas em execuções repetidas
    """
    shorthand = '{"catalog": "H3", "params": [0.7, 0.9, 1.3], "vars": [0.08, 0.15]}'
    commands = [
        ["eval", shorthand],
        ["diff", shorthand, "--param", "a", "--emit-series"],
        ["eps", '{"catalog": "2F1", "params": [1, 1, 2], "vars": [0.3], "slopes": {"c": -1}}', "--order", "2"],
        ["verify", shorthand, "--param", "b"],
        ["catalog", "show", "G3"],
    ]
    differing = [" ".join(argv[:1]) for argv in commands if _run_cli(argv) != _run_cli(argv)]
    if differing:
        return False, f"Saída diferente em: {', '.join(differing)}"
    return True, f"{len(commands)} comandos com saída byte a byte idêntica"


def main():
    """Executa todos os checks"""
    print(f"""
{Colors.BOLD}╔══════════════════════════════════════════════════════════════════╗
║                                                                  ║
║       🔍 CRITÉRIOS DE ACEITAÇÃO                                  ║
║       Séries de Horn - Derivadas nos Parâmetros                  ║
║                                                                  ║
╚══════════════════════════════════════════════════════════════════╝{Colors.END}
    """)
    get_logger().set_level("WARNING")

    checks: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
        ("1. Oráculo digamma", check_oracle_equivalence),
        ("2. Diferenças finitas", check_finite_differences),
        ("3. Fechamento estrutural", check_structural_closure),
        ("4. Identidades de troca", check_symmetry),
        ("5. Preservação da convergência", check_convergence_preservation),
        ("6. Formas fechadas", check_closed_forms),
        ("7. Expansão em ε", check_epsilon_expansion),
        ("8. Determinismo", check_determinism),
    ]

    results = []
    for check_name, check_func in checks:
        print(f"{Colors.BOLD}Verificando: {check_name}{Colors.END}")
        started = time.perf_counter()
        try:
            passed, message = check_func()
        except Exception as e:
            passed, message = False, f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - started
        results.append((check_name, passed, message))

        if passed:
            print(f"  {Colors.GREEN}✅ PASSOU{Colors.END} ({elapsed:.1f}s): {message}")
        else:
            print(f"  {Colors.RED}❌ FALHOU{Colors.END} ({elapsed:.1f}s): {message}")
        print()

    print_header("RESUMO")
    total = len(results)
    failed = sum(1 for _, p, _ in results if not p)
    print(f"Total de critérios: {total}")
    print(f"{Colors.GREEN}✅ Passou: {total - failed}{Colors.END}")
    print(f"{Colors.RED}❌ Falhou: {failed}{Colors.END}\n")

    sys.exit(0 if failed == 0 else 1)


if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        print(f"\n\n{Colors.YELLOW}⚠️ Operação cancelada pelo usuário{Colors.END}\n")
        sys.exit(1)
