"""
Interface de Linha de Comando

Subcomandos: eval, diff, eps, catalog, verify. Saída em JSON no stdout;
diagnósticos (loguru) no stderr.

Códigos de saída:
    0  sucesso
    2  entrada malformada, série inválida ou configuração inconsistente
    3  falha numérica (polo, verificação reprovada, não convergência com --strict)
"""
import argparse
import json
import sys
from typing import Any, Optional, Union

from loguru import logger
from pydantic import ValidationError

from config.catalog_config import get_catalog_names, get_entries_by_family, get_entry
from config.settings import validate_minimum_config
from core.catalog import build, describe, example_spec
from core.derivatives.engine import differentiate_n
from core.derivatives.epsilon import epsilon_expand
from core.errors import (
    ArityError,
    HornError,
    NotConvergedError,
    PoleError,
    SeriesValidationError,
    SpecFormatError,
    UnknownParameterError,
)
from core.evaluator import evaluate, evaluate_expansion, require_converged
from core.oracle import VerifyTolerances, verify
from core.schemas import DerivativeExpansion, EvalOptions, HornSeries, with_slopes
from utils.json_parser import load_document, read_spec_argument
from utils.logger import get_logger, log_evaluation, log_step_error, log_validation
from utils.validators import validate

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


# ============================================
# ARGUMENTOS
# ============================================

def _add_eval_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("spec", help="Caminho do JSON, '-' para stdin ou JSON inline")
    parser.add_argument("--max-order", type=int, default=None, help="Maior grau total somado")
    parser.add_argument("--abs-tol", type=float, default=None)
    parser.add_argument("--rel-tol", type=float, default=None)
    parser.add_argument("--min-shells", type=int, default=None)
    parser.add_argument("--strict", action="store_true", help="Não convergência vira código 3")
    parser.add_argument("--pretty", action="store_true", help="JSON indentado")


def _parse_args(argv: Optional[list[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="horn",
        description="Séries de Horn: avaliação, derivadas nos parâmetros, expansão em ε e verificação.",
    )
    parser.add_argument("--log-level", default=None, help="Nível de log no stderr (DEBUG, INFO, ...)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="Avalia uma série ou expansão")
    _add_eval_options(p_eval)

    p_diff = sub.add_parser("diff", help="Deriva em um ou mais parâmetros")
    _add_eval_options(p_diff)
    p_diff.add_argument("--param", action="append", required=True, help="Parâmetro (repetível)")
    p_diff.add_argument("--order", type=int, default=1, help="Ordem em cada parâmetro")
    p_diff.add_argument("--emit-series", action="store_true", help="Inclui a expansão completa")

    p_eps = sub.add_parser("eps", help="Coeficientes da expansão em ε")
    _add_eval_options(p_eps)
    p_eps.add_argument("--order", type=int, required=True, help="Maior potência K")
    p_eps.add_argument("--slope", action="append", default=[], metavar="NOME=VALOR")
    p_eps.add_argument("--emit-series", action="store_true")

    p_cat = sub.add_parser("catalog", help="Lista ou mostra funções do catálogo")
    cat_sub = p_cat.add_subparsers(dest="catalog_command", required=True)
    p_list = cat_sub.add_parser("list")
    p_list.add_argument("--family", default=None, help="Filtra por família (pFq, appell, horn...)")
    p_list.add_argument("--pretty", action="store_true")
    p_show = cat_sub.add_parser("show")
    p_show.add_argument("name")
    p_show.add_argument("--params", default=None, help="Valores separados por vírgula")
    p_show.add_argument("--vars", default=None, help="Valores separados por vírgula")
    p_show.add_argument("--pretty", action="store_true")

    p_verify = sub.add_parser("verify", help="Motor × oráculo digamma × diferenças finitas")
    _add_eval_options(p_verify)
    p_verify.add_argument("--param", required=True)
    p_verify.add_argument("--step", type=float, default=None, help="Passo h das diferenças centrais")

    return parser.parse_args(argv)


def _options(args: argparse.Namespace) -> EvalOptions:
    return EvalOptions.from_settings(
        max_total_order=args.max_order,
        abs_tol=args.abs_tol,
        rel_tol=args.rel_tol,
        min_shells=args.min_shells,
    )


def _parse_floats(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _parse_slopes(items: list[str]) -> dict[str, float]:
    slopes = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise SpecFormatError(f"--slope espera NOME=VALOR, recebido '{item}'")
        slopes[name.strip()] = float(value)
    return slopes


# ============================================
# SAÍDA
# ============================================

def _emit(payload: Any, pretty: bool) -> None:
    print(json.dumps(payload, indent=2 if pretty else None, ensure_ascii=False))


def _load(args: argparse.Namespace) -> Union[HornSeries, DerivativeExpansion]:
    document = load_document(read_spec_argument(args.spec))
    members = document.terms if isinstance(document, DerivativeExpansion) else (document,)
    violations = [v for m in members for v in validate(m)]
    log_validation(args.command, not violations, f"{len(violations)} violação(ões)" if violations else "")
    if violations:
        raise SeriesValidationError(violations)
    return document


def _require_series(document: Union[HornSeries, DerivativeExpansion]) -> HornSeries:
    if not isinstance(document, HornSeries):
        raise SpecFormatError("Este comando exige uma série (horn-series/1 ou forma abreviada)")
    return document


def _check(result, args: argparse.Namespace) -> None:
    if args.strict:
        require_converged(result)


# ============================================
# COMANDOS
# ============================================

def cmd_eval(args: argparse.Namespace) -> int:
    document = _load(args)
    opts = _options(args)
    if isinstance(document, DerivativeExpansion):
        result = evaluate_expansion(document, opts)
    else:
        result = evaluate(document, opts)
    log_evaluation("eval", result)
    _emit(result.model_dump(mode="json"), args.pretty)
    _check(result, args)
    return EXIT_OK


def cmd_diff(args: argparse.Namespace) -> int:
    series = _require_series(_load(args))
    opts = _options(args)
    orders = {name: args.order for name in args.param}
    expansion = differentiate_n(series, orders)
    result = evaluate_expansion(expansion, opts)
    payload = {
        "orders": orders,
        "member_count": len(expansion.terms),
        "result": result.model_dump(mode="json"),
    }
    if args.emit_series:
        payload["expansion"] = expansion.model_dump(mode="json", by_alias=True)
    _emit(payload, args.pretty)
    _check(result, args)
    return EXIT_OK


def cmd_eps(args: argparse.Namespace) -> int:
    series = _require_series(_load(args))
    if args.slope:
        series = with_slopes(series, _parse_slopes(args.slope))
    opts = _options(args)
    coefficients = []
    results = []
    for k, expansion in enumerate(epsilon_expand(series, args.order)):
        result = evaluate_expansion(expansion, opts)
        results.append(result)
        entry = {"k": k, "member_count": len(expansion.terms), "result": result.model_dump(mode="json")}
        if args.emit_series:
            entry["expansion"] = expansion.model_dump(mode="json", by_alias=True)
        coefficients.append(entry)
    _emit({"order": args.order, "coefficients": coefficients}, args.pretty)
    for result in results:
        _check(result, args)
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.catalog_command == "list":
        if args.family:
            entries = get_entries_by_family(args.family)
        else:
            entries = [get_entry(name) for name in get_catalog_names()]
        functions = [
            {
                "name": e.name,
                "display_name": e.display_name,
                "family": e.family,
                "n_vars": e.n_vars,
                "description": e.description,
            }
            for e in entries
        ]
        _emit({"functions": functions}, args.pretty)
        return EXIT_OK

    info = describe(args.name)
    if args.params is not None or args.vars is not None:
        update = {}
        if args.params is not None:
            update["params"] = _parse_floats(args.params)
        if args.vars is not None:
            update["vars"] = _parse_floats(args.vars)
        spec = example_spec(args.name).model_copy(update=update)
        info["example"] = build(spec).model_dump(mode="json", by_alias=True)
    _emit(info, args.pretty)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    series = _require_series(_load(args))
    tolerances = VerifyTolerances.from_settings()
    if args.step is not None:
        tolerances = tolerances.model_copy(update={"step": args.step})
    report = verify(series, args.param, tolerances, _options(args))
    _emit(report.model_dump(mode="json"), args.pretty)
    if report.status == "fail":
        return EXIT_NUMERICAL
    if report.status == "not_converged" and args.strict:
        return EXIT_NUMERICAL
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "diff": cmd_diff,
    "eps": cmd_eps,
    "catalog": cmd_catalog,
    "verify": cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    """
    Ponto de entrada da CLI

    Args:
        argv: Argumentos (default: sys.argv[1:])

    Returns:
        Código de saída (0, 2 ou 3)
    """
    args = _parse_args(argv)
    log_manager = get_logger()
    if args.log_level:
        log_manager.set_level(args.log_level)

    ok, problems = validate_minimum_config()
    if not ok:
        for problem in problems:
            logger.error(f"❌ Configuração: {problem}")
        return EXIT_INVALID

    try:
        return COMMANDS[args.command](args)
    except (PoleError, NotConvergedError) as e:
        log_step_error(args.command, e)
        return EXIT_NUMERICAL
    except SeriesValidationError as e:
        for v in e.violations:
            logger.error(f"✗ {v.code} [{v.location}]: {v.message}")
        return EXIT_INVALID
    except (SpecFormatError, ArityError, UnknownParameterError) as e:
        log_step_error(args.command, e)
        return EXIT_INVALID
    except ValidationError as e:
        logger.error(f"❌ Opções inválidas: {e.errors()[0]['msg']}")
        return EXIT_INVALID
    except (LookupError, ValueError) as e:
        log_step_error(args.command, e)
        return EXIT_INVALID
    except HornError as e:
        log_step_error(args.command, e)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
