"""
Root circle splitting types - command-line front end.

Usage:
    python circles.py report --model projective:2 --all-alphas --format json
    python circles.py report --type A3 --cross 2 --alpha=0,-1,0
    python circles.py flatness --type D4 --cross 4
    python circles.py audit --model grassmannian:2,4
    python circles.py audit --model spinor:5 --indices 3,1
    python circles.py p1 --top-weight 1 --nodes 1 --tensor 2,3
    python circles.py roots --type B2
    python circles.py sweep --max-rank 4 --csv output/sweep.csv
    python circles.py schema --document audit

Exit codes: 0 on success (audit mismatches are data), 1 when a sweep finds
violations, 2 on bad input.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, Tuple

import pandas as pd
from pydantic import ValidationError

import src.audits  # noqa: F401  (registers the audits)
from src.audits import get_audit
from src.core.config import OutputFormat, Settings, get_config_manager
from src.core.errors import ModelSpecError
from src.core.models import resolve, spec_alpha
from src.core.p1_bundles import (
    BStringRep,
    invariant_subspace,
    is_equivariantly_trivial,
    quotient,
    tensor_reps,
    to_splitting,
)
from src.core.parabolic import Parabolic
from src.core.registry import ModelSpec, parse_int_list, parse_model_spec
from src.core.render import render_audit, render_p1, render_report, render_roots
from src.core.root_system import Family, LieType, build
from src.core.schema import (
    AuditDocument,
    ReportDocument,
    audit_document,
    flatness_document,
    report_document,
)
from src.core.splitting import curvature_report, flatness_report
from src.core.sweep import run_sweep

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


# === Helpers ===

def _emit(text: str, out: Optional[str]) -> None:
    """Write to --out if given, stdout otherwise."""
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


def _dump_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _output_format(args, settings: Settings) -> OutputFormat:
    return OutputFormat(args.format) if args.format else settings.report.default_format


def _model_spec(args, settings: Settings) -> ModelSpec:
    """ModelSpec from --model (presets allowed) or --type/--cross."""
    if args.model and args.type:
        raise ModelSpecError("Give either --model or --type/--cross, not both")
    if args.model:
        return parse_model_spec(settings.expand_preset(args.model))
    if args.type:
        crossed = tuple(sorted(set(parse_int_list(args.cross or "", "crossed index"))))
        return ModelSpec(lie_type=LieType.parse(args.type), crossed=crossed)
    raise ModelSpecError("No model given: use --model name:params or --type T --cross i,j")


def _resolve(args, settings: Settings) -> Tuple[ModelSpec, Parabolic, str]:
    spec = _model_spec(args, settings)
    label = spec.model_copy(update={"alpha": None}).format()
    return spec, resolve(spec), label


def _parallel(args, settings: Settings) -> bool:
    return bool(getattr(args, "parallel", False) or settings.report.parallel)


# === Commands ===

def cmd_report(args, settings: Settings) -> int:
    """Tangent and curvature splitting for one alpha or all of them."""
    spec, parabolic, label = _resolve(args, settings)
    if args.alpha is not None:
        spec = spec.model_copy(update={"alpha": parse_int_list(args.alpha, "alpha coefficient")})
    alpha = spec_alpha(parabolic, spec)

    if args.all_alphas:
        flatness = flatness_report(parabolic, _parallel(args, settings), settings.report.max_workers)
        doc = flatness_document(label, flatness)
    elif alpha is not None:
        report = curvature_report(parabolic, alpha)
        doc = report_document(label, parabolic, [report], report.contraction_vanishes)
    else:
        listing = ", ".join(str(list(r.coefficients)) for r in parabolic.omitted_roots)
        raise ModelSpecError(f"report needs --alpha or --all-alphas; omitted roots are: {listing}")

    _write_document(doc, render_report, args, settings)
    return 0


def cmd_flatness(args, settings: Settings) -> int:
    """Whole-parabolic flatness certificate."""
    _, parabolic, label = _resolve(args, settings)
    flatness = flatness_report(parabolic, _parallel(args, settings), settings.report.max_workers)
    _write_document(flatness_document(label, flatness), render_report, args, settings)
    return 0


def cmd_audit(args, settings: Settings) -> int:
    """Closed-form formulas against computed splittings."""
    spec, _, label = _resolve(args, settings)
    if not spec.is_named:
        raise ModelSpecError(f"audit needs a named model (e.g. grassmannian:2,4), got '{label}'")
    indices = None
    if args.indices:
        values = parse_int_list(args.indices, "index")
        if len(values) != 2:
            raise ModelSpecError(f"--indices takes i,j, got '{args.indices}'")
        indices = values
    audit = get_audit(spec.name, spec.parameters)
    results = audit.run(indices)
    doc = audit_document(label, audit, results)

    if args.csv:
        rows = [r.model_dump(mode='json') for r in results]
        pd.DataFrame(rows).to_csv(args.csv, index=False)
        logger.info(f"Saved audit table to {args.csv}")

    _write_document(doc, render_audit, args, settings)
    return 0


def cmd_p1(args, settings: Settings) -> int:
    """String calculus of B-representations on P^1."""
    rep = BStringRep(top_weight=args.top_weight, node_count=args.nodes)
    data = {
        "top_weight": rep.top_weight,
        "node_count": rep.node_count,
        "weights": rep.weights,
        "splitting": to_splitting(rep).to_json_dict(),
        "equivariantly_trivial": is_equivariantly_trivial(rep),
    }
    extra = []
    if args.tensor:
        values = parse_int_list(args.tensor, "tensor factor")
        if len(values) != 2:
            raise ModelSpecError(f"--tensor takes k,m, got '{args.tensor}'")
        other = BStringRep(top_weight=values[0], node_count=values[1])
        product = tensor_reps(rep, other)
        data["tensor"] = product.to_json_dict()
        extra.append(f"(x) {other}: {product.format()}")
    if args.sub is not None:
        sub = invariant_subspace(rep, args.sub)
        data["subspace"] = {"top_weight": sub.top_weight, "node_count": sub.node_count,
                            "splitting": to_splitting(sub).to_json_dict()}
        extra.append(f"subspace of {args.sub} top nodes: {sub}, bundle {to_splitting(sub).format()}")
    if args.quotient is not None:
        quot = quotient(rep, args.quotient)
        data["quotient"] = {"top_weight": quot.top_weight, "node_count": quot.node_count,
                            "splitting": to_splitting(quot).to_json_dict()}
        extra.append(f"quotient by {args.quotient} top nodes: {quot}, bundle {to_splitting(quot).format()}")

    if _output_format(args, settings) == OutputFormat.JSON:
        _emit(_dump_json(data), args.out)
    else:
        _emit(render_p1(rep, extra), args.out)
    return 0


def cmd_roots(args, settings: Settings) -> int:
    """Dump a root system."""
    if args.type:
        rs = build(LieType.parse(args.type))
    else:
        _, parabolic, _ = _resolve(args, settings)
        rs = parabolic.root_system
    if _output_format(args, settings) == OutputFormat.JSON:
        data = {
            "lie_type": str(rs.lie_type),
            "dim_g": rs.dimension,
            "cartan_matrix": [list(row) for row in rs.cartan_matrix],
            "symmetrizer": list(rs.symmetrizer),
            "positive_roots": [list(r.coefficients) for r in rs.positive_roots],
            "notes": rs.notes,
        }
        _emit(_dump_json(data), args.out)
    else:
        _emit(render_roots(rs), args.out)
    return 0


def cmd_sweep(args, settings: Settings) -> int:
    """Exhaustive property sweep; exit 1 if anything is violated."""
    max_rank = args.max_rank or settings.sweep.max_rank
    families = settings.sweep.selected_families
    if args.families:
        families = [Family(f.strip().upper()) for f in args.families.split(",")]
    progress = settings.report.progress and not args.no_progress
    result = run_sweep(max_rank, families, progress=progress)
    if args.csv:
        result.export_csv(args.csv)

    summary = result.summary()
    if _output_format(args, settings) == OutputFormat.JSON:
        text = _dump_json({
            "max_rank": max_rank,
            "families": [f.value for f in families],
            "cases": result.case_count,
            "passed": summary,
            "violations": result.violations,
        })
    else:
        lines = [f"Sweep up to rank {max_rank}: {result.case_count} (P, alpha) cases"]
        lines.extend(f"  {check:<20} {passed}/{result.case_count}" for check, passed in summary.items())
        lines.append(f"Violations: {len(result.violations)}")
        lines.extend(f"  {v}" for v in result.violations)
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if result.ok else 1


def cmd_schema(args, settings: Settings) -> int:
    """Print the JSON schema of a report document."""
    model = AuditDocument if args.document == "audit" else ReportDocument
    _emit(_dump_json(model.model_json_schema()), args.out)
    return 0


def _write_document(doc, renderer, args, settings: Settings) -> None:
    if _output_format(args, settings) == OutputFormat.JSON:
        _emit(_dump_json(doc.model_dump(mode='json')), args.out)
    else:
        _emit(renderer(doc), args.out)


# === Parser ===

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circles.py",
        description="Splitting types of tangent and curvature bundles on root circles of G/P",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    subparsers = parser.add_subparsers(dest='command', help='Command to run')

    # Common arguments
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=[f.value for f in OutputFormat],
                        help='Output format (default from settings: text)')
    common.add_argument('--out', '-o', help='Write output to this file instead of stdout')
    common.add_argument('--verbose', '-v', action='store_true', help='Debug logging on stderr')
    common.add_argument('--config', help='Config directory (default: config/)')

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument('--type', '-t', help='Lie type, e.g. A3, B2, E8')
    model.add_argument('--cross', '-c', help='Crossed simple roots, 1-based Bourbaki, e.g. 1,3')
    model.add_argument('--model', '-m',
                       help='Named model or preset, e.g. projective:3, grassmannian:2,4, A3/2')

    report = subparsers.add_parser('report', parents=[common, model],
                                   help='Tangent and curvature splitting along circles')
    report.add_argument('--alpha', '-a', help='Omitted root as simple-root coefficients, e.g. --alpha=-1,0,0')
    report.add_argument('--all-alphas', action='store_true', help='Report every omitted root')
    report.add_argument('--parallel', action='store_true', help='Compute circles on a thread pool')
    report.set_defaults(func=cmd_report)

    flatness = subparsers.add_parser('flatness', parents=[common, model],
                                     help='Flatness certificate for a parabolic')
    flatness.add_argument('--parallel', action='store_true', help='Compute circles on a thread pool')
    flatness.set_defaults(func=cmd_flatness)

    audit = subparsers.add_parser('audit', parents=[common, model],
                                  help='Compare closed-form ranks with computed splittings')
    audit.add_argument('--indices', '-i', help='Single matrix entry i,j (default: all)')
    audit.add_argument('--csv', help='Also save the audit table as CSV')
    audit.set_defaults(func=cmd_audit)

    p1 = subparsers.add_parser('p1', parents=[common], help='String representations on P^1')
    p1.add_argument('--top-weight', '-k', type=int, required=True, help='Top weight k')
    p1.add_argument('--nodes', '-n', type=int, required=True, help='Number of nodes m')
    p1.add_argument('--tensor', help='Tensor with another string k2,m2')
    which = p1.add_mutually_exclusive_group()
    which.add_argument('--sub', type=int, help='B-invariant subspace of the top `sub` nodes')
    which.add_argument('--quotient', type=int, help='Quotient by the top `quotient` nodes')
    p1.set_defaults(func=cmd_p1)

    roots = subparsers.add_parser('roots', parents=[common, model], help='Dump a root system')
    roots.set_defaults(func=cmd_roots)

    sweep = subparsers.add_parser('sweep', parents=[common], help='Exhaustive property sweep')
    sweep.add_argument('--max-rank', type=int, help='Largest rank (default from settings: 4)')
    sweep.add_argument('--families', help='Comma-separated families, e.g. A,B,G')
    sweep.add_argument('--csv', help='Save per-case rows as CSV')
    sweep.add_argument('--no-progress', action='store_true', help='Hide the progress bar')
    sweep.set_defaults(func=cmd_sweep)

    schema = subparsers.add_parser('schema', parents=[common], help='Print the JSON schema of reports')
    schema.add_argument('--document', choices=['report', 'audit'], default='report')
    schema.set_defaults(func=cmd_schema)

    return parser


def _error_message(error: ValueError) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(err['msg'] for err in error.errors())
    return str(error)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Exit code: 0 success, 1 sweep violations, 2 bad input
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if not args.command:
        parser.print_help(sys.stderr)
        return 2

    try:
        settings = get_config_manager(args.config).settings
    except ValueError as e:
        print(f"error: bad settings: {_error_message(e)}", file=sys.stderr)
        return 2

    level = logging.DEBUG if args.verbose else getattr(logging, settings.logging.level)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)

    try:
        return args.func(args, settings)
    except ValueError as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"error: {_error_message(e)}", file=sys.stderr)
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
