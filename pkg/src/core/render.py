"""
Plain-text rendering of report documents.

Text output is built from the same documents as the JSON output, so both
formats carry identical numbers. Nothing here depends on time or on
dictionary iteration beyond the documents' own ordering.
"""

from typing import Dict, List

from .base_audit import AuditResult
from .p1_bundles import BStringRep, canonical_matrices, is_equivariantly_trivial, to_splitting
from .root_system import Root, RootSystem
from .schema import AlphaEntry, AuditDocument, ReportDocument
from .splitting_type import SplittingType

RULE_WIDTH = 78


def _rule(char: str = "=") -> str:
    return char * RULE_WIDTH


def _splitting_text(data: Dict[str, int]) -> str:
    return SplittingType(summands={int(d): m for d, m in data.items()}).format()


def _table(headers: List[str], rows: List[List[str]], indent: str = "  ") -> List[str]:
    """Left-aligned columns sized to their widest cell."""
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]

    def line(cells: List[str]) -> str:
        return indent + "  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()

    lines = [line(headers), indent + "-" * (sum(widths) + 2 * (len(widths) - 1))]
    lines.extend(line(row) for row in rows)
    return lines


def _alpha_lines(entry: AlphaEntry) -> List[str]:
    alpha = Root(tuple(entry.alpha))
    lines = [f"alpha = {alpha}  {entry.alpha}"]
    rows = []
    for string in entry.strings:
        nodes = ", ".join(str(Root(tuple(node.root))) for node in string.nodes)
        weights = ", ".join(str(node.weight) for node in string.nodes)
        rows.append([nodes, weights, str(string.n_s), str(string.d_s)])
    lines.extend(_table(["string", "weights", "n_s", "d_s"], rows, indent="    "))
    slot = "none" if entry.alpha_slot_max_degree is None else str(entry.alpha_slot_max_degree)
    lines.extend([
        f"  tangent:              {_splitting_text(entry.tangent)}",
        f"  curvature:            {_splitting_text(entry.curvature)}",
        f"  h0(curvature):        {entry.h0}",
        f"  alpha slot max deg:   {slot}",
        f"  contraction vanishes: {'yes' if entry.contraction_vanishes else 'NO'}",
    ])
    return lines


def render_report(doc: ReportDocument) -> str:
    crossed = ",".join(str(i) for i in doc.crossed)
    lines = [
        _rule(),
        f"MODEL: {doc.model} ({doc.lie_type}/{{{crossed}}})",
        _rule(),
        f"dim g = {doc.dim_g}, dim g/p = {doc.dim_gp}, circles reported: {len(doc.alphas)}",
    ]
    for note in doc.notes:
        lines.append(f"note: {note}")
    for entry in doc.alphas:
        lines.append("")
        lines.extend(_alpha_lines(entry))
    lines.extend(["", _rule("-"), f"verdict: {'true' if doc.verdict else 'false'}"])
    if doc.conclusion:
        lines.append(doc.conclusion)
    return "\n".join(lines) + "\n"


def _audit_row(result: AuditResult) -> List[str]:
    indices = ",".join(f"{k}={v}" for k, v in result.indices.items())
    computed = "-" if result.computed_value is None else str(result.computed_value)
    return [
        result.formula,
        indices,
        result.expression,
        str(result.paper_value),
        computed,
        result.match.value,
    ]


def render_audit(doc: AuditDocument) -> str:
    crossed = ",".join(str(i) for i in doc.crossed)
    rows = [_audit_row(r) for r in doc.results]
    lines = [
        _rule(),
        f"AUDIT: {doc.section} - {doc.model} ({doc.lie_type}/{{{crossed}}})",
        _rule(),
    ]
    lines.extend(_table(["formula", "indices", "closed form", "published", "computed", "match"], rows))
    notes = [f"  {r.formula} [{','.join(f'{k}={v}' for k, v in r.indices.items())}]: {r.note}"
             for r in doc.results if r.note]
    if notes:
        lines.extend(["", "Notes:", *notes])
    summary = ", ".join(f"{status} {count}" for status, count in doc.summary.items())
    lines.extend(["", f"Summary: {summary}"])
    return "\n".join(lines) + "\n"


def render_roots(rs: RootSystem) -> str:
    lines = [
        _rule(),
        f"ROOT SYSTEM: {rs.lie_type}",
        _rule(),
        f"dim g = {rs.dimension}, positive roots = {len(rs.positive_roots)}, symmetrizer = {list(rs.symmetrizer)}",
        "",
        "Cartan matrix (C[i][j] = <a_j, a_i^vee>):",
    ]
    for row in rs.cartan_matrix:
        lines.append("  " + " ".join(f"{c:>3}" for c in row))
    lines.append("")
    rows = [[str(r), str(list(r.coefficients)), str(r.height)] for r in rs.positive_roots]
    lines.extend(_table(["root", "coefficients", "height"], rows))
    for note in rs.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def render_p1(rep: BStringRep, extra: List[str]) -> str:
    h, x = canonical_matrices(rep)
    lines = [
        f"{rep}: weights {rep.weights}",
        f"  bundle:        {to_splitting(rep).format()}",
        f"  trivial (k=n): {'yes' if is_equivariantly_trivial(rep) else 'no'}",
        f"  rho(H) diagonal:      {[h[i, i] for i in range(rep.node_count)]}",
        f"  rho(X) superdiagonal: {[x[i, i + 1] for i in range(rep.node_count - 1)]}",
    ]
    lines.extend(f"  {line}" for line in extra)
    return "\n".join(lines) + "\n"
