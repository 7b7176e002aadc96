"""
Command reports and their JSON and text renderings.
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List

from src.utils.constants import (BANNER_GROUP_ORDER, BANNER_SIGNATURE_DIMENSION,
                                 BANNER_SYMMETRY_COUNT)


@dataclass
class Report:
    """Outcome of one command.

    Args:
        command: Subcommand name
        input: Echo of the form, degree and options
        result: Command-specific payload of JSON-native values
        diagnostics: Warnings such as probe retries
    """

    command: str
    input: Dict[str, Any]
    result: Dict[str, Any] = field(default_factory=dict)
    diagnostics: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    @staticmethod
    def from_json(data: dict) -> "Report":
        return Report(data["command"], dict(data["input"]), dict(data.get("result", {})),
                      list(data.get("diagnostics", [])))


def emit(report: Report) -> str:
    return json.dumps(report.to_json(), indent=2, sort_keys=True, ensure_ascii=False)


def parse(text: str) -> Report:
    return Report.from_json(json.loads(text))


def emit_error(command: str, exc: Exception) -> str:
    return json.dumps({"command": command, "error": type(exc).__name__, "message": str(exc)},
                      ensure_ascii=False)


# Text rendering

def _render_binary_symm(result: Dict[str, Any]) -> List[str]:
    lines = []
    if result.get("banner"):
        lines.append(result["banner"])
    if "projective_index" not in result:
        return lines
    lines.append(BANNER_GROUP_ORDER.format(result["projective_index"]))
    full = result["full_index"]
    lines.append(f"full index={'infinite' if full is None else full}")
    for text in result.get("symmetries") or []:
        lines.append(f"  {text}")
    return lines


def _render_binary_matrices(result: Dict[str, Any]) -> List[str]:
    lines = []
    for entry in result["matrices"]:
        (a, b), (c, d) = entry["matrix_text"]
        lifts = entry["multiplicity"]
        lines.append(f"{entry['mobius_text']}, mu={entry['mu_root_text']}, "
                     f"[[{a}, {b}], [{c}, {d}]], l={'infinite' if lifts is None else lifts}")
    return lines


def _render_ternary(result: Dict[str, Any]) -> List[str]:
    lines = []
    if "invariants" in result:
        for name, value in result["invariants"].items():
            lines.append(f"{name} = {value}")
    if "generators" in result:
        lines.append("[" + ", ".join(result["generators"]) + "]")
        lines.append(BANNER_SIGNATURE_DIMENSION.format(result["dimension"]))
    if "count" in result:
        lines.append(BANNER_SYMMETRY_COUNT.format(result["count"]))
        for point in result.get("images", []):
            lines.append("  (" + ", ".join(point) + ")")
    return lines


def _render_sum_of_powers(result: Dict[str, Any]) -> List[str]:
    lines = []
    for group in ("relations", "constants", "closed_forms"):
        for label, holds in result[group].items():
            lines.append(f"{label}: {'holds' if holds else 'FAILS'}")
    return lines


_RENDERERS = {
    "binary-symm": _render_binary_symm,
    "binary-matrices": _render_binary_matrices,
    "ternary": _render_ternary,
    "check-sum-of-powers": _render_sum_of_powers,
}


def render_pretty(report: Report) -> str:
    """Plain text with the classification banners verbatim."""
    lines = _RENDERERS[report.command](report.result)
    lines.extend(f"warning: {note}" for note in report.diagnostics)
    return "\n".join(lines)
