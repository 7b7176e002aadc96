"""
Command line front end for formsym.
"""

import argparse
import sys
from fractions import Fraction
from logging import getLogger
from typing import Callable, Dict, List, Optional, Sequence

from src.app.reports import Report, emit, emit_error, render_pretty
from src.core.binary_forms import (BinaryForm, classify, exceptional_weight_filter,
                                   full_index, matrix_symmetry, solve_or_count,
                                   solve_symmetries)
from src.core.config import SolverConfig
from src.core.errors import FormSymError
from src.core.mobius import Mobius, real_symmetries, to_linear_fractional
from src.core.parser import parse_polynomial, parse_rational_function
from src.core.signature import (count_symmetries, probe_images,
                                sum_of_powers_conditions, ternary_signature)
from src.core.ternary_forms import TernaryForm, absolute_invariants
from src.utils.constants import (BINARY_VARIABLE, EXIT_OK, EXIT_USAGE,
                                 INVARIANT_NAMES, LOGGER_NAME, TERNARY_MODES,
                                 TERNARY_VARIABLES, THIRD_ORDER_NAMES, VERSION)
from src.utils.log_setup import configure_logging

logger = getLogger(LOGGER_NAME + ".cli")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", dest="pretty", action="store_false", default=False,
                        help="JSON report (default)")
    output.add_argument("--pretty", dest="pretty", action="store_true", default=False,
                        help="plain text report")
    common.add_argument("--max-basis", type=int, help="cap on Groebner basis size")
    common.add_argument("--max-degree", type=int, help="cap on basis element degree")
    common.add_argument("--precision-bits", type=int, help="certified precision, at least 128")
    common.add_argument("--config", help="settings file, overrides FORMSYM_CONFIG")
    common.add_argument("--log-level", help="formsym logger level")

    parser = _ArgumentParser(prog="formsym", description="Symmetries of binary and ternary forms")
    parser.add_argument("--version", action="version", version=f"formsym {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    symm = sub.add_parser("binary-symm", parents=[common], help="classify and list Mobius symmetries")
    symm.add_argument("--poly", required=True, help="inhomogeneous form in p")
    symm.add_argument("--degree", type=int, required=True)
    symm.add_argument("--weight", type=int, default=0)
    symm.add_argument("--real", action="store_true", help="real symmetries only")

    matrices = sub.add_parser("binary-matrices", parents=[common], help="lift symmetries to matrices")
    matrices.add_argument("--poly", required=True)
    matrices.add_argument("--degree", type=int, required=True)
    matrices.add_argument("--weight", type=int, default=0)
    matrices.add_argument("--real", action="store_true")
    selector = matrices.add_mutually_exclusive_group(required=True)
    selector.add_argument("--select", help="comma-separated indices into the symmetry list, or 'all'")
    selector.add_argument("--map", action="append", dest="maps",
                          help="explicit linear-fractional map such as 'i*(p+1)/(p-1)'")

    ternary = sub.add_parser("ternary", parents=[common], help="invariants, signature or symmetry count")
    ternary.add_argument("--poly", required=True, help="inhomogeneous form in p, q")
    ternary.add_argument("--degree", type=int, required=True)
    ternary.add_argument("--mode", choices=TERNARY_MODES, default="invariants")
    ternary.add_argument("--all-invariants", action="store_true", help="use I1..I8 instead of I1..I3")
    ternary.add_argument("--images", action="store_true", help="also list the images of the probe point")

    powers = sub.add_parser("check-sum-of-powers", parents=[common],
                            help="check the relations of p^n + q^n + 1")
    powers.add_argument("--degree", type=int, required=True)
    return parser


def _selection(text: str, size: int) -> List[int]:
    if text.strip() == "all":
        return list(range(size))
    indices = [int(piece) for piece in text.split(",") if piece.strip()]
    for k in indices:
        if not 0 <= k < size:
            raise ValueError(f"symmetry index {k} outside 0..{size - 1}")
    return indices


class FormSymApp:
    """Main application class for formsym"""

    def __init__(self, argv: Optional[Sequence[str]] = None) -> None:
        """Parse arguments and load the configuration.

        Args:
            argv: Command line without the program name
        """
        self.args = build_parser().parse_args(argv)
        self.config = SolverConfig(self.args.config)
        self.config.override(max_basis_size=self.args.max_basis, max_degree=self.args.max_degree,
                             precision_bits=self.args.precision_bits, log_level=self.args.log_level)
        configure_logging(self.config.get("log_level"))
        self.handlers: Dict[str, Callable[[], Report]] = {
            "binary-symm": self.binary_symm,
            "binary-matrices": self.binary_matrices,
            "ternary": self.ternary,
            "check-sum-of-powers": self.check_sum_of_powers,
        }

    # Commands

    def _binary_form(self) -> BinaryForm:
        f = parse_polynomial(self.args.poly, (BINARY_VARIABLE,))
        return BinaryForm(f, self.args.degree, getattr(self.args, "weight", 0))

    def _binary_input(self) -> Dict:
        return {"poly": self.args.poly, "degree": self.args.degree,
                "weight": getattr(self.args, "weight", 0), "real": self.args.real}

    def _filtered(self, form: BinaryForm, symmetries: List[Mobius]) -> List[Mobius]:
        if form.is_exceptional_weight:
            symmetries = exceptional_weight_filter(form, symmetries)
        if self.args.real:
            symmetries = real_symmetries(symmetries)
        return symmetries

    def binary_symm(self) -> Report:
        form = self._binary_form()
        report = Report("binary-symm", self._binary_input())
        kind = classify(form)
        report.result["classification"] = kind.tag
        report.result["maximal_class"] = kind.maximal_class
        report.result["banner"] = kind.banner()
        if not kind.is_finite:
            return report
        found = solve_or_count(form, self.config.precision_bits, self.config.limits(),
                               [Fraction(p) for p in self.config.binary_probes()],
                               int(self.config.get("stable_probe_count")))
        report.diagnostics.extend(found["diagnostics"])
        count = found["projective_index"]
        symmetries = found["symmetries"]
        if symmetries is not None:
            symmetries = self._filtered(form, symmetries)
            count = len(symmetries)
        elif form.is_exceptional_weight or self.args.real:
            report.diagnostics.append("count is over all complex weight-0 symmetries")
        mode = "real" if self.args.real else "complex"
        report.result["projective_index"] = count
        report.result["full_index"] = full_index(count, form, mode)
        if report.result["full_index"] is None:
            report.diagnostics.append(f"every scalar multiple of a matrix symmetry is one at weight {form.weight}")
        report.result["symmetries"] = None if symmetries is None else [str(m) for m in symmetries]
        report.result["symmetries_exact"] = None if symmetries is None else [m.to_json() for m in symmetries]
        return report

    def binary_matrices(self) -> Report:
        form = self._binary_form()
        report = Report("binary-matrices", {**self._binary_input(),
                                            "select": self.args.select, "maps": self.args.maps})
        if self.args.maps:
            chosen = [to_linear_fractional(parse_rational_function(text, (BINARY_VARIABLE,)))
                      for text in self.args.maps]
        else:
            symmetries = self._filtered(form, solve_symmetries(form, self.config.precision_bits,
                                                               self.config.limits()))
            chosen = [symmetries[k] for k in _selection(self.args.select, len(symmetries))]
        mode = "real" if self.args.real else "complex"
        entries = []
        for m in chosen:
            lifted = matrix_symmetry(form, m, self.config.precision_bits, mode)
            entry = lifted.to_json()
            entry["mobius_text"] = str(m)
            entry["mu_text"] = str(lifted.mu)
            entry["mu_root_text"] = str(lifted.mu_root)
            entry["matrix_text"] = [[str(c) for c in row] for row in lifted.matrix]
            entries.append(entry)
        report.result["matrices"] = entries
        return report

    def ternary(self) -> Report:
        f = parse_polynomial(self.args.poly, TERNARY_VARIABLES)
        form = TernaryForm(f, self.args.degree)
        names = INVARIANT_NAMES if self.args.all_invariants else THIRD_ORDER_NAMES
        report = Report("ternary", {"poly": self.args.poly, "degree": self.args.degree,
                                    "mode": self.args.mode, "names": list(names)})
        if self.args.mode == "invariants":
            invariants = absolute_invariants(form, names)
            report.result["invariants"] = {name: str(invariants[name]) for name in names}
        elif self.args.mode == "signature":
            variety = ternary_signature(form, names, self.config.limits())
            report.result.update(variety.to_json())
        else:
            invariants = absolute_invariants(form, names)
            values = [invariants[name] for name in names]
            counted = count_symmetries(values, self.config.ternary_probes(), self.config.limits())
            report.result.update(counted.to_json())
            report.diagnostics.extend(counted.diagnostics)
            if self.args.images:
                points = probe_images(values, counted.probe_point, self.config.precision_bits,
                                      self.config.limits())
                report.result["images"] = [[str(c) for c in point.coordinates.values()]
                                           for point in points]
        return report

    def check_sum_of_powers(self) -> Report:
        checked = sum_of_powers_conditions(self.args.degree)
        report = Report("check-sum-of-powers", {"degree": self.args.degree}, checked.to_json())
        if not checked.all_hold:
            report.diagnostics.append(f"some relations fail for n={self.args.degree}")
        return report

    def run(self) -> int:
        """Run the selected command and print its report.

        Returns:
            Process exit code
        """
        command = self.args.command
        try:
            report = self.handlers[command]()
        except FormSymError as exc:
            logger.debug("%s failed", command, exc_info=True)
            print(emit_error(command, exc), file=sys.stderr)
            return exc.exit_code
        except ValueError as exc:
            print(emit_error(command, exc), file=sys.stderr)
            return EXIT_USAGE
        print(render_pretty(report) if self.args.pretty else emit(report))
        return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    return FormSymApp(argv).run()
