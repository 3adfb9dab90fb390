"""
Workbench verbs.

Each verb is a ``BaseCommand``; ``COMMANDS`` lists them in help order.
"""

import argparse
import logging
from typing import List, Union

from config.settings import DEFAULT_JOBS, MAX_FRAME_POINTS
from src.algebra.congruences import cong_to_filter, congruences_bruteforce
from src.algebra.tha import FiniteTHA, element_table, validate_tha
from src.cli.base import EXIT_FAILED, EXIT_OK, BaseCommand, CommandResult
from src.core.errors import AlgebraError, FrameError, UsageError
from src.corpus.sweeps import SWEEPS, run_sweep
from src.duality.characterisation import classify_with_frame
from src.duality.clop import clop_frame
from src.duality.isomorphisms import gamma_check, pi_check
from src.duality.models import spec_model
from src.duality.spectrum import spec_algebra
from src.frames.enumeration import enumerate_transits
from src.frames.reachability import z_roots
from src.frames.transit import TemporalTransit, validate_transit
from src.logic.filtration import filtrate, subformula_closure
from src.logic.models import AlgebraicModel, RelationalModel
from src.logic.parser import parse_formula, print_formula
from src.logic.search import countermodel_search
from src.logic.semantics import eval_algebraic, refutation_point, truth_set
from src.serialization.formats import (
    algebra_to_dict,
    dump_algebra,
    dump_frame,
    dump_model,
    frame_to_dict,
    load_algebra,
    load_frame,
    load_model,
)
from src.utils.helpers import format_set, iter_bits, parse_json, read_text
from src.validation.validators import ValidationReport

logger = logging.getLogger(__name__)


def _report_lines(report: ValidationReport) -> List[str]:
    if report.ok:
        return ["valid"]
    lines = ["invalid"]
    for violation in report.violations:
        lines.append(f"  {violation.clause}: {violation.message} (witness {violation.witness})")
    return lines


def _valid_frame(path: str) -> TemporalTransit:
    frame = load_frame(read_text(path))
    report = validate_transit(frame)
    if not report.ok:
        first = report.violations[0]
        raise FrameError(f"Not a temporal transit: {first.message}", witness=first.witness)
    return frame


def _valid_algebra(path: str) -> FiniteTHA:
    algebra = load_algebra(read_text(path))
    report = validate_tha(algebra)
    if not report.ok:
        first = report.violations[0]
        raise AlgebraError(f"Not a temporal Heyting algebra: {first.message}", witness=first.witness)
    return algebra


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


class CheckFrameCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="check-frame", description="Validate a frame file as a temporal transit")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file", help="Frame file")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        frame = load_frame(read_text(args.file))
        report = validate_transit(frame)
        lines = _report_lines(report)
        if report.ok:
            lines.append(f"points: {frame.size}")
            lines.append(f"reflexive: {format_set(frame.refl, frame.labels)}")
            lines.append(f"z-roots: {format_set(z_roots(frame), frame.labels)}")
        return CommandResult(EXIT_OK if report.ok else EXIT_FAILED, report.to_dict(), lines)


class CheckAlgebraCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="check-algebra", description="Validate an algebra file against both axiomatisations")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file", help="Algebra file")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        algebra = load_algebra(read_text(args.file))
        report = validate_tha(algebra)
        lines = _report_lines(report)
        lines.append(f"adjunction: {'pass' if report.details.get('adjunction') else 'fail'}")
        lines.append(f"equational: {'pass' if report.details.get('equational') else 'fail'}")
        if report.ok:
            lines.append("element box dia")
            lines.extend(f"{algebra.label(x)} {algebra.label(b)} {algebra.label(d)}" for x, b, d in element_table(algebra))
        return CommandResult(EXIT_OK if report.ok else EXIT_FAILED, report.to_dict(), lines)


class SpecCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="spec", description="Print the dual frame of an algebra")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file", help="Algebra file")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        algebra = _valid_algebra(args.file)
        spectrum = spec_algebra(algebra)
        payload = {
            "frame": frame_to_dict(spectrum.frame),
            "point_filters": [list(iter_bits(mask)) for mask in spectrum.point_filters],
        }
        return CommandResult(EXIT_OK, payload, [dump_frame(spectrum.frame).rstrip("\n")])


class ClopCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="clop", description="Print the algebra of upsets of a frame")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file", help="Frame file")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        frame = _valid_frame(args.file)
        clop = clop_frame(frame)
        payload = {
            "algebra": algebra_to_dict(clop.algebra),
            "element_upsets": [list(iter_bits(mask)) for mask in clop.element_upsets],
        }
        return CommandResult(EXIT_OK, payload, [dump_algebra(clop.algebra).rstrip("\n")])


class CongruencesCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="congruences", description="List congruences with their ♦-filters")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file", help="Algebra file")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        algebra = _valid_algebra(args.file)
        congs = congruences_bruteforce(algebra)
        rows, lines = [], [f"congruences: {len(congs)}"]
        for theta in congs:
            filt = cong_to_filter(theta)
            rows.append({"classes": [list(c) for c in theta.classes], "filter": list(iter_bits(filt.elements))})
            lines.append(f"  {theta} -> filter {format_set(filt.elements, algebra.labels)}")
        return CommandResult(EXIT_OK, {"count": len(congs), "congruences": rows}, lines)


class ClassifyCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="classify", description="Decide simple and subdirectly irreducible along every route")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file", help="Algebra file")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        algebra = _valid_algebra(args.file)
        result = classify_with_frame(algebra)
        opremum = "none" if result.opremum is None else f"element {algebra.label(result.opremum)}"
        lines = [
            f"simple: {_yes(result.simple)}",
            f"SI: {_yes(result.subdirectly_irreducible)}",
            f"opremum: {opremum}",
        ]
        lines.extend(f"  simple via {route}: {_yes(flag)}" for route, flag in result.simple_routes.items())
        lines.extend(f"  SI via {route}: {_yes(flag)}" for route, flag in result.si_routes.items())
        if not result.consistent:
            lines.append("routes disagree")
        payload = result.to_dict()
        payload["consistent"] = result.consistent
        return CommandResult(EXIT_OK if result.consistent else EXIT_FAILED, payload, lines)


class EvalCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="eval", description="Evaluate a formula in a model")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--model", required=True, help="Model file")
        parser.add_argument("--formula", required=True, help="Formula text")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        model = load_model(read_text(args.model))
        formula = parse_formula(args.formula)
        payload = {"formula": print_formula(formula)}
        if isinstance(model, AlgebraicModel):
            value = eval_algebraic(model, formula)
            valid = value == model.algebra.top
            payload.update(value=value, valid=valid)
            lines = [f"valid: {_yes(valid)}", f"value: {model.algebra.label(value)}"]
        else:
            points = truth_set(model, formula)
            valid = points == model.frame.carrier
            payload.update(points=list(iter_bits(points)), valid=valid)
            lines = [f"valid: {_yes(valid)}", f"true at: {format_set(points, model.frame.labels)}"]
            if not valid:
                point = refutation_point(model, formula)
                payload["refuted_at"] = point
                lines.append(f"refuted at: {model.frame.label(point)}")
        return CommandResult(EXIT_OK if valid else EXIT_FAILED, payload, lines)


class CountermodelCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="countermodel", description="Search finite transits for a countermodel")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--formula", required=True, help="Formula text")
        parser.add_argument("--max-size", type=int, required=True, help="Largest frame to try")
        parser.add_argument("--all-frames", action="store_true", help="Search all transits, not only Z-rooted ones")
        parser.add_argument("--jobs", type=int, default=DEFAULT_JOBS, help="Worker processes")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        formula = parse_formula(args.formula)
        result = countermodel_search(formula, args.max_size, rooted_only=not args.all_frames, jobs=args.jobs)
        if result.found:
            lines = [
                f"countermodel: {result.model.frame.size} points, refuted at {result.point}",
                dump_model(result.model).rstrip("\n"),
            ]
        else:
            lines = [
                f"no countermodel up to {result.max_points} points",
                f"certified: {_yes(result.certified)} (bound {result.bound})",
            ]
        lines.append(f"frames checked: {result.frames_checked}")
        return CommandResult(EXIT_OK if result.found else EXIT_FAILED, result.to_dict(), lines)


class FiltrateCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="filtrate", description="Filtrate a model through the subformulas of a formula")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--model", required=True, help="Model file (an algebraic model is dualised first)")
        parser.add_argument("--formula", required=True, help="Formula text")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        model: Union[RelationalModel, AlgebraicModel] = load_model(read_text(args.model))
        if isinstance(model, AlgebraicModel):
            model = spec_model(model)
        formula = parse_formula(args.formula)
        result = filtrate(model, subformula_closure(formula))
        lines = [
            f"classes: {result.size}",
            *(f"  [{i}] = {format_set(c, model.frame.labels)}" for i, c in enumerate(result.classes)),
            dump_model(result.model).rstrip("\n"),
        ]
        return CommandResult(EXIT_OK, result.to_dict(), lines)


class EnumFramesCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="enum-frames", description="List every transit on N points")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("n", type=int, help="Number of points")
        parser.add_argument("--rooted", action="store_true", help="Only Z-rooted transits")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        if not 0 <= args.n <= MAX_FRAME_POINTS:
            raise UsageError(f"Point count must be between 0 and {MAX_FRAME_POINTS}")
        frames = list(enumerate_transits(args.n, args.rooted))
        lines = [dump_frame(f).rstrip("\n") for f in frames]
        lines.append(f"count: {len(frames)}")
        payload = {"n": args.n, "rooted": args.rooted, "count": len(frames), "frames": [frame_to_dict(f) for f in frames]}
        return CommandResult(EXIT_OK, payload, lines)


class RoundtripCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="roundtrip", description="Check the duality round trip and the file round trip")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("file", help="Frame or algebra file")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        text = read_text(args.file)
        if "points" in parse_json(text):
            frame = _valid_frame(args.file)
            emitted = dump_frame(frame)
            checks = {"gamma": gamma_check(frame), "file": dump_frame(load_frame(emitted)) == emitted}
        else:
            algebra = _valid_algebra(args.file)
            emitted = dump_algebra(algebra)
            checks = {"pi": pi_check(algebra), "file": dump_algebra(load_algebra(emitted)) == emitted}

        lines, rows, passed = [], {}, True
        for name, outcome in checks.items():
            if isinstance(outcome, ValidationReport):
                ok = outcome.ok
                rows[name] = outcome.to_dict()
                witness = "" if ok else f" {outcome.violations[0].clause} {outcome.violations[0].witness}"
            else:
                ok = outcome
                rows[name] = {"valid": ok}
                witness = ""
            passed = passed and ok
            lines.append(f"{name}: {'pass' if ok else 'fail'}{witness}")
        lines.insert(0, "pass" if passed else "fail")
        return CommandResult(EXIT_OK if passed else EXIT_FAILED, {"file": args.file, "checks": rows}, lines)


class SweepCommand(BaseCommand):
    def __init__(self):
        super().__init__(name="sweep", description="Run a corpus sweep")

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("name", choices=sorted(SWEEPS), help="Sweep to run")
        parser.add_argument("--max-points", type=int, default=None, help="Largest corpus frame")
        parser.add_argument("--samples", type=int, default=None, help="Samples for sampling sweeps")
        parser.add_argument("--seed", type=int, default=None, help="Sampling seed")
        parser.add_argument("--jobs", type=int, default=DEFAULT_JOBS, help="Worker processes")

    def _execute(self, args: argparse.Namespace) -> CommandResult:
        report = run_sweep(args.name, args.max_points, args.samples, args.seed, args.jobs)
        lines = [f"{report.name}: {'pass' if report.ok else 'fail'}", f"checked: {report.checked}"]
        lines.extend(f"  {failure}" for failure in report.failures[:20])
        return CommandResult(EXIT_OK if report.ok else EXIT_FAILED, report.to_dict(), lines)


COMMANDS = [
    CheckFrameCommand(),
    CheckAlgebraCommand(),
    SpecCommand(),
    ClopCommand(),
    CongruencesCommand(),
    ClassifyCommand(),
    EvalCommand(),
    CountermodelCommand(),
    FiltrateCommand(),
    EnumFramesCommand(),
    RoundtripCommand(),
    SweepCommand(),
]
