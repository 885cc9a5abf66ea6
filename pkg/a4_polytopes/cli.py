"""
Command-line front end: ``a4-polytopes orbit|project|dual|cell|groups|catalog``.

Exit codes: 0 success, 1 usage or input error, 2 failed verification.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from pydantic import BaseModel, ValidationError

from a4_polytopes.config import PolytopeConfig
from a4_polytopes.core.binary_groups import SET_NAMES, build_set, verify_group
from a4_polytopes.core.data_models import (
    GroupsReport,
    OrbitReport,
    QuaternionSetReport,
    SliceModel,
    SliceReport,
    decimal_rows,
    exact_rows,
    float_rows,
)
from a4_polytopes.core.duals import catalog, dual_cell_geometry, dual_cell_model, dual_report
from a4_polytopes.core.errors import PolytopeError, VerificationError
from a4_polytopes.core.mesh import Mesh3D, extract_faces, to_obj, to_off
from a4_polytopes.core.projection import dominant_slices
from a4_polytopes.core.representation import (
    build_aut_a4,
    coxeter_element,
    verify_representation,
    weight_to_quaternion,
)
from a4_polytopes.core.weyl import Weight, orbit, stabilizer
from a4_polytopes.logging import configure_logging, logger

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_weight(parser: argparse.ArgumentParser, name: str = "weight", flag: bool = False) -> None:
    help_text = "four Dynkin labels, e.g. 1 1 0 0 or 1/2 0 0 1"
    if flag:
        parser.add_argument(f"--{name}", nargs=4, metavar=("B1", "B2", "B3", "B4"), help=help_text)
    else:
        # positional tuple metavars break argparse error formatting
        parser.add_argument(name, nargs=4, metavar="A", help=help_text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("json", "off", "obj"))
    common.add_argument("--digits", type=int, help="significant digits of float renderings")
    common.add_argument("--out", type=Path, help="write output to this file")
    common.add_argument("--exact", action="store_true", default=None, help="omit float renderings")
    common.add_argument("--config", type=Path, help="YAML configuration file")
    common.add_argument("--log-level", dest="log_level")

    parser = _ArgumentParser(prog="a4-polytopes", description="Exact W(A4) polytopes and their duals")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("orbit", parents=[common], help="vertices of the orbit of a weight")
    _add_weight(p)

    p = sub.add_parser("project", parents=[common], help="W(A3) slices of an orbit")
    _add_weight(p)
    p.add_argument("--slice", type=int, default=0, help="slice emitted as a mesh for off/obj")

    p = sub.add_parser("dual", parents=[common], help="dual polytope report")
    _add_weight(p)
    p.add_argument("--reference", type=int, help="cell type with scale 1")

    p = sub.add_parser("cell", parents=[common], help="dual cell at a vertex")
    _add_weight(p)
    _add_weight(p, "vertex", flag=True)
    p.add_argument("--reference", type=int, help="cell type with scale 1")

    p = sub.add_parser("groups", parents=[common], help="binary quaternion sets and group checks")
    p.add_argument("--set", dest="sets", action="append", choices=SET_NAMES)

    sub.add_parser("catalog", parents=[common], help="the fifteen uniform polytopes")
    return parser


def _load_config(args: argparse.Namespace) -> PolytopeConfig:
    base = PolytopeConfig.from_config(args.config) if args.config else PolytopeConfig.from_env()
    overrides = {
        key: getattr(args, key)
        for key in ("output_format", "digits", "exact", "log_level")
        if getattr(args, key, None) is not None
    }
    return PolytopeConfig(**{**base.model_dump(), **overrides})


def _emit(text: str, out: Optional[Path], stdout: TextIO) -> None:
    if out is None:
        stdout.write(text)
        if not text.endswith("\n"):
            stdout.write("\n")
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    logger.info(f"wrote {out}")


def _render(payload: BaseModel | Mesh3D, config: PolytopeConfig) -> str:
    if isinstance(payload, Mesh3D):
        if config.output_format == "off":
            return to_off(payload, config.digits)
        if config.output_format == "obj":
            return to_obj(payload, config.digits)
        return payload.to_model(config.digits, config.exact).model_dump_json(indent=2)
    if config.output_format != "json":
        raise PolytopeError("this command only supports --format json")
    return payload.model_dump_json(indent=2)


def _orbit(args: argparse.Namespace, config: PolytopeConfig) -> BaseModel:
    w = Weight.of(*args.weight)
    if w.is_zero():
        logger.warning("the zero weight has the trivial orbit {0}")
    vertices = orbit(w)
    quaternions = [weight_to_quaternion(v) for v in vertices]
    return OrbitReport(
        weight=str(w),
        vertex_count=len(vertices),
        stabilizer_order=stabilizer(w).order,
        vertices=exact_rows(vertices),
        quaternions=exact_rows(quaternions),
        floats=None if config.exact else float_rows(quaternions, config.digits),
        decimals=decimal_rows(quaternions, config.digits, config.exact),
    )


def _project(args: argparse.Namespace, config: PolytopeConfig) -> BaseModel | Mesh3D:
    w = Weight.of(*args.weight)
    slices = dominant_slices(w)
    if config.output_format != "json":
        if not 0 <= args.slice < len(slices):
            raise PolytopeError(f"--slice must be in 0..{len(slices) - 1}")
        chosen = slices[args.slice]
        return extract_faces(chosen.vertices3d, metadata={
            "weight": str(w), "slice": chosen.label, "charge": str(chosen.charge)})
    return SliceReport(
        weight=str(w),
        slices=[
            SliceModel(
                a3_labels=[str(b) for b in s.a3_labels],
                charge=str(s.charge),
                vertex_count=s.vertex_count,
                p0_offset=str(s.offset),
                coset_indices=list(s.coset_indices),
                vertices=exact_rows(s.vertices3d),
                floats=None if config.exact else float_rows(s.vertices3d, config.digits),
                decimals=decimal_rows(s.vertices3d, config.digits, config.exact),
            )
            for s in slices
        ],
    )


def _dual(args: argparse.Namespace, config: PolytopeConfig) -> BaseModel:
    return dual_report(Weight.of(*args.weight), args.reference, config.digits, config.exact)


def _cell(args: argparse.Namespace, config: PolytopeConfig) -> BaseModel | Mesh3D:
    w = Weight.of(*args.weight)
    vertex = Weight.of(*args.vertex) if args.vertex else w
    cell = dual_cell_geometry(w, vertex, args.reference)
    if config.output_format != "json":
        return cell.mesh
    return dual_cell_model(cell, config.digits, config.exact)


def _groups(args: argparse.Namespace, config: PolytopeConfig) -> BaseModel:
    reports = []
    for name in args.sets or SET_NAMES:
        quaternions = build_set(name)
        reports.append(QuaternionSetReport(
            name=name,
            order=len(quaternions),
            elements=exact_rows(quaternions),
            floats=None if config.exact else float_rows(quaternions, config.digits),
            decimals=decimal_rows(quaternions, config.digits, config.exact),
            verification=verify_group(quaternions),
        ))
    representation = verify_representation()
    d = coxeter_element()
    report = GroupsReport(
        sets=reports,
        representation=representation,
        aut_order=len(build_aut_a4()),
        coxeter_order=next(n for n in range(1, 121) if d.power(n).is_identity()),
    )
    if not representation.passed:
        raise VerificationError("quaternionic W(A4) does not match the weight-space group",
                                representation.counterexample)
    for name, r in zip(args.sets or SET_NAMES, reports):
        expected_group = name in ("T", "O", "I", "Itilde")
        if r.verification is not None and r.verification.is_group != expected_group:
            raise VerificationError(f"group check for {name} failed", r.verification.counterexample)
    return report


def _catalog(args: argparse.Namespace, config: PolytopeConfig) -> BaseModel:
    return catalog()


COMMANDS = {
    "orbit": _orbit,
    "project": _project,
    "dual": _dual,
    "cell": _cell,
    "groups": _groups,
    "catalog": _catalog,
}


def run_cli(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = _load_config(args)
    except (ValidationError, FileNotFoundError) as e:
        print(f"a4-polytopes: invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(config.log_level, config.log_file)

    try:
        payload = COMMANDS[args.command](args, config)
        _emit(_render(payload, config), args.out, stdout)
    except VerificationError as e:
        logger.error(f"verification failed: {e}")
        return EXIT_VERIFICATION
    except PolytopeError as e:
        print(f"a4-polytopes: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
