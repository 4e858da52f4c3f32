"""Command-line driver: power, spectrum, and charpoly subcommands.

Parameter files are flat JSON objects; complex values are [re, im] pairs
(bare numbers are accepted for reals):

    {"a1": [1, 0], "a2": [1, 1], "b1": [3, 0], "b2": [3, 1],
     "c1": [5, 0], "c2": [5, 1], "n": 8}

Matrix output is either JSON (array of rows of [re, im] pairs) or CSV
("re+imi" text, 12 significant digits, one row per line).  Exit codes:
0 success, 2 invalid input, 3 degenerate spectrum, 4 singular matrix,
5 verification gap above tolerance.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .errors import (BadOrder, DegenerateSpectrum, NonFinite, PentaError,
                     SingularMatrix, NumericallySingular, UnsupportedOddOrder,
                     ZeroBandParameter)
from .oracle import dense_determinant, dense_inverse, dense_power
from .penta_core import PentaParams, build_matrix, validate_params
from .powers import matrix_power
from .spectral import char_poly_eval, eigenvalues

DEFAULT_TOL = 1e-8
TOL_ENV_VAR = "PENTA_TOL"

_PARAM_KEYS = ("a1", "a2", "b1", "b2", "c1", "c2")


class InputError(PentaError):
    """Unreadable or malformed command-line input."""


@dataclass
class JobConfig:
    """Everything one subcommand invocation needs."""
    params: PentaParams
    exponent: int = 0
    output_format: str = "json"
    tolerance: float = DEFAULT_TOL
    verify: bool = False
    out: str = field(default="-")

    def __post_init__(self):
        if not self.tolerance > 0:
            raise InputError(f"tolerance must be positive, got {self.tolerance}")
        if self.output_format not in ("json", "csv"):
            raise InputError(f"unknown output format {self.output_format!r}")


# ---------------------------------------------------------------- scalars

def parse_complex(text):
    """Parse 'a+bi' / 'a-bi' / '3' / '2i' / '-i' style literals."""
    squeezed = "".join(str(text).split()).replace("I", "i").replace("i", "j")
    if not squeezed:
        raise InputError("empty complex literal")
    try:
        value = complex(squeezed)
    except ValueError:
        raise InputError(f"cannot parse complex literal {text!r}") from None
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise InputError(f"complex literal {text!r} is not finite")
    return value


def format_complex(z, digits=12):
    """Render a complex value as re+imi text; exact zeros stay exact."""
    z = complex(z)

    def fmt(v):
        return f"{v:.{digits}g}"

    if z.imag == 0.0:
        return fmt(z.real)
    if z.real == 0.0:
        return fmt(z.imag) + "i"
    sign = "+" if z.imag > 0 else "-"
    return f"{fmt(z.real)}{sign}{fmt(abs(z.imag))}i"


def _pair(z):
    z = complex(z)
    return [z.real, z.imag]


# ------------------------------------------------------------ params files

def _scalar_from_json(value, key):
    if isinstance(value, bool):
        raise InputError(f"parameter {key} must be numeric, got a boolean")
    if isinstance(value, (int, float)):
        return complex(value)
    if (isinstance(value, (list, tuple)) and len(value) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool)
                    for v in value)):
        return complex(value[0], value[1])
    raise InputError(
        f"parameter {key} must be a number or a [re, im] pair, got {value!r}")


def load_params(path):
    """Read and validate a PentaParams JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read parameter file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"parameter file {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("parameter file must hold a JSON object")
    missing = [k for k in _PARAM_KEYS + ("n",) if k not in data]
    if missing:
        raise InputError(f"parameter file lacks keys: {', '.join(missing)}")
    unknown = sorted(set(data) - set(_PARAM_KEYS) - {"n"})
    if unknown:
        raise InputError(f"parameter file has unknown keys: {', '.join(unknown)}")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise InputError(f"n must be an integer, got {n!r}")
    params = PentaParams(
        *(_scalar_from_json(data[k], k) for k in _PARAM_KEYS), n=n)
    return validate_params(params)


def save_params(p, path):
    """Write a params file that load_params reads back bit-for-bit."""
    data = {k: _pair(getattr(p, k)) for k in _PARAM_KEYS}
    data["n"] = int(p.n)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


# ---------------------------------------------------------------- output

def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _matrix_text(mat, output_format):
    if output_format == "json":
        rows = [[_pair(z) for z in row] for row in mat]
        return json.dumps(rows) + "\n"
    lines = (",".join(format_complex(z) for z in row) for row in mat)
    return "\n".join(lines) + "\n"


def _rel_gap(computed, reference):
    reference = np.asarray(reference)
    scale = max(1.0, float(np.abs(reference).max()))
    return float(np.abs(np.asarray(computed) - reference).max()) / scale


# ------------------------------------------------------------- subcommands

def _oracle_power(p, s):
    dense = build_matrix(p)
    if s >= 0:
        return dense_power(dense, s)
    return dense_power(dense_inverse(dense), -s)


def cmd_power(config):
    """Compute W(s), write it, optionally verify against the dense oracle."""
    result = matrix_power(config.params, config.exponent)
    _emit(_matrix_text(result.matrix, config.output_format), config.out)
    if config.verify:
        reference = _oracle_power(config.params, config.exponent)
        gap = _rel_gap(result.matrix, reference)
        print(f"verify: max relative error {gap:.3e} "
              f"(tolerance {config.tolerance:g})", file=sys.stderr)
        if gap > config.tolerance:
            return 5
    return 0


def cmd_spectrum(config):
    """Write eigenvalues (family-interleaved order), weights, r1, r2."""
    spec = eigenvalues(config.params)
    if config.output_format == "json":
        payload = {
            "eigenvalues": [_pair(z) for z in spec.eigenvalues],
            "weights": [_pair(z) for z in spec.weights],
            "r1": _pair(spec.r1),
            "r2": _pair(spec.r2),
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"{k + 1},{format_complex(a)},{format_complex(q)}"
                 for k, (a, q) in enumerate(zip(spec.eigenvalues, spec.weights))]
        lines.append(f"r1,{format_complex(spec.r1)}")
        lines.append(f"r2,{format_complex(spec.r2)}")
        text = "\n".join(lines) + "\n"
    _emit(text, config.out)
    return 0


def cmd_charpoly(config, x):
    """Evaluate det(xI - K), optionally against the elimination determinant."""
    value = char_poly_eval(config.params, x)
    oracle_det = None
    gap = None
    if config.verify:
        dense = build_matrix(config.params)
        shifted = x * np.eye(dense.shape[0], dtype=np.complex128) - dense
        oracle_det = dense_determinant(shifted)
        gap = abs(value - oracle_det) / max(1.0, abs(oracle_det))
    if config.output_format == "json":
        payload = {"x": _pair(x), "value": _pair(value)}
        if config.verify:
            payload["oracle_determinant"] = _pair(oracle_det)
            payload["relative_gap"] = gap
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"value,{format_complex(value)}"]
        if config.verify:
            lines.append(f"oracle_determinant,{format_complex(oracle_det)}")
            lines.append(f"relative_gap,{gap:.6e}")
        text = "\n".join(lines) + "\n"
    _emit(text, config.out)
    if config.verify and gap > config.tolerance:
        print(f"verify: relative gap {gap:.3e} exceeds tolerance "
              f"{config.tolerance:g}", file=sys.stderr)
        return 5
    return 0


# ------------------------------------------------------------------ driver

def _default_tolerance():
    raw = os.environ.get(TOL_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise InputError(
            f"{TOL_ENV_VAR} must be a number, got {raw!r}") from None


def _add_common(sub, with_power_flags):
    sub.add_argument("--params", required=True, help="path to a JSON parameter file")
    sub.add_argument("--format", choices=("json", "csv"), default="json",
                     dest="output_format")
    sub.add_argument("--out", default="-", help="output path, '-' for stdout")
    if with_power_flags:
        sub.add_argument("--verify", action="store_true",
                         help="cross-check against the dense oracle")
        sub.add_argument("--tol", type=float, default=None,
                         help=f"verification tolerance (default {DEFAULT_TOL:g}, "
                              f"or ${TOL_ENV_VAR})")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pentapow",
        description="Integer powers and spectra of pentadiagonal "
                    "2-Toeplitz matrices in closed form.")
    subs = parser.add_subparsers(dest="command", required=True)
    p_power = subs.add_parser("power", help="compute K^s")
    _add_common(p_power, with_power_flags=True)
    p_power.add_argument("--s", required=True, type=int, help="integer exponent")
    p_spectrum = subs.add_parser("spectrum", help="eigenvalues and weights")
    _add_common(p_spectrum, with_power_flags=False)
    p_charpoly = subs.add_parser("charpoly", help="evaluate det(xI - K)")
    _add_common(p_charpoly, with_power_flags=True)
    p_charpoly.add_argument("--x", required=True,
                            help="complex evaluation point, e.g. '1.5-2i'")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        tolerance = (args.tol if getattr(args, "tol", None) is not None
                     else _default_tolerance())
        config = JobConfig(
            params=load_params(args.params),
            exponent=getattr(args, "s", 0),
            output_format=args.output_format,
            tolerance=tolerance,
            verify=getattr(args, "verify", False),
            out=args.out,
        )
        if args.command == "power":
            return cmd_power(config)
        if args.command == "spectrum":
            return cmd_spectrum(config)
        return cmd_charpoly(config, parse_complex(args.x))
    except (InputError, BadOrder, ZeroBandParameter, NonFinite,
            UnsupportedOddOrder, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegenerateSpectrum as exc:
        print(f"error: degenerate spectrum: {exc}", file=sys.stderr)
        return 3
    except (SingularMatrix, NumericallySingular) as exc:
        print(f"error: singular matrix: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
