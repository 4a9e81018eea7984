#!/usr/bin/env python


import sys
import os
import argparse

from .runtime.config import Inifile, LagfibConfigurationError
from .runtime import logs
from .runtime import process_pool
from .utils import ParseExtraParameters, rational_type, int_list_type
from . import output as output_module
from .errors import LagfibError, InvalidChernNumbers, RouteDisagreement
from .char_classes import GENERA, ChernNumbers, genus_series, sqrt_ahat_series, characteristic_number
from .fibration_formulas import (PolarizationType, FujikiData, deg_delta_polarized,
                                 deg_delta_from_b_theta, master_equation_solve, degeneration_models)
from .intersection_products import SURFACES, SurfaceData, pencil_degree, formula_degree
from .fourfold_enumerator import (CENSUS_COLUMNS, MIN_FIBRED_B2, census, bounds_summary,
                                  guan_table, invariants_from_betti, census_rows_for_pair)
from .version import __version__


RUNTIME_INI_SECTION = "runtime"


def cmd_series(args, ini, output):
    c_odd_zero = args.c_odd_zero
    if c_odd_zero is None:
        c_odd_zero = ini.getboolean("series", "c_odd_zero", fallback=False)
    if args.upto < 2:
        parser.error(f"--upto must be at least 2, not {args.upto}")
    series = genus_series(args.genus, args.upto)
    if c_odd_zero:
        series = series.specialize_odd_zero()

    output.metadata("genus", args.genus)
    output.metadata("upto", args.upto)
    output.metadata("c_odd_zero", c_odd_zero)
    output.final("series", str(series))


def _sqrt_ahat_argument(text, n):
    # Either a p/q literal or the path of a manifold record of dimension 2n
    if os.path.exists(text):
        chern = ChernNumbers.load(text)
        if chern.complex_dimension != 2 * n:
            raise InvalidChernNumbers(f"complex dimension {chern.complex_dimension} but n = {n} "
                                      f"needs dimension {2 * n}", where=text)
        return characteristic_number(sqrt_ahat_series(2 * n), chern), chern.name or text
    try:
        return rational_type(text), None
    except argparse.ArgumentTypeError as error:
        parser.error(f"--sqrt-ahat: {error}, or the path of a manifold record file")


def cmd_degdelta(args, ini, output):
    n = args.n
    theta_multiple = args.theta_multiple
    if theta_multiple is None:
        theta_multiple = ini.getint("degdelta", "theta_multiple", fallback=1)
    pol = PolarizationType(args.polarization) if args.polarization else PolarizationType.principal(n)
    sqrt_ahat, record_name = _sqrt_ahat_argument(args.sqrt_ahat, n)

    formula = deg_delta_polarized(n, pol, sqrt_ahat)
    result = master_equation_solve(FujikiData(n, pol.product, sqrt_ahat, theta_multiple))
    from_b_theta = deg_delta_from_b_theta(n, pol, result.b_theta)
    if result.deg_delta != formula:
        raise RouteDisagreement(left_name="closed form", left=formula,
                                right_name="master equation", right=result.deg_delta)
    if from_b_theta != formula:
        raise RouteDisagreement(left_name="closed form", left=formula,
                                right_name="b_Theta form", right=from_b_theta)

    output.metadata("n", n)
    output.metadata("polarization", pol.d)
    if record_name:
        output.metadata("manifold", record_name)
    output.metadata("sqrt_ahat", sqrt_ahat)
    output.metadata("theta_multiple", theta_multiple)
    output.final("deg_delta", result.deg_delta)
    output.final("b_theta", result.b_theta)
    output.final("c2_YL", result.intermediate_c2YL)


def cmd_census(args, ini, output):
    require_integer_degree = args.require_integer_degree
    if require_integer_degree is None:
        require_integer_degree = ini.getboolean("census", "require_integer_degree", fallback=True)
    smp = args.smp
    if smp is None:
        smp = ini.getint("census", "smp", fallback=0)

    if smp:
        with process_pool.Pool(smp) as pool:
            rows = census(require_integer_degree, pool=pool)
    else:
        rows = census(require_integer_degree)
    bounds = bounds_summary(rows)

    output.metadata("require_integer_degree", require_integer_degree)
    for name in CENSUS_COLUMNS:
        output.add_column(name, int)
    for row in rows:
        output.record(row.as_record())
    output.final("max_d", bounds.max_d)
    output.final("max_deg_delta", bounds.max_deg)
    output.final("max_rw", bounds.max_rw)


def cmd_pencil(args, ini, output):
    surface = SurfaceData.for_family(args.surface, args.n)
    from_pencil = pencil_degree(surface)
    from_formula = formula_degree(args.surface, args.n)
    if from_pencil != from_formula:
        raise RouteDisagreement(left_name="pencil c_3", left=from_pencil,
                                right_name="discriminant formula", right=from_formula)

    output.metadata("surface", args.surface)
    output.metadata("n", args.n)
    output.metadata("C^2", surface.curve_self_intersection)
    output.final("deg_delta", from_pencil)
    output.final("formula_deg_delta", from_formula)


def cmd_models(args, ini, output):
    pol = PolarizationType(args.polarization)
    models = degeneration_models(pol)

    output.metadata("polarization", pol.d)
    output.add_column("k", int)
    output.add_column("d_prime", tuple)
    for model in models:
        output.parameters([model.k, model.d_prime])
    output.final("count", len(models))


def cmd_invariants(args, ini, output):
    inv = invariants_from_betti((args.b2, args.b3))
    rows = census_rows_for_pair(inv.betti)

    output.metadata("b2", args.b2)
    output.metadata("b3", args.b3)
    output.add_column("d", int)
    output.add_column("deg_delta", int)
    for row in rows:
        output.parameters([row.d, row.deg_delta])
    output.final("b4", inv.b4)
    output.final("c4", inv.c4)
    output.final("c2sq", inv.c2_squared)
    output.final("sqrt_ahat", inv.sqrt_ahat)
    output.final("rw", inv.rw)
    output.final("ahat", inv.ahat_number())
    output.final("fibred_candidate", inv.betti.b2 >= MIN_FIBRED_B2)


def cmd_guan(args, ini, output):
    pairs = guan_table()
    output.add_column("b2", int)
    output.add_column("b3", int)
    output.add_column("rw", int)
    for pair in pairs:
        output.parameters([pair.b2, pair.b3, 992 - 4 * pair.b2 + pair.b3])
    output.final("count", len(pairs))
    output.final("fibred_candidates", sum(1 for p in pairs if p.b2 >= MIN_FIBRED_B2))


def _global_options(p, suppress):
    # Global options are accepted both before and after the command name
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", default=default, help="Output format: plain (default), csv or json")
    p.add_argument("--output", "-o", default=default, help="Write results to this file instead of standard output")
    p.add_argument("--ini", default=default, help="Read options from this ini file")
    p.add_argument("-p", "--params", nargs="*", action=ParseExtraParameters, default=default,
                   help="Override ini options, with format section.name1=value1 section.name2=value2...")
    p.add_argument("--verbosity", default=default, help="Log verbosity: debug, noisy, standard, quiet, muted, silent or 0-50")


parser = argparse.ArgumentParser(prog="lagfib", description="Exact invariants of Lagrangian fibrations "
                                 "of holomorphic symplectic manifolds", add_help=True)
_global_options(parser, suppress=False)
parser.add_argument('--version', action='version', version=__version__, help="Print out a version number")
subparsers = parser.add_subparsers(dest="command", metavar="command")
subparsers.required = True

p = subparsers.add_parser("series", help="Print the Â or √Â series through a weight")
_global_options(p, suppress=True)
p.add_argument("--genus", choices=GENERA, required=True)
p.add_argument("--upto", type=int, required=True, help="Highest weight kept (at least 2)")
p.add_argument("--c-odd-zero", action=argparse.BooleanOptionalAction, default=None,
               help="Set c1, c3, ... to zero, as on a holomorphic symplectic manifold")
p.set_defaults(function=cmd_series)

p = subparsers.add_parser("degdelta", help="Degree of the discriminant locus from sqrt(Â)[X]")
_global_options(p, suppress=True)
p.add_argument("--n", type=int, required=True, help="Half the complex dimension of X")
p.add_argument("--polarization", type=int_list_type, help="Polarization type d_1,...,d_n (default principal)")
p.add_argument("--sqrt-ahat", required=True, help="sqrt(Â)[X] as p/q, or a manifold record file")
p.add_argument("--theta-multiple", type=int, default=None, help="m with Y|F = m Theta (cancels)")
p.set_defaults(function=cmd_degdelta)

p = subparsers.add_parser("census", help="All admissible (b2, b3, d, deg Δ) for fibred four-folds")
_global_options(p, suppress=True)
p.add_argument("--require-integer-degree", action=argparse.BooleanOptionalAction, default=None,
               help="Keep only d for which deg Δ is an integer (default on)")
p.add_argument("--smp", type=int, default=None, help="Run with the given number of processes")
p.set_defaults(function=cmd_census)

p = subparsers.add_parser("pencil", help="deg Δ by counting singular curves in a pencil")
_global_options(p, suppress=True)
p.add_argument("--surface", choices=SURFACES, required=True)
p.add_argument("--n", type=int, required=True)
p.set_defaults(function=cmd_pencil)

p = subparsers.add_parser("models", help="Degeneration models (k, d') for a polarization type")
_global_options(p, suppress=True)
p.add_argument("--polarization", type=int_list_type, required=True)
p.set_defaults(function=cmd_models)

p = subparsers.add_parser("invariants", help="Invariants of a four-fold with given b2, b3")
_global_options(p, suppress=True)
p.add_argument("--b2", type=int, required=True)
p.add_argument("--b3", type=int, required=True)
p.set_defaults(function=cmd_invariants)

p = subparsers.add_parser("guan", help="List the Betti numbers allowed by Guan's bounds")
_global_options(p, suppress=True)
p.set_defaults(function=cmd_guan)
del p


def run_lagfib(args):
    u"""Run one parsed command and return the exit status.

    Options are resolved with flags taking precedence over ``-p`` overrides,
    which take precedence over the ini file, which takes precedence over the
    built-in defaults.
    """
    ini = Inifile(args.ini, override=args.params)
    verbosity = args.verbosity or ini.get(RUNTIME_INI_SECTION, "verbosity", fallback="standard")
    logs.set_verbosity(verbosity)
    format = args.format or ini.get(RUNTIME_INI_SECTION, "format", fallback="plain")
    output = output_module.output_from_options({"format": format, "filename": args.output})
    logs.debug(f"Running lagfib {args.command}")
    for (section, name), value in ini:
        logs.debug(f"    {section}.{name} = {value}")
    with output:
        args.function(args, ini, output)
    return 0


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(argv)
        return run_lagfib(args)
    except SystemExit as e:
        return e.code
    except (LagfibError, LagfibConfigurationError) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_status
    except (KeyError, ValueError) as e:
        # unknown output format or verbosity
        print(f"{type(e).__name__}: {e.args[0] if e.args else e}", file=sys.stderr)
        return 2


if __name__=="__main__":
    status = main()
    sys.exit(status)
