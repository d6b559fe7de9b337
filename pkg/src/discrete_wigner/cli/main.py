"""
Command line entry point.

Exit codes: 0 on success, 1 on invalid input or a failed verification,
2 when a channel leaves its admissible range.
"""
import argparse
import json
import logging
import os
import sys

from discrete_wigner.base.constants import ChannelFamily, System
from discrete_wigner.base.errors import KernelViolationError, ValidationError
from discrete_wigner.channels.kernels import classify_ad, classify_rtn
from discrete_wigner.channels.kraus import apply_channel, channel_kraus, make_params
from discrete_wigner.states.bloch import bloch_from_density, bloch_to_list
from discrete_wigner.states.presets import resolve_state
from discrete_wigner.sweep.config import FORMATS, SweepConfig
from discrete_wigner.sweep.output import series_path, write_output
from discrete_wigner.sweep.presets import FIGURES, figure_preset
from discrete_wigner.sweep.runner import run_sweep
from discrete_wigner.sweep.verify import verify_all
from discrete_wigner.wigner.dwf import dwf, mana, negativity
from discrete_wigner.wigner.negative import negative_state
from discrete_wigner.wigner.net import default_operators

_LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_KERNEL = 2


class _Parser(argparse.ArgumentParser):
    """
    Argument parser that reports usage errors with the validation exit code.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, "%s: error: %s\n" % (self.prog, message))


_PARSER = _Parser(prog="discrete_wigner", description="Discrete Wigner functions of noisy states.")
_PARSER.add_argument("-d", "--debug", action="store_true", help="Increase log level to DEBUG")
_SUBPARSERS = _PARSER.add_subparsers(dest="command")
_SUBPARSERS.required = True

_VERIFY = _SUBPARSERS.add_parser("verify", help="Run every consistency check")
_VERIFY.add_argument("--json", dest="json_path", help="Also save the full report to this path")

_TABLE = _SUBPARSERS.add_parser("table", help="Print the Wigner table of a state as JSON")
_TABLE.add_argument("--system", required=True, choices=[system.value for system in System])
_TABLE.add_argument("--state", required=True, help="Preset, ns1/ns2/ns3, Bell label or 'bloch'")
_TABLE.add_argument("--bloch", type=float, nargs="+", help="Raw Bloch parameters")
_TABLE.add_argument(
    "--channel", default="none", choices=[family.value for family in ChannelFamily]
)
_TABLE.add_argument("--gamma", type=float)
_TABLE.add_argument("--b", type=float)
_TABLE.add_argument("--g", type=float)
_TABLE.add_argument("--t", type=float, default=0.0)

_NEGSTATE = _SUBPARSERS.add_parser("negstate", help="Print a negative quantum state as JSON")
_NEGSTATE.add_argument("--system", required=True, choices=[system.value for system in System])
_NEGSTATE.add_argument("--rank", type=int, default=1)

_SWEEP = _SUBPARSERS.add_parser("sweep", help="Run a time sweep and save it")
_SOURCE = _SWEEP.add_mutually_exclusive_group(required=True)
_SOURCE.add_argument("--config", help="Path to a json sweep config")
_SOURCE.add_argument("--preset", choices=FIGURES, help="A figure preset")
_SWEEP.add_argument("--out", help="Output path, overrides the config")
_SWEEP.add_argument("--format", choices=FORMATS, help="Output format, overrides the config")
_SWEEP.add_argument("--steps", type=int, help="Number of grid points, overrides the config")
_SWEEP.add_argument("--workers", type=int, help="Number of threads, overrides the config")


def _dump(data):
    sys.stdout.write(json.dumps(data, indent=4, sort_keys=True))
    sys.stdout.write("\n")


def _verify(args):
    report = verify_all()
    for check in report.violations:
        sys.stdout.write("%s\n" % check)
    sys.stdout.write("%s\n" % report.summary())
    if args.json_path:
        path = os.path.abspath(args.json_path)
        with open(path, "w") as stream:
            json.dump(report.to_dict(), stream, indent=4, sort_keys=True)
        _LOG.info("Saved report to %r", path)
    return EXIT_OK if report.ok else EXIT_INVALID


def _table(args):
    system = System(args.system)
    family = ChannelFamily(args.channel)
    initial = resolve_state(system, args.state, bloch=args.bloch)
    params = make_params(family, gamma=args.gamma, b=args.b, g=args.g)
    kraus = channel_kraus(system, family, args.t, params)
    rho = apply_channel(initial.state, kraus)
    ops = default_operators(system.dimension)
    table = dwf(rho, ops)

    regime = None
    if family is ChannelFamily.rtn:
        regime = classify_rtn(params).value
    elif family is ChannelFamily.ad:
        regime = classify_ad(params).value

    _dump(
        {
            "state": initial.to_dict(),
            "channel": family.value,
            "params": params.to_dict() if params else None,
            "regime": regime,
            "t": args.t,
            "dwf": table.to_dict(),
            "columns": dict(zip(table.column_names(), table.flatten())),
        }
    )
    return EXIT_OK


def _negstate(args):
    system = System(args.system)
    ops = default_operators(system.dimension)
    result = negative_state(ops, args.rank)
    table = dwf(result.state, ops)
    data = result.to_dict()
    data.update(
        system=system.value,
        bloch=bloch_to_list(bloch_from_density(result.state)),
        dwf=table.to_dict(),
        negativity=negativity(result.state, ops),
        mana=mana(table),
    )
    _dump(data)
    return EXIT_OK


def _overrides(args):
    overrides = {}
    if args.format:
        overrides["format"] = args.format
    if args.steps is not None:
        overrides["steps"] = args.steps
    if args.workers is not None:
        overrides["workers"] = args.workers
    return overrides


def _sweep(args):
    overrides = _overrides(args)
    if args.config:
        _LOG.info("Loading %r", args.config)
        series = [SweepConfig.from_json_file(args.config).replace(**overrides)]
        default_path = None
    else:
        figure = figure_preset(args.preset)
        _LOG.info("Resolved %r: %s", figure, figure.description)
        series = [config.replace(**overrides) for config in figure]
        default_path = "%s.%s" % (args.preset, overrides.get("format", "csv"))

    paths = []
    for cfg in series:
        path = args.out or cfg.output or default_path
        if not path:
            raise ValidationError("No output path given for %r, use --out" % cfg)
        paths.append(series_path(path, cfg.label) if len(series) > 1 else path)

    for cfg, path in zip(series, paths):
        rows = run_sweep(cfg)
        write_output(rows, cfg, path=path)
    return EXIT_OK


_COMMANDS = {"verify": _verify, "table": _table, "negstate": _negstate, "sweep": _sweep}


def main(argv=None):
    """
    Main entry point.

    :param argv: The arguments, defaults to sys.argv.
    :return: The exit code.
    :rtype: int
    """
    args = _PARSER.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    if args.debug:
        logging.getLogger("discrete_wigner").setLevel(logging.DEBUG)
        _LOG.debug("Detected debug flag, log level changed to DEBUG")

    try:
        return _COMMANDS[args.command](args)
    except KernelViolationError as error:
        _LOG.error("%s", error)
        return EXIT_KERNEL
    except (ValidationError, IOError) as error:
        _LOG.error("%s", error)
        return EXIT_INVALID
