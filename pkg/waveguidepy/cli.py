"""The waveguidepy command line: run, extrema, presets, convert-loss.

Exit codes: 0 success, 2 invalid input (including I/O problems), 3 failed
accuracy check.
"""

import sys
import logging
import argparse

from .core import AccuracyError, ValidationError, WGTaskException
from .version import __version__
from .packages.coupler import wgsweep, wgextrema, wgpresets, wgconvloss


logger = logging.getLogger('waveguidepy')

EXIT_OK, EXIT_INVALID, EXIT_ACCURACY = 0, 2, 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog='waveguidepy',
        description='Entanglement of photon-number and squeezed light in coupled lossy waveguides')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='print progress (-vv for debugging output)')
    sub = parser.add_subparsers(dest='command', required=True)

    run = sub.add_parser('run', help='sweep one scenario and write E_N(tau) as CSV')
    run.add_argument('--config', required=True, help='key=value scenario file')
    run.add_argument('--out', default=None, help='output CSV (default: standard output)')

    ext = sub.add_parser('extrema', help='maxima and zero intervals of a sweep CSV')
    ext.add_argument('--in', dest='infile', required=True, help='sweep CSV file')

    sub.add_parser('presets', help='list the material presets')

    conv = sub.add_parser('convert-loss', help='convert dB/cm to a loss rate (1/s)')
    conv.add_argument('--db-per-cm', type=float, default=0.0, help='power loss in dB/cm')
    conv.add_argument('--speed', type=float, required=True, help='propagation speed in cm/s')
    conv.add_argument('--inverse', action='store_true', help='convert --rate to dB/cm instead')
    conv.add_argument('--rate', type=float, default=0.0, help='loss rate in 1/s (with --inverse)')
    return parser


def _run_command(args):
    common = dict(noprompt=True, verbose=0)
    if args.command == 'run':
        result = wgsweep(config=args.config, outfile=args.out or '', clobber=True, **common)
        if args.out is None:
            sys.stdout.write(result.custom['result'].to_csv())
        else:
            print(result.stdout, end='')
    elif args.command == 'extrema':
        result = wgextrema(infile=args.infile, **common)
        print(result.stdout, end='')
    elif args.command == 'presets':
        result = wgpresets(**common)
        print(result.stdout, end='')
    else:
        result = wgconvloss(db_per_cm=args.db_per_cm, speed=args.speed, inverse=args.inverse,
                            rate=args.rate, **common)
        value = result.custom['db_per_cm' if args.inverse else 'rate']
        print(repr(float(value)))
    return result.returncode


def main(argv=None):
    """Entry point of the waveguidepy console script; returns the exit code"""
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else logging.INFO,
                            format='%(levelname)s|%(name)s|%(message)s')
    try:
        return _run_command(args)
    except AccuracyError as err:
        print(f'waveguidepy: accuracy check failed: {err}', file=sys.stderr)
        return EXIT_ACCURACY
    except (ValidationError, WGTaskException, OSError) as err:
        print(f'waveguidepy: error: {err}', file=sys.stderr)
        return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())
