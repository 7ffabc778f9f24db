"""Command line front end.

    python -m bilch <command> [family <spec> | --file PATH] [options]

Input DGAs come from a file (--file), a built-in family or standard
input. Results go to stdout, diagnostics to stderr as "[tag] message"
lines. Exit status is 0 on success, 1 on a domain error (or a failed
validation) and 2 on a usage error.
"""

# built in modules
import sys
import json
import argparse

# project modules
from .augment import (AugmentationError, ChainComplex, bilinearize,
                      enumerate_augmentations, linearize, parse_selector)
from .complex import (ComplexError, LaurentPolynomial, betti,
                      homology_basis, poincare)
from .config import ConfigError, get_settings
from .dga import (DgaError, ValidationIssue, ValidationReport, parse_dga,
                  serialize, validate)
from .families import (FamilyError, attach_s, build_family,
                       realization_complex)
from .geography import (GeographyError, blch_admissible_split,
                        connected_sum_polynomial, lch_admissible_split,
                        plan_realization)
from .homotopy import HomotopyError, blch_table, homotopy_classes
from .ioutils import read_text, write_text
from .meta import Printer, timer


class UsageError(RuntimeError):
    """Error raised for invalid command lines"""

    def __init__(self, *args, **kwargs):
        super(UsageError, self).__init__(*args, **kwargs)


DOMAIN_ERRORS = (DgaError, AugmentationError, ComplexError, HomotopyError,
                 GeographyError, FamilyError, ConfigError)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def load_input(args):
    """DGA or ChainComplex named by the command line: "family <spec>",
    --file PATH, or standard input"""
    tokens = list(getattr(args, 'source', None) or [])
    if tokens:
        if tokens[0] != 'family':
            raise UsageError(
                'unexpected argument(s) "{}": use "family <spec>" or '
                '--file PATH'.format(' '.join(tokens)))
        if args.file:
            raise UsageError('give exactly one input source')
        if len(tokens) == 1:
            raise UsageError('"family" needs a family name')
        return build_family(tokens[1:])
    return parse_dga(read_text(args.file or '-'))


def _need_dga(obj, command):
    if isinstance(obj, ChainComplex):
        raise UsageError('"{}" needs a DGA, not a chain complex'.format(
            command))
    return obj


def _selected(dga, texts, settings, printer):
    """Augmentations picked by selectors (enumeration index or name=bit)"""
    augmentations = []
    if any(text.strip().isdigit() for text in texts):
        augmentations = enumerate_augmentations(
            dga, cap=settings.cap, printer=printer)
    return [parse_selector(dga, text, augmentations) for text in texts]


def _homology_output(cx, args, labels):
    poly = poincare(cx)
    if args.json:
        out = {'schema': 1, 'augmentations': labels,
               'poincare': str(poly),
               'betti': {str(k): v for k, v in betti(cx).items()}}
        if args.basis:
            out['basis'] = {str(k): [list(r) for r in homology_basis(cx, k)]
                            for k in betti(cx)}
        return _dumps(out)

    lines = [str(poly)]
    if args.basis:
        for k in betti(cx):
            lines.append('H_{}: {}'.format(k, ' ; '.join(
                ' + '.join(r) for r in homology_basis(cx, k))))
    return '\n'.join(lines)


def cmd_validate(args, settings, printer):
    obj = load_input(args)
    if isinstance(obj, ChainComplex):
        report = ValidationReport(
            ValidationIssue('d_squared', name, 'd(d({})) != 0'.format(name))
            for name in obj.square_zero_violations())
    else:
        report = validate(obj)
    text = _dumps(report.to_dict()) if args.json else report.to_text()
    return text, 0 if report.is_valid else 1


def cmd_augs(args, settings, printer):
    dga = _need_dga(load_input(args), 'augs')
    augmentations = enumerate_augmentations(
        dga, cap=settings.cap, printer=printer)
    if not augmentations:
        printer.warn('the DGA has no augmentations')
    if args.json:
        return _dumps({
            'schema': 1,
            'generators': [dga.generators[i].name
                           for i in dga.generators_of_degree(0)],
            'augmentations': [list(e.bits) for e in augmentations],
        }), 0
    if not augmentations:
        return 'no augmentations', 0
    return '\n'.join('{}: {}'.format(i, e.label())
                     for i, e in enumerate(augmentations)), 0


def _complex_for(args, settings, printer, selectors, command):
    obj = load_input(args)
    given = [s for s in selectors if s is not None]
    if isinstance(obj, ChainComplex):
        if given:
            raise UsageError('augmentation selectors need a DGA input')
        return obj, []
    if len(given) != len(selectors):
        raise UsageError('"{}" needs {}'.format(
            command, ' and '.join(
                '--e{}'.format(i + 1) for i in range(len(selectors)))))
    augs = _selected(obj, given, settings, printer)
    if len(augs) == 1:
        return linearize(obj, augs[0]), [augs[0].label()]
    return bilinearize(obj, augs[0], augs[1]), [e.label() for e in augs]


def cmd_lin(args, settings, printer):
    cx, labels = _complex_for(args, settings, printer, [args.e1], 'lin')
    return _homology_output(cx, args, labels), 0


def cmd_blch(args, settings, printer):
    cx, labels = _complex_for(args, settings, printer,
                              [args.e1, args.e2], 'blch')
    return _homology_output(cx, args, labels), 0


def cmd_table(args, settings, printer):
    dga = _need_dga(load_input(args), 'table')
    table = blch_table(dga, cap=settings.cap, workers=settings.workers,
                       printer=printer)
    return (table.to_json() if args.json else table.to_text()), 0


def cmd_classes(args, settings, printer):
    dga = _need_dga(load_input(args), 'classes')
    partition = homotopy_classes(
        dga, method=settings.method, cap=settings.cap,
        workers=settings.workers, printer=printer)
    return (partition.to_json() if args.json else partition.to_text()), 0


def _polynomial(args):
    if args.poly is None or args.n is None:
        raise UsageError('--poly and --n are required')
    return LaurentPolynomial.parse(args.poly)


def cmd_admissible(args, settings, printer):
    P = _polynomial(args)
    finder = lch_admissible_split if args.mode == 'lch' else \
        blch_admissible_split
    split = finder(P, args.n)
    if args.json:
        out = {'schema': 1, 'mode': args.mode, 'n': args.n,
               'poly': str(P), 'admissible': split is not None}
        if split is not None:
            out.update(q=str(split.q), p=str(split.p))
        return _dumps(out), 0
    if split is None:
        return 'not admissible', 0
    return 'q = {}\np = {}'.format(split.q, split.p), 0


def cmd_realize(args, settings, printer):
    plan = plan_realization(_polynomial(args), args.n)
    if args.complex:
        cx = realization_complex(plan)
        printer('chain model: {} generators, Poincaré polynomial {}'.format(
            len(cx), poincare(cx)))
        return cx.to_text(), 0
    return (plan.to_json() if args.json else plan.to_text()), 0


def cmd_connsum(args, settings, printer):
    if args.poly is not None:
        if args.source or args.file or args.rho:
            raise UsageError('--poly does not combine with an input or --rho')
        before = _polynomial(args)
        after = connected_sum_polynomial(before, args.n, args.rho_vanishes)
    else:
        if args.rho is None:
            raise UsageError('connsum needs --poly or --rho')
        cx, _ = _complex_for(args, settings, printer,
                             [args.e1, args.e2], 'connsum')
        rho = [name.strip() for name in args.rho.split(',') if name.strip()]
        before = poincare(cx)
        after = poincare(attach_s(cx, cx.n, rho))
    if args.json:
        return _dumps({'schema': 1, 'before': str(before),
                       'after': str(after)}), 0
    return str(after), 0


def cmd_family(args, settings, printer):
    obj = build_family(args.spec)
    if isinstance(obj, ChainComplex):
        return obj.to_text(), 0
    return serialize(obj), 0


COMMANDS = {
    'validate': cmd_validate,
    'augs': cmd_augs,
    'lin': cmd_lin,
    'blch': cmd_blch,
    'table': cmd_table,
    'classes': cmd_classes,
    'admissible': cmd_admissible,
    'realize': cmd_realize,
    'connsum': cmd_connsum,
    'family': cmd_family,
}


def build_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument('--config', metavar='PATH',
                        help='JSON settings file (default: ~/.bilch)')
    common.add_argument('-v', '--verbose', action='store_true', default=None,
                        help='status output on stderr')
    common.add_argument('--workers', type=int, default=None,
                        help='processes for pairwise computations')
    common.add_argument('--cap', type=int, default=None,
                        help='maximal number of degree 0 generators')
    common.add_argument('--json', action='store_true')

    source = _ArgumentParser(add_help=False)
    source.add_argument('source', nargs='*', metavar='family SPEC',
                        help='built-in family, e.g. "family hopf n=2 k=1"')
    source.add_argument('--file', metavar='PATH', help='DGA text file')

    pair = _ArgumentParser(add_help=False)
    pair.add_argument('--e1', metavar='SELECTOR',
                      help='augmentation index or name=bit list')
    pair.add_argument('--e2', metavar='SELECTOR')

    poly = _ArgumentParser(add_help=False)
    poly.add_argument('--poly', metavar='POLY')
    poly.add_argument('--n', type=int, metavar='DIM')

    parser = _ArgumentParser(
        prog='bilch',
        description='Bilinearized Legendrian contact homology over GF(2)')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    commands.add_parser('validate', parents=[common, source],
                        help='check the laws of the differential')
    commands.add_parser('augs', parents=[common, source],
                        help='enumerate augmentations')

    lin = commands.add_parser('lin', parents=[common, source],
                              help='linearized Poincaré polynomial')
    lin.add_argument('--e1', '--e', dest='e1', metavar='SELECTOR')
    lin.add_argument('--basis', action='store_true')

    blch = commands.add_parser('blch', parents=[common, source, pair],
                               help='bilinearized Poincaré polynomial')
    blch.add_argument('--basis', action='store_true')

    commands.add_parser('table', parents=[common, source],
                        help='Poincaré polynomials of all pairs')

    classes = commands.add_parser('classes', parents=[common, source],
                                  help='DGA homotopy classes')
    classes.add_argument('--method', default=None,
                         choices=('witness', 'dimension', 'cross',
                                  'cross_check'))

    admissible = commands.add_parser('admissible', parents=[common, poly],
                                     help='admissible split of a polynomial')
    admissible.add_argument('--mode', choices=('blch', 'lch'),
                            default='blch')

    realize = commands.add_parser('realize', parents=[common, poly],
                                  help='realization plan of a polynomial')
    realize.add_argument('--complex', action='store_true',
                         help='emit the chain model of the plan')

    connsum = commands.add_parser(
        'connsum', parents=[common, source, pair, poly],
        help='connected sum, on a polynomial or at chain level')
    connsum.add_argument('--rho-vanishes', action='store_true',
                         help='polynomial mode: the connected sum adds '
                              't^(n-1) instead of removing t^n')
    connsum.add_argument('--rho', metavar='NAMES',
                         help='chain mode: degree n generators where rho '
                              'is 1, comma separated')

    family = commands.add_parser('family', parents=[common],
                                 help='emit a built-in DGA or complex')
    family.add_argument('spec', nargs='+', metavar='SPEC')

    return parser


def run(argv=None, stdout=None, stderr=None):
    """Runs the command line argv and returns the exit status"""
    stdout = sys.stdout if stdout is None else stdout
    printer = Printer(tag='bilch', on=False, output=stderr)

    try:
        args = build_parser().parse_args(argv)
        settings = get_settings(
            *([args.config] if args.config else []),
            cap=args.cap, workers=args.workers,
            method=getattr(args, 'method', None), verbose=args.verbose)
        printer.on = settings.verbose
        command = timer(COMMANDS[args.command], printer=printer,
                        comment=args.command)
        text, status = command(args, settings, printer)
        write_text(stdout, text)
        return status
    except UsageError as e:
        printer.error('UsageError: {}'.format(e))
        return 2
    except DOMAIN_ERRORS as e:
        printer.error('{}: {}'.format(type(e).__name__, e))
        return 1
    except (OSError, UnicodeDecodeError) as e:
        printer.error('{}: {}'.format(type(e).__name__, e))
        return 1
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0


def main():
    sys.exit(run(sys.argv[1:]))
