"""
Command line front end.

    fatflats [--config FILE] [--log FILE] [--verbose] <command> [options]

Every command is a thin adapter around one library call; results go to
standard output (or --out FILE), diagnostics to the error stream.

Exit codes: 0 success, 1 usage error, 2 precondition violation,
3 verification failure.
"""
from __future__ import division, absolute_import

import argparse
import csv
import io
import json
import sys
from collections import OrderedDict

from fatflats import bounds, classify, hilbert, oracle, veneroni
from fatflats.common import (FatFlatValueError, load_config, parse_int,
                             parse_int_list)
from fatflats.diagnostics import diagnostic_manager
from fatflats.verify import run_verify

__all__ = ['run', 'main', 'render', 'read_scan_csv', 'SCAN_COLUMNS', 'FORMATS']


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_VERIFY = 3

FORMATS = ('table', 'csv', 'json')

SCAN_COLUMNS = ('n', 'k', 'deg_source', 'deg_target', 'adim', 'vdim', 'verdict')

SCAN_COMMANDS = ('scan', 'summary')


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; we reserve 2 for
    precondition violations.
    """
    def error(self, message):
        raise UsageError("%s\n%s: error: %s" % (self.format_usage().rstrip(),
                                                self.prog, message))


# ----------------------------------------------------------------------
# rendering

def _cell(val):
    if isinstance(val, bool):
        return 'true' if val else 'false'
    if val is None:
        return ''
    if isinstance(val, (tuple, list)):
        return ','.join(str(v) for v in val)
    return str(val)


def _json_cell(val):
    if isinstance(val, bool) or val is None:
        return val
    return _cell(val)


def render(rows, fmt, as_list=False):
    """
    Render a list of OrderedDicts sharing the same keys.
    A single row with a single field renders as the bare value in
    table format. JSON gives one flat object, or an array of them when
    *as_list* is set.
    """
    if fmt == 'json':
        objs = [OrderedDict((k, _json_cell(v)) for k, v in row.items())
                for row in rows]
        data = objs if as_list else objs[0]
        return json.dumps(data, indent=1) + '\n'
    if not rows:
        return ''
    keys = list(rows[0].keys())
    if fmt == 'csv':
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(keys)
        for row in rows:
            writer.writerow([_cell(row[k]) for k in keys])
        return buf.getvalue()
    # table
    if len(rows) == 1 and len(keys) == 1:
        return _cell(rows[0][keys[0]]) + '\n'
    cells = [keys] + [[_cell(row[k]) for k in keys] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(keys))]
    lines = ['  '.join(c.rjust(w) for c, w in zip(r, widths)).rstrip()
             for r in cells]
    return '\n'.join(lines) + '\n'


def _record_row(rec):
    return OrderedDict(zip(SCAN_COLUMNS, (rec.n, rec.k, rec.source_degree,
                                          rec.target_degree, rec.adim,
                                          rec.vdim, rec.verdict)))


def read_scan_csv(text):
    """
    Parse `scan --format csv` output back into ClassificationRecords.
    """
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != SCAN_COLUMNS:
        raise ValueError("Unexpected scan header: %r" % (header,))
    records = []
    for row in reader:
        if not row:
            continue
        n, k, ds, dt, adim, vdim = [int(v) for v in row[:6]]
        if row[6] not in classify.VERDICTS:
            raise ValueError("Unknown verdict: %s" % row[6])
        records.append(classify.ClassificationRecord(n, k, ds, dt, adim,
                                                     vdim, row[6]))
    return records


# ----------------------------------------------------------------------
# commands: each returns (rows, as_list)

def _scalar(name, value):
    return [OrderedDict([(name, value)])], False


def cmd_vdim(args, ctx):
    scheme = hilbert.FatFlatScheme(args.n, args.mults)
    return _scalar('vdim', hilbert.vdim_recursive(scheme, args.t))


def cmd_edim(args, ctx):
    scheme = hilbert.FatFlatScheme(args.n, args.mults)
    return _scalar('edim', hilbert.expected_dim(scheme, args.t))


def cmd_profile(args, ctx):
    scheme = hilbert.FatFlatScheme(args.n, args.mults)
    rows = [OrderedDict([('t', t), ('vdim', v)])
            for t, v in hilbert.vdim_profile(scheme, args.t_min, args.t_max)]
    return rows, True


def cmd_sform(args, ctx):
    return _scalar('S', hilbert.s_formula(args.n, args.s, args.t))


def cmd_conds(args, ctx):
    return _scalar('conditions', hilbert.conditions_fat_flat(args.n, args.codim,
                                                             args.mult, args.t))


def cmd_adim_bound(args, ctx):
    return _scalar('adim_upper', bounds.adim_upper_mult1(args.n, args.s, args.t))


def cmd_certify(args, ctx):
    return _scalar('certified', bounds.lower_certificate(args.n, args.s, args.t))


def cmd_report(args, ctx):
    rep = bounds.report_mult1(args.n, args.s, args.t)
    return [OrderedDict(zip(rep._fields, rep))], False


def cmd_adim_family(args, ctx):
    return _scalar('adim', bounds.adim_family(args.n, args.k))


def cmd_transform(args, ctx):
    sys_ = veneroni.veneroni_pullback(
                veneroni.LinearSystem(args.n, args.degree, args.mults))
    row = OrderedDict([('n', sys_.ambient_dim), ('degree', sys_.degree),
                       ('mults', sys_.multiplicities), ('valid', sys_.valid)])
    return [row], False


def cmd_classify(args, ctx):
    return [_record_row(classify.classify_family(args.n, args.k))], False


def cmd_scan(args, ctx):
    jobs = args.jobs if args.jobs is not None else ctx['config']['scan']['jobs']
    records = classify.scan(args.k, args.n_min, args.n_max, jobs=jobs,
                            log=ctx['log'])
    return [_record_row(rec) for rec in records], True


def cmd_summary(args, ctx):
    records = classify.scan(args.k, args.n_min, args.n_max, log=ctx['log'])
    rows = [OrderedDict([('verdict', v), ('n_first', lo), ('n_last', hi)])
            for v, lo, hi in classify.summarize(records)]
    return rows, True


def cmd_oracle(args, ctx):
    cfg = oracle.OracleConfig.from_config(ctx['config'], seed=args.seed,
                                          prime=args.prime)
    return _scalar('adim', oracle.adim_rank_oracle(args.n, args.mults, args.t,
                                                   cfg, log=ctx['log']))


def cmd_verify(args, ctx):
    config = ctx['config']
    grid_max = args.grid_max if args.grid_max is not None \
                             else config['verify']['grid_max']
    seeds = args.seeds if args.seeds is not None else config['verify']['seeds']
    passed, failures = run_verify(grid_max=grid_max, seeds=seeds,
                                  oracle_config=oracle.OracleConfig.from_config(config),
                                  log=ctx['log'])
    for f in failures:
        ctx['err'].write(f + '\n')
    row = OrderedDict([('passed', passed), ('failures', len(failures))])
    ctx['exit'] = EXIT_VERIFY if failures else EXIT_OK
    return [row], False


# ----------------------------------------------------------------------
# argument grammar

# named for argparse error messages
def integer(text):
    return parse_int(text)


def int_list(text):
    return parse_int_list(text)


def make_parser():
    common = _Parser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default=None)
    common.add_argument('--out', default=None, metavar='FILE',
                        help='write the rendering to FILE instead of stdout')

    parser = _Parser(prog='fatflats',
                     description='Dimensions of linear systems through fat '
                                 'codimension 2 flats in P^n')
    parser.add_argument('--config', default=None, metavar='FILE')
    parser.add_argument('--log', default=None, metavar='FILE',
                        help='TinyDB JSON file receiving computation events')
    parser.add_argument('--verbose', action='store_true',
                        help='echo events to the error stream')
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)

    def add(name, fn, *flags, **kw):
        p = sub.add_parser(name, parents=[common], help=kw.get('help'))
        for flag, typ, required in flags:
            p.add_argument(flag, type=typ, required=required)
        p.set_defaults(func=fn)
        return p

    N = ('--n', integer, True)
    T = ('--t', integer, True)
    S = ('--s', integer, True)
    K = ('--k', integer, True)
    MULTS = ('--mults', int_list, True)

    add('vdim', cmd_vdim, N, MULTS, T, help='virtual dimension (recursion)')
    add('edim', cmd_edim, N, MULTS, T, help='expected dimension max(vdim, 0)')
    add('profile', cmd_profile, N, MULTS, ('--t-min', integer, True),
        ('--t-max', integer, True), help='vdim over a range of degrees')
    add('sform', cmd_sform, N, S, T, help='closed form S_{n,s,t}')
    add('conds', cmd_conds, N, ('--codim', integer, True), ('--mult', integer, True),
        T, help='conditions imposed by one fat linear subspace')
    add('adim-bound', cmd_adim_bound, N, S, T,
        help='Castelnuovo upper bound for multiplicity 1')
    add('certify', cmd_certify, N, S, T, help='lower bound certificate')
    add('report', cmd_report, N, S, T, help='bounds report for multiplicity 1')
    add('adim-family', cmd_adim_family, N, K,
        help='actual dimension of the Veneroni family')
    add('transform', cmd_transform, N, ('--degree', integer, True), MULTS,
        help='Veneroni pullback of a linear system')
    add('classify', cmd_classify, N, K, help='classify one family member')
    add('scan', cmd_scan, K, ('--n-min', integer, True), ('--n-max', integer, True),
        ('--jobs', integer, False), help='classify a range of n')
    add('summary', cmd_summary, K, ('--n-min', integer, True),
        ('--n-max', integer, True), help='verdict runs of a scan')
    add('oracle', cmd_oracle, N, MULTS, T, ('--seed', integer, False),
        ('--prime', integer, False), help='finite field rank oracle for adim')
    add('verify', cmd_verify, ('--grid-max', integer, False), ('--seeds', integer, False),
        help='run the verification suite')
    return parser


def run(argv, out=None, err=None):
    """
    Execute one command line. Returns the exit code.
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, 'func', None) is None:
            raise UsageError(parser.format_usage().rstrip() +
                             "\nfatflats: error: a command is required")
    except UsageError as e:
        err.write(str(e) + '\n')
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return EXIT_OK if not e.code else EXIT_USAGE

    try:
        config = load_config(args.config)
    except (IOError, OSError, FatFlatValueError) as e:
        err.write("fatflats: configuration error: %s\n" % e)
        return EXIT_USAGE

    dbfilepath = args.log if args.log is not None else config['log']['dbfilepath']
    echo = args.verbose or config['log']['echo']
    dm = diagnostic_manager('fatflats', make_log=True, dbfilepath=dbfilepath,
                            filestream=err if echo else None)
    log = dm.log.bind(command=args.command)
    ctx = {'config': config, 'log': log, 'err': err, 'exit': EXIT_OK}
    try:
        try:
            rows, as_list = args.func(args, ctx)
        except FatFlatValueError as e:
            log.user_error('precondition', message=str(e))
            err.write("fatflats: %s\n" % e)
            return EXIT_PRECONDITION
        fmt = args.format
        if fmt is None:
            # the configured format applies to scan output only
            fmt = config['scan']['format'] if args.command in SCAN_COMMANDS \
                                            else 'table'
        text = render(rows, fmt, as_list=as_list)
        if args.out:
            try:
                with open(args.out, 'w') as f:
                    f.write(text)
            except OSError as e:
                log.user_error('output', message=str(e))
                err.write("fatflats: cannot write output: %s\n" % e)
                return EXIT_USAGE
        else:
            out.write(text)
        return ctx['exit']
    finally:
        dm.close()


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
