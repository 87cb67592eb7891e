# Command Line Interface

import argparse
import json
import logging
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from marshmallow import ValidationError

from src.config import get_config

from .exceptions import GraphFormatError, ParameterError, PvcError
from .models.instance import PvcInstance, Verdict
from .schemas import (
    audit_params_schema,
    decision_schema,
    gen_params_schema,
    kernel_stats_schema,
    kernelize_params_schema,
    ledger_row_schema,
    load_params,
    resolve_method,
    solve_params_schema,
    verify_params_schema,
)
from .services.audit_service import AuditService
from .services.general_kernel_service import GeneralKernelService
from .services.instance_service import InstanceService
from .services.oracle_service import OracleService
from .services.path_service import PathService
from .services.small_kernel_service import SmallKernelService
from .utils.graph_format import compaction, format_graph, read_graph, write_graph
from .utils.logging import log_run_details, setup_logging

logger = logging.getLogger(__name__)

# Exit code
EXIT_KERNEL = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_FORMAT = 3
EXIT_YES = 10
EXIT_NO = 20


def build_parser():
    parser = argparse.ArgumentParser(prog='pvc', description='d-Path Vertex Cover kernelization toolkit')
    parser.add_argument('--env', default=None, help='Configurazione (development, testing, production)')
    sub = parser.add_subparsers(dest='command', required=True)

    kernelize = sub.add_parser('kernelize', help='Riduce un\'istanza a un kernel')
    kernelize.add_argument('--d', type=int, required=True)
    kernelize.add_argument('--k', type=int, required=True)
    kernelize.add_argument('--method', default='auto', help='small, general o auto')
    kernelize.add_argument('input')
    kernelize.add_argument('-o', '--output', required=True)
    kernelize.add_argument('--stats', default=None, help='File STATS.json')

    solve = sub.add_parser('solve', help='Decisione esatta con un oracolo')
    solve.add_argument('--d', type=int, required=True)
    solve.add_argument('--k', type=int, required=True)
    solve.add_argument('--oracle', default='branching', help='branching o enumeration')
    solve.add_argument('input')

    verify = sub.add_parser('verify', help='Confronta oracolo su istanza e kernel per istanze casuali')
    verify.add_argument('--d', type=int, required=True)
    verify.add_argument('--kmax', type=int, required=True)
    verify.add_argument('--n', type=int, required=True)
    verify.add_argument('--m', type=int, default=None)
    verify.add_argument('--count', type=int, required=True)
    verify.add_argument('--seed', type=int, default=0)
    verify.add_argument('--method', default='auto')
    verify.add_argument('--workers', type=int, default=None)

    gen = sub.add_parser('gen', help='Genera un\'istanza')
    gen.add_argument('kind')
    gen.add_argument('--n', type=int, default=None)
    gen.add_argument('--m', type=int, default=None)
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--p', type=int, default=0)
    gen.add_argument('--q', type=int, default=0)
    gen.add_argument('--count', type=int, default=0)
    gen.add_argument('--d', type=int, default=None)
    gen.add_argument('--input', default=None)
    gen.add_argument('-o', '--output', default=None)

    audit = sub.add_parser('audit', help='Audit di dimensione e struttura di un\'istanza ridotta')
    audit.add_argument('--d', type=int, required=True)
    audit.add_argument('--k', type=int, required=True)
    audit.add_argument('input')

    return parser


def _params(args):
    return {key: value for key, value in vars(args).items() if key not in ('command', 'env')}


def _kernelize(inst, method, config):
    if method == 'small':
        return SmallKernelService.kernelize_small(inst, config)
    return GeneralKernelService.kernelize_general(inst, config)


def _verdict_code(verdict):
    if verdict is Verdict.YES:
        return EXIT_YES
    if verdict is Verdict.NO:
        return EXIT_NO
    return EXIT_KERNEL


# Sottocomandi

def run_kernelize(args, config):
    params = load_params(kernelize_params_schema, _params(args), config)
    graph = read_graph(params['input'])
    method = resolve_method(params['method'], params['d'], config)
    result = _kernelize(PvcInstance(graph=graph, d=params['d'], k=params['k']), method, config)

    write_graph(result.instance.graph, params['output'])
    if params['stats']:
        with open(params['stats'], 'w', encoding='utf-8') as handle:
            json.dump(kernel_stats_schema.dump(result.stats), handle, indent=2, sort_keys=True)

    log_run_details(logger, result.stats)
    stats = result.stats
    print(f'{method}: n {stats.n_in}->{stats.n_out}, m {stats.m_in}->{stats.m_out}, decided={stats.decided}')
    return _verdict_code(result.verdict)


def run_solve(args, config):
    params = load_params(solve_params_schema, _params(args), config)
    graph = read_graph(params['input'])
    d, k = params['d'], params['k']

    if params['oracle'] == 'enumeration':
        yes = OracleService.min_pvc(graph, d, config) <= k
        payload = {'yes': yes, 'witness': None}
    else:
        decision = OracleService.solve_branching(graph, d, k, config)
        yes = decision.yes
        index = compaction(graph)
        payload = decision_schema.dump(decision)
        if payload['witness'] is not None:
            payload['witness'] = sorted(index[v] for v in decision.witness)

    print(json.dumps(payload, sort_keys=True))
    return EXIT_YES if yes else EXIT_NO


def verify_instance(index, params, method, config):
    """Genera, kernelizza e confronta l'oracolo su istanza e kernel."""
    seed = params['seed'] + index
    rng = random.Random(seed)
    n, d = params['n'], params['d']
    k = rng.randint(0, params['kmax'])
    m = params['m'] if params['m'] is not None else rng.randint(0, min(n * (n - 1) // 2, 2 * n))
    row = {'index': index, 'seed': seed, 'n': n, 'm': m, 'd': d, 'k': k, 'method': method,
           'oracle_in': False, 'oracle_out': False, 'decided': None, 'n_out': 0, 'm_out': 0,
           'agree': False, 'error': None}

    graph = InstanceService.random_instance(n, m, seed)
    row['oracle_in'] = OracleService.solve_branching(graph, d, k, config).yes
    try:
        result = _kernelize(PvcInstance(graph=graph, d=d, k=k), method, config)
    except PvcError as e:
        row['error'] = str(e)
        return row

    reduced = result.instance
    row['decided'] = result.stats.decided
    row['n_out'], row['m_out'] = reduced.graph.num_vertices(), reduced.graph.num_edges()
    if reduced.decided:
        row['oracle_out'] = reduced.verdict is Verdict.YES
    else:
        row['oracle_out'] = OracleService.solve_branching(reduced.graph, reduced.d, reduced.k, config).yes
    row['agree'] = row['oracle_in'] == row['oracle_out']
    return row


def run_verify(args, config):
    params = load_params(verify_params_schema, _params(args), config)
    method = resolve_method(params['method'], params['d'], config)
    workers = params['workers'] or config.VERIFY_WORKERS

    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(lambda i: verify_instance(i, params, method, config), range(params['count'])))

    for row in rows:
        print(json.dumps(ledger_row_schema.dump(row), sort_keys=True))
    failures = [row['index'] for row in rows if not row['agree']]
    logger.info(f'verify: {len(rows) - len(failures)}/{len(rows)} instances agree')
    if failures:
        print(f'disagreement on instances {failures}', file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_KERNEL


def generate(params):
    """Costruisce il grafo richiesto da gen."""
    kind = params['kind']
    if kind == 'random':
        return InstanceService.random_instance(params['n'], params['m'], params['seed'])
    if kind == 'path':
        return InstanceService.path(params['n'])
    if kind == 'star':
        return InstanceService.star(params['q'])
    if kind == 'triangle':
        return InstanceService.triangle()
    if kind == 'distar':
        return InstanceService.di_star(params['p'], params['q'])
    if kind == 'star-triangle':
        return InstanceService.star_with_triangle(params['q'])
    if kind == 'pendant-matching':
        return InstanceService.pendant_matching_gadget(params['count'])
    return InstanceService.vc_to_dpvc(read_graph(params['input']), params['d'])


def run_gen(args, config):
    params = load_params(gen_params_schema, _params(args), config)
    graph = generate(params)
    if params['output']:
        write_graph(graph, params['output'])
    else:
        sys.stdout.write(format_graph(graph))
    return EXIT_KERNEL


def run_audit(args, config):
    params = load_params(audit_params_schema, _params(args), config)
    graph = read_graph(params['input'])
    inst = PvcInstance(graph=graph, d=params['d'], k=params['k'])

    outcome = PathService.greedy_packing(graph, inst.d, inst.k, config)
    if outcome.is_yes:
        print('graph is already P_d-free')
        return EXIT_YES
    if outcome.is_no:
        print(f'{len(outcome.packing)} disjoint paths exceed k={inst.k}')
        return EXIT_NO

    stats = AuditService.audit_kernel_size(inst, outcome.packing, config)
    print(json.dumps(kernel_stats_schema.dump(stats), indent=2, sort_keys=True))
    return EXIT_KERNEL


COMMANDS = {
    'kernelize': run_kernelize,
    'solve': run_solve,
    'verify': run_verify,
    'gen': run_gen,
    'audit': run_audit,
}


def main(argv=None):
    """
    Punto di ingresso della CLI.

    Returns:
        Exit code: 0 kernel scritto, 10 YES, 20 NO, 2 parametri non validi,
        3 file malformato, 1 altri errori
    """
    args = build_parser().parse_args(argv)
    config = get_config(args.env)
    setup_logging(config)

    try:
        return COMMANDS[args.command](args, config)
    except ValidationError as e:
        print(json.dumps({'message': 'Invalid parameters', 'errors': e.messages}, sort_keys=True), file=sys.stderr)
        return EXIT_INVALID
    except ParameterError as e:
        print(json.dumps({'message': str(e)}), file=sys.stderr)
        return EXIT_INVALID
    except GraphFormatError as e:
        print(json.dumps({'message': str(e), 'line': e.line_number}), file=sys.stderr)
        return EXIT_FORMAT
    except PvcError as e:
        logger.error(f'{args.command} failed: {e}', exc_info=True)
        print(json.dumps({'message': str(e)}), file=sys.stderr)
        return EXIT_FAILURE
    except OSError as e:
        print(json.dumps({'message': str(e)}), file=sys.stderr)
        return EXIT_FAILURE
