"""Command-line front end.

Usage::

    hybridgraph VERB --input PATH [--output PATH] [--format FORMAT]
                [--budget NODES] [--seed SEED] [--json] [-v]

Exit status: 0 on success, 1 on a negative verdict, 2 on bad input, 3 when
the shelling search budget runs out.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional, Tuple

from . import formats
from .complex import (CM_VIA_SHELLING, DEFAULT_NODE_BUDGET, SearchStatus,
                      ShellingCertificate, SimplicialComplex,
                      cohen_macaulay_status, edge_ideal_generators,
                      find_shelling, independence_complex, is_shelling_order)
from .errors import BudgetExhausted, ParseError
from .graph import Graph
from .hybrid import (CM_CHORDAL, HybridSpec, VariableOrder, build_hybrid,
                     canonical_shelling_order, chordal_cm_check,
                     hybrid_facets, krull_dimension, recognize_hybrid)
from .selftest import SUITES, run_all
from .version_info import VERSION

logger = logging.getLogger(__name__)

VERBS = ['build', 'facets', 'shell', 'verify-shell', 'recognize',
         'cm-chordal', 'unmixed', 'ideal', 'selftest']

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog='hybridgraph',
        description='Build hybrid graphs and certify Cohen-Macaulay edge '
                    'ideals through shellings.')
    p.add_argument('verb', choices=VERBS)
    p.add_argument('--input', help='graph, complex or spec file (.json), or '
                                   'an edge list')
    p.add_argument('--certificate', help='certificate file for verify-shell')
    p.add_argument('--output', help='write the report here, not to stdout')
    p.add_argument('--format', choices=['json', 'm2', 'singular', 'text'],
                   default='text')
    p.add_argument('--json', action='store_true',
                   help='same as --format json')
    p.add_argument('--budget', type=int, default=DEFAULT_NODE_BUDGET,
                   help='shelling search node budget')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--random', type=int, default=None, metavar='N',
                   help='cases per selftest suite')
    p.add_argument('-v', '--verbose', action='store_true')
    p.add_argument('--version', action='version', version=VERSION)
    return p


def parse_command(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parses a command line; unknown flags exit with status 2."""
    command = parser().parse_args(argv)
    if command.json:
        command.format = 'json'
    return command


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + '\n'


def _braces(members) -> str:
    return '{' + ','.join(str(v) for v in sorted(members)) + '}'


def _load_input(command: argparse.Namespace):
    if not command.input:
        raise ParseError(command.verb + ' needs --input')
    return formats.load(command.input)


def _need(obj, kinds, verb):
    if not isinstance(obj, kinds):
        names = ' or '.join(k.__name__ for k in kinds)
        raise ParseError(verb + ' expects a ' + names + ' input, got '
                         + type(obj).__name__)
    return obj


def _as_complex(obj) -> SimplicialComplex:
    if isinstance(obj, Graph):
        return independence_complex(obj)
    if isinstance(obj, HybridSpec):
        return independence_complex(build_hybrid(obj))
    return obj


def _build(command, obj) -> Tuple[int, str]:
    spec = _need(obj, (HybridSpec,), 'build')
    g = build_hybrid(spec)
    if command.format == 'json':
        return EXIT_OK, _dump(formats.graph_to_json(g))
    header = '# ' + spec.name + ': ' + g.name + '\n'
    return EXIT_OK, header + formats.write_edge_list(g)


def _facets(command, obj) -> Tuple[int, str]:
    obj = _need(obj, (HybridSpec, Graph), 'facets')
    if isinstance(obj, Graph):
        sets = obj.maximal_independent_sets()
        if command.format == 'json':
            return EXIT_OK, _dump({'total': len(sets),
                                   'facets': [sorted(s) for s in sets]})
        return EXIT_OK, ''.join(_braces(s) + '\n' for s in sets)
    blocks = hybrid_facets(obj)
    if command.format == 'json':
        data = formats.blocks_to_json(blocks)
        data['dimension'] = krull_dimension(obj) - 1
        return EXIT_OK, _dump(data)
    lines = []
    for block in blocks:
        lines.append(_braces(block.face) + ' (' + str(len(block)) + '): '
                     + ', '.join(_braces(f) for f in block.facets))
    total = sum(len(b) for b in blocks)
    lines.append(str(total) + ' facets in ' + str(len(blocks))
                 + ' blocks, each of size ' + str(obj.r))
    return EXIT_OK, '\n'.join(lines) + '\n'


def _certificate_report(command, cert, status: str) -> str:
    if command.format == 'json':
        data = formats.certificate_to_json(cert)
        data['status'] = status
        return _dump(data)
    lines = [str(p) + ': ' + _braces(f) for p, f in enumerate(cert.order)]
    lines.append(status)
    return '\n'.join(lines) + '\n'


def _shell(command, obj) -> Tuple[int, str]:
    obj = _need(obj, (HybridSpec, Graph, SimplicialComplex), 'shell')
    if isinstance(obj, HybridSpec):
        cert = canonical_shelling_order(obj)
        return EXIT_OK, _certificate_report(command, cert, CM_VIA_SHELLING)
    c = _as_complex(obj)
    search = find_shelling(c, command.budget) if c.is_pure() else None
    status = cohen_macaulay_status(c, search)
    certificate = search.result_or_raise() if search is not None else None
    if certificate is None:
        return EXIT_NEGATIVE, 'not shellable: ' + status + '\n'
    return EXIT_OK, _certificate_report(command, certificate, status)


def _verify_shell(command, obj) -> Tuple[int, str]:
    obj = _need(obj, (HybridSpec, Graph, SimplicialComplex), 'verify-shell')
    if not command.certificate:
        raise ParseError('verify-shell needs --certificate')
    claimed = _need(formats.load(command.certificate),
                    (ShellingCertificate,), 'verify-shell')
    result = is_shelling_order(_as_complex(obj), claimed.order)
    witnesses_ok = not claimed.witnesses or claimed.verify()
    if result.valid and witnesses_ok:
        return EXIT_OK, 'valid shelling order\n'
    if not result.valid:
        i, j = result.pair
        return EXIT_NEGATIVE, ('not a shelling order: no witness for facet '
                               + str(i) + ' against facet ' + str(j) + '\n')
    return EXIT_NEGATIVE, 'shelling order holds but a witness is wrong\n'


def _recognize(command, obj) -> Tuple[int, str]:
    g = _need(obj, (Graph,), 'recognize')
    found = recognize_hybrid(g)
    if found is None:
        if command.format == 'json':
            return EXIT_NEGATIVE, _dump({'hybrid': False})
        return EXIT_NEGATIVE, 'not hybrid\n'
    if command.format == 'json':
        data = formats.decomposition_to_json(found)
        data['hybrid'] = True
        return EXIT_OK, _dump(data)
    lines = ['hybrid with r = ' + str(found.r),
             'base: ' + repr(found.base)]
    for a, b in zip(found.parts, found.whiskers):
        lines.append('A = ' + _braces(a) + '  B = ' + _braces(b))
    return EXIT_OK, '\n'.join(lines) + '\n'


def _cm_chordal(command, obj) -> Tuple[int, str]:
    g = _need(obj, (Graph,), 'cm-chordal')
    report = chordal_cm_check(g, command.budget)
    if report.shelling is not None \
            and report.shelling.status is SearchStatus.EXHAUSTED \
            and report.cohen_macaulay is None:
        code = EXIT_BUDGET
    elif report.verdict in (CM_CHORDAL, CM_VIA_SHELLING):
        code = EXIT_OK
    else:
        code = EXIT_NEGATIVE
    if command.format == 'json':
        data = {'chordal': report.chordal,
                'tree': report.is_tree,
                'unmixed': report.unmixed,
                'consistent': report.consistent,
                'verdict': report.verdict,
                'hybrid': None if report.hybrid is None else
                formats.decomposition_to_json(report.hybrid)}
        if report.chordal:
            data['elimination_order'] = report.elimination_order
            data['free_facets'] = [sorted(f) for f in report.free_facets]
            data['free_facet_partition'] = (
                None if report.free_facet_partition is None else
                [sorted(f) for f in report.free_facet_partition])
        return code, _dump(data)
    lines = ['chordal: ' + str(report.chordal),
             'unmixed: ' + str(report.unmixed),
             'hybrid: ' + str(report.hybrid is not None)]
    if report.chordal:
        lines.append('facets with a free vertex: '
                     + ', '.join(_braces(f) for f in report.free_facets))
        lines.append('they partition the vertices: '
                     + str(report.free_facet_partition is not None))
    else:
        lines.append('chordal characterization does not apply')
    lines.append('verdict: ' + report.verdict)
    return code, '\n'.join(lines) + '\n'


def _unmixed(command, obj) -> Tuple[int, str]:
    g = _need(obj, (Graph,), 'unmixed')
    covers = g.minimal_vertex_covers()
    unmixed = g.is_unmixed()
    code = EXIT_OK if unmixed else EXIT_NEGATIVE
    if command.format == 'json':
        return code, _dump({'unmixed': unmixed,
                            'covers': [sorted(c) for c in covers]})
    sizes = sorted({len(c) for c in covers})
    return code, ('unmixed' if unmixed else 'not unmixed') + \
        ' (minimal vertex cover sizes ' + str(sizes) + ')\n'


def _ideal(command, obj) -> Tuple[int, str]:
    obj = _need(obj, (Graph, HybridSpec, SimplicialComplex), 'ideal')
    if isinstance(obj, Graph):
        ideal = edge_ideal_generators(obj)
        order = VariableOrder.for_graph(obj)
    elif isinstance(obj, HybridSpec):
        ideal = edge_ideal_generators(build_hybrid(obj))
        order = obj.variable_order()
    else:
        ideal = obj.stanley_reisner_generators()
        order = VariableOrder(obj.vertices)
    if command.format == 'm2':
        return EXIT_OK, formats.macaulay2_script(ideal, order)
    if command.format == 'singular':
        return EXIT_OK, formats.singular_script(ideal, order)
    if command.format == 'json':
        return EXIT_OK, _dump(formats.ideal_to_json(ideal))
    return EXIT_OK, formats.ideal_text(ideal)


def _selftest(command) -> Tuple[int, str]:
    results = run_all(command.random, command.seed)
    failed = sum(len(f) for f in results.values())
    if command.format == 'json':
        return (EXIT_OK if not failed else EXIT_NEGATIVE), _dump(results)
    lines = []
    for name in SUITES:
        lines.append(name + ': ' + str(len(results[name])) + ' failures')
        lines.extend('  ' + message for message in results[name][:5])
    return (EXIT_OK if not failed else EXIT_NEGATIVE), '\n'.join(lines) + '\n'


HANDLERS = {
    'build': _build,
    'facets': _facets,
    'shell': _shell,
    'verify-shell': _verify_shell,
    'recognize': _recognize,
    'cm-chordal': _cm_chordal,
    'unmixed': _unmixed,
    'ideal': _ideal,
}


def run(command: argparse.Namespace) -> Tuple[int, str]:
    """Runs one command.

    Returns:
        (int, str): the exit status and the report text
    """
    try:
        if command.verb == 'selftest':
            return _selftest(command)
        return HANDLERS[command.verb](command, _load_input(command))
    except BudgetExhausted as e:
        return EXIT_BUDGET, str(e) + '; this is not a negative answer\n'
    except ValueError as e:
        # every HybridGraphError, plus bad labels and part counts
        logger.debug('input error', exc_info=True)
        return EXIT_INPUT, 'error: ' + str(e) + '\n'


def main(argv: Optional[List[str]] = None) -> int:
    command = parse_command(argv)
    logging.basicConfig(
        level=logging.DEBUG if command.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s')
    code, report = run(command)
    if command.output:
        with open(command.output, 'w') as f:
            f.write(report)
    else:
        (sys.stdout if code in (EXIT_OK, EXIT_NEGATIVE)
         else sys.stderr).write(report)
    return code


if __name__ == '__main__':
    sys.exit(main())
