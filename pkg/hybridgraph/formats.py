"""Reading and writing graphs, complexes, specs and certificates.

JSON schemas::

    graph        {"vertices": [1, 2, 3, 4], "edges": [[1, 2], [2, 3]]}
    complex      {"vertices": [...], "facets": [[...], [...]]}
    hybrid spec  {"base": <graph>, "parts": [[1], [2]],
                  "whisker_sizes": [2, 1]}   or   "whiskers": [[5, 6], [7]]
    certificate  {"order": [[...], ...],
                  "witnesses": [{"i": 1, "j": 0, "x": 7, "k": 0}, ...]}

The edge-list text format has one ``u v`` pair per line; a line with a
single label adds an isolated vertex, and ``#`` starts a comment.
"""
import json
import logging
from typing import Any, Dict, List, Union

from .complex import (MonomialGeneratorSet, ShellingCertificate,
                      SimplicialComplex, Witness)
from .errors import ParseError
from .graph import Graph
from .hybrid import (FacetBlock, HybridDecomposition, HybridSpec,
                     VariableOrder)

logger = logging.getLogger(__name__)


def _int_list(value: Any, what: str) -> List[int]:
    if not isinstance(value, list) or \
            any(type(v) is not int for v in value):
        raise ParseError(what + ' must be a list of integers')
    return value


def _set_list(value: Any, what: str) -> List[List[int]]:
    if not isinstance(value, list):
        raise ParseError(what + ' must be a list of lists of integers')
    return [_int_list(v, what + ' entry') for v in value]


def _field(data: Any, name: str) -> Any:
    if not isinstance(data, dict) or name not in data:
        raise ParseError('missing field "' + name + '"')
    return data[name]


def graph_to_json(g: Graph) -> Dict[str, Any]:
    return {'vertices': list(g.labels),
            'edges': [list(e) for e in g.edges]}


def graph_from_json(data: Any) -> Graph:
    """Reads a graph; repeated edges are rejected.

    Raises:
        ParseError: the data does not match the graph schema
    """
    vertices = _int_list(_field(data, 'vertices'), 'vertices')
    edges = _set_list(_field(data, 'edges'), 'edges')
    seen = set()
    for e in edges:
        if len(e) != 2:
            raise ParseError('edge ' + str(e) + ' must have two endpoints')
        key = frozenset(e)
        if key in seen:
            raise ParseError('edge ' + str(e) + ' is listed twice')
        seen.add(key)
    return Graph(vertices, edges)


def read_edge_list(text: str) -> Graph:
    """Reads the edge-list text format; vertices are inferred."""
    vertices = set()
    edges = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        try:
            labels = [int(t) for t in tokens]
        except ValueError:
            raise ParseError('line ' + str(number) + ': labels must be '
                             'integers') from None
        if len(labels) > 2:
            raise ParseError('line ' + str(number)
                             + ': expected "u v" or a single vertex')
        vertices.update(labels)
        if len(labels) == 2:
            edges.append(labels)
    return Graph(vertices, edges)


def write_edge_list(g: Graph) -> str:
    """Writes the edge-list text format, isolated vertices on their own
    lines."""
    lines = ['%d %d' % e for e in g.edges]
    touched = {v for e in g.edges for v in e}
    lines.extend(str(v) for v in g.labels if v not in touched)
    return '\n'.join(lines) + '\n'


def complex_to_json(c: SimplicialComplex) -> Dict[str, Any]:
    return {'vertices': list(c.vertices),
            'facets': [sorted(f) for f in c.facets]}


def complex_from_json(data: Any) -> SimplicialComplex:
    vertices = _int_list(_field(data, 'vertices'), 'vertices')
    facets = _set_list(_field(data, 'facets'), 'facets')
    return SimplicialComplex(vertices, facets)


def spec_to_json(spec: HybridSpec) -> Dict[str, Any]:
    return {'base': graph_to_json(spec.base),
            'parts': [sorted(a) for a in spec.parts],
            'whiskers': [list(b) for b in spec.whiskers]}


def spec_from_json(data: Any) -> HybridSpec:
    """Reads a hybrid spec with explicit whiskers or whisker sizes."""
    base = graph_from_json(_field(data, 'base'))
    parts = _set_list(_field(data, 'parts'), 'parts')
    if 'whiskers' in data:
        return HybridSpec(base, parts,
                          _set_list(data['whiskers'], 'whiskers'))
    sizes = _int_list(_field(data, 'whisker_sizes'), 'whisker_sizes')
    return HybridSpec.from_sizes(base, parts, sizes)


def decomposition_to_json(d: HybridDecomposition) -> Dict[str, Any]:
    return {'r': d.r,
            'base': graph_to_json(d.base),
            'parts': [sorted(a) for a in d.parts],
            'whiskers': [sorted(b) for b in d.whiskers]}


def blocks_to_json(blocks: List[FacetBlock]) -> Dict[str, Any]:
    facets = [f for b in blocks for f in b.facets]
    return {'total': len(facets),
            'blocks': [{'face': sorted(b.face),
                        'facets': [sorted(f) for f in b.facets]}
                       for b in blocks]}


def certificate_to_json(cert: ShellingCertificate) -> Dict[str, Any]:
    return {'order': [sorted(f) for f in cert.order],
            'witnesses': [w._asdict() for w in cert.witnesses]}


def certificate_from_json(data: Any) -> ShellingCertificate:
    order = _set_list(_field(data, 'order'), 'order')
    rows = data.get('witnesses', [])
    if not isinstance(rows, list):
        raise ParseError('witnesses must be a list')
    witnesses = []
    for row in rows:
        try:
            witnesses.append(Witness(int(row['i']), int(row['j']),
                                     int(row['x']), int(row['k'])))
        except (KeyError, TypeError, ValueError):
            raise ParseError('witness ' + repr(row)
                             + ' needs integer i, j, x, k') from None
    return ShellingCertificate(order, witnesses)


def load(path: str) -> Union[Graph, SimplicialComplex, HybridSpec,
                             ShellingCertificate]:
    """Loads any supported input file.

    ``.json`` files are told apart by their fields; anything else is read
    as an edge list.

    Raises:
        ParseError: the file cannot be read or matches no schema
    """
    try:
        with open(path) as f:
            text = f.read()
    except OSError as e:
        raise ParseError('cannot read ' + path + ': ' + str(e)) from None
    if not path.endswith('.json'):
        return read_edge_list(text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(path + ' is not valid JSON: ' + str(e)) from None
    if not isinstance(data, dict):
        raise ParseError(path + ' must hold a JSON object')
    if 'base' in data:
        return spec_from_json(data)
    if 'order' in data:
        return certificate_from_json(data)
    if 'facets' in data:
        return complex_from_json(data)
    if 'edges' in data:
        return graph_from_json(data)
    raise ParseError(path + ' matches no known schema')


def _monomial(support, order: VariableOrder, name) -> str:
    return '*'.join(name(v) for v in sorted(support, key=order.position))


def macaulay2_script(ideal: MonomialGeneratorSet,
                     order: VariableOrder) -> str:
    """Writes a Macaulay2 script defining the ring and the monomial ideal.

    Variables are declared in the variable order; base vertex v is ``x_v``
    and whisker y_{i,j} is ``y_i_j``.
    """
    ring = ', '.join(order.macaulay2_name(v) for v in order)
    if len(ideal):
        gens = ', '.join(_monomial(g, order, order.macaulay2_name)
                         for g in ideal)
    else:
        gens = '0_R'
    return ('R = QQ[' + ring + '];\n'
            + 'I = monomialIdeal(' + gens + ');\n')


def singular_script(ideal: MonomialGeneratorSet,
                    order: VariableOrder) -> str:
    """Writes a Singular script defining the ring and the ideal.

    Base vertex v is ``x(v)`` and whisker y_{i,j} is ``y(i)(j)``.
    """
    ring = ', '.join(order.singular_name(v) for v in order)
    if len(ideal):
        gens = ', '.join(_monomial(g, order, order.singular_name)
                         for g in ideal)
    else:
        gens = '0'
    return ('ring R = 0, (' + ring + '), dp;\n'
            + 'ideal I = ' + gens + ';\n')


def ideal_to_json(ideal: MonomialGeneratorSet) -> Dict[str, Any]:
    return {'generators': [sorted(g) for g in ideal]}


def ideal_text(ideal: MonomialGeneratorSet) -> str:
    """One generator per line, as space-separated vertex labels."""
    return ''.join(' '.join(str(v) for v in sorted(g)) + '\n'
                   for g in ideal)
