"""hybridgraph builds hybrid graphs and certifies Cohen--Macaulay edge ideals.

It contains functionality for building hybrid graphs from a base graph and a
clique partition, listing and shelling the facets of their independence
complexes, recognizing hybrid graphs, and deciding the Cohen--Macaulay
property of chordal graphs

"""
# Import version info
from .version_info import VERSION_INT, VERSION  # noqa

# Import main classes
from .errors import HybridGraphError    # noqa
from .graph import Graph    # noqa
from .complex import (    # noqa
    MonomialGeneratorSet, SearchStatus, ShellingCertificate,
    ShellingViolation, SimplicialComplex, Witness, clique_complex,
    cohen_macaulay_status, edge_ideal_generators, find_shelling,
    independence_complex, is_shelling_order)
from .hybrid import (    # noqa
    CMReport, FacetBlock, HybridDecomposition, HybridSpec, VariableOrder,
    build_hybrid, canonical_shelling_order, chordal_cm_check, clique_whisker,
    free_vertex_facets, hybrid_complex, hybrid_facets, hybrid_family,
    krull_dimension, recognize_hybrid, tree_cm_check, whisker)
