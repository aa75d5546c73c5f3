"""Distance spectra of small graphs and the structural characterization of
tricyclic graphs whose second largest distance eigenvalue is below -1/2."""

from .classify import Verdict, classify_tricyclic, scan_forbidden, verify_against_spectrum
from .enumeration import VerificationReport, blockgraph_check, enumerate_connected, theorem_check
from .errors import (
    ClassificationError, ContractViolation, DisconnectedGraphError, DomainError, Graph6Error,
    GraphError, NumericalError, ParameterError, PartitionError, ResourceGuardError,
    UnsupportedSizeError,
)
from .families import (
    Family, FamilySpec, enumerate_family_members, forbidden_graph, generate, parse_spec,
    t3_partition, t4_partition,
)
from .graph_core import Graph, cyclomatic_number, distance_matrix, parse_graph6, write_graph6
from .spectra import (
    IntPolynomial, Partition, QuotientMatrix, Spectrum, char_poly, distance_spectrum,
    eigenvalues_symmetric, interlacing_holds, lambda2, multiplicity, quotient_matrix,
    quotient_spectrum_contained,
)
from .structure import (
    BaseType, BlockDecomposition, base_of, base_type, block_decomposition,
    blockgraph_lambda2_below, embeds_as_induced, is_block_graph, is_block_star, is_chordal,
    is_loose_block_graph,
)
from .subgraph import (
    CanonicalForm, Occurrence, canonical_form, canonical_labeling, find_distance_preserving_induced,
    has_induced_subgraph, is_isomorphic,
)

__version__ = "0.1.0"
