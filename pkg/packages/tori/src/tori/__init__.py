from .catalog import CATALOG, TorusDescriptor, catalog_get, catalog_names
from .classify import (
    Mode,
    coflabby_verdict,
    flabby_verdict,
    is_coflabby,
    is_flabby,
    is_invertible,
    is_permutation,
    is_stably_permutation,
    stably_equivalent,
    verify_certificate,
)
from .errors import ParseError, UnknownName, ValidationError
from .isomorphism import lattices_isomorphic, obstruction
from .lattice_file import (
    LatticeFile,
    NamedMatrix,
    dump_lattice_file,
    lattice_to_file,
    parse_lattice_file,
    read_lattice_file,
)
from .main import run_command
from .rationality import (
    CohomologyFact,
    Fact,
    Level,
    RationalityReport,
    ResolutionFact,
    VerdictFact,
    rationality_verdict,
)
from .resolution import (
    Resolution,
    flabby_class_invertible,
    flabby_class_obstruction,
    flabby_class_trivial,
    flabby_resolution,
    verify_resolution,
)
from .verdict import (
    DEFAULT_BOUNDS,
    Certificate,
    IsomorphismWitness,
    Obstruction,
    PermutationWitness,
    Refutation,
    SearchBounds,
    StableEquivalenceWitness,
    StablePermutationWitness,
    SummandWitness,
    Verdict,
    permutation_lattice,
)

__all__ = [
    "CATALOG",
    "DEFAULT_BOUNDS",
    "Certificate",
    "CohomologyFact",
    "Fact",
    "IsomorphismWitness",
    "LatticeFile",
    "Level",
    "Mode",
    "NamedMatrix",
    "Obstruction",
    "ParseError",
    "PermutationWitness",
    "RationalityReport",
    "Refutation",
    "Resolution",
    "ResolutionFact",
    "SearchBounds",
    "StableEquivalenceWitness",
    "StablePermutationWitness",
    "SummandWitness",
    "TorusDescriptor",
    "UnknownName",
    "ValidationError",
    "Verdict",
    "VerdictFact",
    "catalog_get",
    "catalog_names",
    "coflabby_verdict",
    "dump_lattice_file",
    "flabby_class_invertible",
    "flabby_class_obstruction",
    "flabby_class_trivial",
    "flabby_resolution",
    "flabby_verdict",
    "is_coflabby",
    "is_flabby",
    "is_invertible",
    "is_permutation",
    "is_stably_permutation",
    "lattice_to_file",
    "lattices_isomorphic",
    "obstruction",
    "parse_lattice_file",
    "permutation_lattice",
    "rationality_verdict",
    "read_lattice_file",
    "run_command",
    "stably_equivalent",
    "verify_certificate",
    "verify_resolution",
]
