"""drgkit: exact spectral analysis, feasibility checking and exhaustive
search for distance-regular graph intersection arrays."""

from .core import (
    ArrayFormatError,
    DerivedParameters,
    IntersectionArray,
    derive_parameters,
    format_array,
    parse_array,
)
from .exact import ExactValue, compare_product
from .spectral import (
    Spectrum,
    StandardSequence,
    TridiagonalMatrix,
    full_matrix,
    interlaces,
    multiplicity_of,
    reduced_matrix,
    spectrum,
    standard_sequence,
)
from .checks import (
    ArrayAnalysis,
    FeasibilityReport,
    TerwilligerBounds,
    full_report,
    terwilliger_bounds,
)
from .corpus import CorpusEntry, builtin_corpus, load_corpus, save_corpus
from .search import (
    SearchSpec,
    SearchWindow,
    enumerate_arrays,
    reproduce_table1,
)

__all__ = [
    "ArrayAnalysis", "ArrayFormatError", "CorpusEntry", "DerivedParameters",
    "ExactValue", "FeasibilityReport", "IntersectionArray", "SearchSpec",
    "SearchWindow", "Spectrum", "StandardSequence", "TerwilligerBounds",
    "TridiagonalMatrix", "builtin_corpus", "compare_product",
    "derive_parameters", "enumerate_arrays", "format_array", "full_matrix",
    "full_report", "interlaces", "load_corpus", "multiplicity_of",
    "parse_array", "reduced_matrix", "reproduce_table1", "save_corpus",
    "spectrum", "standard_sequence", "terwilliger_bounds",
]

__version__ = "0.1.0"
