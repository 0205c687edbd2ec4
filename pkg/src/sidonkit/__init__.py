"""sidonkit: generalised Sidon sets from ordered theta graphs.

Count additive representations, encode girth-constrained ordered graphs into
integer sets, verify the structural properties of the encoded sets, extract
guaranteed B_k-subsets, decide finite partition relations, and check
forest-of-copies structure, all with deterministic machine-readable
certificates.
"""

__version__ = "0.1.0"

from .certs import Certificate, canonical_json
from .config import Config, load_config
from .encoder import (
    CoincidenceVerdict,
    Encoding,
    analyze_coincidence,
    coincidence_sweep,
    digit_profile,
    edge_of_value,
    encode,
    digit_lemma_check,
)
from .errors import FormatError, GuardRefusal, SidonkitError, StructuralViolation
from .extract import extract_Bk, partition_edges, verify_no_ascending_path
from .forest import CopyFamily, find_extension, is_forest_of_copies
from .ordgraph import (
    Copy,
    OrderedGraph,
    ThetaSpec,
    check_local_structure,
    find_theta_copies,
    girth,
    induced_cycles_upto,
    make_theta,
)
from .pipeline import PipelineRun, run_pipeline
from .ramsey import (
    ArrowVerdict,
    Coloring,
    arrow_check,
    arrow_oracle,
    edge_arrow_check,
    mono_class_witness,
)
from .repset import (
    ALL_CLAUSES,
    FiniteSet,
    RhoProfile,
    classify,
    rho_count,
    rho_profile,
    verify_theorem_properties,
)
