"""Exact isometric path complexity of finite graphs.

Computes ipco/sipco with dual certificates (antichains and rooted covers),
builds the graph families and operations the bounds apply to, and ships
seeded verification suites for every quantitative inequality.
"""

from .complexity import (
    AntichainCertificate,
    ComplexityReport,
    CoverCertificate,
    RootResult,
    complexity_report,
    ipco,
    ipcor,
    max_antichain_on_path,
    min_rooted_cover,
    sipco,
    validate_antichain_certificate,
    validate_cover_certificate,
)
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    ParseError,
    build_graph,
    is_connected,
    read_graph,
    write_graph,
)
from .paths import (
    EnumerationBudget,
    PathCache,
    enumerate_isometric_paths,
    is_isometric,
)
from .rooted_dag import RootedDag, build_rooted_dag

__version__ = "0.1.0"

__all__ = [
    "AntichainCertificate",
    "ComplexityReport",
    "CoverCertificate",
    "DisconnectedGraphError",
    "EnumerationBudget",
    "Graph",
    "GraphError",
    "ParseError",
    "PathCache",
    "RootResult",
    "RootedDag",
    "build_graph",
    "build_rooted_dag",
    "complexity_report",
    "enumerate_isometric_paths",
    "ipco",
    "ipcor",
    "is_connected",
    "is_isometric",
    "max_antichain_on_path",
    "min_rooted_cover",
    "read_graph",
    "sipco",
    "validate_antichain_certificate",
    "validate_cover_certificate",
    "write_graph",
    "__version__",
]
