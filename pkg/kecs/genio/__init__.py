"""
Graph files, named fixtures, seeded generators, certificates and report
streams.
"""
from kecs.genio.certificate import (
    Certificate,
    CertificateReport,
    CertificateViolation,
    emit_certificate,
    verify_certificate,
)
from kecs.genio.edge_list import format_edge_list, parse_edge_list
from kecs.genio.files import read_graph, write_graph
from kecs.genio.generators import (
    gen_nearly_bipartite,
    gen_random_bipartite,
    gen_random_multigraph,
    gen_regular_bipartite,
)
from kecs.genio.graph6 import format_graph6, parse_graph6
from kecs.genio.named import FIGURE1_A2, figure1, figure1_a2, gen_named
from kecs.genio.reports import read_reports, write_reports

__all__ = [
    "FIGURE1_A2",
    "Certificate",
    "CertificateReport",
    "CertificateViolation",
    "emit_certificate",
    "figure1",
    "figure1_a2",
    "format_edge_list",
    "format_graph6",
    "gen_named",
    "gen_nearly_bipartite",
    "gen_random_bipartite",
    "gen_random_multigraph",
    "gen_regular_bipartite",
    "parse_edge_list",
    "parse_graph6",
    "read_graph",
    "read_reports",
    "verify_certificate",
    "write_graph",
    "write_reports",
]
