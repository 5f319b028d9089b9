"""
Self-contained, independently checkable solve certificates (``.cert.json``).

A certificate stores the graph, k, the subgraph and its coloring. It can
be re-checked by definition without running any solver: the subgraph's
edges must exist, its degrees must not exceed k and the coloring must be
a proper k-coloring of exactly those edges. A SHA-256 digest over the
canonical content detects any edit of a semantic field.
"""
from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from kecs.__about__ import __version__
from kecs.coloring import verify_coloring
from kecs.exceptions import CertificateError, GraphError
from kecs.genio import messages
from kecs.graph import EdgeSubgraph, MultiGraph
from kecs.solver import SolveResult

log = logging.getLogger(__name__)

#: Schema identifier written into every certificate.
SCHEMA = "kecs-certificate/1"


@dataclass
class Certificate:
    graph: MultiGraph
    k: int
    nu: int
    subgraph: list[int]
    coloring: dict[int, int]
    method: str
    stats: dict[str, int] = field(default_factory=dict)
    verified: bool = True
    seed: int | None = None
    version: str = __version__
    digest: str | None = None

    @classmethod
    def from_result(cls, result: SolveResult, seed: int | None = None) -> Certificate:
        certificate = cls(
            graph=result.graph,
            k=result.k,
            nu=result.nu,
            subgraph=result.subgraph.sorted(),
            coloring=dict(result.coloring.items()),
            method=result.method.value,
            stats=dict(result.stats),
            verified=result.verified,
            seed=seed,
        )
        certificate.digest = certificate.content_digest()
        return certificate

    def content(self) -> dict[str, Any]:
        """
        Returns every field except the digest, in a JSON-ready form.
        """
        return {
            "schema": SCHEMA,
            "version": self.version,
            "graph": self.graph.to_record(),
            "k": self.k,
            "nu": self.nu,
            "subgraph": list(self.subgraph),
            "coloring": {str(edge_id): color for edge_id, color in sorted(self.coloring.items())},
            "method": self.method,
            "stats": dict(sorted(self.stats.items())),
            "verified": self.verified,
            "seed": self.seed,
        }

    def content_digest(self) -> str:
        canonical = json.dumps(self.content(), sort_keys=True, separators=(",", ":"), ensure_ascii=True)
        return hashlib.sha256(canonical.encode("ascii")).hexdigest()

    def to_json(self) -> str:
        record = self.content()
        record["digest"] = self.digest if self.digest is not None else self.content_digest()
        return json.dumps(record, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        """
        Parses a certificate without checking it.

        Raises
        ------
        CertificateError
            Invalid JSON, an unknown schema or a missing or malformed field
        """
        try:
            record = json.loads(text)
        except json.JSONDecodeError as error:
            message = messages.CERTIFICATE_JSON.format(error=error)
            raise CertificateError(message) from None
        if not isinstance(record, dict):
            raise CertificateError(messages.CERTIFICATE_FIELD.format(field="(root)"))
        if record.get("schema") != SCHEMA:
            message = messages.CERTIFICATE_SCHEMA.format(found=record.get("schema"), expected=SCHEMA)
            raise CertificateError(message)
        try:
            graph = MultiGraph.from_record(record.get("graph"))
        except GraphError as error:
            raise CertificateError(str(error)) from None
        coloring = record.get("coloring")
        if not isinstance(coloring, dict) or not all(key.isascii() and key.isdecimal() for key in coloring):
            raise CertificateError(messages.CERTIFICATE_FIELD.format(field="coloring"))
        for name, kind in (("k", int), ("nu", int), ("subgraph", list), ("method", str), ("digest", str)):
            if not isinstance(record.get(name), kind):
                raise CertificateError(messages.CERTIFICATE_FIELD.format(field=name))
        return cls(
            graph=graph,
            k=record["k"],
            nu=record["nu"],
            subgraph=record["subgraph"],
            coloring={int(key): color for key, color in coloring.items()},
            method=record["method"],
            stats=record.get("stats") or {},
            verified=bool(record.get("verified", True)),
            seed=record.get("seed"),
            version=str(record.get("version", "")),
            digest=record["digest"],
        )


class CertificateViolation(str, Enum):
    MALFORMED = "malformed"
    DIGEST_MISMATCH = "digest-mismatch"
    EDGE_RANGE = "edge-range"
    DUPLICATE_EDGE = "duplicate-edge"
    NU_MISMATCH = "nu-mismatch"
    DEGREE = "degree-exceeds-k"
    UNCOLORED = "uncolored"
    OUT_OF_RANGE = "out-of-range"
    CONFLICT = "conflict"
    FOREIGN = "foreign"


@dataclass
class CertificateReport:
    violations: list[tuple[CertificateViolation, str]] = field(default_factory=list)
    certificate: Certificate | None = None

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    @property
    def kinds(self) -> set[CertificateViolation]:
        return {kind for kind, _ in self.violations}

    def add(self, kind: CertificateViolation, detail: str):
        self.violations.append((kind, detail))


def emit_certificate(result: SolveResult, seed: int | None = None) -> str:
    """
    Serializes `result` as certificate text.
    """
    return Certificate.from_result(result, seed).to_json()


def verify_certificate(text: str) -> CertificateReport:
    """
    Re-checks a certificate by definition, without running a solver.

    Returns
    -------
    CertificateReport
        Truthy iff no violation was found; every violation is named
    """
    report = CertificateReport()
    try:
        certificate = Certificate.from_json(text)
    except CertificateError as error:
        report.add(CertificateViolation.MALFORMED, str(error))
        return report
    report.certificate = certificate
    graph, k = certificate.graph, certificate.k
    if certificate.digest != certificate.content_digest():
        report.add(CertificateViolation.DIGEST_MISMATCH, f"stored {certificate.digest}")
    members = [edge_id for edge_id in certificate.subgraph if isinstance(edge_id, int) and 0 <= edge_id < graph.m]
    if len(members) != len(certificate.subgraph):
        outside = [edge_id for edge_id in certificate.subgraph if edge_id not in members]
        report.add(CertificateViolation.EDGE_RANGE, f"edges {outside} are not edges of the graph")
    if len(set(members)) != len(members):
        report.add(CertificateViolation.DUPLICATE_EDGE, "subgraph lists an edge twice")
    subgraph = EdgeSubgraph(graph, members)
    if certificate.nu != len(certificate.subgraph):
        report.add(CertificateViolation.NU_MISMATCH, f"nu={certificate.nu} but {len(certificate.subgraph)} edges")
    if subgraph.max_degree > k:
        report.add(CertificateViolation.DEGREE, f"maximum degree {subgraph.max_degree} exceeds k={k}")
    for violation in verify_coloring(subgraph, certificate.coloring, k).violations:
        report.add(CertificateViolation(violation.kind.value), repr(violation))
    if report.violations:
        log.info("Certificate rejected: %s", sorted(kind.value for kind in report.kinds))
    return report
