import json
from unittest import TestCase

from kecs.genio import Certificate, CertificateViolation, emit_certificate, gen_named, verify_certificate
from kecs.solver import solve


def coloring_bit_flips(text: str):
    data = text.encode("ascii")
    start = data.index(b'"coloring": {')
    end = data.index(b"}", start) + 1
    for position in range(start, end):
        for bit in range(8):
            mutated = bytearray(data)
            mutated[position] ^= 1 << bit
            yield bytes(mutated).decode("latin-1")


class CertificateTestCase(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.result = solve(gen_named("k33"), 2, "flow")
        cls.text = emit_certificate(cls.result, seed=17)

    def certificate(self) -> Certificate:
        return Certificate.from_json(self.text)

    def resign(self, certificate: Certificate) -> str:
        certificate.digest = certificate.content_digest()
        return certificate.to_json()

    def test_valid(self):
        report = verify_certificate(self.text)
        self.assertTrue(report)
        self.assertEqual(report.certificate.nu, 6)
        self.assertEqual(report.certificate.seed, 17)

    def test_fields(self):
        record = json.loads(self.text)
        self.assertEqual(record["schema"], "kecs-certificate/1")
        self.assertEqual(record["subgraph"], self.result.subgraph.sorted())
        self.assertEqual(len(record["digest"]), 64)

    def test_edited_value_breaks_the_digest(self):
        record = json.loads(self.text)
        record["nu"] = 7
        report = verify_certificate(json.dumps(record))
        self.assertEqual(report.kinds, {CertificateViolation.DIGEST_MISMATCH, CertificateViolation.NU_MISMATCH})

    def test_conflicting_coloring(self):
        certificate = self.certificate()
        edge = min(self.result.coloring.classes[2])
        certificate.coloring[edge] = 1
        report = verify_certificate(self.resign(certificate))
        self.assertEqual(report.kinds, {CertificateViolation.CONFLICT})

    def test_foreign_edge(self):
        certificate = self.certificate()
        outside = next(e for e in range(certificate.graph.m) if e not in certificate.subgraph)
        certificate.coloring[outside] = 1
        report = verify_certificate(self.resign(certificate))
        self.assertIn(CertificateViolation.FOREIGN, report.kinds)

    def test_edge_out_of_range(self):
        certificate = self.certificate()
        certificate.subgraph.append(99)
        report = verify_certificate(self.resign(certificate))
        self.assertEqual(report.kinds, {CertificateViolation.EDGE_RANGE, CertificateViolation.NU_MISMATCH})

    def test_duplicate_edge(self):
        certificate = self.certificate()
        certificate.subgraph.append(certificate.subgraph[0])
        certificate.nu += 1
        report = verify_certificate(self.resign(certificate))
        self.assertEqual(report.kinds, {CertificateViolation.DUPLICATE_EDGE})

    def test_degree_above_k(self):
        certificate = self.certificate()
        certificate.k = 1
        report = verify_certificate(self.resign(certificate))
        self.assertIn(CertificateViolation.DEGREE, report.kinds)
        self.assertIn(CertificateViolation.OUT_OF_RANGE, report.kinds)

    def test_uncolored_edge(self):
        certificate = self.certificate()
        del certificate.coloring[certificate.subgraph[0]]
        report = verify_certificate(self.resign(certificate))
        self.assertEqual(report.kinds, {CertificateViolation.UNCOLORED})

    def test_malformed(self):
        for text in ("{", "[]", json.dumps({"schema": "other"}), self.text.replace('"k": 2', '"k": "2"')):
            with self.subTest(text=text[:20]):
                self.assertEqual(verify_certificate(text).kinds, {CertificateViolation.MALFORMED})

    def test_every_coloring_bit_flip_is_detected(self):
        text = emit_certificate(solve(gen_named("path:3"), 1, "flow"))
        flips = list(coloring_bit_flips(text))
        self.assertGreater(len(flips), 0)
        for mutated in flips:
            self.assertFalse(verify_certificate(mutated), mutated)
