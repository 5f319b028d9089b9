import io
from unittest import TestCase

from kecs.cli.output import ExitStatus, Output, report_line, report_record, report_status, verdict_status
from kecs.genio import gen_named
from kecs.spectrum import NuSpectrum, check_b_conjecture, check_concavity


class ReportStatusTestCase(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.failure = check_concavity(NuSpectrum.from_values([0, 1, 3]))
        cls.informational = check_concavity(NuSpectrum.from_values([0, 1, 3], bipartite=False))
        cls.counterexample = check_b_conjecture(gen_named("k33"), NuSpectrum.from_values([0, 1, 3]), b=0)
        cls.holds = check_concavity(NuSpectrum.from_values([0, 3, 5]))

    def test_status(self):
        self.assertEqual(report_status(self.failure), "FAILURE")
        self.assertEqual(report_status(self.informational), "informational")
        self.assertEqual(report_status(self.counterexample), "COUNTEREXAMPLE")
        self.assertEqual(report_status(self.holds), "holds")

    def test_record_carries_the_status(self):
        self.assertEqual(report_record(self.counterexample)["status"], "COUNTEREXAMPLE")

    def test_line_shows_the_witness(self):
        line = report_line(self.failure)
        self.assertIn("1 >= 2", line)
        self.assertIn("witness: {'spectrum': [0, 1, 3]}", line)
        self.assertNotIn("witness", report_line(self.holds))

    def test_exit_status(self):
        self.assertIs(verdict_status([self.holds, self.informational]), ExitStatus.OK)
        self.assertIs(verdict_status([self.failure]), ExitStatus.VIOLATION)
        self.assertIs(verdict_status([self.counterexample]), ExitStatus.OK)
        self.assertIs(verdict_status([self.counterexample], strict=True), ExitStatus.VIOLATION)


class OutputTestCase(TestCase):
    def test_text(self):
        stream = io.StringIO()
        Output(stream).emit({"a": 1}, "hello\n")
        self.assertEqual(stream.getvalue(), "hello\n")

    def test_json(self):
        stream = io.StringIO()
        Output(stream, as_json=True).emit({"b": 2, "a": 1}, "hello")
        self.assertEqual(stream.getvalue(), '{"a": 1, "b": 2}\n')
