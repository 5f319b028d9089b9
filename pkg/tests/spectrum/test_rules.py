from unittest import TestCase

from kecs.exceptions import BudgetExhausted, CheckError, UnknownRule
from kecs.genio import gen_named
from kecs.spectrum import ALIASES, RULES, RuleContext, Verdict, evaluate_rules, replay, resolve_rules


class ResolveRulesTestCase(TestCase):
    def test_cubic_alias(self):
        names = [rule.name for rule in resolve_rules(["cubic"])]
        self.assertEqual(names, ["cubic", "cubic-lower", "cubic-pm"])

    def test_duplicates_are_dropped(self):
        names = [rule.name for rule in resolve_rules(["conj2", "conj2-floor", " midpoint ", ""])]
        self.assertEqual(names, ["conj2", "conj2-floor", "midpoint"])

    def test_all(self):
        self.assertEqual(len(resolve_rules(["all"])), len(RULES))
        self.assertEqual(set(ALIASES["all"]), set(RULES))

    def test_unknown_rule_raises(self):
        with self.assertRaises(UnknownRule):
            resolve_rules(["concavity", "convexity"])


class EvaluateRulesTestCase(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.figure1 = RuleContext(gen_named("figure1"))
        cls.petersen = RuleContext(gen_named("petersen"))

    def test_context(self):
        self.assertEqual(self.figure1.b, 2)
        self.assertEqual(list(self.figure1.ks), [0, 1, 2, 3])
        self.assertEqual(self.figure1.nu(self.figure1.graph, 2), 5)

    def test_rules_without_their_precondition_are_skipped(self):
        reports = evaluate_rules(self.figure1, resolve_rules(["all"]))
        names = [report.rule for report in reports]
        self.assertNotIn("conj1", names)
        self.assertNotIn("cubic", names)
        self.assertIn("props34", names)
        self.assertFalse(any(report.failed for report in reports))

    def test_skipped_rules_are_collected(self):
        skipped = []
        reports = evaluate_rules(self.figure1, resolve_rules(["conj1", "cubic", "concavity"]), skipped)
        self.assertEqual([rule.name for rule in skipped], ["conj1", "cubic", "cubic-lower", "cubic-pm"])
        self.assertEqual([report.rule for report in reports], ["concavity"])

    def test_cubic_rules_on_petersen(self):
        reports = evaluate_rules(self.petersen, resolve_rules(["cubic"]))
        verdicts = {report.rule: report.verdict for report in reports}
        self.assertEqual(
            verdicts,
            {"cubic": Verdict.EQUALITY, "cubic-lower": Verdict.HOLDS, "cubic-pm": Verdict.EQUALITY},
        )

    def test_lemma5_on_a_bipartite_graph(self):
        context = RuleContext(gen_named("kbip:2,3"))
        (report,) = evaluate_rules(context, resolve_rules(["lemma5"]))
        self.assertFalse(report.violated)
        self.assertFalse(report.informational)


class ReplayTestCase(TestCase):
    def test_replay_reproduces_the_verdict(self):
        context = RuleContext(gen_named("cycle:5"))
        (report,) = evaluate_rules(context, resolve_rules(["conj1"]))
        record = report.to_record()
        record["seed"] = 42
        replayed = replay(record)
        self.assertEqual(replayed.verdict, report.verdict)
        self.assertEqual((replayed.lhs, replayed.rhs), (report.lhs, report.rhs))
        self.assertEqual(replayed.seed, 42)

    def test_stored_values_are_ignored(self):
        record = {"rule": "concavity", "graph": gen_named("k33").to_record(), "verdict": "violated", "lhs": -1}
        self.assertIs(replay(record).verdict, Verdict.EQUALITY)

    def test_missing_graph_raises(self):
        with self.assertRaises(CheckError):
            replay({"rule": "concavity"})

    def test_unknown_rule_raises(self):
        with self.assertRaises(UnknownRule):
            replay({"rule": "convexity", "graph": gen_named("k33").to_record()})

    def test_budget(self):
        with self.assertRaises(BudgetExhausted):
            replay({"rule": "concavity", "graph": gen_named("petersen").to_record()}, budget=1)
