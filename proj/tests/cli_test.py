"""End-to-end checks of the dkc command line: exit codes, report schema, exports."""
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

DKC = sys.argv.pop(1)
SCHEMA = sys.argv.pop(1)


def dkc(*args, env=None):
    return subprocess.run([DKC, *args], capture_output=True, text=True, env=env)


def stable(report):
    report = dict(report)
    report.pop("timings")
    return report


class Verify(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA) as f:
            cls.schema = json.load(f)

    def run_report(self, *args):
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "r.json")
            p = dkc("verify", "--quiet", "--json", out, *args)
            with open(out) as f:
                return p.returncode, json.load(f)

    def test_passing_plan(self):
        code, rep = self.run_report("--checks", "identities,exactness,commutativity",
                                    "--max-k", "3", "--max-l", "3", "--max-i", "1")
        self.assertEqual(code, 0)
        jsonschema.validate(rep, self.schema)
        self.assertEqual(rep["summary"]["fail"], 0)
        self.assertEqual(rep["plan"]["checks"], ["identities", "exactness", "commutativity"])

    def test_finding_gives_exit_one(self):
        code, rep = self.run_report("--checks", "spectra", "--max-i", "1", "--max-a", "1")
        self.assertEqual(code, 1)
        jsonschema.validate(rep, self.schema)
        failed = [r for r in rep["records"] if r["status"] == "fail"]
        self.assertTrue(failed)
        self.assertTrue(all("witness" in r for r in failed))
        self.assertEqual({r["claim"] for r in failed}, {"SPECTRUM-DPQD"})

    def test_config_errors_give_exit_two(self):
        self.assertEqual(dkc("verify", "--max-k", "0").returncode, 2)
        self.assertEqual(dkc("verify", "--checks", "bogus").returncode, 2)
        self.assertEqual(dkc("verify", "--jobs", "0").returncode, 2)
        self.assertEqual(dkc("character", "nope", "1").returncode, 2)

    def test_worker_count_does_not_change_the_report(self):
        args = ("--checks", "identities,splittings,equivariance", "--max-k", "2", "--max-l", "2", "--max-i", "1")
        _, one = self.run_report("--jobs", "1", *args)
        _, two = self.run_report("--jobs", "2", *args)
        self.assertEqual(json.dumps(stable(one), sort_keys=True), json.dumps(stable(two), sort_keys=True))

    def test_cache_directory_from_environment(self):
        with tempfile.TemporaryDirectory() as tmp:
            env = dict(os.environ, DKC_CACHE_DIR=tmp)
            p = dkc("verify", "--quiet", "--checks", "identities", "--max-k", "1", "--max-l", "1",
                    "--max-pr", "1", env=env)
            self.assertEqual(p.returncode, 0, p.stderr)
            self.assertTrue(any(name.endswith(".dkc") for name in os.listdir(tmp)))
            again = dkc("verify", "--quiet", "--checks", "identities", "--max-k", "1", "--max-l", "1",
                        "--max-pr", "1", env=env)
            self.assertEqual(again.returncode, 0)

    def test_report_export_round_trip(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "r.json")
            dkc("verify", "--quiet", "--checks", "identities", "--max-k", "1", "--max-l", "1", "--max-pr", "1",
                "--json", out)
            p = dkc("export", "report", out)
            self.assertEqual(p.returncode, 0)
            with open(out) as f:
                self.assertEqual(json.loads(p.stdout), json.load(f))
            jsonschema.validate(json.loads(p.stdout), self.schema)


class Exports(unittest.TestCase):
    def test_matrix_export_is_canonical(self):
        first = dkc("export", "matrix", "d", "0", "1", "1")
        self.assertEqual(first.returncode, 0)
        lines = first.stdout.splitlines()
        head = lines[0].split()
        self.assertEqual(head[0], "sparse-map")
        self.assertEqual(int(head[3]), len(lines) - 1)
        second = dkc("export", "matrix", "d", "0", "1", "1")
        self.assertEqual(first.stdout, second.stdout)

    def test_lambda_two_basis(self):
        p = dkc("export", "basis", "0", "2", "0")
        lines = p.stdout.splitlines()
        self.assertEqual(lines[0], "S0.L2.S0* 7")
        self.assertEqual(len(lines), 8)
        self.assertEqual(sum(l.endswith("odd") for l in lines[1:]), 3)

    def test_unknown_differential(self):
        self.assertNotEqual(dkc("export", "matrix", "z", "0", "1", "1").returncode, 0)


class Constructions(unittest.TestCase):
    def construct(self, *args):
        p = dkc("construct", *args)
        self.assertEqual(p.returncode, 0, p.stderr)
        return json.loads(p.stdout)

    def test_y_summand(self):
        j = self.construct("Ysummand", "1", "1")
        self.assertEqual(j["highest_weight"], [1, 0, 0, 1])
        self.assertTrue(j["irreducibility"]["pass"])
        self.assertEqual(j["comparison"]["closed_formula"]["matched"], "unsigned")
        self.assertEqual(j["comparison"]["stated_weight_formula"]["matched"], "unsigned")

    def test_mmp(self):
        j = self.construct("Mmp", "1", "1")
        self.assertEqual(j["highest_weight"], [1, 1, -1, 0])
        self.assertTrue(j["comparison"]["highest_weight_match"])

    def test_berezinian(self):
        j = self.construct("H31")
        self.assertEqual(j["dim"], 1)
        self.assertEqual(j["highest_weight"], [1, 1, 1, 1])
        self.assertEqual(j["singular_lines"][0]["parity"], "odd")

    def test_bad_construction(self):
        self.assertNotEqual(dkc("construct", "Mmp", "1").returncode, 0)


class Spectra(unittest.TestCase):
    def test_dpqd(self):
        j = json.loads(dkc("spectrum", "dpqd", "1", "1").stdout)
        self.assertEqual([e["value"] for e in j["eigenvalues"]], ["5/6", "4/3"])
        self.assertTrue(j["invertible"])
        self.assertTrue(j["predictions"][1]["matches"])

    def test_character(self):
        j = json.loads(dkc("character", "schur", "1").stdout)
        self.assertEqual(j["quotient"], "-y + x3 + x2 + x1")


if __name__ == "__main__":
    unittest.main(verbosity=2)
