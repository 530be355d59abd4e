"""End-to-end checks of the sr-chroma binary: exit codes, json mirroring,
config precedence and reproducibility."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

BINARY = os.environ.get("SR_CHROMA", "sr-chroma")

K3 = "v 1\nv 2\nv 3\ne 1 2\ne 2 3\ne 1 3\n"
C4 = "# four-cycle\nv a\nv b\nv c\nv d\ne a b\ne b c\ne c d\ne d a\n"


def run(*args):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = cls.tmp.name
        cls.k3 = cls.write("k3.g", K3)
        cls.c4 = cls.write("c4.g", C4)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    @classmethod
    def write(cls, name, text):
        path = os.path.join(cls.dir, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def assert_json_mirrors_text(self, *args):
        code_t, text, _ = run(*args)
        code_j, out, _ = run(*args, "--format", "json")
        self.assertEqual(code_t, code_j)
        doc = json.loads(out)
        self.assertEqual(doc["exit_code"], code_t)
        self.assertEqual("".join(line + "\n" for line in doc["report"]), text)
        return doc

    def test_chromatic(self):
        code, out, _ = run("chromatic", self.k3)
        self.assertEqual(code, 0)
        self.assertEqual(out, "chi = 3\n")
        code, out, _ = run("chromatic", self.k3, "--span", "2")
        self.assertEqual(code, 0)
        self.assertIn("s_2chi = 3\n", out)
        self.assertEqual(len(out.splitlines()), 5)

    def test_missing_and_malformed_input(self):
        self.assertEqual(run("chromatic", os.path.join(self.dir, "missing.g"))[0], 2)
        bad = self.write("bad.g", "v a\ne a b\n")
        code, _, err = run("chromatic", bad)
        self.assertEqual(code, 2)
        self.assertIn("line 2", err)
        self.assertEqual(run("no-such-command")[0], 2)
        self.assertEqual(run("realizable", self.k3, "--family", "Q", "--vector", "1")[0], 2)

    def test_span_chromatic(self):
        doc = self.assert_json_mirrors_text("span-chromatic", self.c4, "--p", "3")
        self.assertEqual(doc["data"]["span_chi"], 2)

    def test_action_search_exit_codes(self):
        code, out, _ = run("action-search", "--free", "y:8", "--p", "3")
        self.assertEqual(code, 1)
        self.assertTrue(out.startswith("exhausted (relative to relation set {p1pp,wd}"))
        self.assertEqual(run("action-search", "--free", "y:8", "--p", "2")[0], 2)
        self.assertEqual(run("action-search", self.c4, "--family", "B", "--vector", "2", "--cap", "2")[0], 3)

    def test_search_then_check(self):
        code, out, _ = run("action-search", self.c4, "--family", "B", "--vector", "2")
        self.assertEqual(code, 0)
        self.assertIn("cokernels: all nonzero", out)
        table = "".join(line + "\n" for line in out.splitlines() if line.startswith("P^"))
        path = self.write("table.txt", table)
        code, out, _ = run("action-check", self.c4, "--family", "B", "--vector", "2", "--table", path)
        self.assertEqual(code, 0, out)
        broken = table.replace("P^1(y_a) = 1 * x2^(1) * y_a", "P^1(y_a) = 2 * x2^(1) * y_a")
        self.assertNotEqual(broken, table)
        path = self.write("broken.txt", broken)
        self.assertEqual(run("action-check", self.c4, "--family", "B", "--vector", "2", "--table", path)[0], 1)
        unstable = self.write("unstable.txt", table.replace("P^4(y_a) = 1 * y_a^3", "P^4(y_a) = 2 * y_a^3"))
        self.assertEqual(run("action-check", self.c4, "--family", "B", "--vector", "2", "--table", unstable)[0], 2)
        partial = self.write("partial.txt", table.splitlines()[0] + "\n")
        self.assertEqual(run("action-check", self.c4, "--family", "B", "--vector", "2", "--table", partial)[0], 2)

    def test_realizable_verdicts(self):
        doc = self.assert_json_mirrors_text("realizable", self.k3, "--family", "A", "--vector", "1,1")
        self.assertEqual(doc["exit_code"], 1)
        self.assertEqual(doc["data"]["face_multiset"], [4, 6, 8, 8])
        doc = self.assert_json_mirrors_text("realizable", self.k3, "--family", "Bp", "--p", "3", "--vector", "3")
        self.assertEqual(doc["exit_code"], 0)
        self.assertEqual(len(doc["data"]["blocks"]), 3)
        code, out, _ = run("realizable", self.k3, "--family", "Bp", "--p", "3", "--vector", "2")
        self.assertEqual(code, 1)
        self.assertIn("s_3chi=3 > bound=2", out)
        self.assertEqual(run("realizable", self.k3, "--family", "A", "--vector", "2")[0], 4)

    def test_multiset_and_decompose(self):
        self.assertEqual(run("multiset", "4,6,8,8")[0], 1)
        self.assertEqual(run("multiset", "4,4,6,6,6,8,8")[0], 1)
        doc = self.assert_json_mirrors_text("multiset", "4,6,8,4,8")
        self.assertEqual(doc["exit_code"], 0)
        self.assertEqual(run("multiset", "4,5")[0], 2)
        fam = self.write("fam.txt", "# only these\n6,8\n4\n")
        self.assertEqual(run("multiset", "4,6,8", "--multiset-family", fam)[0], 0)
        self.assertEqual(run("multiset", "4,6", "--multiset-family", fam)[0], 1)
        code, out, _ = run("decompose", "--s", "5,3,4,2", "--c", "3")
        self.assertEqual(code, 0)
        self.assertEqual(run("decompose", "--s", "1,1", "--c", "3")[0], 1)
        self.assertEqual(run("decompose", "--s", "2,1", self.k3)[0], 1)

    def test_necessary_partition_build(self):
        self.assertEqual(run("necessary", self.k3, "--family", "Bp", "--p", "3", "--vector", "2")[0], 1)
        self.assertEqual(run("necessary", self.k3, "--family", "Bp", "--p", "3", "--vector", "3")[0], 0)
        self.assertEqual(run("necessary", self.k3, "--family", "A", "--vector", "2")[0], 4)
        code, out, _ = run("partition", self.k3, "--family", "Ap", "--p", "3", "--vector", "3,3")
        self.assertEqual(code, 0)
        self.assertIn("verified: yes", out)
        code, out, _ = run("build-complex", self.k3, "--family", "B", "--vector", "1")
        self.assertEqual(code, 0)
        cx = self.write("cx.txt", out)
        self.assertEqual(run("action-search", "--complex", cx, "--p", "3")[0],
                         run("action-search", self.k3, "--family", "B", "--vector", "1")[0])

    def test_config_file(self):
        cfg = self.write("run.cfg", "# realizability run\nfamily = Bp\np = 3\nvector = 2\n")
        self.assertEqual(run("realizable", self.k3, "--config", cfg)[0], 1)
        # flags win over the file
        self.assertEqual(run("realizable", self.k3, "--config", cfg, "--vector", "3")[0], 0)
        bad = self.write("bad.cfg", "colour = blue\n")
        self.assertEqual(run("realizable", self.k3, "--config", bad)[0], 2)

    def test_reproducible(self):
        args = ("realizable", self.c4, "--family", "A", "--vector", "3,2,2")
        self.assertEqual(run(*args), run(*args))
        self.assertEqual(run(*args, "--jobs", "2"), run(*args))


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0]], verbosity=2)
