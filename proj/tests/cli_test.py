"""End-to-end checks of gaussctl: exit codes, payloads and byte stability."""

import json
import subprocess
import sys
import unittest

GAUSSCTL = sys.argv.pop(1) if len(sys.argv) > 1 else "gaussctl"
SPEC_DIR = sys.argv.pop(1) if len(sys.argv) > 1 else "specs"

TREFOIL = "U1+ O2+ U3+ O1+ U2+ O3+"
VIRTUAL = "O1- O2- U1- O3+ U2- U3+"
EXAMPLE = "U1 O3 U4 U2 O1 U5 O2 U3 O5 O4"


def run(*args, stdin=None):
    p = subprocess.run([GAUSSCTL, *args], input=stdin, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


class Validate(unittest.TestCase):
    def test_valid(self):
        self.assertEqual(run("validate", "U1 O2 U3 O1 U2 O3")[0], 0)

    def test_invalid_lists_violations(self):
        code, out, _ = run("validate", "U1 U2 O1")
        self.assertEqual(code, 1)
        self.assertIn("label 2", out)

    def test_parse_error(self):
        code, _, err = run("validate", "U1 O1%%")
        self.assertEqual(code, 2)
        self.assertIn("token 2", err)

    def test_automaton_route_agrees(self):
        for word in ["U1 O2 U3 O1 U2 O3", "U1 U2 O1", TREFOIL, "U1+ O1-", "U1 O1 U1"]:
            direct = run("validate", word)[0]
            routed = run("validate", "--via-automaton", word)[0]
            self.assertEqual(direct, routed, word)


class Planar(unittest.TestCase):
    def test_signed_trefoil(self):
        code, out, _ = run("--json", "planar", TREFOIL)
        self.assertEqual(code, 0)
        j = json.loads(out)
        self.assertEqual(j["schema"], "gausswords.planar/1")
        self.assertEqual(j["euler"], {"vertices": 3, "edges": 6, "faces": 5, "chi": 2})

    def test_virtual_word(self):
        code, out, _ = run("--json", "planar", VIRTUAL)
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["euler"]["chi"], -2)

    def test_example_word_reports_stage_and_witness(self):
        code, out, _ = run("--json", "planar", EXAMPLE)
        self.assertEqual(code, 1)
        j = json.loads(out)
        self.assertEqual(j["failed_stage"], 1)
        self.assertEqual(j["witness"], {"label": 1})

    def test_invalid_word(self):
        self.assertEqual(run("planar", "U1 U2 O1")[0], 2)

    def test_batch_from_stdin(self):
        code, out, _ = run("planar", stdin=f"# header\n{TREFOIL}\n\n{VIRTUAL}\n")
        self.assertEqual(code, 1)
        lines = out.splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(json.loads(lines[0])["planar"])
        self.assertFalse(json.loads(lines[1])["planar"])


class Exports(unittest.TestCase):
    def test_trefoil_faces(self):
        code, out, _ = run("faces", "--json", TREFOIL)
        self.assertEqual(code, 0)
        self.assertEqual(len(json.loads(out)["faces"]), 5)

    def test_trefoil_euler(self):
        self.assertEqual(run("euler", TREFOIL)[1].strip(), "V=3 E=6 F=5 chi=2")

    def test_example_interlace_dot(self):
        code, out, _ = run("interlace", "--dot", EXAMPLE)
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("graph interlacement {"))
        vertices = [l for l in out.splitlines() if l.strip().rstrip(";").isdigit()]
        self.assertEqual(len(vertices), 5)
        self.assertEqual(out.count(" -- "), 6)

    def test_faces_dot_is_balanced(self):
        out = run("faces", "--dot", TREFOIL)[1]
        self.assertEqual(out.count("{"), out.count("}"))
        self.assertEqual(out.count(" -> "), 12)

    def test_byte_stable(self):
        for args in [("faces", "--dot", TREFOIL), ("interlace", "--json", EXAMPLE),
                     ("--json", "planar", EXAMPLE), ("--seed", "9", "generate", "--count", "20")]:
            self.assertEqual(run(*args)[1], run(*args)[1])


class Oracle(unittest.TestCase):
    def test_example_word(self):
        code, out, _ = run("oracle", EXAMPLE)
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "non-planar, agrees")

    def test_corpus(self):
        code, out, _ = run("oracle", "--corpus", "exhaustive:4")
        self.assertEqual(code, 0)
        self.assertIn("all agree", out)

    def test_crossing_bound(self):
        word = " ".join(f"U{i}" for i in range(1, 14)) + " " + " ".join(f"O{i}" for i in range(1, 14))
        self.assertEqual(run("oracle", word)[0], 3)

    def test_generate_exhaustive_limit(self):
        self.assertEqual(run("generate", "--exhaustive", "7")[0], 3)


class Automaton(unittest.TestCase):
    def test_builtin_accepts_and_rejects(self):
        self.assertEqual(run("automaton", "builtin:gw", "U1 O2 U2 O1")[0], 0)
        self.assertEqual(run("automaton", "builtin:gw", "U1 U2 O1")[0], 1)

    def test_spec_file(self):
        self.assertEqual(run("automaton", f"{SPEC_DIR}/l_sgw.json", TREFOIL)[0], 0)
        self.assertEqual(run("automaton", f"{SPEC_DIR}/l_gw.json", "U1 U2 U3 U4 O1 O2 O3 O4")[0], 0)

    def test_compile_reports_sizes_and_agrees(self):
        for word in ["U1 O2 U2 O1", "U1 U2 O1", "U1 O1 O1"]:
            plain = run("automaton", "builtin:gw", word)[0]
            code, out, _ = run("automaton", "builtin:gw", "--compile", word)
            self.assertEqual(code, plain)
            self.assertIn("original:", out)
            self.assertIn("compiled:", out)

    def test_nondeterministic_trace(self):
        code, out, _ = run("--json", "automaton", "builtin:gw", "--mode", "nondet", "--trace",
                           "--data", '[{"tag":"U","datum":1},{"tag":"O","datum":1}]')
        self.assertEqual(code, 0)
        j = json.loads(out)
        self.assertEqual(j["trace"][0]["state"], "next")
        self.assertEqual(j["trace"][-1]["state"], "accept")

    def test_undeclared_tag(self):
        self.assertEqual(run("automaton", "builtin:sgw", "U1 O1")[0], 2)

    def test_dump_matches_shipped_spec(self):
        with open(f"{SPEC_DIR}/l_gw.json") as f:
            self.assertEqual(run("automaton", "builtin:gw", "--dump")[1], f.read())


if __name__ == "__main__":
    unittest.main(verbosity=1)
