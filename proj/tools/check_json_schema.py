#!/usr/bin/env python3
"""Round-trip the CLI's JSON outputs and assert the documented keys."""

import json
import subprocess
import sys

CLI = sys.argv[1]
F = "x^3+x*y+y^2+z^2"


def run(*args):
    out = subprocess.run([CLI, *args], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def require(doc, keys, label):
    for key in keys:
        if key not in doc:
            raise SystemExit(f"{label}: missing key '{key}'")


analyze = run("analyze", "-f", F, "--format", "json")
require(analyze, ["dimension", "polynomial", "facets", "faces", "candidate_poles"], "analyze")
require(analyze["facets"][0], ["normal", "m", "sigma", "b1"], "analyze.facets")
require(analyze["faces"][0], ["vertices", "rays", "dim", "compact", "hyperplanes"], "analyze.faces")
pole = [p for p in analyze["candidate_poles"] if not p["universal"]][0]
require(pole, ["real_part", "families", "contributing_facets", "classes"], "analyze.poles")
require(pole["classes"][0], ["k", "modulus", "expected_order", "hypotheses_apply"],
        "analyze.classes")

zeta = run("zeta", "-f", F, "--prime", "3", "--lmax", "3", "--format", "json")
require(zeta, ["prime", "assembled", "reduced", "pole_report", "faces", "series_check"], "zeta")
require(zeta["assembled"], ["numerator", "denominator_factors", "unit"], "zeta.assembled")
require(zeta["reduced"], ["numerator", "denominator"], "zeta.reduced")
if not zeta["series_check"]["match"]:
    raise SystemExit("zeta: series check reported a mismatch")
# the golden reduced fraction at p = 3
if zeta["reduced"]["numerator"] != ["0", "0", "2", "-2/27"]:
    raise SystemExit(f"zeta: unexpected reduced numerator {zeta['reduced']['numerator']}")
if zeta["reduced"]["denominator"] != ["81", "-27", "-3", "1"]:
    raise SystemExit(f"zeta: unexpected reduced denominator {zeta['reduced']['denominator']}")

fundpar = run("fundpar", "2,4,3", "0,1,0", "0,0,1", "--format", "json")
require(fundpar, ["mu", "mu1", "mu2", "mu3", "gamma", "lambda", "phi", "xi", "eta",
                  "eta_prime", "l0", "points", "consistent_with_enumeration"], "fundpar")
if fundpar["mu"] != "2":
    raise SystemExit("fundpar: expected mu = 2")
points = {tuple(p["point"]) for p in fundpar["points"]}
if ("1", "2", "2") not in points:
    raise SystemExit("fundpar: expected the point (1,2,2)")

motivic = run("motivic", "-f", F, "--specialize", "3", "--format", "json")
require(motivic, ["numerator", "denominator_factors", "symbols", "specialization",
                  "nondegeneracy_proxy"], "motivic")
if not motivic["specialization"]["matches_padic"]:
    raise SystemExit("motivic: specialization mismatch")

print("all JSON schemas ok")
