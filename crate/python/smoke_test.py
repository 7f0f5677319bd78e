#!/usr/bin/env python3
"""Smoke test for the `ehvort` extension module.

Builds nothing itself: expects the compiled extension next to this script or
on PYTHONPATH. Use `python/build_ext.sh` to produce it from the workspace.
"""
import json
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import ehvort

failures = []


def check(name, cond):
    status = "ok" if cond else "FAIL"
    print(f"  {name}: {status}")
    if not cond:
        failures.append(name)


print("module constants and pointwise physics")
check("physical alpha", abs(ehvort.PHYSICAL_ALPHA - 1 / 137.035999) < 1e-12)
s, p = ehvort.invariants((1.0, 0.0, 0.0), (0.0, 0.0, 0.0))
check("invariants of pure E", (s, p) == (0.5, 0.0))
check(
    "classical lagrangian equals S",
    ehvort.lagrangian_density((1.0, 0.0, 0.0), (0.0, 0.0, 0.0), 0.0) == 0.5,
)
d = ehvort.constitutive_d((0.7, 0.0, 0.0), (0.0, 0.0, 0.0), 0.1)
check(
    "constitutive self-focusing",
    abs(d[0] - (1 + 8 * 0.1**2 * 0.49 / 45) * 0.7) < 1e-12,
)
e = ehvort.inverse_constitutive_e(d, (0.0, 0.0, 0.0), 0.1)
check("constitutive roundtrip is O(alpha^4)", abs(e[0] - 0.7) < 1e-5)

print("closed-form solutions")
sol = ehvort.Solution("ring-a")
f = sol.fplus((0.0, 0.0, 1.0), 0.0)
check("seed value at ring center height", abs(f[1] - 1j) < 1e-12)
check("f2 at that point", abs(sol.f2((0.0, 0.0, 1.0), 0.0) + 1.0) < 1e-12)
dv, bv = sol.db((0.0, 0.0, 1.0), 0.0)
check("D = sqrt2 Re F+", abs(dv[1]) < 1e-12 and abs(bv[1] - math.sqrt(2)) < 1e-12)
classical = ehvort.Solution("ring-a", classical=True)
check(
    "quantum correction vanishes at t=0",
    all(
        abs(a - b) < 1e-12
        for a, b in zip(sol.fplus((1.2, -0.3, 0.8), 0.0), classical.fplus((1.2, -0.3, 0.8), 0.0))
    ),
)

print("exact verification")
report, ok = ehvort.verify("ring-a")
check("ring-a verifies", ok and "residual.grade1.zero=true" in report)
report, ok = ehvort.verify("pair-b")
check("pair-b verifies", ok)
report, ok = ehvort.verify("ring-a", mutate=("beta.x", 1, 1000))
check("mutated coefficient detected", not ok)

print("vortex tracking")
doc = json.loads(classical.track_json([0.0, 0.5], grid=24, lo=-4.0, hi=4.0))
check("config echoed", doc["config"]["case"] == "ring-a")
frames = doc["frames"]
check("ring present in both frames", all(f["component_count"] == 1 for f in frames))
check(
    "ring is a closed curve",
    all(c["closed"] for f in frames for c in f["curves"]),
)
check("analytic radius helper", abs(ehvort.ring_radius(1.0, 0.0) - 1.0) < 1e-12)

print()
if failures:
    print(f"FAILED: {len(failures)} check(s): {', '.join(failures)}")
    sys.exit(1)
print("all smoke checks passed")
