# seeded scan for monomial systems of parameters containing the conductor

import json

from monomial_conductor.explorer import FuzzConfig, dumps, scan

report = scan(FuzzConfig(seed=42, count=50), workers=1)
print(json.dumps(report["summary"], indent=2))
print("counterexamples:", report["counterexamples"])

# everything not certified by the count is only "no counterexample up to D"
for r in report["instances"][:8]:
    print(r["index"], r["instance"], r["status"])

# two dimensional instances, coordinates <= 4
affine = scan(FuzzConfig(seed=7, count=20, mode="affine", dim=2, max_generator=4), workers=1)
print(affine["summary"])

# same seed, same bytes
print(dumps(scan(FuzzConfig(seed=42, count=50), workers=2)) == dumps(report))
