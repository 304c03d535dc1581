"""
Sample random rigid subsets of random triangulations and tally how the
mesh defects line up with the four kinds of image under G.
"""

import random
from collections import Counter

from ccfrieze import CCContext, frieze_check, random_triangulation

rng = random.Random(7)
tally = Counter()

for m in range(5, 11):
    for _ in range(20):
        T = sorted(random_triangulation(m, rng))
        R = sorted(rng.sample(T, rng.randint(1, len(T))))
        report = frieze_check(CCContext(m, R, T))
        assert report.passed
        for res in report.results:
            tally[(str(res.classification), res.defect_value)] += 1

## Split meshes never have a defect; the other three kinds always do
for (kind, defect), n in sorted(tally.items()):
    print(f"{kind:<12} defect {defect}: {n}")
