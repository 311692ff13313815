"""Walk through the classification criteria on a few hand-picked candidates.

Run:  python demos/classify_candidates.py
"""

from wcidp import Candidate, classify

EXAMPLES = [
    # a known sporadic solution: every criterion passes
    (3, 4, 5, 6, 7, 10, 12),
    # degree equals a weight: an intersection with a linear cone
    (1, 1, 1, 1, 2, 2, 3),
    # two weights share the factor 5 that divides neither degree
    (1, 2, 2, 5, 5, 6, 7),
    # quasi-smoothness fails at the largest coordinate
    (1, 1, 1, 1, 3, 2, 4),
    # amplitude zero: a K3-type tuple rather than a del Pezzo
    (1, 1, 1, 1, 2, 3, 3),
]

for row in EXAMPLES:
    c = Candidate.of(*row)
    v = classify(c)
    print(f"{c}  ->  del Pezzo: {v.is_del_pezzo}  (I = {v.amplitude})")
    if v.is_linear_cone:
        print("    linear cone: a degree equals a weight")
    for violation in v.wf.violations:
        print(f"    wf violation {violation.condition}, omitted {violation.omitted}: "
              f"gcd = {violation.gcd_value}")
    for violation in v.qs.violations[:3]:
        print(f"    qs violation at {violation.level} {violation.indices}")
    print()
