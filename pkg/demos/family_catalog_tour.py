"""Tour of the 45 infinite series: instantiation, matching, overlaps.

Run:  python demos/family_catalog_tour.py
"""

from wcidp import Candidate, classify, instantiate, match_tuple, smallest_assignments
from wcidp.families import CATALOG, family_amplitude

print(f"catalog holds {len(CATALOG)} series\n")

print("the three smallest members of series 16:")
for params in smallest_assignments(16, 3):
    c = instantiate(16, params)
    print(f"  t={params['t']}:  {c}   I = {family_amplitude(16, params)}")
print()

print("series membership of (1,3,3,4,5; 6,8):")
for m in match_tuple(Candidate.of(1, 3, 3, 4, 5, 6, 8)):
    assignment = ", ".join(f"{k}={v}" for k, v in m.assignment)
    print(f"  series {m.family_id} at {assignment}")
print()

print("a sporadic solution matches nothing:")
print(" ", match_tuple(Candidate.of(2, 2, 3, 3, 3, 6, 6)))
print()

print("every sampled instance classifies as a del Pezzo surface:")
total = 0
for spec in CATALOG:
    for params in smallest_assignments(spec.id, 5):
        assert classify(instantiate(spec.id, params)).is_del_pezzo
        total += 1
print(f"  checked {total} instances")
