"""
How many topologies live on a handful of points?

Two independent routes: scanning every family of parts for the topology
axioms, and enumerating preorders then building their order topologies.
They must agree; the preorder route also reaches five points quickly.

    python demos/02_counting_topologies.py
"""
import time

from pointtopo import count_topologies, enumerate_topologies

print(" n   all   T0   (route)")
for n in range(1, 5):
    a = count_topologies(n, method="families")
    b = count_topologies(n)
    assert a == b
    print(f"{n:2d} {b:5d} {count_topologies(n, t0_only=True):4d}   families == preorders")

t0 = time.perf_counter()
print(f" 5 {count_topologies(5):5d} {count_topologies(5, t0_only=True):4d}   preorders "
      f"({time.perf_counter() - t0:.2f} s)")

# smallest and largest: indiscrete (2 opens) and discrete (2^n opens)
tops = list(enumerate_topologies(3))
print("\nopen-part counts on 3 points:", sorted({len(t) for t in tops}))
