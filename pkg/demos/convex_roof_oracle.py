"""Randomized convex-roof search against the Wootters closed form.

The search averages the measure over random pure-state decompositions, so
it can only overestimate the true convex roof. On two-qubit mixed states
the Wootters formula gives that roof exactly, which makes the pair a
useful cross-check: search >= closed form always, with the gap shrinking
as the trial budget grows.
"""

from entmono import SeededSampler, convex_roof_upper_bound, random_mixed, wootters_concurrence

print(f"{'rank':>4s} {'closed form':>12s} {'roof(50)':>10s} {'roof(500)':>10s} {'gap':>9s}")
worst_gap = 0.0
for i in range(15):
    ancillas = i % 3  # ranks 1, 2, 4
    rho = random_mixed(2, ancillas, SeededSampler(400 + i))
    closed = wootters_concurrence(rho)
    rough = convex_roof_upper_bound(rho, trials=50, seed=i)
    fine = convex_roof_upper_bound(rho, trials=500, seed=i)
    gap = fine - closed
    worst_gap = max(worst_gap, gap)
    assert fine >= closed - 1e-8
    assert fine <= rough + 1e-12  # more trials never loosen the bound
    print(f"{2 ** ancillas:4d} {closed:12.6f} {rough:10.6f} {fine:10.6f} {gap:9.2e}")

print(f"\nworst remaining gap at 500 trials: {worst_gap:.2e}")
print("separable states (closed form 0) keep a positive gap: random")
print("decompositions rarely land on an optimal separable one, and the")
print("search only promises an upper bound.")
