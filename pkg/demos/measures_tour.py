"""A tour of the entanglement measures on recognizable states."""

import math

import numpy as np

from entmono import (
    basis_state,
    concurrence_pure,
    eof_pure,
    eof_two_qubit_mixed,
    ghz_state,
    reduced_state,
    w_state,
    wootters_concurrence,
)

bell = (basis_state(2, 0) + basis_state(2, 3)) / math.sqrt(2.0)

print("pure states, concurrence across the first-qubit cut")
for name, psi in [("|00>", basis_state(2, 0)), ("Bell", bell),
                  ("GHZ(3)", ghz_state(3)), ("W(3)", w_state(3))]:
    print(f"  {name:8s} C = {concurrence_pure(psi, (0,)):.6f}   "
          f"E = {eof_pure(psi, (0,)):.6f} bits")

# GHZ pairs carry no two-party entanglement at all; W pairs share it evenly
print("\ntwo-qubit reductions, Wootters closed form")
for name, psi in [("GHZ(3)", ghz_state(3)), ("W(3)", w_state(3)), ("W(4)", w_state(4))]:
    rho = reduced_state(psi, (0, 1))
    print(f"  {name:8s} C(pair) = {wootters_concurrence(rho):.6f}   "
          f"E(pair) = {eof_two_qubit_mixed(rho):.6f} bits")

print("\nWerner family p|Bell><Bell| + (1-p) I/4, entangled only past p = 1/3")
for p in (0.0, 0.25, 1 / 3, 0.5, 0.75, 1.0):
    rho = p * np.outer(bell, bell.conj()) + (1.0 - p) * np.eye(4) / 4
    closed = max(0.0, (3.0 * p - 1.0) / 2.0)
    print(f"  p = {p:.2f}  C = {wootters_concurrence(rho):.6f}  (expected {closed:.6f})")
