"""
Deciding lattice-box intersection with certificate expressions
==============================================================

This example builds a small integer lattice, certifies its divisor chain,
generates the floor/ceiling certificate set once, and then reuses it to
decide several boxes, cross-checking each verdict against a brute-force
scan of the box.
"""

from latticebox import (
    Box,
    Lattice,
    brute_force_solve,
    certify,
    evaluate,
    expr_order,
    feasible_by_certificates,
    generate_certificates,
)

# the lattice spanned by (2, 4) and (0, 8) inside Z^2
lat = Lattice(2, [(2, 4), (0, 8)])
print("canonical basis:", [list(r) for r in lat.basis])

chain = certify(lat)
print("divisor chain:", chain.divisor.v, "->", chain.child.divisor.v)

# the certificate set depends only on the lattice, never on the box
certs = generate_certificates(chain)
print(f"{len(certs.exprs)} certificate expressions, "
      f"max division depth {max(expr_order(e) for e in certs.exprs)}")

boxes = [
    Box.of((0, 0), (4, 8)),
    Box.of((1, 1), (1, 7)),
    Box.of((-3, -5), (1, 3)),
    Box.of((3, 5), (3, 7)),
]
for box in boxes:
    values = [evaluate(e, box.lower, box.upper) for e in certs.exprs]
    verdict = feasible_by_certificates(certs, box)
    oracle = brute_force_solve(lat, box)
    print(f"box {box.lower}..{box.upper}: values {values} -> "
          f"{'feasible' if verdict else 'infeasible'} "
          f"(oracle: {oracle})")
    assert verdict == (oracle is not None)
