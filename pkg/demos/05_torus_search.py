"""Searching period lattices for low-density broadcasts.

Working modulo a lattice turns the infinite problem into a finite one:
tower classes are scored by the signal all their translates deliver, and
the exact solver minimizes the class count per lattice. Whatever it finds
lifts to a verified pattern of the plane, so every line printed here is a
certified upper bound on the optimal density.
"""

from truncdom import density_search, torus_gamma, verify_infinite

print("best verified densities over all period lattices of index <= 6:")
for t, r in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 1)]:
    out = density_search(t, r, max_det=6)
    pat = out.pattern
    print(
        f"  (t={t}, r={r}): density {str(out.density):>5}  "
        f"(lattice {pat.basis}, {len(pat.reps)} tower class"
        f"{'es' if len(pat.reps) != 1 else ''})"
    )
print()

# At (4,1) the search beats the built-in 1/12 construction: one tower class
# per four squares suffices.
out = density_search(4, 1, max_det=6)
print(f"(4,1) search result: density {out.density}, reps {out.pattern.reps}")
print("re-verified on the infinite tiling:", verify_infinite(out.pattern, 1).valid)
print()

# Stronger demands at strength 4. Each line is a certified upper bound on
# the optimal density; nothing here is claimed optimal.
print("strength-4 exploration:")
for r, md in [(2, 5), (3, 8), (4, 8)]:
    out = density_search(4, r, max_det=md)
    p = out.pattern
    assert verify_infinite(p, r).valid
    print(f"  (4,{r}) up to index {md}: density {out.density}"
          f"  (lattice {p.basis}, {len(p.reps)} classes)")
print()

# Quotient graphs with enough room (balls of radius t-1 embed) admit exact
# minimums that mean something for the lattice itself.
count, pattern = torus_gamma(((1, 1), (0, 4)), 3, 1)
print(f"quotient by (1,1),(0,4) at t=3: minimum {count} classes,"
      f" lifted density {count}/16")
