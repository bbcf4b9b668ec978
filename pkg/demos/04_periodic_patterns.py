"""The built-in periodic broadcasts of the infinite tiling.

Each pattern is a period lattice plus tower classes; the verifier checks
one representative per vertex class and periodicity does the rest.
"""

from truncdom import PeriodicPattern, catalog, density, verify_infinite

print("(t,r)  density  min reception  max non-tower reception")
for (t, r), pattern in catalog():
    check = verify_infinite(pattern, r)
    assert check.valid
    print(
        f"({t},{r})   {str(density(pattern)):>5}      {check.min_reception:2d}"
        f"             {check.max_nonbroadcaster_reception:2d}"
    )
print()

# Every tower class is load-bearing: drop one and some class goes short.
print("dropping any single tower class breaks the pattern:")
for (t, r), pattern in catalog():
    for i in range(len(pattern.reps)):
        reps = tuple(v for j, v in enumerate(pattern.reps) if j != i)
        check = verify_infinite(PeriodicPattern(pattern.basis, reps, t), r)
        assert not check.valid
        worst = min(got for _, got in check.deficient)
    print(f"  ({t},{r}): every deletion leaves a class at reception < {r}")
