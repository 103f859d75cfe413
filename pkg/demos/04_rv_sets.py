# Which (reg, v) pairs occur among connected graphs on n vertices?
#
# Enumerates every connected graph up to isomorphism, collects the realized
# points and compares them with the closed forms.  n = 7 takes a few
# seconds; n = 8 is about half a minute on one core.
import sys

from edgeideal import empirical_rv, formula_A, formula_B


def grid(n, realized):
    half = (n - 1) // 2
    A, B = formula_A(n), formula_B(n)
    rows = []
    for v in range(half, 0, -1):
        cells = []
        for r in range(1, half + 1):
            p = (r, v)
            cells.append("#" if p in realized and p in A else "+" if p in realized else "." if p in B else " ")
        rows.append(f"  v={v} " + " ".join(cells))
    rows.append("       " + " ".join(str(r) for r in range(1, half + 1)) + "  (reg)")
    return "\n".join(rows)


n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
for cls in ("all", "chordal", "whisker", "cw"):
    rep = empirical_rv(n, cls)
    print(f"n={n} class={rep.class_name}: {rep.graphs_in_class} of {rep.graphs_examined} graphs")
    print(f"  realized: {rep.empirical_set.points}")
    print(f"  formula:  {rep.formula_set.points}")
    for c in rep.checks:
        print(f"  {c.status:<4} {c.name} {c.detail}".rstrip())
    print()

print("# realized and in A(n), + realized outside A(n), . allowed by B(n) only")
print(grid(n, empirical_rv(n, "all").empirical_set))
