# %% [markdown]
# The W(m,n) family at a glance.
#
# For each (m, n) the PALF has 2n+m cycles on a disk with 2n+m-1 holes.  The
# table compares the PALF route with the handle diagram and with the diagram
# after its reduction script.

# %%
from planarpalf import catalog, forms, kirby
from planarpalf import palf as P

print(f"{'m':>2} {'n':>2} {'cycles':>6} {'chi':>4} {'form':>8} {'via diagram':>12} {'boundary':>9}")
for m in range(1, 5):
    for n in range(2, 6):
        p = catalog.plug_palf(m, n)
        pi = P.invariants(p)
        red = kirby.invariants(catalog.reduce_W(m, n))
        print(
            f"{m:>2} {n:>2} {len(p):>6} {pi.chi:>4} {str(pi.form.gram[0][0]):>8}"
            f" {str(red.form.gram[0][0]):>12} {forms.format_group(pi.boundary_H1):>9}"
        )

# %%
# The full validation report covers the same ground plus A and B.
report = catalog.validate_catalog()
print("catalog valid:", report.ok, f"({len(report.entries)} checks)")
for note in report.notes:
    print("note:", note)
