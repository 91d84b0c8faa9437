# %% [markdown]
# Recovering curve data by search.
#
# The shipped vanishing cycles were found by enumerating multisets of standard
# curves and keeping those whose invariants match the required ones.  This
# reruns that search for the last cycle of A and of B.

# %%
from planarpalf import catalog
from planarpalf import formats as fmt
from planarpalf import palf as P

w = catalog.plug_palf(1, 2)
prefix = tuple(c.enclosed for c in w.cycles)

# %%
for name, target in (("A", ((-8, 1), (1, -2))), ("B", ((-8, -3), (-3, -3)))):
    c = fmt.Constraints(holes=4, cycles=6, h1=(), b2=2, form=target, multiplicity=2, prefix=prefix)
    found = catalog.search_curve_family(c)
    print(name, "extensions of W(1,2):", [str(p.cycles[-1]) for p in found])

# %%
# The W(1,2) cycles themselves are one of several five-cycle families with
# form <-8>.
c = fmt.Constraints(holes=4, cycles=5, h1=(), b2=1, form=((-8,),))
found = catalog.search_curve_family(c)
print(len(found), "families; first:", [str(x) for x in found[0].cycles])
print("shipped family among them:", sorted(w.cycles) in [sorted(p.cycles) for p in found])

# %%
# Constraints can also be read from a file in the constraints format.
doc = fmt.parse("constraints", "holes 2\ncycles 3\nh1 trivial\nb2 1\nform -3\n")
for p in catalog.search_curve_family(fmt.constraints_from_doc(doc)):
    print(fmt.serialize(fmt.palf_to_doc(p, names=False)), end="")
    print("form:", P.intersection_form(p))
