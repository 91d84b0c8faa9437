# %% [markdown]
# A genus-zero PALF and its invariants.
#
# A PALF over the disk is fixed by a fiber (a holed disk) and an ordered list
# of vanishing cycles.  Each cycle adds a 2-handle with framing -1 relative to
# the fiber, which is enough to read off homology and the intersection form.

# %%
from planarpalf import catalog, forms
from planarpalf import palf as P

# %%
# The smallest W plug: four holes and five vanishing cycles.
w = catalog.plug_palf(1, 2)
print("cycles:", [str(c) for c in w.cycles])
print("monodromy:", w.word())

# %%
# The incidence matrix has one column per cycle, recording which holes it encloses.
for row in P.incidence_matrix(w):
    print(row)

# %%
# H1 is the cokernel of the incidence matrix; b2 counts its kernel.
print(P.homology(w))

# %%
# The kernel is spanned by one vector; -I restricted to it is the intersection form.
print("kernel basis:", P.second_homology_basis(w))
inv = P.invariants(w)
print("form:", inv.form, "parity:", inv.parity, "signature:", inv.signature)
print("boundary H1:", forms.format_group(inv.boundary_H1))

# %%
# The same numbers come out of the Kirby diagram: one dotted circle per hole.
from planarpalf import kirby  # noqa: E402

k = kirby.invariants(P.to_kirby(w))
print("via Kirby:", k.chi, forms.format_group(k.H1), k.b2, k.form)

# %%
# The total monodromy fixes every hole loop up to conjugation; the framing
# vector counts the twists around each hole.
print(P.total_monodromy(w).framing)
