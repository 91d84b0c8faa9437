# %% [markdown]
# The plug twist: exchanging a dot and a 0.
#
# In A's diagram the dotted circle and the 0-framed 2-handle are marked.
# Swapping their roles transposes their linking data with the rest of the
# diagram, and the result is B's diagram.

# %%
from planarpalf import catalog, forms, kirby

_, a = catalog.manifold_A()
_, b = catalog.manifold_B()
twisted = catalog.plug_twist(a)
print("twist of A equals B:", twisted == b)
print("twisting twice gives A back:", catalog.plug_twist(twisted) == a)

# %%
# Turning only the dot into a 0 trades a 1-handle for a 2-handle, so the Euler
# characteristic goes up by two; the full swap leaves it alone.
chi = kirby.invariants(a.diagram).chi
half = kirby.invariants(catalog.dot_to_zero(a.diagram, 0)).chi
print("chi:", chi, "after dot->0:", half, "after the swap:", kirby.invariants(twisted.diagram).chi)

# %%
# The boundary only sees dotted circles as 0-framed unknots, so its homology
# cannot change.
for name, md in (("A", a), ("B", b)):
    print(name, "boundary H1:", forms.format_group(kirby.invariants(md.diagram).boundary_H1))

# %%
# The linking forms on Z/15 agree as well.
la = forms.linking_form(catalog.reduced("A").L)
lb = forms.linking_form(catalog.reduced("B").L)
print("generator self-pairings:", la.generator_multiset() == lb.generator_multiset())
print("isomorphic:", forms.linking_forms_isomorphic(la, lb))
