# %% [markdown]
# Reducing the handle diagrams of A and B.
#
# Each diagram has one dotted circle and three 2-handles.  A short script of
# handle slides and one cancellation removes the dotted circle and leaves a
# plain 2x2 linking matrix.  Invariants are recomputed after every elementary
# step, so a bad move would stop the run.

# %%
from planarpalf import catalog, forms, kirby
from planarpalf import formats as fmt

# %%
for name in ("A", "B"):
    _, md = catalog.manifold_A() if name == "A" else catalog.manifold_B()
    print(f"--- {name} raw diagram")
    print(fmt.serialize(fmt.kirby_to_doc(md.diagram)), end="")
    res = kirby.run_script(md.diagram, catalog.load_script(f"reduce_{name}"))
    print("\n".join(res.trace))
    inv = kirby.invariants(res.diagram)
    print("reduced form:", inv.form, inv.parity, "det", inv.form.det)

# %%
# Same determinant and signature, different parity: no integral change of basis
# can turn one matrix into the other.
a = forms.IntSymForm([[-8, 1], [1, -2]])
b = forms.IntSymForm([[-8, -3], [-3, -3]])
print(forms.congruent(a, b))

# %%
# A random change of basis, on the other hand, is always recovered.
import random  # noqa: E402

P = forms.random_unimodular(2, random.Random(0))
print("witness for a and its pullback:", forms.congruent(a, a.pullback(P)).witness)
