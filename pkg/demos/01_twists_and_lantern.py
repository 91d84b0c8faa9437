# %% [markdown]
# Dehn twists on a holed disk, computed as free-group automorphisms.
#
# The fiber is a disk with h holes; its fundamental group is free on x1..xh,
# one loop per hole.  A standard curve encloses a set of holes, and a twist
# along it is recorded as an automorphism together with a framing vector that
# counts how often each hole boundary was twisted.

# %%
from planarpalf import freegroup as fg
from planarpalf.curves import FiberModel, StandardCurve, disjoint
from planarpalf.mcg import BraidWord, artin_action, compose_all_mc, dehn_twist, equals_mc

# %%
# Words print as x1x2X1, with capitals for inverses.
u = fg.parse_word("x1x2X2x3", 3)
print("reduced word:", u)

# %%
# The braid generator s1 acts by x1 -> x1 x2 x1^-1 and x2 -> x1.
print("\n".join(artin_action(BraidWord([1], 2)).table()))

# %%
# A twist about a consecutive block conjugates the enclosed loops by their product.
f = FiberModel(3)
t = lambda *holes: dehn_twist(StandardCurve(holes), f)  # noqa: E731
print(t(1, 2).describe())

# %%
# A curve that skips a hole is handled by first braiding its strands together.
print(t(1, 3).describe())

# %%
# The lantern relation: four boundary twists equal three interior ones.
lhs = compose_all_mc([t(1, 2, 3), t(1), t(2), t(3)], 3)
rhs = compose_all_mc([t(1, 2), t(1, 3), t(2, 3)], 3)
print("lantern holds:", equals_mc(lhs, rhs), "framing", lhs.framing)

# %%
# Disjoint curves give commuting twists; overlapping ones usually do not.
for a, b in [((1,), (2,)), ((1, 2), (1, 2, 3)), ((1, 2), (2, 3))]:
    ca, cb = StandardCurve(a), StandardCurve(b)
    ab = compose_all_mc([t(*a), t(*b)], 3)
    ba = compose_all_mc([t(*b), t(*a)], 3)
    print(f"{ca} {cb}: disjoint={disjoint(ca, cb, f)} commute={equals_mc(ab, ba)}")
