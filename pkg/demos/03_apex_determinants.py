# %% [markdown]
# # Four-vertex determinants under a dominating vertex
#
# Vertex 1 beats 2, 3 and 4. The determinant of the whole matrix then
# depends only on the hemimorphy class of the triangle below it.

# %%
import itertools

from skewpm import apex_det_triple, from_skew, new_skew, triple_class
from skewpm.subsets import from_indices

T = from_indices([2, 3, 4])
table = {}
for inner in itertools.product((-1, 0, 1), repeat=3):
    g = from_skew(new_skew(4, [1, 1, 1, *inner]))
    table.setdefault(str(triple_class(g, T)), set()).add(apex_det_triple(g, 0, T))

for cls, dets in sorted(table.items()):
    print(f"{cls:24s} {sorted(dets)}")
