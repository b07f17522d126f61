# %% [markdown]
# # Equal minors without diagonal similarity
#
# Start from two diagonal blocks and join them with a rank-one block.
# Reversing the top block gives a second matrix with the same principal
# minors. No diagonal similarity links the two, even allowing a transpose.

# %%
from skewpm import (
    find_similarity_up_to_transpose,
    fingerprints_equal,
    loewy_condition,
    new_skew,
    remark1_pair,
)

A, B = remark1_pair(new_skew(2, [1]), new_skew(2, [1]), alpha=[1, 1], beta=[1, 1])
print(A, B, sep="\n\n")
print("minors agree:", bool(fingerprints_equal(A, B)))
print("similarity witness:", find_similarity_up_to_transpose(A, B))

# %% [markdown]
# The rank condition pinpoints why. The split {1,2} | {3,4} has rank-one
# blocks both ways, so the usual uniqueness argument does not apply.

# %%
res = loewy_condition(A)
print(res.to_json(A.n))
