# %% [markdown]
# # Principal minors and HL-clans
#
# A skew-symmetric matrix has a principal minor for every vertex subset.
# Odd subsets always give 0. Even subsets give the square of a Pfaffian.

# %%
from skewpm import enumerate_hl_clans, fingerprint, invert, new_skew
from skewpm.subsets import to_indices

# vertices 1 and 2 see 3, 4, 5 identically
A = new_skew(5, [1, 1, 1, 1,   # row 1
                 1, 1, 1,      # row 2
                 1, -1,        # row 3
                 1])           # row 4
print(A)
fp = fingerprint(A)
for S, v in fp.values.items():
    if v:
        print(to_indices(S), v)

# %% [markdown]
# An HL-clan is a subset X whose off-diagonal blocks have rank at most one.
# Reversing one (negating the X-by-X block) leaves every principal minor alone.

# %%
clans = enumerate_hl_clans(A)
wide = [X for X in clans.nontrivial if 2 <= bin(X).count("1") <= A.n - 2]
print("clans with both sides >= 2:", [to_indices(X) for X in wide])
for X in wide:
    B = invert(A, X)
    print(to_indices(X), "minors unchanged:", fingerprint(B) == fp)
