# %% [markdown]
# # Deciding reversal equivalence
#
# For sign matrices whose first row has no zeros, the decision routine
# either returns a checked chain of clan reversals or a subset whose
# minors differ.

# %%
import json

from skewpm import decide_equivalence_mn, new_skew, verify_certificate

cyclic = new_skew(4, [1, 1, 1, 1, -1, 1])
transitive = new_skew(4, [1, 1, 1, 1, 1, 1])

v = decide_equivalence_mn(cyclic, -cyclic)
print(json.dumps(v.to_json(), indent=1))
print("replays:", bool(verify_certificate(cyclic, v.certificate, -cyclic)))

# %%
print(json.dumps(decide_equivalence_mn(cyclic, transitive).to_json(), indent=1))

# %% [markdown]
# Matching determinants alone are not enough. These two differ in their
# zero pattern, which the order-2 minors expose.

# %%
a = new_skew(4, [1, 1, 1, 0, 0, 0])
b = new_skew(4, [1, 1, 1, 1, 1, 0])
print(json.dumps(decide_equivalence_mn(a, b).to_json(), indent=1))
