"""
Key agreement simulations
=========================

Two toy protocols in B_8.  A seed fixes everything, and both parties end
with the same normal form.
"""

from braidkit.crypto import aag_default_params, aag_run, klchkp_default_params, klchkp_run

# commutator protocol: public subgroups, secret products, shared [a, b]
t = aag_run(aag_default_params(seed=2024))
print("AAG agree:", t.agree)
print("key:", t.alice_key)
for label, nf in t.messages[:3]:
    print(" ", label, nf)

# commuting subgroups: a uses s1..s3, b uses s5..s7
params = klchkp_default_params(seed=2024)
t = klchkp_run(params)
print("KLCHKP agree:", t.agree)
print("public x:", params.x)
print(t.dumps())

# same seed, same bytes
assert klchkp_run(klchkp_default_params(seed=2024)).dumps() == t.dumps()
