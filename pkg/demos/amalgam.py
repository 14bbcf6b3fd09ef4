"""
Words in an amalgamated product of braid groups
===============================================

Glue B_3 and B_3 along s1^2 = t1^3 and decide equality and conjugacy of
syllable words.
"""

from braidkit import (
    AmalgamPresentation,
    amalgam_are_conjugate,
    amalgam_exp_invariant,
    amalgam_reduce,
    amalgam_word_is_trivial,
    cyclically_reduce,
    parse_amalgam_word,
)

pres = AmalgamPresentation(n1=3, n2=3, k=1, j=1, p=2, r=3)

# the defining relation itself is trivial
rel = parse_amalgam_word("A: 1 1; B: -1 -1 -1", pres)
print(amalgam_word_is_trivial(rel, pres))

# s1^4 t1^-3 collapses into the amalgamated subgroup as h^1
reduced, c = amalgam_reduce(parse_amalgam_word("A: 1 1 1 1; B: -1 -1 -1", pres), pres)
print(repr(reduced.render()), "h power", c)

# an H-syllable in the middle gets absorbed by its neighbours
w = parse_amalgam_word("A: 2; B: 1 1 1; A: -2", pres)
reduced, _ = amalgam_reduce(w, pres)
print(reduced)

# a conjugate of a reduced word, cyclically reduced back down
u = parse_amalgam_word("A: 2 -1; B: 2", pres)
g = parse_amalgam_word("B: 1 -2; A: 2", pres)
v = g * u * g.inverse()
print(len(v), "->", cyclically_reduce(v, pres))
cert = amalgam_are_conjugate(u, v, pres)
print(cert.verdict, cert.witness)

# the exponent invariant rules out conjugacy cheaply
x = parse_amalgam_word("A: 2", pres)
y = parse_amalgam_word("B: 2", pres)
print(amalgam_exp_invariant(x, pres), amalgam_exp_invariant(y, pres), bool(amalgam_are_conjugate(x, y, pres)))
