"""
Normal forms and the word problem
=================================

Two words name the same braid exactly when their left normal forms agree.
"""

from braidkit import compare, delta, exp_sum, inf_sup, normal_form, parse_word, permutation_image

# the braid relation s1 s2 s1 = s2 s1 s2
u = parse_word("1 2 1", 3)
v = parse_word("2 1 2", 3)
print(normal_form(u), normal_form(v), compare(u, v))

# a half twist has no permutation-braid factors left over
print("Delta_4 =", delta(4), "->", normal_form(delta(4)))

# negative letters pull out powers of Delta
w = parse_word("1 -2 -2 3 1", 4)
nf = normal_form(w)
print("nf:", nf)
print("inf, sup:", inf_sup(w))
print("exp:", exp_sum(w), "perm:", permutation_image(w))

# each factor is a permutation braid, listed in one-line notation
for f in nf.permutations():
    print("  factor", f)

# band generators a(t,s) are accepted as input syntax
print(parse_word("a(3,1) a(3,1)^-1 2", 4))
