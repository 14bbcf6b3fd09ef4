"""
Conjugacy through super summit sets
===================================

Cycling and decycling push a braid toward its super summit set; two braids
are conjugate exactly when those sets meet.
"""

from braidkit import (
    are_conjugate,
    cycling,
    decycling,
    double_coset_search,
    generator_power_conjugacy_search,
    normal_form,
    parse_word,
    super_summit_set,
)

# the positive conjugates of s1 in B_4
for nf in super_summit_set(parse_word("1", 4)).sorted():
    print(nf)

# a conjugate of s1 s2 with a low inf; cycling raises it
x = normal_form(parse_word("-3 -2 1 2 2 3", 4))
print("start  ", x, (x.inf, x.sup))
for _ in range(3):
    x = cycling(x)
    print("cycled ", x, (x.inf, x.sup))
print("decycled", decycling(x))

print(are_conjugate(parse_word("1 2", 4), parse_word("2 3", 4)))
print(are_conjugate(parse_word("1 2", 4), parse_word("1 1", 4)))

# which power of s2 conjugates a into b?
a = parse_word("2 2 1 -2 -2", 3)
b = parse_word("1", 3)
print(generator_power_conjugacy_search(a, b, 2))

# s2^m u s2^n = v
print(double_coset_search(parse_word("1", 3), parse_word("2 1 2", 3), k=2, p=1))
