"""Products, coproducts and the antipode on small and big multi-permutations."""
from multihopf import hopf, words

u, v = words.parse_small("[1,2]"), words.parse_small("[1]")
print("12 * 1 up to length 3:", words.element_to_json(words.mmr_product(u, v, 3)))
print("coproduct of 2131:", words.element_to_json(words.mmr_coproduct(words.parse_small("[2,1,3,1]"))))

w = words.parse_big("[(1,3),2]")
print("antipode of [(1,3),2]:", words.element_to_json(words.antipode_big(w)))

print("R~_(3,1) =", " + ".join(words.format_big(t) for t in hopf.rtilde_expand((3, 1))))
print("R~_(3,2,5,1) R~_(4,2):", hopf.rtilde_product((3, 2, 5, 1), (4, 2)).coeffs)

left, right = words.parse_big("[1,2]"), words.parse_big("[2,1]")
print("[1,2] <= [2,1] in weak order:", words.weak_order_leq(left, right))
