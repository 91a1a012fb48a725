"""From an abstract Kleene algebra with a quantifier to concrete team sets.

A finite Kleene algebra with a type-1 quantifier and irreducible bounds
embeds into the one-variable team-set algebra over some finite base.
This script classifies the three-element example, performs the
embedding, prints the image elements, and then searches all small
lattices for further embeddable algebras.
"""

from ifg import finlat
from ifg.finlat import named_algebra

alg = named_algebra("K_nabla1")
print("three-element Kleene algebra, nabla =", alg.nabla)
kind, center = finlat.classify_quantifier_type(alg)
print("quantifier type:", kind, "center:", center)

ctx, mapping = finlat.embed_monadic_kleene(alg)
print("embeds into the team algebra over a base of size", ctx.size)
for x in range(alg.size):
    print("  h(%d) = %s" % (x, ctx.render(mapping[x])))

print()
print("searching all algebras on at most 5 poset points, carrier <= 6:")
for found in finlat.search_embeddable(5, 6):
    ctx, mapping = finlat.embed_monadic_kleene(found)
    print("  carrier %d, nabla %s -> base %d"
          % (found.size, found.nabla, ctx.size))
