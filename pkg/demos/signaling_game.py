"""Signaling: an extra variable can carry information past a slash.

The sentence-like formula (v0=v1 \\/{0,1} ~(v0=v1)) asks the verifier to
sort a team into the valuations where v0=v1 holds and those where it
fails, without looking at v0 or v1.  Over the full two-variable team that
is impossible.  Add a third variable whose value happens to encode
whether v0=v1, and the same formula becomes winnable: the verifier reads
the answer off v2.
"""

from ifg import syntax, games
from ifg.model import Structure

structure = Structure(2)

print("two variables, full team:")
f2 = syntax.parse("(v0=v1 \\/{0,1} ~(v0=v1))", 2)
ga2 = games.GameAnalyzer(structure, 2)
won, _ = ga2.has_winning_strategy(f2, ga2.space.full_team, 1)
print("  verifier wins:", won)

print()
print("three variables, team where v2 = (v0 == v1):")
f3 = syntax.parse("(v0=v1 \\/{0,1} ~(v0=v1))", 3)
ga3 = games.GameAnalyzer(structure, 3)
team = ga3.space.parse_team("001,010,100,111")
won, strategy = ga3.has_winning_strategy(f3, team, 1)
print("  verifier wins:", won)
print("  strategy (one uniform choice per information class):")
for line in strategy.render().splitlines():
    print("   ", line)
print("  verified:", ga3.verify_strategy(f3, team, strategy))
