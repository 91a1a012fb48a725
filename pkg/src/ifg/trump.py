"""Team satisfaction: the compositional counterpart of the semantic games.

A team V satisfies a formula positively when the verifier can win from every
valuation in V using one uniform strategy, and negatively when the falsifier
can.  The evaluator implements the five clause pairs directly, plus a bulk
winning-teams computation that exploits downward closure of winning teams.
"""

from .errors import IfgError, GuardExceeded
from . import syntax
from .model import Space, eval_atomic, bits

MEANING_GUARD = 20
BULK_LIMIT = 10


class Meaning:
    """The pair (winning teams, losing teams) of a formula, as bitmasks."""

    def __init__(self, space, plus, minus):
        self.space = space
        self.plus = plus
        self.minus = minus

    def __eq__(self, other):
        return (isinstance(other, Meaning) and self.plus == other.plus
                and self.minus == other.minus)

    def __hash__(self):
        return hash((self.plus, self.minus))

    def teams(self, which):
        mask = self.plus if which == "plus" else self.minus
        return [team for team in bits(mask)]

    def render(self):
        lines = []
        for which in ("plus", "minus"):
            lines.append(which + ":")
            for team in self.teams(which):
                lines.append(self.space.render_team(team))
        return "\n".join(lines)

    def check(self):
        """Empty team in both parts; both parts intersect only in it."""
        return (self.plus & 1 and self.minus & 1
                and self.plus & self.minus == 1)


class Evaluator:
    """Evaluates formulas over one structure with a fixed variable count."""

    def __init__(self, structure, nvars):
        self.structure = structure
        self.nvars = nvars
        self.space = Space(structure.size, nvars)
        self._atom_masks = {}
        self._memo = {}
        self._bulk = {}
        self._compose = {}
        self._touched = {}

    def atom_mask(self, atom):
        mask = self._atom_masks.get(atom)
        if mask is None:
            mask = 0
            for i in range(self.space.count):
                if eval_atomic(self.structure, atom, self.space.decode(i)):
                    mask |= 1 << i
            self._atom_masks[atom] = mask
        return mask

    # -- per-team satisfaction (definitional recursion) ----------------------

    def satisfies(self, node, team, positive):
        if isinstance(node, syntax.Formula):
            if node.nvars != self.nvars:
                raise IfgError("formula has %d variables, evaluator has %d"
                               % (node.nvars, self.nvars))
            node = node.root
        key = (node.uid, team, positive)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        result = self._satisfies(node, team, positive)
        self._memo[key] = result
        return result

    def _satisfies(self, node, team, positive):
        space = self.space
        if isinstance(node, syntax.Atomic):
            mask = self.atom_mask(node.atom)
            if positive:
                return team & ~mask == 0
            return team & mask == 0
        elif isinstance(node, syntax.Not):
            return self.satisfies(node.child, team, not positive)
        elif isinstance(node, syntax.Or):
            if positive:
                for v1, v2 in space.saturated_splits(team, node.jset):
                    if (self.satisfies(node.left, v1, True)
                            and self.satisfies(node.right, v2, True)):
                        return True
                return False
            return (self.satisfies(node.left, team, False)
                    and self.satisfies(node.right, team, False))
        elif isinstance(node, syntax.Exists):
            if positive:
                for blocks, values in space.independent_functions(team, node.jset):
                    variant = space.variant_team_fn(node.n, blocks, values)
                    if self.satisfies(node.child, variant, True):
                        return True
                return False
            return self.satisfies(node.child,
                                  space.variant_team_all(team, node.n), False)
        else:
            raise IfgError("not a formula node: %r" % (node,))

    # -- bulk winning-team computation ---------------------------------------

    def _touched_table(self, jset):
        """For each team, the bitmask of ~J class ids it intersects."""
        table = self._touched.get(jset)
        if table is None:
            space = self.space
            _, class_of = space.classes(jset)
            table = [0] * (1 << space.count)
            for team in range(1, 1 << space.count):
                low = team & -team
                i = low.bit_length() - 1
                table[team] = table[team ^ low] | (1 << class_of[i])
            self._touched[jset] = table
        return table

    def winning_mask(self, node, positive):
        """Bitmask over all teams: bit V set iff the team satisfies node."""
        if isinstance(node, syntax.Formula):
            node = node.root
        key = (node.uid, positive)
        hit = self._bulk.get(key)
        if hit is not None:
            return hit
        space = self.space
        if space.count > BULK_LIMIT:
            mask = 0
            for team in range(1 << space.count):
                if self.satisfies(node, team, positive):
                    mask |= 1 << team
            self._bulk[key] = mask
            return mask
        if isinstance(node, syntax.Atomic):
            amask = self.atom_mask(node.atom)
            if positive:
                mask = space.powerset_mask(amask)
            else:
                mask = space.powerset_mask(space.full_team & ~amask)
        elif isinstance(node, syntax.Not):
            mask = self.winning_mask(node.child, not positive)
        elif isinstance(node, syntax.Or):
            wl = self.winning_mask(node.left, positive)
            wr = self.winning_mask(node.right, positive)
            if positive:
                mask = self._compose_or_plus(node.jset, wl, wr)
            else:
                mask = wl & wr
        elif isinstance(node, syntax.Exists):
            wc = self.winning_mask(node.child, positive)
            if positive:
                mask = self._compose_exists_plus(node.n, node.jset, wc)
            else:
                mask = self._compose_exists_minus(node.n, wc)
        else:
            raise IfgError("not a formula node: %r" % (node,))
        self._bulk[key] = mask
        return mask

    def _compose_or_plus(self, jset, wl, wr):
        key = ("or", jset, wl, wr)
        hit = self._compose.get(key)
        if hit is not None:
            return hit
        touched = self._touched_table(jset)
        mask = 0
        for v1 in bits(wl):
            t1 = touched[v1]
            for v2 in bits(wr):
                if t1 & touched[v2] == 0:
                    mask |= 1 << (v1 | v2)
        self._compose[key] = mask
        return mask

    def _compose_exists_plus(self, n, jset, wc):
        key = ("ex", n, jset, wc)
        hit = self._compose.get(key)
        if hit is not None:
            return hit
        space = self.space
        maximal = maximal_teams(wc)
        mask = 1  # the empty team always qualifies
        for team in range(1, 1 << space.count):
            for target in maximal:
                ok = True
                for block in space.team_classes(team, jset):
                    if not any(space.variant_team(block, n, b) & ~target == 0
                               for b in range(space.size)):
                        ok = False
                        break
                if ok:
                    mask |= 1 << team
                    break
        self._compose[key] = mask
        return mask

    def _compose_exists_minus(self, n, wc):
        key = ("exm", n, wc)
        hit = self._compose.get(key)
        if hit is not None:
            return hit
        space = self.space
        mask = 0
        for team in range(1 << space.count):
            if wc >> space.variant_team_all(team, n) & 1:
                mask |= 1 << team
        self._compose[key] = mask
        return mask

    # -- meanings and truth values -------------------------------------------

    def meaning(self, formula):
        if self.space.count > MEANING_GUARD:
            raise GuardExceeded("team enumeration needs %d valuations "
                                "(limit %d)" % (self.space.count, MEANING_GUARD))
        node = formula.root if isinstance(formula, syntax.Formula) else formula
        result = Meaning(self.space, self.winning_mask(node, True),
                         self.winning_mask(node, False))
        assert result.check()
        return result

    def truth_value(self, formula):
        if not formula.is_sentence():
            raise IfgError("formula is not a sentence: %s" % formula)
        full = self.space.full_team
        if self.satisfies(formula.root, full, True):
            return "true"
        if self.satisfies(formula.root, full, False):
            return "false"
        return "undetermined"


def maximal_teams(teamset_mask):
    """Maximal teams of a team-set mask, largest first."""
    teams = sorted(bits(teamset_mask), key=lambda t: (-t.bit_count(), t))
    out = []
    for team in teams:
        if not any(team & ~kept == 0 for kept in out):
            out.append(team)
    return out


def satisfies(structure, formula, team, positive):
    """One-shot satisfaction check."""
    return Evaluator(structure, formula.nvars).satisfies(formula, team, positive)


def meaning(structure, formula):
    """One-shot meaning computation."""
    return Evaluator(structure, formula.nvars).meaning(formula)


def truth_value(structure, formula):
    """One-shot three-valued truth of a sentence."""
    return Evaluator(structure, formula.nvars).truth_value(formula)
