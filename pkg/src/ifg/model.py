"""Finite structures, valuations, teams, and the combinatorics over them.

A valuation over N variables with universe size K is encoded as a
little-endian mixed-radix integer: index = sum of a_i * K**i, so v0 is the
least significant digit.  A team is an int bitmask over valuation indices.
Digit-string notation writes a valuation as its digits in variable order,
so "01" means v0=0, v1=1.
"""

from .errors import IfgError, ParseError
from . import syntax


class Structure:
    """A finite first-order structure with universe {0, ..., size-1}."""

    def __init__(self, size, constants=None, functions=None, relations=None):
        self.size = size
        self.constants = dict(constants or {})
        self.functions = {name: (arity, dict(table))
                          for name, (arity, table) in (functions or {}).items()}
        self.relations = {name: (arity, frozenset(tuples))
                          for name, (arity, tuples) in (relations or {}).items()}
        self._validate()

    def _validate(self):
        if self.size < 0:
            raise IfgError("universe size must be >= 0")
        rng = range(self.size)
        for name, value in self.constants.items():
            if value not in rng:
                raise IfgError("constant %s = %d out of range" % (name, value))
        for name, (arity, table) in self.functions.items():
            if arity < 1:
                raise IfgError("function %s must have arity >= 1" % name)
            for args, value in table.items():
                if len(args) != arity or any(a not in rng for a in args):
                    raise IfgError("bad argument tuple for %s: %r" % (name, args))
                if value not in rng:
                    raise IfgError("value of %s%r out of range" % (name, args))
            if len(table) != self.size ** arity:
                raise IfgError("function %s is not total" % name)
        for name, (arity, tuples) in self.relations.items():
            for t in tuples:
                if len(t) != arity or any(a not in rng for a in t):
                    raise IfgError("bad tuple for relation %s: %r" % (name, t))

    @classmethod
    def parse(cls, text):
        """Parse the line-oriented structure format.

        universe K
        constant NAME = k
        function NAME/ARITY: a1,..,ak -> b     (one line per tuple)
        relation NAME/ARITY: t1 t2 ...         (tuples a,b,...)
        """
        size = None
        constants = {}
        functions = {}
        relations = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                head, rest = line.split(None, 1)
            except ValueError:
                head, rest = line, ""
            try:
                if head == "universe":
                    size = int(rest)
                elif head == "constant":
                    name, value = rest.split("=")
                    constants[name.strip()] = int(value)
                elif head == "function":
                    sig, body = rest.split(":", 1)
                    name, arity = sig.split("/")
                    name, arity = name.strip(), int(arity)
                    args, value = body.split("->")
                    argtuple = tuple(int(a) for a in args.split(","))
                    table = functions.setdefault(name, (arity, {}))[1]
                    table[argtuple] = int(value)
                elif head == "relation":
                    sig, body = rest.split(":", 1)
                    name, arity = sig.split("/")
                    name, arity = name.strip(), int(arity)
                    tuples = relations.setdefault(name, (arity, set()))[1]
                    for item in body.split():
                        tuples.add(tuple(int(a) for a in item.split(",")))
                else:
                    raise ValueError("unknown directive %r" % head)
            except (ValueError, IndexError) as exc:
                raise ParseError("structure line %d: %s" % (lineno, exc))
        if size is None:
            raise ParseError("structure file must declare 'universe K'")
        return cls(size, constants, functions, relations)

    @classmethod
    def from_file(cls, path):
        with open(path) as handle:
            return cls.parse(handle.read())


def eval_term(structure, term, valuation):
    """Value of a term under a valuation (tuple of universe elements)."""
    if isinstance(term, syntax.Var):
        return valuation[term.index]
    elif isinstance(term, syntax.Const):
        if term.name not in structure.constants:
            raise IfgError("unknown constant %r" % term.name)
        return structure.constants[term.name]
    elif isinstance(term, syntax.App):
        if term.name not in structure.functions:
            raise IfgError("unknown function %r" % term.name)
        arity, table = structure.functions[term.name]
        if len(term.args) != arity:
            raise IfgError("arity mismatch for %r" % term.name)
        args = tuple(eval_term(structure, a, valuation) for a in term.args)
        return table[args]
    else:
        raise IfgError("not a term: %r" % (term,))


def eval_atomic(structure, atom, valuation):
    """Classical satisfaction of an atom under a single valuation."""
    if isinstance(atom, syntax.Eq):
        return (eval_term(structure, atom.lhs, valuation)
                == eval_term(structure, atom.rhs, valuation))
    elif isinstance(atom, syntax.Rel):
        if atom.name not in structure.relations:
            raise IfgError("unknown relation %r" % atom.name)
        arity, tuples = structure.relations[atom.name]
        if len(atom.args) != arity:
            raise IfgError("arity mismatch for %r" % atom.name)
        args = tuple(eval_term(structure, a, valuation) for a in atom.args)
        return args in tuples
    else:
        raise IfgError("not an atom: %r" % (atom,))


class Space:
    """The set of valuations over N variables with universe size K."""

    def __init__(self, size, nvars):
        self.size = size
        self.nvars = nvars
        self.count = size ** nvars if nvars > 0 else 1
        if size == 0 and nvars > 0:
            self.count = 0
        self.full_team = (1 << self.count) - 1
        self._classes = {}
        self._variant = {}

    # -- valuations ---------------------------------------------------------

    def decode(self, index):
        out = []
        for _ in range(self.nvars):
            out.append(index % self.size)
            index //= self.size
        return tuple(out)

    def encode(self, valuation):
        index = 0
        for i in reversed(range(self.nvars)):
            index = index * self.size + valuation[i]
        return index

    def digits(self, index):
        """Digit-string form of a valuation; '()' for the empty valuation."""
        if self.nvars == 0:
            return "()"
        return "".join(str(d) for d in self.decode(index))

    def variant_index(self, index, n, b):
        stride = self.size ** n
        digit = (index // stride) % self.size
        return index + (b - digit) * stride

    def agree_outside(self, i, j, jset):
        a, b = self.decode(i), self.decode(j)
        return all(a[k] == b[k] for k in range(self.nvars) if k not in jset)

    # -- equivalence classes of agree-outside-J ------------------------------

    def classes(self, jset):
        """(class_masks, class_of): the classes of ~J over the full space."""
        jset = frozenset(jset)
        cached = self._classes.get(jset)
        if cached is None:
            reps = {}
            masks = []
            class_of = []
            for i in range(self.count):
                val = self.decode(i)
                key = tuple(val[k] for k in range(self.nvars) if k not in jset)
                if key not in reps:
                    reps[key] = len(masks)
                    masks.append(0)
                cid = reps[key]
                masks[cid] |= 1 << i
                class_of.append(cid)
            cached = (masks, class_of)
            self._classes[jset] = cached
        return cached

    def class_repr(self, index, jset):
        """Canonical text for the ~J class of a valuation: digits, J starred."""
        if self.nvars == 0:
            return "()"
        val = self.decode(index)
        return "".join("*" if k in jset else str(val[k])
                       for k in range(self.nvars))

    # -- teams ---------------------------------------------------------------

    def parse_team(self, text):
        """Parse a comma-separated list of digit strings into a team mask."""
        if self.size > 10:
            raise IfgError("digit-string teams require universe size <= 10")
        text = text.strip()
        if not text:
            return 0
        team = 0
        for item in text.split(","):
            item = item.strip()
            if len(item) != self.nvars or not item.isdigit():
                raise IfgError("bad valuation %r for %d variables"
                               % (item, self.nvars))
            val = tuple(int(c) for c in item)
            if any(d >= self.size for d in val):
                raise IfgError("digit out of range in %r" % item)
            team |= 1 << self.encode(val)
        return team

    def render_team(self, team):
        """Canonical text of a team: sorted digit strings in braces."""
        return "{%s}" % ",".join(self.digits(i) for i in bits(team))

    def team_classes(self, team, jset):
        """Nonempty intersections of team with the ~J classes, in order."""
        masks, _ = self.classes(jset)
        return [m & team for m in masks if m & team]

    def touched_classes(self, team, jset):
        """Bitmask over class ids of the ~J classes the team intersects."""
        masks, _ = self.classes(jset)
        out = 0
        for cid, m in enumerate(masks):
            if m & team:
                out |= 1 << cid
        return out

    def saturated_splits(self, team, jset):
        """All ordered pairs (V1, V2) with V = V1 union_J V2.

        Yields 2**(number of touched classes) pairs; parts may be empty.
        """
        blocks = self.team_classes(team, jset)
        k = len(blocks)
        for choice in range(1 << k):
            v1 = 0
            for i in range(k):
                if not choice >> i & 1:
                    v1 |= blocks[i]
            yield v1, team ^ v1

    def independent_functions(self, team, jset):
        """All functions V ->_J A as (blocks, values) pairs.

        blocks are the ~J classes of V in canonical order; values is a tuple
        assigning one universe element per block.  The empty team yields the
        single empty function.
        """
        blocks = self.team_classes(team, jset)
        k = len(blocks)
        if k == 0:
            yield blocks, ()
            return
        values = [0] * k
        total = self.size ** k
        for code in range(total):
            rem = code
            for i in range(k):
                values[i] = rem % self.size
                rem //= self.size
            yield blocks, tuple(values)

    # -- variations ----------------------------------------------------------

    def _variant_map(self, n, b):
        key = (n, b)
        table = self._variant.get(key)
        if table is None:
            table = [self.variant_index(i, n, b) for i in range(self.count)]
            self._variant[key] = table
        return table

    def variant_team(self, team, n, b):
        table = self._variant_map(n, b)
        out = 0
        for i in bits(team):
            out |= 1 << table[i]
        return out

    def variant_team_all(self, team, n):
        out = 0
        for b in range(self.size):
            out |= self.variant_team(team, n, b)
        return out

    def variant_team_fn(self, n, blocks, values):
        out = 0
        for block, b in zip(blocks, values):
            out |= self.variant_team(block, n, b)
        return out

    def powerset_mask(self, team):
        """Team-set mask whose bits are exactly the subsets of team."""
        out = 1  # the empty team
        sub = team
        while sub:
            out |= 1 << sub
            sub = (sub - 1) & team
        return out


def bits(mask):
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask):
    return mask.bit_count()
