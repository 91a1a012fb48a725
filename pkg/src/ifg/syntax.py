"""Formula language: terms, atoms, formula AST, parser, printer, indexing.

Formulas are built from atoms with negation ~, slashed disjunction \\/{J},
and slashed existential quantifiers E vn/{J}.  Conjunction /\\{J} and the
universal quantifier A vn/{J} are desugared:

    p /\\{J} q      becomes   ~(~p \\/{J} ~q)
    A vn/{J} p      becomes   ~E vn/{J} ~p

Nodes are interned: structurally equal subformulas are shared and carry a
stable uid, so evaluators can memoize by uid.
"""

import re
from dataclasses import dataclass

from .errors import IfgError, ParseError, GuardExceeded

MAX_FORMULA_DEPTH = 16


# ---------------------------------------------------------------------------
# Terms and atoms


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self):
        return "v%d" % self.index


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class App:
    name: str
    args: tuple

    def __str__(self):
        return "%s(%s)" % (self.name, ",".join(str(a) for a in self.args))


@dataclass(frozen=True)
class Eq:
    lhs: object
    rhs: object

    def __str__(self):
        return "%s=%s" % (self.lhs, self.rhs)


@dataclass(frozen=True)
class Rel:
    name: str
    args: tuple

    def __str__(self):
        return "%s(%s)" % (self.name, ",".join(str(a) for a in self.args))


def term_vars(term):
    """Set of variable indices appearing in a term."""
    if isinstance(term, Var):
        return {term.index}
    elif isinstance(term, Const):
        return set()
    elif isinstance(term, App):
        out = set()
        for a in term.args:
            out |= term_vars(a)
        return out
    else:
        raise IfgError("not a term: %r" % (term,))


def atom_vars(atom):
    """Set of variable indices appearing in an atom."""
    if isinstance(atom, Eq):
        return term_vars(atom.lhs) | term_vars(atom.rhs)
    elif isinstance(atom, Rel):
        out = set()
        for a in atom.args:
            out |= term_vars(a)
        return out
    else:
        raise IfgError("not an atom: %r" % (atom,))


# ---------------------------------------------------------------------------
# Formula nodes (interned)


class Node:
    __slots__ = ("uid", "height", "freevars", "maxindex")


class Atomic(Node):
    __slots__ = ("atom",)


class Not(Node):
    __slots__ = ("child",)


class Or(Node):
    __slots__ = ("jset", "left", "right")


class Exists(Node):
    __slots__ = ("n", "jset", "child")


_intern = {}
_next_uid = 0
all_nodes = []  # every interned node, in creation order


def _register(node):
    global _next_uid
    node.uid = _next_uid
    _next_uid += 1
    all_nodes.append(node)
    return node


def atomic(atom):
    key = ("atom", atom)
    node = _intern.get(key)
    if node is None:
        node = Atomic()
        node.atom = atom
        node.height = 1
        node.freevars = frozenset(atom_vars(atom))
        node.maxindex = max(node.freevars, default=-1)
        _intern[key] = _register(node)
    return _intern[key]


def negate(child):
    key = ("not", child.uid)
    node = _intern.get(key)
    if node is None:
        node = Not()
        node.child = child
        node.height = child.height + 1
        node.freevars = child.freevars
        node.maxindex = child.maxindex
        _intern[key] = _register(node)
    return _intern[key]


def disj(jset, left, right):
    jset = frozenset(jset)
    key = ("or", jset, left.uid, right.uid)
    node = _intern.get(key)
    if node is None:
        node = Or()
        node.jset = jset
        node.left = left
        node.right = right
        node.height = max(left.height, right.height) + 1
        node.freevars = left.freevars | right.freevars
        node.maxindex = max(left.maxindex, right.maxindex, max(jset, default=-1))
        _intern[key] = _register(node)
    return _intern[key]


def exists(n, jset, child):
    jset = frozenset(jset)
    key = ("exists", n, jset, child.uid)
    node = _intern.get(key)
    if node is None:
        node = Exists()
        node.n = n
        node.jset = jset
        node.child = child
        node.height = child.height + 1
        node.freevars = child.freevars - {n}
        node.maxindex = max(child.maxindex, n, max(jset, default=-1))
        _intern[key] = _register(node)
    return _intern[key]


def conj(jset, left, right):
    return negate(disj(jset, negate(left), negate(right)))


def forall(n, jset, child):
    return negate(exists(n, jset, negate(child)))


def render(node):
    """Formula text; parse(render(node), nvars) recovers the same node."""
    if isinstance(node, Atomic):
        return str(node.atom)
    elif isinstance(node, Not):
        return "~" + render(node.child)
    elif isinstance(node, Or):
        return "(%s \\/{%s} %s)" % (
            render(node.left), _render_idx(node.jset), render(node.right))
    elif isinstance(node, Exists):
        return "E v%d/{%s} %s" % (node.n, _render_idx(node.jset),
                                  render(node.child))
    else:
        raise IfgError("not a formula node: %r" % (node,))


def _render_idx(jset):
    return ",".join(str(i) for i in sorted(jset))


# ---------------------------------------------------------------------------
# Formula: a root node plus the number of variables N


class Formula:
    """An IFG formula over variables v0..v(N-1)."""

    def __init__(self, root, nvars):
        if nvars < 0:
            raise IfgError("nvars must be >= 0")
        if root.maxindex >= nvars:
            raise IfgError(
                "index %d out of range for %d variables"
                % (root.maxindex, nvars))
        if root.height > MAX_FORMULA_DEPTH:
            raise GuardExceeded(
                "formula depth %d exceeds limit %d"
                % (root.height, MAX_FORMULA_DEPTH))
        self.root = root
        self.nvars = nvars

    def __eq__(self, other):
        return (isinstance(other, Formula) and self.root is other.root
                and self.nvars == other.nvars)

    def __hash__(self):
        return hash((self.root.uid, self.nvars))

    def __str__(self):
        return render(self.root)

    @property
    def depth(self):
        return self.root.height

    def subformulas(self):
        """List of (position, node, polarity); polarity is True for even 0s."""
        out = []

        def walk(node, pos, zeros):
            out.append((pos, node, zeros % 2 == 0))
            if isinstance(node, Not):
                walk(node.child, pos + (0,), zeros + 1)
            elif isinstance(node, Or):
                walk(node.left, pos + (1,), zeros)
                walk(node.right, pos + (2,), zeros)
            elif isinstance(node, Exists):
                walk(node.child, pos + (3,), zeros)

        walk(self.root, (), 0)
        return out

    def node_at(self, pos):
        node = self.root
        for step in pos:
            if isinstance(node, Not) and step == 0:
                node = node.child
            elif isinstance(node, Or) and step in (1, 2):
                node = node.left if step == 1 else node.right
            elif isinstance(node, Exists) and step == 3:
                node = node.child
            else:
                raise IfgError("invalid position %r" % (pos,))
        return node

    def unbound_sets(self):
        """Map position -> set of indices unbound (quantified above)."""
        out = {}

        def walk(node, pos, j):
            out[pos] = j
            if isinstance(node, Not):
                walk(node.child, pos + (0,), j)
            elif isinstance(node, Or):
                walk(node.left, pos + (1,), j)
                walk(node.right, pos + (2,), j)
            elif isinstance(node, Exists):
                walk(node.child, pos + (3,), j | {node.n})

        walk(self.root, (), frozenset())
        return out

    def is_sentence(self):
        """True when every variable use sits below a quantifier binding it."""
        return not self.root.freevars


# ---------------------------------------------------------------------------
# Parser

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<or>\\/)
  | (?P<and>/\\)
  | (?P<word>[A-Za-z0-9_]+)
  | (?P<punct>[~(){}=,/])
""", re.VERBOSE)

_VAR_RE = re.compile(r"^v([0-9]+)$")


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError("unexpected character %r at offset %d"
                             % (text[i], i))
        if m.lastgroup == "or":
            tokens.append(("OR", "\\/", i))
        elif m.lastgroup == "and":
            tokens.append(("AND", "/\\", i))
        elif m.lastgroup == "word":
            tokens.append(("WORD", m.group(), i))
        elif m.lastgroup == "punct":
            tokens.append((m.group(), m.group(), i))
        i = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError("expected %r but found %r at offset %d"
                             % (kind, tok[1], tok[2]))
        return tok

    def fail(self, message):
        tok = self.peek()
        raise ParseError("%s at offset %d" % (message, tok[2]))

    def formula(self, depth=0):
        if depth >= MAX_FORMULA_DEPTH:
            raise GuardExceeded("formula depth exceeds limit %d"
                                % MAX_FORMULA_DEPTH)
        kind, value, _ = self.peek()
        if kind == "~":
            self.next()
            return negate(self.formula(depth + 1))
        if kind == "(":
            self.next()
            left = self.formula(depth + 1)
            kind, value, _ = self.peek()
            if kind == ")":
                self.next()
                return left
            if kind not in ("OR", "AND"):
                self.fail("expected operator or ')'")
            self.next()
            jset = self.idxset()
            right = self.formula(depth + 1)
            self.expect(")")
            if kind == "OR":
                return disj(jset, left, right)
            return conj(jset, left, right)
        if kind == "WORD" and value in ("E", "A"):
            nxt = self.tokens[self.pos + 1]
            if nxt[0] == "WORD" and _VAR_RE.match(nxt[1]):
                self.next()
                n = int(_VAR_RE.match(self.next()[1]).group(1))
                self.expect("/")
                jset = self.idxset()
                child = self.formula(depth + 1)
                if value == "E":
                    return exists(n, jset, child)
                return forall(n, jset, child)
        return self.atom()

    def idxset(self):
        self.expect("{")
        jset = set()
        if self.peek()[0] == "WORD":
            while True:
                tok = self.next()
                if tok[0] != "WORD" or not tok[1].isdigit():
                    raise ParseError("expected index at offset %d" % tok[2])
                jset.add(int(tok[1]))
                if self.peek()[0] != ",":
                    break
                self.next()
        self.expect("}")
        return jset

    def atom(self):
        term = self.term()
        if self.peek()[0] == "=":
            self.next()
            return atomic(Eq(term, self.term()))
        if isinstance(term, App):
            return atomic(Rel(term.name, term.args))
        self.fail("expected '=' after term")

    def term(self):
        tok = self.next()
        if tok[0] != "WORD":
            raise ParseError("expected term at offset %d" % tok[2])
        m = _VAR_RE.match(tok[1])
        if m:
            return Var(int(m.group(1)))
        if self.peek()[0] == "(":
            self.next()
            args = [self.term()]
            while self.peek()[0] == ",":
                self.next()
                args.append(self.term())
            self.expect(")")
            return App(tok[1], tuple(args))
        return Const(tok[1])


def parse(text, nvars):
    """Parse formula text into a Formula over nvars variables."""
    parser = _Parser(text)
    root = parser.formula()
    tok = parser.peek()
    if tok[0] != "EOF":
        raise ParseError("unexpected %r at offset %d" % (tok[1], tok[2]))
    return Formula(root, nvars)
