"""
A small language for decorated symmetric cobordisms.

Grammar::

    expr      := term { "." term }
    term      := factor { ("*" | "⊗") factor }
    factor    := generator | "(" expr ")" | "id" "(" int ")"
    generator := "cap" [level] | "cup" | "pants" | "copants"
               | "tube" [level] | "twist" | "omega" | "xcap"
               | "G" | "K" | "A" | "Abar"
    level := "(" int "," int ")"

``a . b`` applies b first, so "cup . K . xcap" is the torus C K U.  The
tensor product binds tighter than composition.  Arities: cap and xcap are
0 -> 1, cup 1 -> 0, pants 1 -> 2, copants 2 -> 1, twist 2 -> 2, the rest
1 -> 1.  A level (a, b) on cap or tube multiplies by eta^-a etabar^-b, so
tube(-1,0) is A and tube(0,-1) is Abar.
"""
import random
from dataclasses import dataclass, field

from .errors import ArgumentError
from .ring import DEFAULT_U_ORDER
from .tqft import TqftOperator, elementary_operator

ARITIES = {
    "cap": (0, 1), "cup": (1, 0), "pants": (1, 2), "copants": (2, 1),
    "tube": (1, 1), "twist": (2, 2), "omega": (1, 1), "xcap": (0, 1),
    "G": (1, 1), "K": (1, 1), "A": (1, 1), "Abar": (1, 1),
}
LEVELLED = ("cap", "tube")
_OPERATOR_KIND = {"omega": "Omega", "xcap": "Xcap"}


class DslError(ArgumentError):
    """A lexical, syntax or arity error, with the character offset where it occurred."""

    def __init__(self, message, pos=None):
        where = "" if pos is None else " at position %d" % pos
        super().__init__(message + where)
        self.pos = pos


class DslSyntaxError(DslError):
    pass


class ArityError(DslError):
    pass


# AST


@dataclass(frozen=True)
class Generator:
    kind: str
    level: tuple = None
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Compose:
    """left after right."""

    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Identity:
    n: int
    pos: int = field(default=0, compare=False)


# lexer


def tokenize(text):
    """List of (kind, value, pos) with kinds name, int, punctuation and end."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif ch.isdigit() or (ch in "+-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch in "().,*":
            tokens.append((ch, ch, i))
            i += 1
        elif ch == "⊗":
            tokens.append(("*", ch, i))
            i += 1
        else:
            raise DslSyntaxError("unexpected character %r" % ch, i)
    tokens.append(("end", None, n))
    return tokens


# parser


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise DslSyntaxError("expected %r, found %s" % (kind, found), tok[2])
        self.i += 1
        return tok

    def expr(self):
        left = self.term()
        if self.peek()[0] == ".":
            pos = self.take(".")[2]
            return Compose(left, self.expr(), pos)
        return left

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            pos = self.take("*")[2]
            node = Tensor(node, self.factor(), pos)
        return node

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if kind != "name":
            found = "end of input" if kind == "end" else repr(value)
            raise DslSyntaxError("expected a generator, 'id' or '(', found %s" % found, pos)
        self.take("name")
        if value == "id":
            self.take("(")
            n = self.take("int")
            if n[1] < 0:
                raise DslSyntaxError("id needs a non-negative size", n[2])
            self.take(")")
            return Identity(n[1], pos)
        if value not in ARITIES:
            raise DslSyntaxError("unknown generator %r" % value, pos)
        level = None
        if value in LEVELLED and self.peek()[0] == "(":
            self.take("(")
            a = self.take("int")[1]
            self.take(",")
            b = self.take("int")[1]
            self.take(")")
            level = (a, b)
        return Generator(value, level, pos)


def parse(text):
    parser = _Parser(text)
    node = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise DslSyntaxError("unexpected %r after a complete expression" % (tok[1],), tok[2])
    return node


# printer


def to_text(node):
    """Canonical text: ASCII '*' for the tensor, parentheses only where needed."""
    if isinstance(node, Generator):
        if node.level is None:
            return node.kind
        return "%s(%d,%d)" % (node.kind, node.level[0], node.level[1])
    if isinstance(node, Identity):
        return "id(%d)" % node.n
    if isinstance(node, Compose):
        left = to_text(node.left)
        if isinstance(node.left, Compose):
            left = "(%s)" % left
        return "%s . %s" % (left, to_text(node.right))
    if isinstance(node, Tensor):
        left = to_text(node.left)
        if isinstance(node.left, Compose):
            left = "(%s)" % left
        right = to_text(node.right)
        if isinstance(node.right, (Compose, Tensor)):
            right = "(%s)" % right
        return "%s * %s" % (left, right)
    raise TypeError("not a cobordism expression: %r" % (node,))


# types


def typecheck(node):
    """(n_in, n_out) of a well-typed expression."""
    if isinstance(node, Generator):
        if node.level is not None and node.kind not in LEVELLED:
            raise ArityError("only cap and tube carry a level", node.pos)
        return ARITIES[node.kind]
    if isinstance(node, Identity):
        return (node.n, node.n)
    if isinstance(node, Compose):
        left, right = typecheck(node.left), typecheck(node.right)
        if right[1] != left[0]:
            raise ArityError("cannot compose: right side has %d outputs but left side takes %d inputs"
                             % (right[1], left[0]), node.pos)
        return (right[0], left[1])
    if isinstance(node, Tensor):
        left, right = typecheck(node.left), typecheck(node.right)
        return (left[0] + right[0], left[1] + right[1])
    raise TypeError("not a cobordism expression: %r" % (node,))


# evaluation


def _generator(node, d, order):
    if node.kind == "A":
        return elementary_operator("A", d, order=order)
    if node.kind == "Abar":
        return elementary_operator("Abar", d, order=order)
    kind = _OPERATOR_KIND.get(node.kind, node.kind)
    return elementary_operator(kind, d, level=node.level, order=order)


def evaluate_operator(node, d, order=DEFAULT_U_ORDER):
    typecheck(node)
    return _evaluate(node, d, order)


def _evaluate(node, d, order):
    if isinstance(node, Generator):
        return _generator(node, d, order)
    if isinstance(node, Identity):
        return TqftOperator.identity(d, node.n)
    if isinstance(node, Compose):
        return _evaluate(node.left, d, order).compose(_evaluate(node.right, d, order))
    return _evaluate(node.left, d, order).tensor(_evaluate(node.right, d, order))


def evaluate(node, d, order=DEFAULT_U_ORDER):
    """The operator of a well-typed expression, or its Scalar when the arity is (0, 0)."""
    if isinstance(node, str):
        node = parse(node)
    op = evaluate_operator(node, d, order)
    return op.scalar() if op.arity == (0, 0) else op


# random expressions


def _leaves(n, m):
    out = [k for k, a in ARITIES.items() if a == (n, m)]
    if n == m:
        out.append("id")
    return out


def _leaf(rng, kind, n, levels):
    if kind == "id":
        return Identity(n)
    level = None
    if kind in LEVELLED and rng.random() < 0.5:
        level = (rng.choice(levels), rng.choice(levels))
    return Generator(kind, level)


def _tensor_all(nodes):
    node = nodes[0]
    for x in nodes[1:]:
        node = Tensor(node, x)
    return node


def _fallback(n, m):
    """n cups followed by m caps, or a closed disk pair when both are zero."""
    if n == 0 and m == 0:
        return Compose(Generator("cup"), Generator("cap"))
    if n == 0:
        return _tensor_all([Generator("cap")] * m)
    if m == 0:
        return _tensor_all([Generator("cup")] * n)
    return Compose(_tensor_all([Generator("cap")] * m), _tensor_all([Generator("cup")] * n))


def random_expression(rng, n_in, n_out, depth=3, max_legs=3, levels=(-1, 0, 1)):
    """A random well-typed expression of arity (n_in, n_out)."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    leaves = _leaves(n_in, n_out)
    if depth <= 0:
        return _leaf(rng, rng.choice(leaves), n_in, levels) if leaves else _fallback(n_in, n_out)
    choice = rng.random()
    if choice < 0.3 and leaves:
        return _leaf(rng, rng.choice(leaves), n_in, levels)
    if choice < 0.7:
        mid = rng.randint(0, max_legs)
        return Compose(random_expression(rng, mid, n_out, depth - 1, max_legs, levels),
                       random_expression(rng, n_in, mid, depth - 1, max_legs, levels))
    splits = [(a, b) for a in range(n_in + 1) for b in range(n_out + 1)
              if (a, b) != (0, 0) and (a, b) != (n_in, n_out)]
    if not splits:
        return random_expression(rng, n_in, n_out, depth - 1, max_legs, levels)
    a, b = rng.choice(splits)
    return Tensor(random_expression(rng, a, b, depth - 1, max_legs, levels),
                  random_expression(rng, n_in - a, n_out - b, depth - 1, max_legs, levels))


RELATIONS = (
    ("crosscap is Omega invariant", "omega . copants . (xcap * id(1))", "copants . (xcap * id(1))"),
    ("crosscap square", "copants . (xcap * xcap)", "copants . (id(1) * omega) . pants . cap"),
    ("K is the crosscap product", "K", "copants . (xcap * id(1))"),
    ("G is product after coproduct", "G", "copants . pants"),
    ("torus", "cup . K . xcap", "cup . copants . (xcap * xcap)"),
    ("Omega involution", "omega . omega", "id(1)"),
    ("twist involution", "twist . twist", "id(2)"),
    ("level tubes", "tube(-1,0) . tube(0,-1)", "A . Abar"),
    ("level cap", "cap(-1,0)", "A . cap"),
)


def relation_report(d, order=DEFAULT_U_ORDER):
    """Evaluate both sides of each relation in RELATIONS at degree d."""
    out = {}
    for name, lhs, rhs in RELATIONS:
        a = evaluate_operator(parse(lhs), d, order)
        b = evaluate_operator(parse(rhs), d, order)
        out[name] = a.agrees(b)
    return out


def functoriality_check(rng, d, order=DEFAULT_U_ORDER, max_legs=2):
    """One random instance of each functoriality law, compared in the standard basis.

    Returns (compose_ok, tensor_ok, expressions).
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    n, k, m = (rng.randint(0, max_legs) for _ in range(3))
    e1 = random_expression(rng, k, m, 2, max_legs)
    e2 = random_expression(rng, n, k, 2, max_legs)
    whole = evaluate_operator(Compose(e1, e2), d, order).to("e")
    parts = evaluate_operator(e1, d, order).to("e").compose(evaluate_operator(e2, d, order).to("e"))
    compose_ok = whole.agrees(parts)
    a, b = rng.randint(0, max_legs), rng.randint(0, max_legs)
    f1 = random_expression(rng, a, b, 1, max_legs)
    f2 = random_expression(rng, rng.randint(0, max_legs - a), rng.randint(0, max_legs - b), 1, max_legs)
    whole = evaluate_operator(Tensor(f1, f2), d, order).to("e")
    parts = evaluate_operator(f1, d, order).to("e").tensor(evaluate_operator(f2, d, order).to("e"))
    tensor_ok = whole.agrees(parts)
    return compose_ok, tensor_ok, (to_text(Compose(e1, e2)), to_text(Tensor(f1, f2)))
