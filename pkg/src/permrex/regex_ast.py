"""Regular-expression syntax trees over numbered alphabets.

Expressions are built from six node kinds: EmptySet, Epsilon, Sym,
Union, Concat, and Star.  The size measure used throughout the package
is *alphabetic length*: the number of Sym leaves.  Operators and
parentheses are free.

Two textual formats are supported.  The compact format writes symbols
as bare digits with juxtaposition for concatenation ("(12+21)(34+43)")
and is only valid while every symbol id is a single digit.  The spaced
format separates every token with single spaces and works for any
alphabet size; it is the canonical interchange form.

Trees produced by the builders can be hundreds of thousands of nodes
deep (a flat union over 8 symbols is a 40319-deep chain), so every
traversal here is iterative.  Node equality and hashing are structural
and likewise stack-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Literal

from .errors import CompactOverflow, InvalidArgs, RegexSyntaxError, SymbolOutOfRange

RenderFormat = Literal["compact", "spaced"]


class Regex:
    """Base class for all expression nodes.  Immutable; equality is structural."""

    __slots__ = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Regex):
            return NotImplemented
        return ast_equal(self, other)

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return _structural_hash(self)

    def __repr__(self) -> str:
        text = render(self, "spaced")
        if len(text) > 120:
            text = text[:117] + "..."
        return f"{type(self).__name__}<{text}>"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class EmptySet(Regex):
    """The empty language.  Never emitted by the builders; parsed as '&'."""


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Epsilon(Regex):
    """The empty word.  Never emitted by the builders; parsed as 'e'."""


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Sym(Regex):
    """A single alphabet symbol, identified by an integer id >= 1."""

    sym: int


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Union(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Concat(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Star(Regex):
    child: Regex


@dataclass(frozen=True, slots=True)
class RegexMetrics:
    """Size summary of one tree: Sym-leaf count, node count, height."""

    alphabetic_length: int
    node_count: int
    height: int


def alphabetic_length(expr: Regex) -> int:
    """Count Sym leaves. Union/Concat add children, Star keeps its child's count.

    Shared subtrees (the divide-and-conquer builder memoizes) are counted
    once per logical occurrence, as if the DAG were expanded to a tree.
    """
    memo: dict[int, int] = {}
    stack = [expr]
    while stack:
        node = stack[-1]
        key = id(node)
        if key in memo:
            stack.pop()
            continue
        kind = type(node)
        if kind is Sym:
            memo[key] = 1
            stack.pop()
        elif kind is Epsilon or kind is EmptySet:
            memo[key] = 0
            stack.pop()
        elif kind is Star:
            child = node.child
            got = memo.get(id(child))
            if got is None:
                stack.append(child)
            else:
                memo[key] = got
                stack.pop()
        else:  # Union | Concat
            left_len = memo.get(id(node.left))
            right_len = memo.get(id(node.right))
            if left_len is not None and right_len is not None:
                memo[key] = left_len + right_len
                stack.pop()
            else:
                if right_len is None:
                    stack.append(node.right)
                if left_len is None:
                    stack.append(node.left)
    return memo[id(expr)]


def metrics(expr: Regex) -> RegexMetrics:
    """Alphabetic length, node count, and height of the tree in one pass."""
    memo: dict[int, tuple[int, int, int]] = {}
    stack = [expr]
    while stack:
        node = stack[-1]
        key = id(node)
        if key in memo:
            stack.pop()
            continue
        kind = type(node)
        if kind is Sym:
            memo[key] = (1, 1, 0)
            stack.pop()
        elif kind is Epsilon or kind is EmptySet:
            memo[key] = (0, 1, 0)
            stack.pop()
        elif kind is Star:
            got = memo.get(id(node.child))
            if got is None:
                stack.append(node.child)
            else:
                memo[key] = (got[0], got[1] + 1, got[2] + 1)
                stack.pop()
        else:
            lv = memo.get(id(node.left))
            rv = memo.get(id(node.right))
            if lv is not None and rv is not None:
                memo[key] = (lv[0] + rv[0], lv[1] + rv[1] + 1, max(lv[2], rv[2]) + 1)
                stack.pop()
            else:
                if rv is None:
                    stack.append(node.right)
                if lv is None:
                    stack.append(node.left)
    alen, nodes, height = memo[id(expr)]
    return RegexMetrics(alphabetic_length=alen, node_count=nodes, height=height)


def ast_equal(a: Regex, b: Regex) -> bool:
    """Structural equality, safe for arbitrarily deep trees."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        kind = type(x)
        if kind is not type(y):
            return False
        if kind is Sym:
            if x.sym != y.sym:
                return False
        elif kind is Union or kind is Concat:
            stack.append((x.left, y.left))
            stack.append((x.right, y.right))
        elif kind is Star:
            stack.append((x.child, y.child))
        # Epsilon / EmptySet carry no data
    return True


def _structural_hash(expr: Regex) -> int:
    memo: dict[int, int] = {}
    stack = [expr]
    while stack:
        node = stack[-1]
        key = id(node)
        if key in memo:
            stack.pop()
            continue
        kind = type(node)
        if kind is Sym:
            memo[key] = hash((2, node.sym))
            stack.pop()
        elif kind is Epsilon:
            memo[key] = hash((1,))
            stack.pop()
        elif kind is EmptySet:
            memo[key] = hash((0,))
            stack.pop()
        elif kind is Star:
            got = memo.get(id(node.child))
            if got is None:
                stack.append(node.child)
            else:
                memo[key] = hash((5, got))
                stack.pop()
        else:
            tag = 3 if kind is Union else 4
            lv = memo.get(id(node.left))
            rv = memo.get(id(node.right))
            if lv is not None and rv is not None:
                memo[key] = hash((tag, lv, rv))
                stack.pop()
            else:
                if rv is None:
                    stack.append(node.right)
                if lv is None:
                    stack.append(node.left)
    return memo[id(expr)]


# Operator precedence, loosest first.  A child is parenthesized exactly
# when its operator binds looser than its parent's.
_PREC_UNION = 1
_PREC_CONCAT = 2
_PREC_STAR = 3
_PREC_LEAF = 4

_PREC = {Union: _PREC_UNION, Concat: _PREC_CONCAT, Star: _PREC_STAR,
         Sym: _PREC_LEAF, Epsilon: _PREC_LEAF, EmptySet: _PREC_LEAF}


def render_to(expr: Regex, write: Callable[[str], None], fmt: RenderFormat = "spaced") -> None:
    """Stream the textual form of `expr` to `write`, one token at a time.

    Compact output may have been partially written when CompactOverflow
    is raised; callers that need all-or-nothing behavior should use
    render() or pre-check the alphabet.
    """
    if fmt not in ("compact", "spaced"):
        raise InvalidArgs(f"unknown render format {fmt!r}")
    compact = fmt == "compact"
    first = True

    def emit(token: str) -> None:
        nonlocal first
        if not compact and not first:
            write(" ")
        write(token)
        first = False

    stack: list[str | tuple[Regex, bool]] = [(expr, False)]
    while stack:
        item = stack.pop()
        if type(item) is str:
            emit(item)
            continue
        node, parens = item
        kind = type(node)
        seq: list[str | tuple[Regex, bool]]
        if kind is Sym:
            if compact and node.sym > 9:
                raise CompactOverflow(
                    f"symbol {node.sym} has no single-digit form; use the spaced format")
            seq = [str(node.sym)]
        elif kind is Epsilon:
            seq = ["e"]
        elif kind is EmptySet:
            seq = ["&"]
        elif kind is Union:
            seq = [(node.left, _PREC[type(node.left)] < _PREC_UNION), "+",
                   (node.right, _PREC[type(node.right)] < _PREC_UNION)]
        elif kind is Concat:
            seq = [(node.left, _PREC[type(node.left)] < _PREC_CONCAT),
                   (node.right, _PREC[type(node.right)] < _PREC_CONCAT)]
        else:  # Star
            seq = [(node.child, _PREC[type(node.child)] < _PREC_STAR), "*"]
        if parens:
            seq = ["(", *seq, ")"]
        stack.extend(reversed(seq))


def render(expr: Regex, fmt: RenderFormat = "spaced") -> str:
    """Deterministic textual form of `expr` in the given format."""
    parts: list[str] = []
    render_to(expr, parts.append, fmt)
    return "".join(parts)


_TOK_SYM = "sym"
_TOK_PLUS = "+"
_TOK_STAR = "*"
_TOK_LPAREN = "("
_TOK_RPAREN = ")"
_TOK_EPS = "eps"
_TOK_EMPTY = "empty"


def _tokenize(text: str, n: int) -> Iterator[tuple[str, int, int]]:
    """Yield (kind, value, offset) triples.

    Digit runs are split into single-digit symbols while n <= 9 (the
    compact convention) and read as whole decimal ids once n >= 10
    (where only the spaced format is legal, so runs are unambiguous).
    """
    multi_digit = n >= 10
    i = 0
    size = len(text)
    while i < size:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            if multi_digit:
                j = i + 1
                while j < size and text[j].isdigit():
                    j += 1
                value = int(text[i:j])
                offset = i
                i = j
            else:
                value = int(ch)
                offset = i
                i += 1
            if not 1 <= value <= n:
                raise SymbolOutOfRange(
                    f"symbol {value} outside [1, {n}] at offset {offset}")
            yield _TOK_SYM, value, offset
        elif ch == "+":
            yield _TOK_PLUS, 0, i
            i += 1
        elif ch == "*":
            yield _TOK_STAR, 0, i
            i += 1
        elif ch == "(":
            yield _TOK_LPAREN, 0, i
            i += 1
        elif ch == ")":
            yield _TOK_RPAREN, 0, i
            i += 1
        elif ch == "e":
            yield _TOK_EPS, 0, i
            i += 1
        elif ch == "&":
            yield _TOK_EMPTY, 0, i
            i += 1
        else:
            raise RegexSyntaxError(f"unexpected character {ch!r}", i)


def _fold_concat(terms: list[Regex]) -> Regex:
    out = terms[0]
    for term in terms[1:]:
        out = Concat(out, term)
    return out


def _fold_union(alts: list[Regex]) -> Regex:
    out = alts[0]
    for alt in alts[1:]:
        out = Union(out, alt)
    return out


def parse(text: str, n: int) -> Regex:
    """Parse compact or spaced text into a tree over the alphabet {1..n}.

    Union binds loosest, then concatenation, then postfix star.  Chains
    associate to the left, so parse(render(e)) reproduces e exactly for
    trees in that left-leaning normal form.  Parenthesis nesting is
    handled with an explicit stack; input depth is unbounded.
    """
    if n < 1:
        raise InvalidArgs(f"alphabet size must be >= 1, got {n}")
    # One frame per open parenthesis: (completed alternatives, current concat run).
    frames: list[tuple[list[Regex], list[Regex]]] = [([], [])]
    for kind, value, offset in _tokenize(text, n):
        alts, terms = frames[-1]
        if kind is _TOK_SYM:
            terms.append(Sym(value))
        elif kind is _TOK_EPS:
            terms.append(Epsilon())
        elif kind is _TOK_EMPTY:
            terms.append(EmptySet())
        elif kind is _TOK_STAR:
            if not terms:
                raise RegexSyntaxError("star needs an expression to repeat", offset)
            terms[-1] = Star(terms[-1])
        elif kind is _TOK_PLUS:
            if not terms:
                raise RegexSyntaxError("empty union alternative", offset)
            alts.append(_fold_concat(terms))
            terms.clear()
        elif kind is _TOK_LPAREN:
            frames.append(([], []))
        else:  # _TOK_RPAREN
            if len(frames) == 1:
                raise RegexSyntaxError("unbalanced ')'", offset)
            if not terms:
                raise RegexSyntaxError("empty group or union alternative", offset)
            alts.append(_fold_concat(terms))
            frames.pop()
            frames[-1][1].append(_fold_union(alts))
    if len(frames) > 1:
        raise RegexSyntaxError("unclosed '('", len(text))
    alts, terms = frames[0]
    if not terms:
        raise RegexSyntaxError(
            "empty union alternative" if alts else "empty expression", len(text))
    alts.append(_fold_concat(terms))
    return _fold_union(alts)
