"""Parser for the SQL-like search dialect.

    select * from Hotels h
    where price_pn <= 350 and price_pn >= 200 and "quiet" and "friendly staff"

Only conjunction is supported; "or" and "not" are rejected with an explicit
"unsupported connective" error rather than silently misread. Quoted strings
are subjective predicates; IDENT OP NUMBER terms are objective comparisons.
Errors carry the byte offset where parsing failed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal

from .corpus import CATEGORIES

KEYWORDS = {"select", "from", "where", "and", "or", "not"}
OPS = ("<=", ">", ">=", "<", "=")

# accepted relation spellings, singular or plural, any case
RELATIONS = {c: c for c in CATEGORIES} | {c + "s": c for c in CATEGORIES}


class QueryParseError(ValueError):
    """Parse failure with the byte offset of the offending input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class Comparison:
    attr: str
    op: str
    value: float


@dataclass(frozen=True)
class Query:
    relation: str
    objective: tuple[Comparison, ...] = ()
    subjective: tuple[str, ...] = ()
    limit: int | None = None


@dataclass(frozen=True)
class _Token:
    kind: str  # keyword | ident | number | string | op | star | eof
    value: str
    offset: int  # byte offset into the source text


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _lex(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        offset = _byte_offset(text, i)
        if ch == "*":
            tokens.append(_Token("star", "*", offset))
            i += 1
        elif ch == '"':
            i += 1
            buf: list[str] = []
            closed = False
            while i < n:
                c = text[i]
                if c == "\\" and i + 1 < n:
                    buf.append(text[i + 1])
                    i += 2
                elif c == '"':
                    closed = True
                    i += 1
                    break
                else:
                    buf.append(c)
                    i += 1
            if not closed:
                raise QueryParseError("unterminated string literal", offset)
            tokens.append(_Token("string", "".join(buf), offset))
        elif text.startswith(("<=", ">="), i):
            tokens.append(_Token("op", text[i : i + 2], offset))
            i += 2
        elif ch in "<>=":
            tokens.append(_Token("op", ch, offset))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            tokens.append(_Token("number", text[i:j], offset))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = "keyword" if word.lower() in KEYWORDS else "ident"
            tokens.append(_Token(kind, word, offset))
            i = j
        else:
            raise QueryParseError(f"unexpected character {ch!r}", offset)
    tokens.append(_Token("eof", "", _byte_offset(text, n)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self._tokens = tokens
        self._pos = 0

    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _advance(self) -> _Token:
        tok = self._tokens[self._pos]
        if tok.kind != "eof":
            self._pos += 1
        return tok

    def _expect_keyword(self, word: str) -> _Token:
        tok = self._peek()
        if tok.kind != "keyword" or tok.value.lower() != word:
            raise QueryParseError(f"expected '{word}', found {tok.value or 'end of input'!r}", tok.offset)
        return self._advance()

    def parse(self) -> Query:
        self._expect_keyword("select")
        tok = self._peek()
        if tok.kind != "star":
            raise QueryParseError(f"expected '*', found {tok.value or 'end of input'!r}", tok.offset)
        self._advance()
        self._expect_keyword("from")
        tok = self._peek()
        if tok.kind != "ident":
            raise QueryParseError(
                f"expected relation name, found {tok.value or 'end of input'!r}", tok.offset
            )
        relation_tok = self._advance()
        relation = RELATIONS.get(relation_tok.value.lower())
        if relation is None:
            raise QueryParseError(
                f"unknown relation '{relation_tok.value}'", relation_tok.offset
            )
        if self._peek().kind == "ident":
            self._advance()  # tuple alias, discarded

        objective: list[Comparison] = []
        subjective: list[str] = []
        tok = self._peek()
        if tok.kind == "keyword" and tok.value.lower() == "where":
            self._advance()
            self._term(objective, subjective)
            while True:
                tok = self._peek()
                if tok.kind == "keyword" and tok.value.lower() == "and":
                    self._advance()
                    self._term(objective, subjective)
                elif tok.kind == "keyword" and tok.value.lower() in ("or", "not"):
                    raise QueryParseError(
                        f"unsupported connective '{tok.value.lower()}'", tok.offset
                    )
                else:
                    break

        tok = self._peek()
        if tok.kind != "eof":
            raise QueryParseError(
                f"expected end of input, found {tok.value!r}", tok.offset
            )
        return Query(
            relation=relation,
            objective=tuple(objective),
            subjective=tuple(subjective),
        )

    def _term(self, objective: list[Comparison], subjective: list[str]) -> None:
        tok = self._peek()
        if tok.kind == "string":
            self._advance()
            subjective.append(tok.value)
            return
        if tok.kind == "keyword" and tok.value.lower() in ("or", "not"):
            raise QueryParseError(f"unsupported connective '{tok.value.lower()}'", tok.offset)
        if tok.kind != "ident":
            raise QueryParseError(
                f"expected a comparison or quoted predicate, found "
                f"{tok.value or 'end of input'!r}",
                tok.offset,
            )
        attr = self._advance().value
        tok = self._peek()
        if tok.kind != "op":
            raise QueryParseError(
                f"expected comparison operator, found {tok.value or 'end of input'!r}",
                tok.offset,
            )
        op = self._advance().value
        tok = self._peek()
        if tok.kind != "number":
            raise QueryParseError(
                f"expected numeric literal, found {tok.value or 'end of input'!r}",
                tok.offset,
            )
        value = float(self._advance().value)
        objective.append(Comparison(attr=attr, op=op, value=value))


def parse_query(text: str) -> Query:
    """Parse dialect text into a Query; raises QueryParseError with a byte
    offset on any malformed input."""
    if not isinstance(text, str):
        raise QueryParseError("query must be text", 0)
    return _Parser(_lex(text)).parse()


def _render_number(value: float) -> str:
    # the grammar has unsigned positional numbers only
    if not math.isfinite(value) or value < 0:
        raise ValueError(f"literal {value!r} is not expressible in the dialect")
    if value == int(value):
        return str(int(value))
    text = repr(value)
    if "e" in text or "E" in text:
        text = format(Decimal(value), "f")
    return text


def _escape(predicate: str) -> str:
    return predicate.replace("\\", "\\\\").replace('"', '\\"')


def render_query(query: Query) -> str:
    """Canonical single-line text for a Query; parse_query round-trips it.

    The limit is carried out of band (service parameter), never in the text.
    """
    parts = [f"select * from {query.relation.capitalize()}s"]
    terms = [f"{c.attr} {c.op} {_render_number(c.value)}" for c in query.objective]
    terms += [f'"{_escape(p)}"' for p in query.subjective]
    if terms:
        parts.append("where " + " and ".join(terms))
    return " ".join(parts)
