"""Parser for finite group presentations.

Grammar::

    presentation ::= '<' gens '|' relations '>'
    gens         ::= name (',' name)*
    relations    ::= relation (',' relation)*
    relation     ::= word '=' word ('=' word)*
    word         ::= item+ | '1'
    item         ::= gen ('^' int)?

Juxtaposition is the product ('*' separators are tolerated), and a chained
equality ``a=b=c`` expands against its last member into ``a=c`` and ``b=c``.
Each expanded pair lhs=rhs is stored as the relator lhs*rhs^-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, UnknownGenerator

Word = tuple[tuple[int, int], ...]  # ((generator index, exponent), ...)


@dataclass(frozen=True)
class Presentation:
    gen_names: tuple[str, ...]
    relators: tuple[Word, ...]

    @property
    def ngens(self) -> int:
        return len(self.gen_names)

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        parts = []
        for g, e in word:
            parts.append(self.gen_names[g] if e == 1 else f"{self.gen_names[g]}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        rels = ", ".join(f"{self.word_str(w)}=1" for w in self.relators)
        return f"<{','.join(self.gen_names)} | {rels}>"


_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT_RE = re.compile(r"-?\d+")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def match_regex(self, regex: re.Pattern) -> str | None:
        self.skip_ws()
        m = regex.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return m.group(0)


def _invert(word: list[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(g, -e) for g, e in reversed(word)]


def parse_presentation(text: str) -> Presentation:
    cur = _Cursor(text)
    cur.take("<")

    gen_names: list[str] = []
    while True:
        name = cur.match_regex(_NAME_RE)
        if name is None:
            raise ParseError("expected generator name", cur.pos)
        if name in gen_names:
            raise ParseError(f"duplicate generator {name!r}", cur.pos)
        gen_names.append(name)
        if cur.peek() == ",":
            cur.take(",")
        else:
            break
    cur.take("|")

    # generator tokenizer: longest declared name first
    by_length = sorted(range(len(gen_names)), key=lambda i: -len(gen_names[i]))

    def parse_word() -> list[tuple[int, int]]:
        items: list[tuple[int, int]] = []
        first = True
        while True:
            cur.skip_ws()
            if first and cur.peek() == "1":
                cur.take("1")
                return []
            gi = None
            for i in by_length:
                if cur.text.startswith(gen_names[i], cur.pos):
                    gi = i
                    break
            if gi is None:
                if first:
                    tok = cur.match_regex(_NAME_RE)
                    if tok is not None:
                        raise UnknownGenerator(
                            f"generator {tok!r} was not declared", cur.pos - len(tok)
                        )
                    raise ParseError("expected a word", cur.pos)
                tok = cur.match_regex(_NAME_RE)
                if tok is not None:
                    raise UnknownGenerator(
                        f"generator {tok!r} was not declared", cur.pos - len(tok)
                    )
                break
            cur.pos += len(gen_names[gi])
            exp = 1
            if cur.peek() == "^":
                cur.take("^")
                tok = cur.match_regex(_INT_RE)
                if tok is None:
                    raise ParseError("expected an integer exponent", cur.pos)
                exp = int(tok)
            if exp != 0:
                items.append((gi, exp))
            first = False
            if cur.peek() == "*":
                cur.take("*")
                first = False  # a '*' must be followed by another item
                if cur.peek() in {"=", ",", ">", ""}:
                    raise ParseError("dangling '*'", cur.pos)
        return items

    relators: list[Word] = []
    while True:
        words = [parse_word()]
        while cur.peek() == "=":
            cur.take("=")
            words.append(parse_word())
        if len(words) < 2:
            raise ParseError("relation needs an '='", cur.pos)
        last = words[-1]
        for w in words[:-1]:
            rel = w + _invert(last)
            if rel:
                relators.append(tuple(rel))
        if cur.peek() == ",":
            cur.take(",")
        else:
            break
    cur.take(">")
    cur.skip_ws()
    if cur.pos != len(cur.text):
        raise ParseError("trailing input after '>'", cur.pos)

    return Presentation(tuple(gen_names), tuple(relators))
