"""Run configuration: key = value documents, presets and relation strings.

A document is one ``key = value`` per line; ``#`` starts a comment. Values
are integers, quoted or bare strings, or bracketed lists of quoted strings
(lists may span lines). Recognized keys::

    n         = 2
    preset    = symplectic
    relations = ["g12 = 1", "order(q1*p2^-1) = 3"]
    format    = json
    out       = report.json
    verify    = ["trace", "tower"]
    degree    = 3

A relation is ``word = 1``, ``word = word`` or ``order(word) = t`` where
``word := term ('*' term)*`` and ``term := symbol ('^' integer)?`` over the
symbols q1..qn, p1..pn and g<i><j> with i < j.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .scalars import ParamGroup, symbol_names

PRESETS = ("generic", "symplectic", "euclidean", "weyl", "heisenberg", "oh")
FORMATS = ("json", "text")
KEYS = ("n", "preset", "relations", "format", "out", "verify", "degree")


class ConfigError(ValueError):
    """A config or relation error, located by 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Config:
    n: int
    preset: Optional[str] = None
    relations: Tuple[str, ...] = ()
    format: str = "json"
    out: Optional[str] = None
    verify: Tuple[str, ...] = ()
    degree: int = 3

    def all_relations(self) -> List[str]:
        """Preset relations first, then the explicit ones."""
        return preset_relations(self.preset, self.n) + list(self.relations)

    def param_group(self) -> ParamGroup:
        return build_group(self.n, self.all_relations())


# relations --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<sym>[A-Za-z][A-Za-z0-9]*)|(?P<int>[+-]?\d+)|(?P<op>[*^=()]))")


def _tokens(text: str, line: int, col0: int) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ConfigError(f"unexpected character {text[pos]!r}", line, col0 + pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), col0 + start))
        pos = m.end()
    return out


class _RelationParser:
    def __init__(self, text: str, n: int, line: int, col0: int):
        self.toks = _tokens(text, line, col0)
        self.i = 0
        self.n = n
        self.line = line
        self.end_col = col0 + len(text)
        self.names = symbol_names(n)
        self.index = {s: k for k, s in enumerate(self.names)}

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("eof", "", self.end_col)

    def _fail(self, msg: str, col: Optional[int] = None):
        raise ConfigError(msg, self.line, self._peek()[2] if col is None else col)

    def _expect(self, kind: str, value: Optional[str] = None):
        tok = self._peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = repr(value) if value else kind
            got = "end of relation" if tok[0] == "eof" else repr(tok[1])
            self._fail(f"expected {want}, found {got}")
        self.i += 1
        return tok

    def _symbol(self, name: str, col: int) -> int:
        if name in self.index:
            return self.index[name]
        m = re.fullmatch(r"([qp])(\d+)|g(\d)(\d)", name)
        if m and m.group(1):
            self._fail(f"symbol {name} needs index at most n={self.n}", col)
        if m and m.group(3):
            i, j = int(m.group(3)), int(m.group(4))
            if i >= j:
                self._fail(f"symbol {name} must have i < j; write g{j}{i}^-1", col)
            self._fail(f"symbol {name} needs indices at most n={self.n}", col)
        self._fail(f"unknown symbol {name!r}", col)

    def word(self) -> List[int]:
        vec = [0] * len(self.names)
        while True:
            _, name, col = self._expect("sym")
            k = self._symbol(name, col)
            power = 1
            if self._peek()[1] == "^":
                self.i += 1
                tok = self._peek()
                if tok[0] != "int":
                    self._fail(f"malformed exponent {tok[1]!r}" if tok[0] != "eof" else "missing exponent")
                power = int(tok[1])
                self.i += 1
            vec[k] += power
            if self._peek()[1] != "*":
                return vec
            self.i += 1

    def statement(self) -> Tuple[List[int], int]:
        tok = self._peek()
        if tok[0] == "sym" and tok[1] == "order":
            self.i += 1
            self._expect("op", "(")
            vec = self.word()
            self._expect("op", ")")
            self._expect("op", "=")
            _, t, col = self._expect("int")
            if int(t) < 1:
                self._fail("order must be a positive integer", col)
            order = int(t)
        else:
            vec = self.word()
            self._expect("op", "=")
            tok = self._peek()
            if tok[0] == "int":
                if tok[1] != "1":
                    self._fail("a relation must equate a word with 1 or with another word")
                self.i += 1
            else:
                rhs = self.word()
                vec = [a - b for a, b in zip(vec, rhs)]
            order = 1
        if self._peek()[0] != "eof":
            self._fail(f"unexpected {self._peek()[1]!r}")
        return vec, order


def parse_relation(text: str, n: int, line: int = 1, column: int = 1) -> Tuple[List[int], int]:
    """Exponent vector and order of one relation statement."""
    return _RelationParser(text, n, line, column).statement()


def build_group(n: int, relations: Sequence[str]) -> ParamGroup:
    g = ParamGroup(n)
    for rel in relations:
        vec, order = parse_relation(rel, n)
        g = g.add_relation(vec, order)
    return g


def preset_relations(name: Optional[str], n: int) -> List[str]:
    """Relation strings realizing a named specialization at rank n."""
    if name in (None, "generic"):
        return []
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    out: List[str] = []
    ps = [f"p{i} = 1" for i in range(1, n + 1)]
    qs = [f"q{i} = 1" for i in range(1, n + 1)]
    same_p = [f"p{i} = p1" for i in range(2, n + 1)]
    same_q = [f"q{i} = q1" for i in range(2, n + 1)]
    same_g = [f"g{i}{j} = g12" for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i, j) != (1, 2)]
    if name == "symplectic":
        # q_i = q^-2, p_i = 1, gamma_ij = q
        out = ps + same_q + same_g + (["q1*g12^2 = 1"] if n > 1 else [])
    elif name in ("euclidean", "heisenberg"):
        # euclidean: q_i = 1, p_i = q^-2, gamma_ij = q^-1; heisenberg: p_i = q^2, gamma_ij = q
        out = qs + same_p + same_g + (["p1 = g12^2"] if n > 1 else [])
    elif name == "weyl":
        out = ps
    elif name == "oh":
        # p_i = d^-1 for a common d
        out = same_p
    return out


# documents --------------------------------------------------------------

def _parse_value(raw: str, line: int, col: int):
    raw = raw.strip()
    if not raw:
        raise ConfigError("missing value", line, col)
    if raw[0] in "[\"'" or re.fullmatch(r"[+-]?\d+", raw):
        try:
            return ast.literal_eval(raw)
        except (ValueError, SyntaxError):
            raise ConfigError(f"malformed value {raw!r}", line, col) from None
    if re.fullmatch(r"[A-Za-z0-9_.\-/]+", raw):
        return raw
    raise ConfigError(f"malformed value {raw!r}", line, col)


def _strip_comment(text: str) -> str:
    quote = None
    for k, ch in enumerate(text):
        if quote:
            if ch == quote:
                quote = None
        elif ch in "\"'":
            quote = ch
        elif ch == "#":
            return text[:k]
    return text


def _entries(text: str):
    """Yield (key, value text, line, key column, value column, spans).

    Each span is (line, column of the text's first character, text).
    """
    lines = text.splitlines()
    k = 0
    while k < len(lines):
        raw = _strip_comment(lines[k])
        lineno = k + 1
        k += 1
        if not raw.strip():
            continue
        if "=" not in raw:
            raise ConfigError("expected 'key = value'", lineno, len(raw) - len(raw.lstrip()) + 1)
        key_part, value = raw.split("=", 1)
        key = key_part.strip()
        key_col = len(key_part) - len(key_part.lstrip()) + 1
        value_col = len(key_part) + 2 + (len(value) - len(value.lstrip()))
        spans = [(lineno, len(key_part) + 2, value)]
        if value.strip().startswith("["):
            while value.count("[") > value.count("]") and k < len(lines):
                nxt = _strip_comment(lines[k])
                spans.append((k + 1, 1, nxt))
                value += "\n" + nxt
                k += 1
        yield key, value, lineno, key_col, value_col, spans


def _locate(spans, needle: str) -> Tuple[int, int]:
    for lineno, col, text in spans:
        at = text.find(needle)
        if at >= 0:
            return lineno, col + at
    return spans[0][0], spans[0][1]


def parse_config(text: str) -> Config:
    values: Dict[str, object] = {}
    where: Dict[str, Tuple[int, int, list]] = {}
    for key, value, lineno, key_col, value_col, spans in _entries(text):
        if key not in KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno, key_col)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", lineno, key_col)
        values[key] = _parse_value(value, lineno, value_col)
        where[key] = (lineno, value_col, spans)

    if "n" not in values:
        raise ConfigError("missing required key 'n'")
    n = values["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        line, col, _ = where["n"]
        raise ConfigError(f"n must be a positive integer, got {n!r}", line, col)

    preset = values.get("preset")
    if preset is not None and preset not in PRESETS:
        line, col, _ = where["preset"]
        raise ConfigError(f"unknown preset {preset!r}; choose from {', '.join(PRESETS)}", line, col)

    relations = values.get("relations", [])
    if isinstance(relations, str):
        relations = [relations]
    if not isinstance(relations, list) or not all(isinstance(r, str) for r in relations):
        line, col, _ = where["relations"]
        raise ConfigError("relations must be a list of strings", line, col)
    for rel in relations:
        line, col, spans = where["relations"]
        line, col = _locate(spans, rel)
        parse_relation(rel, n, line, col)

    fmt = values.get("format", "json")
    if fmt not in FORMATS:
        line, col, _ = where["format"]
        raise ConfigError(f"format must be one of {', '.join(FORMATS)}", line, col)

    verify = values.get("verify", [])
    if isinstance(verify, str):
        verify = [v.strip() for v in verify.split(",") if v.strip()]
    if not isinstance(verify, list) or not all(isinstance(v, str) for v in verify):
        line, col, _ = where["verify"]
        raise ConfigError("verify must be a list of suite names", line, col)

    degree = values.get("degree", 3)
    if not isinstance(degree, int) or degree < 1:
        line, col, _ = where["degree"]
        raise ConfigError("degree must be a positive integer", line, col)

    out = values.get("out")
    return Config(
        n=n,
        preset=preset,
        relations=tuple(relations),
        format=fmt,
        out=None if out is None else str(out),
        verify=tuple(verify),
        degree=degree,
    )


def check_config(cfg: Config) -> Config:
    """Validate a Config assembled outside :func:`parse_config`, e.g. from flags.

    Relation errors report the relation's position in the list as the line.
    """
    if not isinstance(cfg.n, int) or cfg.n < 1:
        raise ConfigError(f"n must be a positive integer, got {cfg.n!r}")
    if cfg.preset is not None and cfg.preset not in PRESETS:
        raise ConfigError(f"unknown preset {cfg.preset!r}; choose from {', '.join(PRESETS)}")
    for k, rel in enumerate(cfg.relations, start=1):
        parse_relation(rel, cfg.n, k, 1)
    if cfg.format not in FORMATS:
        raise ConfigError(f"format must be one of {', '.join(FORMATS)}")
    if cfg.degree < 1:
        raise ConfigError("degree must be a positive integer")
    return cfg


def serialize(cfg: Config) -> str:
    lines = [f"n = {cfg.n}"]
    if cfg.preset is not None:
        lines.append(f"preset = {cfg.preset}")
    if cfg.relations:
        lines.append("relations = [" + ", ".join(_quote(r) for r in cfg.relations) + "]")
    lines.append(f"format = {cfg.format}")
    if cfg.out is not None:
        lines.append(f"out = {_quote(cfg.out)}")
    if cfg.verify:
        lines.append("verify = [" + ", ".join(_quote(v) for v in cfg.verify) + "]")
    lines.append(f"degree = {cfg.degree}")
    return "\n".join(lines) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'
