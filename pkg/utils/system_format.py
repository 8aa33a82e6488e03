"""Text format for Coxeter systems.

    # comment
    name: pentagon
    gens: a b c
    rel: a b 3; rel: b c inf
    racg: a-b b-c c-d

Statements are separated by newlines or ';'. `rel` and `racg` cannot be mixed.
"""
import re

from models.coxeter_matrix import INF, format_label
from models.system_document import SystemDocument
from utils.errors import CoxeterMatrixError, SystemParseError

_TOKEN = re.compile(r"\S+")
_IDENT = re.compile(r"^[A-Za-z0-9_.'+]+$")
KEYWORDS = ("name", "gens", "rel", "racg")


def _statements(text):
    """Yield (line, column of keyword, keyword, [(token, column)]) per statement."""
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        start = 0
        for segment in line.split(";"):
            offset = start
            start += len(segment) + 1
            if not segment.strip():
                continue
            column = offset + len(segment) - len(segment.lstrip()) + 1
            if ":" not in segment:
                token = segment.strip().split()[0]
                raise SystemParseError("Expected 'keyword: ...'", line_number, column, token)
            keyword, body = segment.split(":", 1)
            keyword = keyword.strip()
            body_offset = offset + segment.index(":") + 1
            tokens = [(m.group(), body_offset + m.start() + 1) for m in _TOKEN.finditer(body)]
            yield line_number, column, keyword, tokens


def _symbol(token, line, column):
    if not _IDENT.match(token):
        raise SystemParseError("Invalid generator symbol", line, column, token)
    return token


def _exponent(token, line, column):
    try:
        value = INF if token.lower() == "inf" else int(token)
    except ValueError:
        raise SystemParseError("Exponent must be an integer or 'inf'", line, column, token) from None
    if value < 2:
        raise SystemParseError("Exponent must be at least 2", line, column, token)
    return value


def parse_document(text):
    """Parse a system document, reporting the first error with its position."""
    document = SystemDocument()
    declared = set()
    pairs = set()
    seen = set()

    def declare(symbol, line, column):
        if symbol in declared:
            raise SystemParseError("Duplicate generator", line, column, symbol)
        declared.add(symbol)
        document.generators.append(symbol)

    for line, column, keyword, tokens in _statements(text):
        if keyword not in KEYWORDS:
            raise SystemParseError("Unknown statement", line, column, keyword)
        if keyword in ("rel", "racg"):
            other = "racg" if keyword == "rel" else "rel"
            if other in seen:
                raise SystemParseError("'rel' and 'racg' statements cannot be mixed", line, column, keyword)
        seen.add(keyword)

        if keyword == "name":
            if len(tokens) != 1:
                raise SystemParseError("Expected one name", line, column, keyword)
            document.name = tokens[0][0]
        elif keyword == "gens":
            for token, col in tokens:
                declare(_symbol(token, line, col), line, col)
        elif keyword == "rel":
            if len(tokens) != 3:
                raise SystemParseError("Expected 'rel: s t m'", line, column, keyword)
            (s, s_col), (t, t_col), (m, m_col) = tokens
            for symbol, col in ((s, s_col), (t, t_col)):
                if symbol not in declared:
                    raise SystemParseError("Unknown generator", line, col, symbol)
            if s == t:
                raise SystemParseError("Diagonal relation", line, t_col, t)
            pair = frozenset((s, t))
            if pair in pairs:
                raise SystemParseError("Duplicate pair", line, s_col, f"{s} {t}")
            pairs.add(pair)
            document.relations.append((s, t, _exponent(m, line, m_col)))
        else:
            if document.racg_edges is None:
                document.racg_edges = []
            for token, col in tokens:
                ends = token.split("-")
                if len(ends) != 2 or not all(ends):
                    raise SystemParseError("Expected an edge 'a-b'", line, col, token)
                s, t = (_symbol(e, line, col) for e in ends)
                if s == t:
                    raise SystemParseError("Diagonal relation", line, col, token)
                pair = frozenset((s, t))
                if pair in pairs:
                    raise SystemParseError("Duplicate pair", line, col, token)
                pairs.add(pair)
                for symbol in (s, t):
                    if symbol not in declared:
                        declare(symbol, line, col)
                document.racg_edges.append((s, t))

    if not document.generators:
        raise SystemParseError("No generators declared")
    return document


def parse_system(text):
    """Parse the text format into a validated CoxeterMatrix."""
    document = parse_document(text)
    try:
        return document.matrix()
    except CoxeterMatrixError as error:
        raise SystemParseError(str(error)) from error


def render_system(M, name=None):
    """Canonical text of a Coxeter matrix (one 'rel' per finite pair)."""
    lines = []
    if name:
        lines.append(f"name: {name}")
    lines.append("gens: " + " ".join(M.generators))
    lines.extend(f"rel: {s} {t} {format_label(m)}" for s, t, m in M.finite_pairs())
    return "\n".join(lines) + "\n"
