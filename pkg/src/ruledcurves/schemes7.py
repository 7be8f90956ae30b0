"""
Queryable database of the realizable real schemes of nonsingular
degree-7 curves in the projective plane, by category, plus the
complex-scheme list for symmetric M-curves and the complex-orientation
identity used as a consistency filter.

Real schemes are nesting trees: ``<J + 4 + 1<8>>`` is the odd component
J, four empty ovals, and an oval with eight empty ovals inside. Complex
schemes add a p/m sign per oval and a trailing ``:I`` or ``:II`` type
tag. The classification tables live in data/schemes7.json, one block
per statement, so the numbers can be audited without reading code.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

Forest = tuple  # recursively: tuple of ovals, each oval a Forest of children

CATEGORIES = (
    "any",
    "dividing",
    "non-dividing",
    "symmetric",
    "symmetric-dividing-pseudoholomorphic",
    "symmetric-dividing-algebraic",
    "symmetric-non-dividing",
)


class SchemeError(ValueError):
    pass


@dataclass(frozen=True)
class RealSchemeCode:
    has_pseudoline: bool
    ovals: Forest


@dataclass(frozen=True)
class ComplexSchemeCode:
    has_pseudoline: bool
    ovals: tuple  # ovals with signs: (sign, children-tuple)
    type_tag: str  # "I" or "II"

    def real_code(self) -> RealSchemeCode:
        def strip(forest):
            return _canon(tuple(strip(children) for _sign, children in forest))
        return RealSchemeCode(self.has_pseudoline, strip(self.ovals))


def _canon(forest) -> Forest:
    return tuple(sorted((_canon(o) for o in forest), reverse=True))


# -- text form ----------------------------------------------------------

_ITEM = re.compile(r"(\d+)([pm]?)")


class _SchemeParser:
    def __init__(self, text: str, signed: bool):
        self.text = text
        self.pos = 0
        self.signed = signed

    def error(self, msg: str):
        raise SchemeError(f"{msg} at offset {self.pos} in {self.text!r}")

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self):
        self.expect("<")
        self.skip_ws()
        if not self.text.startswith("J", self.pos):
            self.error("expected J")
        self.pos += 1
        ovals = []
        while True:
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == ">":
                self.pos += 1
                break
            self.expect("+")
            ovals.extend(self.parse_item())
        return ovals

    def parse_group(self):
        """A sign-less forest inside <...> of a nested group."""
        ovals = []
        first = True
        while True:
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == ">":
                self.pos += 1
                return ovals
            if not first:
                self.expect("+")
            first = False
            ovals.extend(self.parse_item())

    def parse_item(self):
        self.skip_ws()
        m = _ITEM.match(self.text, self.pos)
        if not m:
            self.error("expected an oval count")
        self.pos = m.end()
        count = int(m.group(1))
        sign = m.group(2)
        if self.signed and not sign:
            self.error("complex schemes need a p/m sign on every oval")
        if not self.signed and sign:
            self.error("unexpected sign in a real scheme")
        children = []
        self.skip_ws()
        if self.pos < len(self.text) and self.text[self.pos] == "<":
            self.pos += 1
            children = self.parse_group()
        if self.signed:
            node = (1 if sign == "p" else -1, tuple(children))
        else:
            node = tuple(children)
        return [node] * count


def parse_real_scheme(text: str) -> RealSchemeCode:
    parser = _SchemeParser(text.strip(), signed=False)
    ovals = parser.parse()
    parser.skip_ws()
    if parser.pos != len(parser.text):
        parser.error("trailing input")
    return RealSchemeCode(True, _canon(tuple(ovals)))


def parse_complex_scheme(text: str) -> ComplexSchemeCode:
    body, _, tag = text.strip().rpartition(":")
    if tag not in ("I", "II"):
        raise SchemeError(f"complex scheme needs a :I or :II tag: {text!r}")
    parser = _SchemeParser(body.strip(), signed=(tag == "I"))
    ovals = parser.parse()
    parser.skip_ws()
    if parser.pos != len(parser.text):
        parser.error("trailing input")

    def canon_signed(forest):
        return tuple(sorted(((s, canon_signed(ch)) for s, ch in forest), reverse=True))

    if tag == "I":
        canon = canon_signed(tuple(ovals))
    else:
        canon = tuple(sorted(ovals, reverse=True))
    return ComplexSchemeCode(True, canon, tag)


def render_real_scheme(code: RealSchemeCode) -> str:
    if not code.has_pseudoline:
        raise SchemeError("degree-7 schemes carry the odd component")

    def render_forest(forest) -> list[str]:
        parts = []
        empty = sum(1 for o in forest if not o)
        rest = [o for o in forest if o]
        if empty:
            parts.append(str(empty))
        for oval in sorted(rest, reverse=True):
            parts.append(f"1<{' + '.join(render_forest(oval))}>")
        return parts

    inner = render_forest(code.ovals)
    return "<J>" if not inner else f"<J + {' + '.join(inner)}>"


def render_complex_scheme(code: ComplexSchemeCode) -> str:
    def render_forest(forest) -> list[str]:
        groups: dict = {}
        for sign, children in forest:
            groups.setdefault((sign, children), 0)
            groups[(sign, children)] += 1
        parts = []
        order = sorted(groups.items(), key=lambda kv: (bool(kv[0][1]), -kv[0][0], kv[0][1]))
        for (sign, children), count in order:
            suffix = "p" if sign > 0 else "m"
            if children:
                for _ in range(count):
                    parts.append(f"1{suffix}<{' + '.join(render_forest(children))}>")
            else:
                parts.append(f"{count}{suffix}")
        return parts

    inner = render_forest(code.ovals)
    body = "<J>" if not inner else f"<J + {' + '.join(inner)}>"
    return f"{body}:{code.type_tag}"


# -- classification data -------------------------------------------------


@lru_cache(maxsize=1)
def _load_data() -> dict:
    with resources.files("ruledcurves").joinpath("data/schemes7.json").open() as fh:
        return json.load(fh)


def _resolve(category: str) -> tuple[dict, dict, list[str], set[tuple[int, int]]]:
    data = _load_data()["categories"]
    if category not in data:
        raise SchemeError(f"unknown category {category!r}; one of {', '.join(CATEGORIES)}")
    removed: set[tuple[int, int]] = set()
    node = data[category]
    while "base" in node:
        removed.update((a, b) for a, b in node.get("remove_nests", ()))
        node = data[node["base"]]
    return node["nest"], node["plain"], list(node.get("extra", ())), removed


def _shape(code: RealSchemeCode):
    """Classify into the degree-7 grammar: plain <J + a>, nest
    <J + a + 1<b>>, or one of the two recorded deep nests."""
    if not code.has_pseudoline:
        raise SchemeError("degree-7 schemes carry the odd component")
    forest = code.ovals
    nonempty = [o for o in forest if o]
    if not nonempty:
        return ("plain", len(forest))
    if len(nonempty) == 1 and all(not child for child in nonempty[0]):
        return ("nest", len(forest) - 1, len(nonempty[0]))
    return ("deep", render_real_scheme(code))


def realizable(code: RealSchemeCode, category: str) -> bool:
    nest, plain, extra, removed = _resolve(category)
    shape = _shape(code)
    if shape[0] == "plain":
        alpha = shape[1]
        if not plain["alpha_min"] <= alpha <= plain["alpha_max"]:
            return False
        if "alpha_parity" in plain and alpha % 2 != plain["alpha_parity"]:
            return False
        return True
    if shape[0] == "nest":
        alpha, beta = shape[1], shape[2]
        if (alpha, beta) in removed:
            return False
        if not nest["beta_min"] <= beta <= nest["beta_max"]:
            return False
        if not nest["alpha_min"] <= alpha <= nest["alpha_max"]:
            return False
        if alpha + beta > nest["total_max"]:
            return False
        if "total_parity" in nest and (alpha + beta) % 2 != nest["total_parity"]:
            return False
        if alpha == 0 and beta in nest.get("alpha0_beta_excluded", ()):
            return False
        if alpha == 1 and beta < nest.get("alpha1_beta_min", 0):
            return False
        return True
    text = shape[1]
    known_deep = {"<J + 1<1<1>>>", "<J + 1 + 1<1<1>>>"}
    if text not in known_deep:
        raise SchemeError(f"scheme {text} is outside the degree-7 grammar")
    return text in extra


def enumerate_schemes(category: str) -> list[RealSchemeCode]:
    """All realizable codes of the category: plain schemes by ascending
    oval count, then nests by (outer, inner), then the deep nests."""
    nest, plain, extra, _removed = _resolve(category)
    out: list[RealSchemeCode] = []
    for alpha in range(plain["alpha_min"], plain["alpha_max"] + 1):
        code = parse_real_scheme(f"<J + {alpha}>" if alpha else "<J>")
        if realizable(code, category):
            out.append(code)
    for alpha in range(nest["alpha_min"], nest["alpha_max"] + 1):
        for beta in range(nest["beta_min"], nest["beta_max"] + 1):
            prefix = f"<J + {alpha} + " if alpha else "<J + "
            code = parse_real_scheme(f"{prefix}1<{beta}>>")
            if realizable(code, category):
                out.append(code)
    for text in extra:
        out.append(parse_real_scheme(text))
    return out


def symmetric_m_complex_schemes() -> list[ComplexSchemeCode]:
    """The complex schemes of nonsingular symmetric M-curves of degree 7."""
    return [parse_complex_scheme(text)
            for text in _load_data()["symmetric_m_complex_schemes"]]


def rokhlin_mischachev(lambda_plus: int, lambda_minus: int,
                       pi_plus: int, pi_minus: int,
                       ovals: int, k: int) -> bool:
    """Complex-orientation identity for dividing curves of degree 2k+1:
    L+ - L- + 2(P+ - P-) = l - k(k+1)."""
    return lambda_plus - lambda_minus + 2 * (pi_plus - pi_minus) == ovals - k * (k + 1)
