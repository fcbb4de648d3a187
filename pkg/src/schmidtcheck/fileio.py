"""Readers and writers for ``.grp`` and ``.aut`` files.

Both formats are line oriented ASCII; ``#`` starts a comment and blank
lines are ignored.

``.grp``::

    name Q8            # optional
    degree 8
    gen (1 2 4 7)(3 6 8 5)
    gen (1 3 4 8)(2 5 7 6)

``.aut`` (one ``aut`` block per generating automorphism; ``map k`` gives
the image of generator ``k``, counted from 1)::

    aut
    map 1 (1 3 4 8)(2 5 7 6)
    map 2 (1 5 4 6)(2 3 7 8)
"""
from __future__ import annotations

from pathlib import Path

from .action import CoprimeAction, build_action, build_automorphism
from .errors import ParseError
from .groups import DEFAULT_ELEMENT_CAP, PermGroup, generate_group, parse_permutation


class MalformedFile(ParseError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_group_text(text: str, cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    name = None
    degree = None
    gens: list[tuple[int, str]] = []
    for lineno, line in _lines(text):
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "name":
            name = rest or None
        elif key == "degree":
            if degree is not None:
                raise MalformedFile(f"line {lineno}: degree given twice")
            if not rest.isdigit() or int(rest) < 1:
                raise MalformedFile(f"line {lineno}: degree must be a positive integer, got {rest!r}")
            degree = int(rest)
        elif key == "gen":
            gens.append((lineno, rest))
        else:
            raise MalformedFile(f"line {lineno}: unknown keyword {key!r}")
    if degree is None:
        raise MalformedFile("missing 'degree' line")
    if not gens:
        raise MalformedFile("no 'gen' lines")
    perms = []
    for lineno, cyc in gens:
        try:
            perms.append(parse_permutation(cyc, degree))
        except ParseError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
    return generate_group(perms, cap=cap, name=name)


def read_group(path: str | Path, cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    group = parse_group_text(Path(path).read_text(encoding="utf-8"), cap=cap)
    if group.name is None:
        group.name = Path(path).stem
    return group


def dump_group(group: PermGroup) -> str:
    lines = []
    if group.name:
        lines.append(f"name {group.name}")
    lines.append(f"degree {group.degree}")
    lines.extend(f"gen {g.to_cycle_string()}" for g in group.generators)
    return "\n".join(lines) + "\n"


def parse_action_text(text: str, group: PermGroup) -> CoprimeAction:
    blocks: list[list[tuple[int, str]]] = []
    for lineno, line in _lines(text):
        key, _, rest = line.partition(" ")
        if key == "aut":
            if rest.strip():
                raise MalformedFile(f"line {lineno}: 'aut' takes no arguments")
            blocks.append([])
        elif key == "map":
            if not blocks:
                raise MalformedFile(f"line {lineno}: 'map' outside an 'aut' block")
            num, _, cyc = rest.strip().partition(" ")
            if not num.isdigit() or int(num) < 1:
                raise MalformedFile(f"line {lineno}: bad generator number {num!r}")
            blocks[-1].append((lineno, f"{int(num)} {cyc.strip()}"))
        else:
            raise MalformedFile(f"line {lineno}: unknown keyword {key!r}")
    auts = []
    for block in blocks:
        images = []
        for lineno, entry in block:
            num, cyc = entry.split(" ", 1)
            try:
                images.append((int(num) - 1, parse_permutation(cyc, group.degree)))
            except ParseError as exc:
                raise type(exc)(f"line {lineno}: {exc}") from None
        auts.append(build_automorphism(group, images))
    return build_action(auts, target=group)


def read_action(path: str | Path, group: PermGroup) -> CoprimeAction:
    return parse_action_text(Path(path).read_text(encoding="utf-8"), group)


def dump_action(act: CoprimeAction) -> str:
    group = act.target
    lines = []
    for a in act.generators:
        lines.append("aut")
        for k, g in enumerate(group.gen_indices):
            lines.append(f"map {k + 1} {group.elements[a.elt_map[g]].to_cycle_string()}")
    return "\n".join(lines) + ("\n" if lines else "")
