"""Alphabets, words, and finite monoid presentations.

Words are stored as ``bytes``, one byte per letter, holding the letter's
index in declaration order.  Lexicographic comparison of two such words is
therefore comparison by declaration order, which is the convention behind
every canonical form in the package.

Presentations have a line-based text format::

    letter x1
    letter y
    weight y 2
    rel x1.y = y.x1

Words in ``rel`` lines are dot-separated letter names; ``1`` denotes the
empty word.  ``weight`` lines are optional and default to 1.  Blank lines
and ``#`` comments are ignored.
"""

from dataclasses import dataclass, field
from functools import cached_property
import hashlib

Word = bytes

EMPTY: Word = b""


@dataclass(frozen=True)
class Presentation:
    names: tuple[str, ...]
    weights: tuple[int, ...]
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ValueError("one weight per letter required")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate letter names")
        for name in self.names:
            if not name or "." in name or "=" in name or " " in name:
                raise ValueError(f"bad letter name {name!r}")
        for w in self.weights:
            if not isinstance(w, int) or w < 1:
                raise ValueError("weights must be positive integers")
        k = len(self.names)
        for a, b in self.relations:
            for side in (a, b):
                if any(c >= k for c in side):
                    raise ValueError("relation uses undeclared letter")

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @property
    def rank(self) -> int:
        return len(self.names)

    def letter(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise ValueError(f"unknown letter {name!r}") from None

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        if text == "1":
            return EMPTY
        return bytes(self.letter(part) for part in text.split("."))

    def word_text(self, word: Word) -> str:
        if not word:
            return "1"
        return ".".join(self.names[c] for c in word)

    def weight_of(self, word: Word) -> int:
        return sum(self.weights[c] for c in word)

    def unit_weights(self) -> bool:
        return all(w == 1 for w in self.weights)

    def to_text(self) -> str:
        lines = [f"letter {name}" for name in self.names]
        lines += [f"weight {name} {w}"
                  for name, w in zip(self.names, self.weights) if w != 1]
        lines += [f"rel {self.word_text(a)} = {self.word_text(b)}"
                  for a, b in self.relations]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        names: list[str] = []
        weights: dict[str, int] = {}
        raw_rels: list[tuple[int, str, str]] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "letter" and len(parts) == 2:
                names.append(parts[1])
            elif parts[0] == "weight" and len(parts) == 3:
                if parts[1] not in names:
                    raise ValueError(f"line {lineno}: weight for unknown letter")
                try:
                    weights[parts[1]] = int(parts[2])
                except ValueError:
                    raise ValueError(f"line {lineno}: bad weight") from None
            elif parts[0] == "rel":
                body = line[len("rel"):].strip()
                if body.count("=") != 1:
                    raise ValueError(f"line {lineno}: rel needs exactly one =")
                lhs, rhs = (s.strip() for s in body.split("="))
                raw_rels.append((lineno, lhs, rhs))
            else:
                raise ValueError(f"line {lineno}: cannot parse {raw!r}")
        if len(set(names)) != len(names):
            raise ValueError("duplicate letter declaration")
        stub = cls(tuple(names), tuple(weights.get(n, 1) for n in names), ())
        rels = []
        for lineno, lhs, rhs in raw_rels:
            try:
                rels.append((stub.parse_word(lhs), stub.parse_word(rhs)))
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        return cls(stub.names, stub.weights, tuple(rels))

    def opposite(self) -> "Presentation":
        """Present the opposite monoid: every relation word reversed."""
        return Presentation(
            self.names, self.weights,
            tuple((a[::-1], b[::-1]) for a, b in self.relations))

    def remove_letters(self, kill: "set[str] | frozenset[str]") -> "Presentation":
        """Delete letters and erase them from every relation.

        Relations whose two sides become literally equal are dropped;
        relations left with one empty side are kept (they impose a real
        collapse, and validate_presentation flags them).
        """
        kill = set(kill)
        for name in kill:
            self.letter(name)
        keep = [i for i, name in enumerate(self.names) if name not in kill]
        remap = {old: new for new, old in enumerate(keep)}
        keep_set = set(keep)

        def strip(word: Word) -> Word:
            return bytes(remap[c] for c in word if c in keep_set)

        rels = []
        for a, b in self.relations:
            sa, sb = strip(a), strip(b)
            if sa != sb:
                rels.append((sa, sb))
        return Presentation(
            tuple(self.names[i] for i in keep),
            tuple(self.weights[i] for i in keep),
            tuple(rels))

    def map_letters(self, mapping: dict[str, str]) -> "Presentation":
        """Rewrite relation words through a letter bijection, alphabet fixed.

        The mapping must be a weight-preserving permutation of the letter
        names; letters not mentioned map to themselves.
        """
        table = list(range(self.rank))
        for src, dst in mapping.items():
            table[self.letter(src)] = self.letter(dst)
        if sorted(table) != list(range(self.rank)):
            raise ValueError("mapping is not a permutation")
        for i, j in enumerate(table):
            if self.weights[i] != self.weights[j]:
                raise ValueError("mapping does not preserve weights")
        trans = bytes(table)
        return Presentation(
            self.names, self.weights,
            tuple((a.translate(trans), b.translate(trans))
                  for a, b in self.relations))

    def canonical_text(self) -> str:
        """Serialization invariant under relation order, orientation, and
        chain regrouping.

        Relations are read as edges between words; each connected component
        is re-emitted as a chain through its sorted distinct words.  Trivial
        relations disappear.
        """
        parent: dict[Word, Word] = {}

        def find(w: Word) -> Word:
            while parent.get(w, w) != w:
                parent[w] = parent.get(parent[w], parent[w])
                w = parent[w]
            return w

        def union(a: Word, b: Word):
            ra, rb = find(a), find(b)
            if ra != rb:
                if rb < ra:
                    ra, rb = rb, ra
                parent[rb] = ra

        words: set[Word] = set()
        for a, b in self.relations:
            if a == b:
                continue
            words.update((a, b))
            parent.setdefault(a, a)
            parent.setdefault(b, b)
            union(a, b)
        groups: dict[Word, list[Word]] = {}
        for w in words:
            groups.setdefault(find(w), []).append(w)
        lines = [f"letter {name}" for name in self.names]
        lines += [f"weight {name} {w}"
                  for name, w in zip(self.names, self.weights) if w != 1]
        for root in sorted(groups):
            chain = sorted(groups[root])
            for a, b in zip(chain, chain[1:]):
                lines.append(
                    f"rel {self.word_text(a)} = {self.word_text(b)}")
        return "\n".join(lines) + "\n"

    def content_key(self) -> str:
        return hashlib.sha256(self.canonical_text().encode()).hexdigest()


def validate_presentation(p: Presentation) -> list[str]:
    """Non-fatal issues worth surfacing before any engine runs."""
    issues = []
    seen: dict[tuple[Word, Word], int] = {}
    for k, (a, b) in enumerate(p.relations):
        if a == b:
            issues.append(f"relation {k}: both sides identical")
        if not a or not b:
            issues.append(f"relation {k}: empty side (collapses a word to 1)")
        key = (a, b) if a <= b else (b, a)
        if key in seen:
            issues.append(f"relation {k}: duplicate of relation {seen[key]}")
        else:
            seen[key] = k
    used = {c for a, b in p.relations for c in a + b}
    for i, name in enumerate(p.names):
        if i not in used:
            issues.append(f"letter {name}: unused in every relation")
    return issues


def is_homogeneous(p: Presentation) -> tuple[bool, int | None]:
    """Whether every relation has equal total weight on both sides.

    Returns (True, None) or (False, index of the first offending relation).
    """
    for k, (a, b) in enumerate(p.relations):
        if p.weight_of(a) != p.weight_of(b):
            return False, k
    return True, None
