"""Group-of-fractions word problem over a certified Garside monoid.

A group element is carried as Delta^{-k} * p with k >= 0 and p a monoid
element.  Delta is central, so one denominator exponent on the left
suffices, and the pair is unique once Delta is stripped from the left of
p while it divides.  Signed words multiply into this form letter by
letter: an inverse letter s^-1 contributes one denominator power times
the right complement of s in Delta.  Equality cross-multiplies the
denominators and asks the monoid.

A second, independent decision procedure covers the group generated by
s, t, u subject to stu = tus = ust: the relation makes c = stu central
with u = t^-1 s^-1 c, so the group splits as a free group on s, t times
the cyclic center.  Reducing a signed word to a freely reduced (s, t)
word plus a central exponent decides equality by literal comparison, and
the fraction engine is property-tested against it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monoid import BudgetExceeded, ElementClass, MonoidContext
from .words import EMPTY, Presentation, Word

SignedWord = tuple[tuple[int, int], ...]  # (letter id, +1 or -1)


# ------------------------------------------------------------ signed words


def parse_signed(p: Presentation, text: str) -> SignedWord:
    """Dot-separated letters with optional ^e suffixes (e a nonzero
    integer, usually -1); "1" is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out: list[tuple[int, int]] = []
    for atom in text.split("."):
        atom = atom.strip()
        name, _, exp = atom.partition("^")
        e = int(exp) if exp else 1
        if e == 0:
            continue
        sign = 1 if e > 0 else -1
        out.extend([(p.letter(name), sign)] * abs(e))
    return tuple(out)


def signed_text(p: Presentation, w: SignedWord) -> str:
    if not w:
        return "1"
    return ".".join(p.names[c] + ("" if e > 0 else "^-1") for c, e in w)


def signed_of_word(word: Word) -> SignedWord:
    return tuple((c, 1) for c in word)


def invert_signed(w: SignedWord) -> SignedWord:
    return tuple((c, -e) for c, e in reversed(w))


def concat_signed(*parts: SignedWord) -> SignedWord:
    out: list[tuple[int, int]] = []
    for part in parts:
        out.extend(part)
    return tuple(out)


def signed_power(w: SignedWord, k: int) -> SignedWord:
    if k < 0:
        return invert_signed(w) * (-k)
    return w * k


# -------------------------------------------------------- fraction engine


@dataclass(frozen=True)
class Fraction:
    """Delta^{-k} * p, reduced: k = 0 or Delta does not left-divide p."""
    k: int
    p: ElementClass


class GroupContext:
    """Fraction arithmetic over a monoid context that holds a valid
    Garside certificate."""

    def __init__(self, ctx: MonoidContext):
        if ctx.certificate is None or not ctx.certificate.valid:
            raise ValueError("group fractions require a valid Garside "
                             "certificate on the monoid context")
        self.monoid = ctx
        self.presentation = ctx.presentation
        self.Delta: Word = ctx.certificate.Delta.canonical
        self._neg: dict[int, Word] = {}

    def _complement_in_delta(self, s: int) -> Word:
        w = self._neg.get(s)
        if w is None:
            q = self.monoid.divides_left(bytes([s]), self.Delta)
            if q is None:
                raise ValueError(f"generator {self.presentation.names[s]} "
                                 f"does not divide Delta")
            w = q.canonical
            self._neg[s] = w
        return w

    def identity(self) -> Fraction:
        return Fraction(0, self.monoid.element(EMPTY))

    def reduce(self, k: int, word: Word) -> Fraction:
        while k > 0:
            q = self.monoid.divides_left(self.Delta, word)
            if q is None:
                break
            word = q.canonical
            k -= 1
        return Fraction(k, self.monoid.element(word))

    def of_word(self, word: Word) -> Fraction:
        return self.reduce(0, word)

    def fraction_of(self, w: SignedWord) -> Fraction:
        k = 0
        p = EMPTY
        for s, e in w:
            if e > 0:
                p = p + bytes([s])
            else:
                k += 1
                p = p + self._complement_in_delta(s)
                q = self.monoid.divides_left(self.Delta, p)
                if q is not None:
                    p = q.canonical
                    k -= 1
        return self.reduce(k, p)

    def multiply(self, f: Fraction, g: Fraction) -> Fraction:
        return self.reduce(f.k + g.k, f.p.canonical + g.p.canonical)

    def fraction_equal(self, f: Fraction, g: Fraction) -> bool:
        left = self.Delta * g.k + f.p.canonical
        right = self.Delta * f.k + g.p.canonical
        return self.monoid.words_equal(left, right)

    def equal(self, w1: SignedWord, w2: SignedWord) -> bool:
        return self.fraction_equal(self.fraction_of(w1),
                                   self.fraction_of(w2))


def group_context(ctx: MonoidContext) -> GroupContext:
    cached = getattr(ctx, "_group", None)
    if cached is None:
        cached = GroupContext(ctx)
        ctx._group = cached
    return cached


def fraction_of(ctx: MonoidContext, w: SignedWord) -> Fraction:
    return group_context(ctx).fraction_of(w)


def group_equal(ctx: MonoidContext, w1: SignedWord, w2: SignedWord) -> bool:
    return group_context(ctx).equal(w1, w2)


# ------------------------------------------------------- split-form model

_S, _T, _U = 0, 1, 2

G33_PRESENTATION = Presentation(
    ("s", "t", "u"), (1, 1, 1),
    ((bytes((_S, _T, _U)), bytes((_T, _U, _S))),
     (bytes((_S, _T, _U)), bytes((_U, _S, _T)))))


@dataclass(frozen=True)
class G33Form:
    """Freely reduced word over s, t plus a central exponent; equality of
    group elements is componentwise equality of forms."""
    word: tuple[tuple[str, int], ...]
    k: int


def g33_form(w: SignedWord) -> G33Form:
    stack: list[tuple[str, int]] = []
    k = 0

    def push(g: str, e: int):
        if stack and stack[-1] == (g, -e):
            stack.pop()
        else:
            stack.append((g, e))

    for c, e in w:
        if c == _S:
            push("s", e)
        elif c == _T:
            push("t", e)
        elif e > 0:
            k += 1
            push("t", -1)
            push("s", -1)
        else:
            k -= 1
            push("s", 1)
            push("t", 1)
    return G33Form(tuple(stack), k)


class G33Model:
    """Word-problem facade over the split form, usable as a check_hom
    target alongside GroupContext."""

    presentation = G33_PRESENTATION

    def form(self, w: SignedWord) -> G33Form:
        return g33_form(w)

    def equal(self, w1: SignedWord, w2: SignedWord) -> bool:
        return g33_form(w1) == g33_form(w2)


G33 = G33Model()


# ------------------------------------------------------------ hom checking


@dataclass(frozen=True)
class HomSpec:
    """A homomorphism candidate: a source presentation read as a group
    presentation, a target word problem (GroupContext or G33Model), and
    one signed image per source letter."""
    source: Presentation
    target: object
    images: tuple[SignedWord, ...]

    def __post_init__(self):
        if len(self.images) != self.source.rank:
            raise ValueError("one image per source letter is required")


def apply_hom(h: HomSpec, w: SignedWord) -> SignedWord:
    out: list[tuple[int, int]] = []
    for c, e in w:
        out.extend(h.images[c] if e > 0 else invert_signed(h.images[c]))
    return tuple(out)


@dataclass(frozen=True)
class RelationCheck:
    lhs: str
    rhs: str
    ok: bool | None  # None: a budget ran out before the verdict
    note: str = ""


@dataclass(frozen=True)
class HomReport:
    passed: bool
    checks: tuple[RelationCheck, ...]


def check_hom(h: HomSpec) -> HomReport:
    """Verify every defining relation of the source maps to an equality in
    the target group."""
    checks = []
    for lhs, rhs in h.source.relations:
        lt = h.source.word_text(lhs)
        rt = h.source.word_text(rhs)
        try:
            ok = h.target.equal(apply_hom(h, signed_of_word(lhs)),
                                apply_hom(h, signed_of_word(rhs)))
            checks.append(RelationCheck(lt, rt, ok))
        except BudgetExceeded as exc:
            checks.append(RelationCheck(lt, rt, None, str(exc)))
    return HomReport(all(c.ok for c in checks), tuple(checks))
