"""Syntactic complements and the conditions built on them.

For a presentation in which each pair of distinct letters s, t carries at
most one relation s·u = t·v (and none of the shape s·u = s·v), the partial
map θ(s,t) = u, θ(t,s) = v extends uniquely to words by

    θ(w, w) = 1,  θ(ab, c) = θ(b, θ(a, c)),
    θ(a, bc) = θ(a, b) θ(θ(b, a), c),  θ(1, a) = a,  θ(a, 1) = 1.

When the presentation additionally satisfies the cube condition below, the
extension computes right-lcms: u·θ(u,v) = v·θ(v,u) whenever θ(u,v) is
defined, and θ(u,v) undefined means u, v have no common right multiple.
The monoid engine leans on this for every fast word-problem operation.
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .words import EMPTY, Presentation, Word

NOT_RIGHT_COMPLEMENTED = "not-right-complemented"
RIGHT_COMPLEMENTED = "right-complemented"
RIGHT_FULL = "right-full"

DEFINED = "defined"
UNDEFINED = "undefined"
BUDGET_EXCEEDED = "budget-exceeded"

DEFAULT_THETA_BUDGET = 1_000_000

_MISSING = object()
_UNDEF = object()


@dataclass
class ThetaResult:
    status: str
    word: Word | None
    steps: int = 0

    @property
    def defined(self) -> bool:
        return self.status == DEFINED


@dataclass
class ThetaTable:
    presentation: Presentation
    entries: dict[tuple[int, int], Word]
    classification: str
    witness: str | None = None
    memo: dict[tuple[Word, Word], Word | None] = field(default_factory=dict)

    def letter_pair(self, s: int, t: int) -> Word | None:
        if s == t:
            return EMPTY
        return self.entries.get((s, t))

    def extend(self, u: Word, v: Word,
               budget: int = DEFAULT_THETA_BUDGET) -> ThetaResult:
        return theta_extend(self, u, v, budget)


def build_theta(p: Presentation) -> ThetaTable:
    """Read the letter-level complement table off the relations."""
    entries: dict[tuple[int, int], Word] = {}
    classification = RIGHT_COMPLEMENTED
    witness = None

    def fail(msg):
        nonlocal classification, witness
        if classification != NOT_RIGHT_COMPLEMENTED:
            classification, witness = NOT_RIGHT_COMPLEMENTED, msg

    for k, (a, b) in enumerate(p.relations):
        if not a or not b:
            fail(f"relation {k} has an empty side")
            continue
        s, t = a[0], b[0]
        if s == t:
            fail(f"relation {k} has equal head letters")
            continue
        pair = (s, t)
        if pair in entries and (entries[pair] != a[1:]
                                or entries[(t, s)] != b[1:]):
            fail(f"relation {k} duplicates the pair "
                 f"{p.names[s]},{p.names[t]} with a different complement")
            continue
        entries[pair] = a[1:]
        entries[(t, s)] = b[1:]
    if classification != NOT_RIGHT_COMPLEMENTED:
        covered = {frozenset(pair) for pair in entries}
        wanted = {frozenset(pair)
                  for pair in combinations(range(p.rank), 2)}
        if covered == wanted:
            classification = RIGHT_FULL
    return ThetaTable(p, entries, classification, witness)


def theta_extend(table: ThetaTable, u: Word, v: Word,
                 budget: int = DEFAULT_THETA_BUDGET) -> ThetaResult:
    """θ on words, by an explicit stack machine (the recursion can nest far
    deeper than the Python limit on long inputs).

    Frames: ("eval", a, b) computes θ(a,b); ("cat", w, key) prepends w to
    the pending result; ("then", rest, key) continues with θ(rest, result);
    ("memo", key) records the finished value.
    """
    if table.classification == NOT_RIGHT_COMPLEMENTED:
        raise ValueError("presentation is not right-complemented")
    memo = table.memo
    entries = table.entries
    steps = 0
    stack: list[tuple] = [("eval", u, v)]
    result: object = None
    while stack:
        frame = stack.pop()
        op = frame[0]
        if op == "eval":
            a, b = frame[1], frame[2]
            steps += 1
            if steps > budget:
                return ThetaResult(BUDGET_EXCEEDED, None, steps)
            if a == b:
                result = EMPTY
                continue
            if not a:
                result = b
                continue
            if not b:
                result = EMPTY
                continue
            hit = memo.get((a, b), _MISSING)
            if hit is not _MISSING:
                result = _UNDEF if hit is None else hit
                continue
            if len(a) == 1:
                if len(b) == 1:
                    w = entries.get((a[0], b[0]))
                    memo[(a, b)] = w
                    result = _UNDEF if w is None else w
                    continue
                if a[0] == b[0]:
                    head = back = EMPTY
                else:
                    head = entries.get((a[0], b[0]))
                    back = entries.get((b[0], a[0]))
                if head is None or back is None:
                    memo[(a, b)] = None
                    result = _UNDEF
                    continue
                stack.append(("cat", head, (a, b)))
                stack.append(("eval", back, b[1:]))
            else:
                stack.append(("then", a[1:], (a, b)))
                stack.append(("eval", a[:1], b))
        elif op == "cat":
            if result is _UNDEF:
                memo[frame[2]] = None
            else:
                result = frame[1] + result
                memo[frame[2]] = result
        elif op == "then":
            if result is _UNDEF:
                memo[frame[2]] = None
            else:
                stack.append(("memo", frame[2]))
                stack.append(("eval", frame[1], result))
                result = None
        else:  # memo
            memo[frame[1]] = None if result is _UNDEF else result
    if result is _UNDEF:
        return ThetaResult(UNDEFINED, None, steps)
    return ThetaResult(DEFINED, result, steps)


@dataclass
class CubeFailure:
    triple: tuple[str, str, str]
    left: Word | None
    right: Word | None


@dataclass
class CubeReport:
    passed: bool
    failures: list[CubeFailure]
    inconclusive: list[tuple[str, str, str]]
    triples_checked: int


def check_cube_sharp(p: Presentation, table: ThetaTable | None = None,
                     budget: int = DEFAULT_THETA_BUDGET) -> CubeReport:
    """Sharp cube condition: for every ordered triple (a,b,c) of distinct
    letters, θ(θ(a,b), θ(a,c)) and θ(θ(b,a), θ(b,c)) are literally equal
    words, or neither is defined.
    """
    table = table or build_theta(p)
    if table.classification == NOT_RIGHT_COMPLEMENTED:
        raise ValueError("presentation is not right-complemented")
    failures: list[CubeFailure] = []
    inconclusive: list[tuple[str, str, str]] = []
    checked = 0
    for a, b, c in permutations(range(p.rank), 3):
        checked += 1
        names = (p.names[a], p.names[b], p.names[c])
        ab = table.letter_pair(a, b)
        ac = table.letter_pair(a, c)
        ba = table.letter_pair(b, a)
        bc = table.letter_pair(b, c)
        if ab is None or ac is None:
            left = ThetaResult(UNDEFINED, None)
        else:
            left = theta_extend(table, ab, ac, budget)
        if ba is None or bc is None:
            right = ThetaResult(UNDEFINED, None)
        else:
            right = theta_extend(table, ba, bc, budget)
        if BUDGET_EXCEEDED in (left.status, right.status):
            inconclusive.append(names)
            continue
        if left.status != right.status or left.word != right.word:
            failures.append(CubeFailure(names, left.word, right.word))
    return CubeReport(not failures and not inconclusive,
                      failures, inconclusive, checked)


@dataclass
class TripleLabeling:
    letters: tuple[str, str, str]
    labeling: tuple[str, str, str]
    u: Word


@dataclass
class C1Report:
    passed: bool
    right_full: bool
    labelings: list[TripleLabeling]
    failures: list[tuple[str, str, str]]
    cube_cross_check: bool | None = None


def _c1_labeling(table: ThetaTable, triple: tuple[int, int, int]):
    """First labeling (lex order over orderings of the triple) for which
    the three literal equations hold, with u solved as a suffix."""
    for a1, a2, a3 in permutations(sorted(triple)):
        t13 = table.letter_pair(a1, a3)
        t12 = table.letter_pair(a1, a2)
        if not t13.startswith(t12):
            continue
        u = t13[len(t12):]
        if table.letter_pair(a2, a3) != table.letter_pair(a2, a1) + u:
            continue
        if table.letter_pair(a3, a1) != table.letter_pair(a3, a2):
            continue
        return (a1, a2, a3), u
    return None


def check_C1(p: Presentation, table: ThetaTable | None = None) -> C1Report:
    table = table or build_theta(p)
    if table.classification != RIGHT_FULL:
        return C1Report(False, False, [], [])
    labelings: list[TripleLabeling] = []
    failures: list[tuple[str, str, str]] = []
    for triple in combinations(range(p.rank), 3):
        names = tuple(p.names[i] for i in triple)
        found = _c1_labeling(table, triple)
        if found is None:
            failures.append(names)
        else:
            (a1, a2, a3), u = found
            labelings.append(TripleLabeling(
                names, (p.names[a1], p.names[a2], p.names[a3]), u))
    passed = not failures
    cube = None
    if passed:
        cube = check_cube_sharp(p, table).passed
        passed = passed and cube
    return C1Report(passed, True, labelings, failures, cube)


def check_labeling(table: ThetaTable, labeling: tuple[int, int, int],
                   u: Word) -> bool:
    """Replay one recorded labeling witness."""
    a1, a2, a3 = labeling
    return (table.letter_pair(a1, a3) == table.letter_pair(a1, a2) + u
            and table.letter_pair(a2, a3) == table.letter_pair(a2, a1) + u
            and table.letter_pair(a3, a1) == table.letter_pair(a3, a2))


def sub_X_presentation(p: Presentation, X: "set[str] | frozenset[str]",
                       table: ThetaTable | None = None) -> Presentation:
    """Quotient presentation on S∖X with relations
    s·(θ(s,t)/X) = t·(θ(t,s)/X), one per remaining pair.

    This differs in general from just erasing X from the relations; the two
    agree exactly when the pair (p, X) passes check_C2.
    """
    table = table or build_theta(p)
    if table.classification != RIGHT_FULL:
        raise ValueError("sub_X needs a right-full presentation")
    kill = {p.letter(name) for name in X}
    keep = [i for i in range(p.rank) if i not in kill]
    remap = {old: new for new, old in enumerate(keep)}

    def strip(word: Word) -> Word:
        return bytes(remap[c] for c in word if c not in kill)

    rels = []
    for s, t in combinations(keep, 2):
        left = bytes([remap[s]]) + strip(table.letter_pair(s, t))
        right = bytes([remap[t]]) + strip(table.letter_pair(t, s))
        rels.append((left, right))
    out = Presentation(
        tuple(p.names[i] for i in keep),
        tuple(p.weights[i] for i in keep),
        tuple(rels))
    sub_table = build_theta(out)
    assert sub_table.classification == RIGHT_FULL
    for s, t in combinations(keep, 2):
        assert sub_table.letter_pair(remap[s], remap[t]) == \
            strip(table.letter_pair(s, t))
    return out


@dataclass
class C2Report:
    passed: bool
    c1: bool
    x_balanced: bool
    balance_witness: int | None
    quotients_agree: str  # "pass" | "fail" | "inconclusive"
    agree_witness: str | None


def check_C2(p: Presentation, X: "set[str] | frozenset[str]",
             eq_sub, eq_killed,
             table: ThetaTable | None = None) -> C2Report:
    """The three-part quotient condition.

    (a) p satisfies the labeling condition of check_C1; (b) each relation
    carries the same X-weight on both sides; (c) the complement-style and
    letter-erasing quotient presentations define the same monoid, checked
    by mutual relation satisfaction.  `eq_sub` decides equality in the
    monoid of sub_X_presentation(p, X), `eq_killed` in the monoid of
    p.remove_letters(X); both take two words over the common alphabet and
    may return None for "budget exhausted".
    """
    table = table or build_theta(p)
    c1 = check_C1(p, table).passed
    kill = {p.letter(name) for name in X}
    balanced, balance_witness = True, None
    for k, (a, b) in enumerate(p.relations):
        wa = sum(p.weights[c] for c in a if c in kill)
        wb = sum(p.weights[c] for c in b if c in kill)
        if wa != wb:
            balanced, balance_witness = False, k
            break
    sub = sub_X_presentation(p, X, table)
    killed = p.remove_letters(X)
    assert sub.names == killed.names
    agree, agree_witness = "pass", None
    for src, target, oracle in ((killed, "sub", eq_sub),
                                (sub, "killed", eq_killed)):
        for a, b in src.relations:
            verdict = oracle(a, b)
            if verdict is None:
                agree = "inconclusive"
                agree_witness = (f"{src.word_text(a)} = {src.word_text(b)} "
                                 f"in {target}: budget exhausted")
                break
            if not verdict:
                agree = "fail"
                agree_witness = (f"{src.word_text(a)} = {src.word_text(b)} "
                                 f"fails in the {target} quotient")
                break
        if agree != "pass":
            break
    passed = c1 and balanced and agree == "pass"
    return C2Report(passed, c1, balanced, balance_witness,
                    agree, agree_witness)
