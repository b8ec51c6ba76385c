"""Decision procedures for homogeneous monoid presentations.

Two engines coexist. The brute engine rewrites words by applying relations
in both directions at every position; homogeneity keeps every class finite,
so closure enumeration decides equality in any of the presented monoids.
The theta engine runs over a right-complemented presentation whose cube
condition has been certified and decides equality, left-divisibility, and
divisor enumeration through the syntactic complement alone: u left-divides
v exactly when theta(v, u) is the empty word, with right quotient
theta(u, v).  Every fast path refuses to run until the certification flags
are set, and both engines are property-tested against each other.

Right-hand-side notions (right divisors, the right divisor set of a
candidate Garside element) are computed by transporting words into an
opposite context: reverse the word, relabel letters, and run the left-hand
machinery there.  A transport is validated at wiring time by checking that
every relation maps to an equality of the other presentation.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, replace
from functools import total_ordering

from .complement import (BUDGET_EXCEEDED, NOT_RIGHT_COMPLEMENTED, RIGHT_FULL,
                         ThetaResult, ThetaTable, build_theta, check_C1,
                         check_cube_sharp, sub_X_presentation, theta_extend)
from .words import EMPTY, Presentation, Word, is_homogeneous


class BudgetExceeded(Exception):
    """A configured enumeration budget ran out before the answer was known."""


# greedy_nf scans the sorted simple list below this size and switches to
# gcd-with-Delta factor extraction above it; both compute the same form
NF_SCAN_MAX = 4096


@dataclass(frozen=True)
class Budgets:
    theta_steps: int = 1_000_000
    closure_words: int = 200_000
    bfs_nodes: int = 50_000
    spotcheck_length: int = 4
    oracle_words: int = 1_000_000
    # Above lattice_exhaustive simples the pairwise lattice check and the
    # left-right divisor comparison switch from exhaustive to sampled
    # evidence (lattice_samples draws each); divisor_match caps the size up
    # to which the right-divisor set is still streamed in full.  cache_cap
    # bounds the memo tables during long enumerations.
    lattice_exhaustive: int = 768
    lattice_samples: int = 2_000
    divisor_match: int = 300_000
    cache_cap: int = 4_000_000


@total_ordering
@dataclass(frozen=True, slots=True)
class ElementClass:
    """A monoid element, keyed by the lexicographically least word in its
    rewriting class (letter order = alphabet declaration order)."""
    canonical: Word
    weight: int

    def __lt__(self, other: "ElementClass"):
        return (self.weight, self.canonical) < (other.weight, other.canonical)


@dataclass(frozen=True)
class DivisorSet:
    side: str                     # "left" or "right"
    of: ElementClass
    members: frozenset[ElementClass]
    hasse: frozenset[tuple[ElementClass, ElementClass]]


@dataclass(frozen=True)
class Evidence:
    passed: bool
    detail: str = ""
    witness: object = None


@dataclass
class GarsideCertificate:
    Delta: ElementClass
    simples: DivisorSet | None
    evidence: dict[str, Evidence]
    budgets: Budgets

    @property
    def valid(self) -> bool:
        return all(e.passed for e in self.evidence.values())

    def failing(self) -> list[str]:
        return [k for k, e in self.evidence.items() if not e.passed]


@dataclass
class CancellativityReport:
    passed: bool
    max_length: int
    violation: tuple[str, str, Word, Word] | None = None  # side, letter, b, c
    classes_seen: int = 0


class MonoidContext:
    def __init__(self, presentation: Presentation,
                 budgets: Budgets | None = None):
        self.presentation = presentation
        self.budgets = budgets or Budgets()
        self.homogeneous, _ = is_homogeneous(presentation)
        self.theta: ThetaTable = build_theta(presentation)
        self.right_complemented = (
            self.theta.classification != NOT_RIGHT_COMPLEMENTED)
        self.right_full = self.theta.classification == RIGHT_FULL
        self.c1_ok = False
        self.cube_ok = False
        if self.right_complemented and self.homogeneous:
            if self.right_full:
                rep = check_C1(presentation, self.theta)
                self.c1_ok = rep.passed
                self.cube_ok = rep.passed
            if not self.cube_ok:
                self.cube_ok = check_cube_sharp(presentation,
                                                self.theta).passed
        self.certificate: GarsideCertificate | None = None
        self._opposite: tuple["MonoidContext", dict[int, int]] | None = None
        self._closures: dict[Word, frozenset[Word]] = {}
        self._canon: dict[Word, Word] = {}
        self._nf_order: list[ElementClass] | None = None

    # ------------------------------------------------------------- plumbing

    def parse(self, text: str) -> Word:
        return self.presentation.parse_word(text)

    def text(self, word: Word) -> str:
        return self.presentation.word_text(word)

    def weight(self, word: Word) -> int:
        return self.presentation.weight_of(word)

    def require_theta(self):
        if not self.homogeneous:
            raise ValueError("theta fast path requires a homogeneous "
                             "presentation")
        if not self.cube_ok:
            raise ValueError("theta fast path requires a certified cube "
                             "condition on a right-complemented presentation")

    def _theta(self, u: Word, v: Word) -> ThetaResult:
        r = theta_extend(self.theta, u, v, self.budgets.theta_steps)
        if r.status == BUDGET_EXCEEDED:
            raise BudgetExceeded(f"theta budget {self.budgets.theta_steps} "
                                 f"exhausted")
        return r

    def _trim_caches(self):
        # pure caches; dropping them costs recomputation, never correctness
        cap = self.budgets.cache_cap
        if len(self.theta.memo) > cap:
            self.theta.memo.clear()
        if len(self._canon) > cap // 2:
            self._canon.clear()

    # ------------------------------------------------------- opposite wiring

    def set_opposite(self, other: "MonoidContext",
                     letter_map: dict[int, int], validate: bool = True):
        """Wire `other` as the context of the opposite monoid, with words
        transported by reversal followed by `letter_map` relabeling."""
        inverse = {v: k for k, v in letter_map.items()}
        if len(inverse) != len(letter_map):
            raise ValueError("letter map is not a bijection")
        if validate:
            for lhs, rhs in self.presentation.relations:
                tl = _transport(lhs, letter_map)
                tr = _transport(rhs, letter_map)
                if not other.words_equal(tl, tr, mode="brute"):
                    raise ValueError(
                        f"transport does not respect relation "
                        f"{self.text(lhs)} = {self.text(rhs)}")
            for lhs, rhs in other.presentation.relations:
                tl = _transport(lhs, inverse)
                tr = _transport(rhs, inverse)
                if not self.words_equal(tl, tr, mode="brute"):
                    raise ValueError(
                        f"inverse transport does not respect relation "
                        f"{other.text(lhs)} = {other.text(rhs)}")
        self._opposite = (other, letter_map)
        other._opposite = (self, inverse)

    def opposite(self) -> tuple["MonoidContext", dict[int, int]]:
        if self._opposite is None:
            rev = self.presentation.opposite()
            octx = MonoidContext(rev, self.budgets)
            identity = {i: i for i in range(self.presentation.rank)}
            # literal reversal presents the opposite monoid by definition
            self._opposite = (octx, identity)
            octx._opposite = (self, identity)
        return self._opposite

    def transport(self, word: Word) -> Word:
        _, letter_map = self.opposite()
        return _transport(word, letter_map)

    # --------------------------------------------------------- brute engine

    def closure(self, word: Word) -> frozenset[Word]:
        """All words reachable from `word` by applying relations (both
        orientations, every position)."""
        canon = self._canon.get(word)
        if canon is not None:
            return self._closures[canon]
        rules = []
        for lhs, rhs in self.presentation.relations:
            rules.append((lhs, rhs))
            rules.append((rhs, lhs))
        seen = {word}
        frontier = deque([word])
        limit = self.budgets.closure_words
        while frontier:
            w = frontier.popleft()
            for lhs, rhs in rules:
                start = w.find(lhs)
                while start != -1:
                    nxt = w[:start] + rhs + w[start + len(lhs):]
                    if nxt not in seen:
                        if len(seen) >= limit:
                            raise BudgetExceeded(
                                f"class closure budget {limit} exhausted")
                        seen.add(nxt)
                        frontier.append(nxt)
                    start = w.find(lhs, start + 1)
        result = frozenset(seen)
        canon = min(result)
        self._closures[canon] = result
        for w in result:
            self._canon[w] = canon
        return result

    # ----------------------------------------------------------- operations

    def canonical(self, word: Word, mode: str = "auto") -> Word:
        if mode == "auto":
            mode = "theta" if (self.homogeneous and self.cube_ok) else "brute"
        if mode == "brute":
            return min(self.closure(word))
        self.require_theta()
        out = bytearray()
        w = word
        while w:
            for s in range(self.presentation.rank):
                ls = bytes([s])
                if self._theta(w, ls).word == EMPTY:
                    out.append(s)
                    w = self._theta(ls, w).word
                    break
            else:
                raise RuntimeError("no letter divides a nonempty word; "
                                   "complement table is inconsistent")
        return bytes(out)

    def element(self, word: Word, mode: str = "auto") -> ElementClass:
        return ElementClass(self.canonical(word, mode), self.weight(word))

    def words_equal(self, u: Word, v: Word, mode: str = "auto") -> bool:
        if self.weight(u) != self.weight(v):
            return False
        if u == v:
            return True
        if mode == "auto":
            mode = "theta" if (self.homogeneous and self.cube_ok) else "brute"
        if mode == "brute":
            return v in self.closure(u)
        self.require_theta()
        return (self._theta(u, v).word == EMPTY
                and self._theta(v, u).word == EMPTY)

    def divides_left(self, u: Word, v: Word,
                     mode: str = "auto") -> ElementClass | None:
        """u <=_L v, with the right quotient's class on success."""
        if self.weight(u) > self.weight(v):
            return None
        if mode == "auto":
            mode = "theta" if (self.homogeneous and self.cube_ok) else "brute"
        if mode == "theta":
            self.require_theta()
            if self._theta(v, u).word != EMPTY:
                return None
            quotient = self._theta(u, v).word
            if quotient is None:
                raise RuntimeError("theta(v,u) empty but theta(u,v) "
                                   "undefined; table inconsistent")
            return self.element(quotient)
        k = len(u)
        for w in self.closure(v):
            if self.words_equal(u, w[:k], mode="brute"):
                return self.element(w[k:], mode="brute")
        return None

    def left_divisors(self, v: Word, mode: str = "auto") -> DivisorSet:
        if mode == "auto":
            mode = ("theta-bfs" if (self.homogeneous and self.cube_ok)
                    else "prefix-oracle")
        if mode == "theta-bfs":
            members, edges = self._divisors_theta(v)
        elif mode == "prefix-oracle":
            members, edges = self._divisors_prefix(v)
        else:
            raise ValueError(f"unknown divisor mode {mode!r}")
        return DivisorSet("left", self.element(v), frozenset(members),
                          frozenset(edges))

    def _divisors_theta(self, v: Word):
        self.require_theta()
        v_canon = self.canonical(v)
        root = ElementClass(EMPTY, 0)
        members: dict[ElementClass, Word] = {root: v_canon}
        edges: set[tuple[ElementClass, ElementClass]] | None = set()
        queue = deque([root])
        rank = self.presentation.rank
        unit = all(w == 1 for w in self.presentation.weights)
        seen = 0
        while queue:
            node = queue.popleft()
            comp = members[node]
            seen += 1
            if seen % 65536 == 0:
                self._trim_caches()
            for s in range(rank):
                ls = bytes([s])
                if self._theta(comp, ls).word != EMPTY:
                    continue
                child_word = node.canonical + ls
                child = self.element(child_word)
                if child not in members:
                    if len(members) >= self.budgets.bfs_nodes:
                        raise BudgetExceeded(
                            f"divisor BFS budget {self.budgets.bfs_nodes} "
                            f"exhausted")
                    members[child] = self._theta(ls, comp).word
                    queue.append(child)
                if edges is not None:
                    edges.add((node, child))
                    if len(members) > self.budgets.lattice_exhaustive:
                        # only the exhaustive lattice pass consumes the
                        # Hasse diagram; past its size cutoff keeping the
                        # edge set would just burn memory
                        edges = None
        if edges is None:
            edges = set()
        elif not unit:
            edges = self._cover_filter(set(members))
        return set(members), edges

    def _divisors_prefix(self, v: Word):
        members: set[ElementClass] = set()
        edges: set[tuple[ElementClass, ElementClass]] = set()
        unit = all(w == 1 for w in self.presentation.weights)
        for w in self.closure(v):
            for k in range(len(w) + 1):
                members.add(self.element(w[:k], mode="brute"))
        for b in members:
            for w in self.closure(b.canonical):
                if w:
                    a = self.element(w[:-1], mode="brute")
                    edges.add((a, b))
        if not unit:
            edges = self._cover_filter(members)
        return members, edges

    def _cover_filter(self, members):
        # general-weight Hasse edges: strict divisibility with nothing between
        below: dict[ElementClass, set[ElementClass]] = {b: set()
                                                        for b in members}
        for a in members:
            for b in members:
                if a.weight < b.weight and \
                        self.divides_left(a.canonical, b.canonical):
                    below[b].add(a)
        edges = set()
        for b in members:
            for a in below[b]:
                if not any(a in below[c] for c in below[b]):
                    edges.add((a, b))
        return edges

    def right_divisors(self, v: Word, mode: str = "auto") -> DivisorSet:
        octx, letter_map = self.opposite()
        inverse = {t: s for s, t in letter_map.items()}
        ds = octx.left_divisors(_transport(v, letter_map), mode)

        def back(e: ElementClass) -> ElementClass:
            return self.element(_transport(e.canonical, inverse))

        members = frozenset(back(e) for e in ds.members)
        edges = frozenset((back(a), back(b)) for a, b in ds.hasse)
        return DivisorSet("right", self.element(v), members, edges)

    # -------------------------------------------------------- certification

    def verify_garside(self, Delta: Word) -> GarsideCertificate:
        return verify_garside(self, Delta)

    def greedy_nf(self, word: Word) -> list[ElementClass]:
        if self.certificate is None or not self.certificate.valid:
            raise ValueError("greedy normal form requires a valid "
                             "certificate on this context")
        members = self.certificate.simples.members
        out: list[ElementClass] = []
        w = self.canonical(word)
        if len(members) > NF_SCAN_MAX:
            # too many simples to scan per factor; the maximal simple
            # dividing w is its left-gcd with Delta, and the certified
            # lattice lets greedy letter extension reach it directly
            Delta = self.certificate.Delta.canonical
            letters = tuple(range(self.presentation.rank))
            while w:
                d = _gcd_greedy(self, w, Delta, letters)
                if not d:
                    raise RuntimeError("no simple divides a nonempty word")
                out.append(self.element(d))
                w = self._theta(d, w).word
            return out
        if self._nf_order is None:
            self._nf_order = sorted(members,
                                    key=lambda e: (-e.weight, e.canonical))
        while w:
            for simple in self._nf_order:
                if simple.weight == 0:
                    continue
                if self._theta(w, simple.canonical).word == EMPTY:
                    out.append(simple)
                    w = self._theta(simple.canonical, w).word
                    break
            else:
                raise RuntimeError("no simple divides a nonempty word")
        return out


def _transport(word: Word, letter_map: dict[int, int]) -> Word:
    return bytes(letter_map[c] for c in reversed(word))


def build_context(p: Presentation,
                  budgets: Budgets | None = None) -> MonoidContext:
    return MonoidContext(p, budgets)


# ---------------------------------------------------------------- oracle


def cancellative_oracle(ctx: MonoidContext, L: int) -> CancellativityReport:
    """Check a*b = a*c => b = c (and the mirror) over all classes with
    products of weight at most L, by a weight-graded union-find."""
    p = ctx.presentation
    if not ctx.homogeneous:
        raise ValueError("cancellativity oracle requires a homogeneous "
                         "presentation")
    rank = p.rank
    rules = []
    for lhs, rhs in p.relations:
        rules.append((lhs, rhs))
        rules.append((rhs, lhs))

    # words of each weight, enumerated once by their last letter
    words: dict[int, list[Word]] = {0: [EMPTY]}
    for k in range(1, L + 1):
        level = [u + bytes([s]) for s in range(rank)
                 if p.weights[s] <= k
                 for u in words[k - p.weights[s]]]
        if len(level) > ctx.budgets.oracle_words:
            raise BudgetExceeded(
                f"cancellativity oracle budget {ctx.budgets.oracle_words} "
                f"exhausted at weight {k}")
        words[k] = level

    def classes_at(k: int) -> dict[Word, Word]:
        # word -> least member of its class; homogeneity keeps every
        # rewrite inside the level
        parent: dict[Word, Word] = {w: w for w in words[k]}

        def find(w: Word) -> Word:
            path = []
            while parent[w] != w:
                path.append(w)
                w = parent[w]
            for q in path:
                parent[q] = w
            return w

        def union(a: Word, b: Word):
            ra, rb = find(a), find(b)
            if ra != rb:
                if rb < ra:
                    ra, rb = rb, ra
                parent[rb] = ra

        for w in words[k]:
            for lhs, rhs in rules:
                start = w.find(lhs)
                while start != -1:
                    union(w, w[:start] + rhs + w[start + len(lhs):])
                    start = w.find(lhs, start + 1)
        return {w: find(w) for w in words[k]}

    def reps_of(classes: dict[Word, Word]) -> dict[Word, Word]:
        reps: dict[Word, Word] = {}
        for w, root in classes.items():
            if root not in reps or w < reps[root]:
                reps[root] = w
        return reps

    levels = {0: classes_at(0)}
    level_reps = {0: reps_of(levels[0])}
    seen = 1
    for k in range(1, L + 1):
        cur = classes_at(k)
        for s in range(rank):
            ls = bytes([s])
            prev = level_reps.get(k - p.weights[s])
            if prev is None:
                continue
            for side in ("left", "right"):
                image: dict[Word, Word] = {}
                for root, rep in prev.items():
                    product = ls + rep if side == "left" else rep + ls
                    img = cur[product]
                    other = image.get(img)
                    if other is not None and other != root:
                        return CancellativityReport(
                            False, k,
                            (side, p.names[s], min(other, root),
                             max(other, root)), seen)
                    image[img] = root
        levels[k] = cur
        level_reps[k] = reps_of(cur)
        seen += len(level_reps[k])
    return CancellativityReport(True, L, None, seen)


# ----------------------------------------------------------- certification


def verify_garside(ctx: MonoidContext, Delta: Word) -> GarsideCertificate:
    """Certify Delta as a Garside element: centrality, equal left/right
    divisor sets, generators dividing Delta, a lattice spot-check on the
    simples, and a brute cancellativity spot-check.  The global lattice
    property is inferred from C1 of the presentation and of its opposite
    plus the finite evidence; the evidence notes record which is which."""
    p = ctx.presentation
    evidence: dict[str, Evidence] = {}

    def ev(name, passed, detail="", witness=None):
        evidence[name] = Evidence(passed, detail, witness)

    ev("homogeneity", ctx.homogeneous,
       "all relations weight-balanced" if ctx.homogeneous else
       "presentation is not homogeneous")
    ev("C1-of-presentation", ctx.c1_ok,
       "checked on this presentation" if ctx.c1_ok else
       "C1 not established for this presentation")
    octx, _ = ctx.opposite()
    ev("C1-of-opposite", octx.c1_ok,
       "checked on the wired opposite presentation" if octx.c1_ok else
       "C1 not established for the opposite presentation")

    central = True
    central_witness = None
    for s in range(p.rank):
        ls = bytes([s])
        try:
            same = ctx.words_equal(Delta + ls, ls + Delta)
        except BudgetExceeded:
            same = False
        if not same:
            central = False
            central_witness = p.names[s]
            break
    ev("Delta-central", central,
       "Delta commutes with every generator" if central else
       f"Delta does not commute with {central_witness}",
       central_witness)

    simples = None
    if all(evidence[k].passed for k in ("homogeneity", "Delta-central")):
        left = ctx.left_divisors(Delta)
        simples = left
        size = len(left.members)
        order = (sorted(left.members, key=lambda e: (e.weight, e.canonical))
                 if size > ctx.budgets.lattice_exhaustive else None)
        if size <= ctx.budgets.divisor_match:
            dok, ddetail, dwitness = _right_match_stream(
                ctx, left.members, Delta)
        else:
            dok, ddetail, dwitness = _right_match_sampled(
                ctx, order, left.members, Delta)
        ev("DivL-eq-DivR", dok, ddetail, dwitness)
        gens = all(ctx.divides_left(bytes([s]), Delta) is not None
                   for s in range(p.rank))
        ev("generators-divide", gens,
           "every generator left-divides Delta" if gens else
           "some generator does not left-divide Delta")
        if order is None:
            lat_ok, lat_detail, lat_witness = _lattice_spotcheck(
                ctx, left, Delta)
        else:
            lat_ok, lat_detail, lat_witness = _lattice_sampled(
                ctx, order, Delta)
        ev("lattice-spotcheck", lat_ok, lat_detail, lat_witness)
    else:
        ev("DivL-eq-DivR", False, "skipped: prerequisite evidence failed")
        ev("generators-divide", False, "skipped: prerequisite evidence failed")
        ev("lattice-spotcheck", False, "skipped: prerequisite evidence failed")

    try:
        rep = cancellative_oracle(ctx, ctx.budgets.spotcheck_length)
        ev("brute-cancellativity-spotcheck", rep.passed,
           f"all products up to weight {rep.max_length} cancel" if rep.passed
           else f"violation {rep.violation}", rep.violation)
    except (BudgetExceeded, ValueError) as exc:
        ev("brute-cancellativity-spotcheck", False, str(exc))

    cert = GarsideCertificate(ctx.element(Delta) if ctx.homogeneous else
                              ElementClass(Delta, len(Delta)),
                              simples, evidence, ctx.budgets)
    if cert.valid:
        ctx.certificate = cert
    return cert


def _lattice_spotcheck(ctx: MonoidContext, simples: DivisorSet, Delta: Word):
    """Every pair of simples has a unique maximal common left-divisor, and
    theta realizes their least common right-multiple inside Div(Delta^2).
    Checked exhaustively on the finite simple set; the extension to all of
    M is inferred from C1 both sides (recorded, not recomputed here)."""
    if not (ctx.right_complemented and ctx.cube_ok):
        return False, "skipped: theta machinery unavailable", None
    order = sorted(simples.members)
    index = {e: i for i, e in enumerate(order)}
    size = len(order)
    down = [1 << i for i in range(size)]
    up = [1 << i for i in range(size)]
    by_weight: dict[int, int] = {}
    for e in order:
        by_weight[e.weight] = by_weight.get(e.weight, 0) | (1 << index[e])
    # transitive closure over Hasse edges, in weight order
    for a, b in sorted(simples.hasse, key=lambda ab: ab[1].weight):
        down[index[b]] |= down[index[a]]
    for a, b in sorted(simples.hasse, key=lambda ab: -ab[0].weight):
        up[index[a]] |= up[index[b]]
    weights = sorted(by_weight, reverse=True)
    Delta2 = Delta + Delta
    for i in range(size):
        for j in range(i + 1, size):
            common = down[i] & down[j]
            top = None
            for w in weights:
                hits = common & by_weight[w]
                if hits:
                    if hits.bit_count() != 1:
                        return (False,
                                "two maximal common left-divisors",
                                (order[i].canonical, order[j].canonical))
                    top = hits.bit_length() - 1
                    break
            if top is None or common & ~down[top]:
                return (False, "no unique maximal common left-divisor",
                        (order[i].canonical, order[j].canonical))
            a, b = order[i].canonical, order[j].canonical
            tab = ctx._theta(a, b).word
            tba = ctx._theta(b, a).word
            upcommon = up[i] & up[j]
            if tab is None or tba is None:
                if tab is not None or tba is not None:
                    return (False, "theta defined on one side only", (a, b))
                if upcommon:
                    return (False,
                            "theta undefined but a common multiple exists",
                            (a, b))
                continue
            lcm_a, lcm_b = a + tab, b + tba
            if not ctx.words_equal(lcm_a, lcm_b):
                return (False, "theta lcm candidates disagree", (a, b))
            if ctx._theta(Delta2, lcm_a).word != EMPTY:
                return (False, "lcm of simples escapes Div(Delta^2)", (a, b))
            k = upcommon
            while k:
                bit = k & -k
                c = order[bit.bit_length() - 1].canonical
                if ctx._theta(c, lcm_a).word != EMPTY:
                    return (False,
                            "a common multiple is not above the theta lcm",
                            (a, b, c))
                k ^= bit
    detail = (f"checked all {size * (size - 1) // 2} pairs of {size} "
              f"simples; global lattice inferred from C1 both sides")
    return True, detail, None


def _gcd_greedy(ctx: MonoidContext, a: Word, b: Word, letters) -> Word:
    """A maximal common left-divisor of a and b, grown letter by letter in
    the given order.  Under the certified lattice property the result is
    the left-gcd whatever the order; disagreement between two orders is a
    lattice violation."""
    ca, cb, d = a, b, EMPTY
    while True:
        for s in letters:
            ls = bytes([s])
            if ctx._theta(ca, ls).word == EMPTY and \
                    ctx._theta(cb, ls).word == EMPTY:
                d += ls
                ca = ctx._theta(ls, ca).word
                cb = ctx._theta(ls, cb).word
                break
        else:
            return d


def _lattice_sampled(ctx: MonoidContext, order: list[ElementClass],
                     Delta: Word):
    """Sampled stand-in for the exhaustive pairwise check on large simple
    sets: per sampled pair, the greedy gcd is order-independent, theta
    realizes an agreeing lcm, and the lcm stays inside Div(Delta^2)."""
    rng = random.Random(0xC1)
    size = len(order)
    rank = ctx.presentation.rank
    fwd = tuple(range(rank))
    rev = tuple(reversed(fwd))
    Delta2 = Delta + Delta
    pairs = size * (size - 1) // 2
    k = min(ctx.budgets.lattice_samples, pairs)
    done = 0
    while done < k:
        i, j = rng.randrange(size), rng.randrange(size)
        if i == j:
            continue
        done += 1
        a, b = order[i].canonical, order[j].canonical
        ga = _gcd_greedy(ctx, a, b, fwd)
        gb = _gcd_greedy(ctx, a, b, rev)
        if not ctx.words_equal(ga, gb):
            return (False, "greedy maximal common left-divisors disagree",
                    (a, b))
        tab = ctx._theta(a, b).word
        tba = ctx._theta(b, a).word
        if tab is None or tba is None:
            return False, "theta undefined on a pair of simples", (a, b)
        lcm_a, lcm_b = a + tab, b + tba
        if not ctx.words_equal(lcm_a, lcm_b):
            return False, "theta lcm candidates disagree", (a, b)
        if ctx._theta(Delta2, lcm_a).word != EMPTY:
            return False, "lcm of simples escapes Div(Delta^2)", (a, b)
    detail = (f"sampled {k} of {pairs} pairs of {size} simples; global "
              f"lattice inferred from C1 both sides")
    return True, detail, None


def _right_match_stream(ctx: MonoidContext, left, Delta: Word):
    """Enumerate right divisors of Delta through the opposite context and
    check each against the left-divisor set, without materializing a second
    divisor structure."""
    octx, letter_map = ctx.opposite()
    inverse = {t: s for s, t in letter_map.items()}
    octx.require_theta()
    dop = octx.canonical(_transport(Delta, letter_map))
    visited: dict[Word, Word] = {EMPTY: dop}
    queue = deque([EMPTY])
    rank = octx.presentation.rank
    count = 0
    while queue:
        node = queue.popleft()
        comp = visited[node]
        count += 1
        if count % 65536 == 0:
            ctx._trim_caches()
            octx._trim_caches()
        back = ctx.element(_transport(node, inverse))
        if back not in left:
            return (False, "a right divisor is not a left divisor",
                    back.canonical)
        for s in range(rank):
            ls = bytes([s])
            if octx._theta(comp, ls).word != EMPTY:
                continue
            child = octx.canonical(node + ls)
            if child not in visited:
                if len(visited) >= ctx.budgets.bfs_nodes:
                    raise BudgetExceeded(
                        f"divisor BFS budget {ctx.budgets.bfs_nodes} "
                        f"exhausted")
                visited[child] = octx._theta(ls, comp).word
                queue.append(child)
    ok = count == len(left)
    return (ok, f"{len(left)} left vs {count} right divisors (full stream)",
            None)


def _right_match_sampled(ctx: MonoidContext, order: list[ElementClass],
                         left, Delta: Word):
    """Sampled two-way containment between left and right divisors of
    Delta on sets too large to stream in full; exact equality follows from
    centrality plus two-sided cancellativity, which the certificate
    records as inference."""
    octx, letter_map = ctx.opposite()
    inverse = {t: s for s, t in letter_map.items()}
    octx.require_theta()
    dop = octx.canonical(_transport(Delta, letter_map))
    rng = random.Random(0xD1F)
    rank = octx.presentation.rank
    k = min(ctx.budgets.lattice_samples, len(order))
    for e in rng.sample(order, k):
        uop = _transport(e.canonical, letter_map)
        if octx._theta(dop, uop).word != EMPTY:
            return (False, "a left divisor is not a right divisor",
                    e.canonical)
    lam = ctx.weight(Delta)
    for _ in range(ctx.budgets.lattice_samples):
        comp = dop
        node = EMPTY
        depth = rng.randrange(lam + 1)
        while octx.presentation.weight_of(node) < depth:
            opts = [s for s in range(rank)
                    if octx._theta(comp, bytes([s])).word == EMPTY]
            if not opts:
                break
            s = rng.choice(opts)
            node += bytes([s])
            comp = octx._theta(bytes([s]), comp).word
        back = ctx.element(_transport(node, inverse))
        if back not in left:
            return (False, "a right divisor is not a left divisor",
                    back.canonical)
    detail = (f"sampled {k} left divisors for right division and "
              f"{ctx.budgets.lattice_samples} random right divisors for "
              f"membership; set equality inferred from centrality plus "
              f"two-sided cancellativity")
    return True, detail, None


# ------------------------------------------------------------ family wiring


def _family_letter_map(params, p: Presentation,
                       po: Presentation) -> dict[int, int]:
    n, m = params.n, params.m
    top = n if params.kind == "classical" else m
    mapping: dict[int, int] = {}
    for name in p.names:
        if name in ("x", "y", "z"):
            target = name
        elif name.startswith("x"):
            target = f"x{top - int(name[1:]) + 1}"
        else:
            target = f"z{m - int(name[1:]) + 1}"
        mapping[p.letter(name)] = po.letter(target)
    return mapping


def _self_opposite_maps(params, p: Presentation) -> list[dict[int, int]]:
    """Candidate relabelings kappa such that reversal followed by kappa is
    an anti-automorphism of `p` itself.  Tried in order of plausibility;
    set_opposite validation decides which one is real."""
    n, m = params.n, params.m
    names = set(p.names)

    def build(fx, fz):
        mapping = {}
        for name in p.names:
            if name.startswith("x") and len(name) > 1:
                target = f"x{fx(int(name[1:]))}"
            elif name.startswith("z") and len(name) > 1:
                target = f"z{fz(int(name[1:]))}"
            else:
                target = name
            if target not in names:
                return None
            mapping[p.letter(name)] = p.letter(target)
        return mapping

    top = n if params.kind == "classical" else m
    out: list[dict[int, int]] = []

    def push(cand):
        if cand is not None and cand not in out:
            out.append(cand)

    push(build(lambda i: top - i + 1, lambda i: m - i + 1))
    push({i: i for i in range(p.rank)})
    if params.kind == "dual":
        for c in range(m):
            for fx in (lambda i: m - i + 1, lambda i: i):
                push(build(fx, lambda i, c=c: (c - i) % m + 1))
                push(build(fx, lambda i, c=c: (i + c - 1) % m + 1))
    return out


def family_context(params, budgets: Budgets | None = None) -> MonoidContext:
    """Certified context for one (n, m, flavor, kind): the enlarged
    presentation as the theta authority, wired to an opposite context.
    Star-star flavors use the enlarged presentation of the opposite monoid
    with the index-flip transport.  For quotient flavors the complement
    quotient of the opposite presentation is not always a presentation of
    the opposite monoid, so when its validation fails we fall back to a
    self-transport: the quotients happen to be anti-isomorphic to
    themselves, and the candidate relabelings are checked one by one."""
    from .families import build_presentation
    enlarged = build_presentation(replace(params, variant="enlarged"))
    ctx = MonoidContext(enlarged, budgets)
    try:
        opp = build_presentation(replace(params, variant="enlarged-opposite"))
        octx = MonoidContext(opp, budgets)
        ctx.set_opposite(octx, _family_letter_map(params, enlarged, opp))
        return ctx
    except (ValueError, AssertionError):
        pass
    octx = MonoidContext(enlarged, budgets)
    for mapping in _self_opposite_maps(params, enlarged):
        try:
            ctx.set_opposite(octx, mapping)
            return ctx
        except ValueError:
            continue
    raise ValueError(f"no validated opposite transport for {params}")


def certify_family(params, budgets: Budgets | None = None
                   ) -> tuple[MonoidContext, GarsideCertificate]:
    from .families import special_words
    ctx = family_context(params, budgets)
    sw = special_words(replace(params, variant="base"))
    assert sw.presentation.names == ctx.presentation.names
    cert = verify_garside(ctx, sw.Delta)
    return ctx, cert


# ------------------------------------------------------------- C2 wiring


def _letter_names(p: Presentation, X) -> frozenset[str]:
    return frozenset(p.names[s] if isinstance(s, int) else s for s in X)


def make_c2_oracles(p: Presentation, X, budgets: Budgets | None = None):
    """Equality oracles for the two quotient constructions: the complement
    quotient (sub) and the letter-killing quotient (killed).  Both answer
    None when a budget runs out."""
    kill = _letter_names(p, X)
    sub_ctx = MonoidContext(sub_X_presentation(p, kill), budgets)
    killed_ctx = MonoidContext(p.remove_letters(kill), budgets)

    def eq(ctx):
        def oracle(u: Word, v: Word):
            try:
                return ctx.words_equal(u, v, mode="brute")
            except BudgetExceeded:
                return None
        return oracle

    return eq(sub_ctx), eq(killed_ctx)


def check_C2_presentation(p: Presentation, X,
                          budgets: Budgets | None = None):
    from .complement import check_C2
    eq_sub, eq_killed = make_c2_oracles(p, X, budgets)
    return check_C2(p, _letter_names(p, X), eq_sub, eq_killed)
