"""Parametrized presentations of the circular braid monoids.

Each family is indexed by coprime integers n ≤ m with m = qn + r, a flavor
(star-star for the fully decorated monoid, star / upper-star / plain for its
letter-killing quotients), a kind (classical or dual generating set), and a
variant (base relations, enlarged right-full relations, or the enlarged
presentation of the opposite monoid).

Classical star-star letters are x1..xn, y, z (plain "x" when n = 1); dual
letters are x1..xm, y, z1..zm.  Quotient flavors drop z (classical star),
y (classical upper-star), y (dual star), z1..zm (dual upper-star), or the
whole decoration (plain).  All weights are 1.
"""

from dataclasses import dataclass
from math import gcd
import re

from .complement import RIGHT_FULL, build_theta, sub_X_presentation
from .words import Presentation, Word, is_homogeneous

FLAVORS = ("star-star", "star", "upper-star", "plain")
KINDS = ("classical", "dual")
VARIANTS = ("base", "enlarged", "enlarged-opposite")


@dataclass(frozen=True)
class BraidParams:
    n: int
    m: int
    flavor: str = "star-star"
    kind: str = "classical"
    variant: str = "base"

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise ValueError("n and m must be integers")
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive")
        if self.n > self.m:
            raise ValueError("n <= m required (swap parameters at the "
                             "group level for the other order)")
        if gcd(self.n, self.m) != 1:
            raise ValueError("n and m must be coprime")
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.flavor == "star" and self.m < 2:
            raise ValueError("star flavor needs m >= 2")
        if self.flavor == "upper-star" and self.n < 2:
            raise ValueError("upper-star flavor needs n >= 2")
        if self.flavor == "plain" and (self.n < 2 or self.m < 2):
            raise ValueError("plain flavor needs n, m >= 2")

    @property
    def q(self) -> int:
        return self.m // self.n

    @property
    def r(self) -> int:
        return self.m % self.n

    def killed_letters(self) -> frozenset[str]:
        """Letters removed from the star-star alphabet by this flavor."""
        if self.flavor == "star-star":
            return frozenset()
        if self.kind == "classical":
            return {"star": frozenset({"z"}),
                    "upper-star": frozenset({"y"}),
                    "plain": frozenset({"y", "z"})}[self.flavor]
        zs = frozenset(f"z{i}" for i in range(1, self.m + 1))
        return {"star": frozenset({"y"}),
                "upper-star": zs,
                "plain": zs | {"y"}}[self.flavor]


def bezout(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    return old_r, old_x, old_y


def inv_mod(n: int, m: int) -> int:
    """The unique k in [1, m-1] with n*k = 1 mod m, and 1 when m = 1."""
    if n < 1 or m < 1:
        raise ValueError("positive arguments required")
    g, x, _ = bezout(n, m)
    if g != 1:
        raise ValueError(f"{n} and {m} are not coprime")
    k = 1 if m == 1 else x % m
    l = 1 if n == 1 else bezout(m, n)[1] % n
    assert n * k + m * l == n * m + 1
    return k


@dataclass(frozen=True)
class SpecialWords:
    presentation: Presentation
    delta: Word
    w: Word
    W: Word
    Delta: Word


def _classical_names(n: int) -> list[str]:
    return ["x"] if n == 1 else [f"x{i}" for i in range(1, n + 1)]


def _classical_star_star(n: int, m: int, variant: str) -> Presentation:
    q, r = divmod(m, n)
    names = _classical_names(n) + ["y", "z"]
    idx = {name: i for i, name in enumerate(names)}

    def X(i: int, j: int) -> Word:
        return bytes(idx[names[k - 1]] for k in range(i, j + 1))

    y = bytes([idx["y"]])
    z = bytes([idx["z"]])
    rels: list[tuple[Word, Word]] = []
    if variant in ("base", "enlarged"):
        delta = X(1, n) + y

        def v(i: int) -> Word:
            return X(i, n) + y + z + delta * (q - 1) + X(1, i + r - 1)

        def u(i: int) -> Word:
            return X(i, n) + y + z + delta * q + X(1, i + r - n - 1)

        if variant == "base":
            rels.append((delta + z, z + delta))
            rels += [(v(i + 1), v(i)) for i in range(1, n - r + 1)]
            rels += [(u(i + 1), u(i)) for i in range(n - r + 1, n + 1)]
        else:
            c = z + delta * q + X(1, r)
            rels.append((z + delta, delta + z))
            for i in range(1, n - r + 2):
                for j in range(i + 1, n - r + 2):
                    rels.append((v(i), v(j)))
            for i in range(n - r + 2, n + 2):
                for j in range(i + 1, n + 2):
                    rels.append((u(i), u(j)))
            for i in range(1, n - r + 2):
                for j in range(n - r + 2, n + 2):
                    rels.append((v(i) + y, u(j)))
            for i in range(2, n - r + 2):
                rels.append((v(i), c))
            for i in range(n - r + 2, n + 2):
                rels.append((u(i), c + y))
    else:
        d = y + X(1, n)

        def a(i: int) -> Word:
            return X(i, n) + z + d * (q - 1) + y + X(1, i + r - 1)

        def b(j: int) -> Word:
            return X(j, n) + d + z + d * (q - 1) + y + X(1, j + r - n - 1)

        c = z + d * q + y + X(1, r)
        rels.append((z + d, d + z))
        if n == 1:
            # r = 0 degenerates the generic families: a(2) turns z-headed,
            # so the a-pair lands on (x, z) and collides with the c-relation
            # while no relation covers (x, y) at all.  Keep the a-pair and
            # cover (x, y) with a(1) = d.z.d^(q-1), the least common right
            # multiple of x and y written with a(1) on the x side; sharing
            # that side keeps the x-complements literally equal, which the
            # lattice coherence of the complement table needs.
            rels.append((a(1), a(2)))
            rels.append((a(1), d + z + d * (q - 1)))
        else:
            for i in range(1, n - r + 2):
                for j in range(i + 1, n - r + 2):
                    rels.append((a(i), a(j)))
            for i in range(n - r + 2, n + 2):
                for j in range(i + 1, n + 2):
                    rels.append((b(i), b(j)))
            for i in range(1, n - r + 2):
                for j in range(n - r + 2, n + 2):
                    rels.append((a(i) + y, b(j)))
            for i in range(1, n - r + 2):
                rels.append((a(i) + y, c))
            for i in range(n - r + 2, n + 1):
                rels.append((b(i), c))
    return Presentation(tuple(names), (1,) * len(names), tuple(rels))


def _dual_names(n: int, m: int) -> list[str]:
    return ([f"x{i}" for i in range(1, m + 1)] + ["y"]
            + [f"z{i}" for i in range(1, m + 1)])


def _dual_base(n: int, m: int, flavor: str) -> Presentation:
    full = _dual_names(n, m)
    if flavor == "star-star":
        names = full
    elif flavor == "star":
        names = [s for s in full if s != "y"]
    elif flavor == "upper-star":
        names = [s for s in full if not s.startswith("z")]
    else:
        names = [s for s in full if not s.startswith("z") and s != "y"]
    idx = {name: i for i, name in enumerate(names)}

    def x(i: int) -> Word:
        return bytes([idx[f"x{i}"]])

    def xc(i: int) -> Word:
        return x((i - 1) % m + 1)

    def X(i: int, j: int) -> Word:
        return b"".join(x(k) for k in range(i, j + 1))

    def Xc(i: int, j: int) -> Word:
        return b"".join(xc(k) for k in range(i, j + 1))

    def z(i: int) -> Word:
        return bytes([idx[f"z{i}"]])

    rels: list[tuple[Word, Word]] = []
    if flavor == "star-star":
        y = bytes([idx["y"]])
        rels += [(x(i) + z(i + 1), z(i) + x(i)) for i in range(1, m)]
        rels.append((x(m) + y + z(1), z(m) + x(m) + y))
        rels += [(z(i + 1) + X(i + 1, i + n), z(i) + X(i, i + n - 1))
                 for i in range(1, m - n + 1)]
        rels += [(z(i + 1) + X(i + 1, m) + y + X(1, i + n - m),
                  z(i) + X(i, m) + y + X(1, i + n - m - 1))
                 for i in range(m - n + 1, m)]
        rels.append((y + z(1) + X(1, n), z(m) + x(m) + y + X(1, n - 1)))
    elif flavor == "star":
        rels += [(x(i) + z(i + 1), z(i) + x(i)) for i in range(1, m)]
        rels.append((x(m) + z(1), z(m) + x(m)))
        rels += [(z(i + 1) + Xc(i + 1, i + n), z(i) + Xc(i, i + n - 1))
                 for i in range(1, m)]
    elif flavor == "upper-star":
        y = bytes([idx["y"]])
        rels += [(X(i + 1, i + n), X(i, i + n - 1))
                 for i in range(1, m - n + 1)]
        rels += [(X(i + 1, m) + y + X(1, i + n - m),
                  X(i, m) + y + X(1, i + n - m - 1))
                 for i in range(m - n + 1, m)]
        rels.append((y + X(1, n), x(m) + y + X(1, n - 1)))
    else:
        rels += [(Xc(i + 1, i + n), Xc(i, i + n - 1)) for i in range(1, m)]
    return Presentation(tuple(names), (1,) * len(names), tuple(rels))


def _dual_enlarged(n: int, m: int) -> Presentation:
    names = _dual_names(n, m)
    idx = {name: i for i, name in enumerate(names)}

    def x(i: int) -> Word:
        return bytes([idx[f"x{i}"]])

    def X(i: int, j: int) -> Word:
        return b"".join(x(k) for k in range(i, j + 1))

    def z(i: int) -> Word:
        return bytes([idx[f"z{i}"]])

    y = bytes([idx["y"]])
    rels: list[tuple[Word, Word]] = []
    if n == 1:
        rels += [(z(i) + x(i), z(j) + x(j))
                 for i in range(1, m + 1) for j in range(i + 1, m + 1)]
        rels += [(x(i) + z(i + 1), z(j) + x(j))
                 for i in range(1, m) for j in range(1, m + 1)]
        rels += [(x(i) + z(i + 1), x(j) + z(j + 1))
                 for i in range(1, m) for j in range(i + 1, m)]
        rels += [(z(i) + x(i) + y, y + z(1) + x(1)) for i in range(1, m + 1)]
        rels += [(z(i) + x(i) + y, x(m) + y + z(1)) for i in range(1, m + 1)]
        rels += [(x(i) + z(i + 1) + y, y + z(1) + x(1)) for i in range(1, m)]
        rels += [(x(i) + z(i + 1) + y, x(m) + y + z(1)) for i in range(1, m)]
        rels.append((x(m) + y + z(1), y + z(1) + x(1)))
        return Presentation(tuple(names), (1,) * len(names), tuple(rels))

    def Zx(i: int) -> Word:
        return z(i) + X(i, i + n - 1)

    def ZxY(i: int) -> Word:
        return z(i) + X(i, m) + y + X(1, i + n - m - 1)

    def xZ(i: int) -> Word:
        return x(i) + z(i + 1) + X(i + 1, i + n - 1)

    def xZY(i: int) -> Word:
        return x(i) + z(i + 1) + X(i + 1, m) + y + X(1, i + n - m - 1)

    E = y + z(1) + X(1, n)
    F = x(m) + y + z(1) + X(1, n - 1)
    lo = range(1, m - n + 2)            # small indices, z-headed runs
    hi = range(m - n + 2, m + 1)        # y-wrapped indices
    hix = range(m - n + 2, m)           # y-wrapped with an x head
    rels += [(x(i) + z(i + 1), z(i) + x(i)) for i in range(1, m)]
    rels.append((x(m) + y + z(1), z(m) + x(m) + y))
    rels += [(Zx(i), Zx(j)) for i in lo for j in lo if i < j]
    rels += [(ZxY(i), ZxY(j)) for i in hi for j in hi if i < j]
    rels.append((E, ZxY(m)))
    rels += [(xZ(i), Zx(j)) for i in lo for j in lo if i != j]
    rels += [(xZ(i), xZ(j)) for i in lo for j in lo if i < j]
    rels += [(xZ(i) + y, ZxY(j)) for i in lo for j in hi]
    rels += [(xZ(i) + y, xZY(j)) for i in lo for j in hix]
    rels += [(xZ(i) + y, F) for i in lo]
    rels += [(xZ(i) + y, E) for i in lo]
    rels += [(xZY(i), Zx(j) + y) for i in hix for j in lo]
    rels += [(xZY(i), ZxY(j)) for i in hix for j in hi if i != j]
    rels += [(xZY(i), xZY(j)) for i in hix for j in hix if i < j]
    rels += [(xZY(i), F) for i in hix]
    rels += [(xZY(i), E) for i in hix]
    rels += [(Zx(i) + y, ZxY(j)) for i in lo for j in hi]
    rels += [(Zx(i) + y, F) for i in lo]
    rels += [(Zx(i) + y, E) for i in lo]
    rels += [(ZxY(i), F) for i in hix]
    rels += [(ZxY(i), E) for i in hix]
    rels.append((E, F))
    return Presentation(tuple(names), (1,) * len(names), tuple(rels))


def _dual_opposite(n: int, m: int) -> Presentation:
    names = _dual_names(n, m)
    idx = {name: i for i, name in enumerate(names)}

    def x(i: int) -> Word:
        return bytes([idx[f"x{i}"]])

    def X(i: int, j: int) -> Word:
        return b"".join(x(k) for k in range(i, j + 1))

    def z(i: int) -> Word:
        return bytes([idx[f"z{i}"]])

    y = bytes([idx["y"]])

    def A(i: int) -> Word:
        return x(i) + z(i) + X(i + 1, i + n - 1)

    def AY(i: int) -> Word:
        return x(i) + z(i) + X(i + 1, m) + y + X(1, i + n - m - 1)

    def B(i: int) -> Word:
        return z(i) + X(i + 1, i + n)

    def BY(i: int) -> Word:
        return z(i) + X(i + 1, m) + y + X(1, i + n - m)

    C = y + x(1) + z(1) + X(2, n)
    lo = range(1, m - n + 2)
    hi = range(m - n + 2, m + 1)
    blo = range(1, m - n + 1)
    bhi = range(m - n + 1, m + 1)
    rels: list[tuple[Word, Word]] = []
    rels += [(z(i) + x(i + 1), x(i + 1) + z(i + 1)) for i in range(1, m)]
    rels.append((z(m) + y + x(1), y + x(1) + z(1)))
    rels += [(A(i), A(j)) for i in lo for j in lo if i < j]
    rels += [(AY(i), AY(j)) for i in hi for j in hi if i < j]
    rels += [(A(i), B(j)) for i in lo for j in blo if i != j + 1]
    rels += [(A(i) + y, BY(j)) for i in lo for j in bhi]
    rels += [(A(i) + y, AY(j)) for i in lo for j in hi]
    rels += [(AY(i), B(j) + y) for i in hi for j in blo]
    rels += [(AY(i), BY(j)) for i in hi for j in bhi if i != j + 1]
    rels += [(B(i), B(j)) for i in blo for j in blo if i < j]
    rels += [(B(i) + y, BY(j)) for i in blo for j in bhi]
    rels += [(BY(i), BY(j)) for i in bhi for j in bhi if i < j]
    rels += [(C, A(i) + y) for i in lo]
    rels += [(C, AY(i)) for i in hi]
    rels += [(C, B(i) + y) for i in blo]
    rels += [(C, BY(i)) for i in range(m - n + 1, m)]
    return Presentation(tuple(names), (1,) * len(names), tuple(rels))


def _dedupe(p: Presentation) -> Presentation:
    # The plain classical family reaches the same relation from both index
    # chains; keep the first copy of each unordered pair.
    seen: set[tuple[Word, Word]] = set()
    rels = []
    for lhs, rhs in p.relations:
        key = (lhs, rhs) if lhs <= rhs else (rhs, lhs)
        if key not in seen:
            seen.add(key)
            rels.append((lhs, rhs))
    if len(rels) == len(p.relations):
        return p
    return Presentation(p.names, p.weights, tuple(rels))


def build_presentation(params: BraidParams) -> Presentation:
    n, m = params.n, params.m
    if params.kind == "classical":
        if params.variant == "base":
            p = _classical_star_star(n, m, "base")
            if params.flavor != "star-star":
                p = p.remove_letters(params.killed_letters())
        else:
            p = _classical_star_star(n, m, params.variant)
            if params.flavor != "star-star":
                p = sub_X_presentation(p, params.killed_letters())
    else:
        if params.variant == "base":
            p = _dual_base(n, m, params.flavor)
        else:
            if params.variant == "enlarged":
                p = _dual_enlarged(n, m)
            else:
                p = _dual_opposite(n, m)
            if params.flavor != "star-star":
                p = sub_X_presentation(p, params.killed_letters())
    p = _dedupe(p)
    homogeneous, witness = is_homogeneous(p)
    assert homogeneous, (params, witness)
    if params.variant != "base" and params.flavor == "star-star":
        assert build_theta(p).classification == RIGHT_FULL, params
    return p


def special_words(params: BraidParams) -> SpecialWords:
    n, m, q, r = params.n, params.m, params.q, params.r
    if params.kind == "classical":
        full_names = _classical_names(n) + ["y", "z"]
        fidx = {name: i for i, name in enumerate(full_names)}
        X = bytes(fidx[s] for s in _classical_names(n))
        y = bytes([fidx["y"]])
        z = bytes([fidx["z"]])
        delta = X + y
        w = z + delta * q + X[:r]
        big_w = w + y
        Delta = delta * m + z * n
    else:
        full_names = _dual_names(n, m)
        fidx = {name: i for i, name in enumerate(full_names)}

        def xs(i: int, j: int) -> Word:
            return bytes(fidx[f"x{k}"] for k in range(i, j + 1))

        y = bytes([fidx["y"]])
        delta = xs(1, m) + y
        w = bytes([fidx["z1"]]) + xs(1, n)
        big_w = bytes([fidx[f"z{m - n + 1}"]]) + xs(m - n + 1, m) + y
        Delta = w * (m - n) + big_w * n
    p = build_presentation(params)
    kill = {fidx[name] for name in params.killed_letters()}
    trans = {i: p.letter(name) for i, name in enumerate(full_names)
             if i not in kill}

    def project(word: Word) -> Word:
        return bytes(trans[c] for c in word if c not in kill)

    return SpecialWords(p, project(delta), project(w),
                        project(big_w), project(Delta))


_PRESET_PARAMS = {
    "G15-classical": BraidParams(1, 2, "star-star", "classical", "base"),
    "G15-dual": BraidParams(1, 2, "star-star", "dual", "base"),
    "G13-classical": BraidParams(2, 3, "star", "classical", "base"),
    "G13-dual": BraidParams(2, 3, "star", "dual", "base"),
    "G(3c,3,2)-classical": BraidParams(2, 3, "upper-star", "classical",
                                       "base"),
    "example-4.3": BraidParams(2, 3, "star-star", "classical", "base"),
}

_PRESET_FIXTURES = {
    "G15-classical": """
        letter x
        letter y
        letter z
        rel z.x.y = x.y.z
        rel x.y.z.x.y = y.z.x.y.x
    """,
    "G15-dual": """
        letter x1
        letter x2
        letter y
        letter z1
        letter z2
        rel x1.z2 = z1.x1
        rel z1.x1 = z2.x2
        rel x2.y.z1 = y.z1.x1
        rel y.z1.x1 = z2.x2.y
    """,
    "G13-classical": """
        letter x1
        letter x2
        letter y
        rel x1.x2.y.x1 = x2.y.x1.x2
        rel x2.y.x1.x2.y = y.x1.x2.y.x1
    """,
    "G13-dual": """
        letter x1
        letter x2
        letter x3
        letter z1
        letter z2
        letter z3
        rel x1.z2 = z1.x1
        rel x2.z3 = z2.x2
        rel x3.z1 = z3.x3
        rel z1.x1.x2 = z2.x2.x3
        rel z2.x2.x3 = z3.x3.x1
    """,
    "G(3c,3,2)-classical": """
        letter x1
        letter x2
        letter z
        rel z.x1.x2 = x1.x2.z
        rel x1.x2.z.x1 = x2.z.x1.x2
        rel x2.z.x1.x2 = z.x1.x2.x1
    """,
    "example-4.3": """
        letter x1
        letter x2
        letter y
        letter z
        rel z.x1.x2.y = x1.x2.y.z
        rel x1.x2.y.z.x1 = x2.y.z.x1.x2
        rel x2.y.z.x1.x2.y = y.z.x1.x2.y.x1
    """,
    ("G(cd,d,2)-dual", 3): """
        letter x1
        letter x2
        letter x3
        letter y
        rel x2.x3 = x1.x2
        rel x3.y.x1 = x2.x3.y
        rel y.x1.x2 = x3.y.x1
    """,
    ("G(2cd,2d,2)-dual", 2): """
        letter x1
        letter x2
        letter y
        letter z1
        letter z2
        rel x1.z2 = z1.x1
        rel z1.x1 = z2.x2
        rel x2.y.z1 = y.z1.x1
        rel y.z1.x1 = z2.x2.y
    """,
    ("G(2cd,2d,2)-dual", 3): """
        letter x1
        letter x2
        letter x3
        letter y
        letter z1
        letter z2
        letter z3
        rel x1.z2 = z1.x1
        rel z1.x1 = z2.x2
        rel x2.z3 = z2.x2
        rel z2.x2 = z3.x3
        rel x3.y.z1 = y.z1.x1
        rel y.z1.x1 = z3.x3.y
    """,
}

PRESET_NAMES = tuple(_PRESET_PARAMS) + (
    "G(cd,d,2)-dual(d)", "G(2cd,2d,2)-dual(d)")

_PARAM_PRESET = re.compile(r"^(G\(cd,d,2\)-dual|G\(2cd,2d,2\)-dual)\((\d+)\)$")


def preset_table(name: str) -> Presentation:
    """Named fixture presentations; parametrized names take a literal d,
    e.g. ``G(cd,d,2)-dual(5)``."""
    fixture_key: object = name
    if name in _PRESET_PARAMS:
        params = _PRESET_PARAMS[name]
    else:
        match = _PARAM_PRESET.match(name)
        if not match:
            raise ValueError(f"unknown preset {name!r}")
        family, d = match.group(1), int(match.group(2))
        if family == "G(cd,d,2)-dual":
            params = BraidParams(2, d, "upper-star", "dual", "base")
        else:
            params = BraidParams(1, d, "star-star", "dual", "base")
        fixture_key = (family, d)
    p = build_presentation(params)
    fixture = _PRESET_FIXTURES.get(fixture_key)
    if fixture is not None:
        expected = Presentation.from_text(fixture)
        assert p.canonical_text() == expected.canonical_text(), name
    return p
