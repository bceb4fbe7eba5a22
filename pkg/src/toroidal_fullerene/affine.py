"""Integer affine isometries of the hexagonal tiling.

Every map is a pair ``(t, A)`` acting by ``u -> t + A u``; coordinates are
taken in the basis ``{e1, e2}`` of the tiling (unit vectors at 120 degrees),
so all the data below is integral and relation checks are bit-exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

Vec = tuple[int, int]
Mat = tuple[tuple[int, int], tuple[int, int]]

IDENTITY_MATRIX: Mat = ((1, 0), (0, 1))
MINUS_IDENTITY: Mat = ((-1, 0), (0, -1))

# Translation lattice of the tiling, in e-coordinates.
V1: Vec = (2, 1)
V2: Vec = (1, 2)
E0: Vec = (1, 1)


def _matmul(a: Mat, b: Mat) -> Mat:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _matvec(a: Mat, u: Vec) -> Vec:
    return (a[0][0] * u[0] + a[0][1] * u[1], a[1][0] * u[0] + a[1][1] * u[1])


def _det(a: Mat) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


@dataclass(frozen=True)
class AffineMap:
    t: Vec
    A: Mat = IDENTITY_MATRIX

    def __post_init__(self):
        object.__setattr__(self, "t", (int(self.t[0]), int(self.t[1])))
        object.__setattr__(
            self, "A", tuple(tuple(int(x) for x in row) for row in self.A)
        )

    @property
    def det(self) -> int:
        return _det(self.A)

    def __matmul__(self, other: AffineMap) -> AffineMap:
        return compose(self, other)

    def __call__(self, u: Vec) -> Vec:
        return apply(self, u)


IDENTITY = AffineMap((0, 0), IDENTITY_MATRIX)


def translation(v: Vec) -> AffineMap:
    return AffineMap(v, IDENTITY_MATRIX)


def compose(f: AffineMap, g: AffineMap) -> AffineMap:
    """Group law of W: ``(t_f, A_f)(t_g, A_g) = (t_f + A_f t_g, A_f A_g)``."""
    At = _matvec(f.A, g.t)
    return AffineMap((f.t[0] + At[0], f.t[1] + At[1]), _matmul(f.A, g.A))


def apply(f: AffineMap, u: Vec) -> Vec:
    Au = _matvec(f.A, u)
    return (f.t[0] + Au[0], f.t[1] + Au[1])


def inverse(f: AffineMap) -> AffineMap:
    d = f.det
    if d not in (1, -1):
        raise ValueError(f"matrix {f.A} is not invertible over the integers")
    (p, q), (r, s) = f.A
    inv: Mat = ((s * d, -q * d), (-r * d, p * d))
    it = _matvec(inv, f.t)
    return AffineMap((-it[0], -it[1]), inv)


def is_translation(f: AffineMap) -> bool:
    return f.A == IDENTITY_MATRIX


class IsometryType(str, Enum):
    IDENTITY = "identity"
    TRANSLATION = "translation"
    ROTATION = "rotation"
    REFLECTION = "reflection"
    GLIDE_REFLECTION = "glide_reflection"


def classify(f: AffineMap) -> IsometryType:
    """Sort an isometry into one of the five classes.

    Orientation-preserving maps with ``A != I`` always have a (possibly
    half-integral) fixed point, so they are rotations; orientation-reversing
    maps are reflections when they square to the identity and glide
    reflections otherwise.
    """
    d = f.det
    if d not in (1, -1):
        raise ValueError(f"matrix {f.A} is not invertible over the integers")
    if f.A == IDENTITY_MATRIX:
        return IsometryType.IDENTITY if f.t == (0, 0) else IsometryType.TRANSLATION
    if d == 1:
        return IsometryType.ROTATION
    if compose(f, f) == IDENTITY:
        return IsometryType.REFLECTION
    return IsometryType.GLIDE_REFLECTION


def evaluate_word(word: str, images: dict[str, AffineMap]) -> AffineMap:
    """Image of a word such as ``"abcabc"``; letters multiply left to right."""
    out = IDENTITY
    for letter in word:
        out = compose(out, images[letter])
    return out


def lin(x: int, y: int) -> Vec:
    """``x*v1 + y*v2`` in e-coordinates."""
    return (x * V1[0] + y * V2[0], x * V1[1] + y * V2[1])


@dataclass(frozen=True)
class EmbeddingSpec:
    """Generator images of one embedding of a presentation into W.

    ``witnesses`` maps a word to the translation vector it is expected to
    produce; ``None`` means the image only has to be a translation and the
    vector is recorded as computed.
    """

    name: str
    generators: dict[str, AffineMap]
    relations: tuple[str, ...]
    witnesses: dict[str, Vec | None] = field(default_factory=dict)
    # translations claimed for the subgroup generated by the witnesses,
    # checked as a set when per-word vectors are not pinned
    claimed_subgroup: tuple[Vec, ...] = ()


@dataclass
class RelationCheck:
    word: str
    image: AffineMap
    holds: bool


@dataclass
class WitnessCheck:
    word: str
    image: AffineMap
    is_translation: bool
    expected: Vec | None
    matches: bool

    @property
    def vector(self) -> Vec | None:
        return self.image.t if self.is_translation else None


@dataclass
class VerificationReport:
    name: str
    relations: list[RelationCheck]
    witnesses: list[WitnessCheck]
    # None when no subgroup is claimed; otherwise whether the computed
    # witness translations equal the claimed pair as a set
    claimed_subgroup_matches: bool | None = None

    @property
    def passed(self) -> bool:
        return (
            all(r.holds for r in self.relations)
            and all(w.matches for w in self.witnesses)
            and self.claimed_subgroup_matches is not False
        )


def verify_embedding(spec: EmbeddingSpec) -> VerificationReport:
    relations = []
    for word in spec.relations:
        image = evaluate_word(word, spec.generators)
        relations.append(RelationCheck(word, image, image == IDENTITY))
    witnesses = []
    for word, expected in spec.witnesses.items():
        image = evaluate_word(word, spec.generators)
        is_tr = is_translation(image)
        if expected is None:
            ok = is_tr
        else:
            ok = is_tr and image.t == tuple(expected)
        witnesses.append(WitnessCheck(word, image, is_tr, expected, ok))
    claimed = None
    if spec.claimed_subgroup:
        got = {w.vector for w in witnesses}
        claimed = got == {tuple(v) for v in spec.claimed_subgroup}
    return VerificationReport(spec.name, relations, witnesses, claimed)


def _rot180(t: Vec) -> AffineMap:
    return AffineMap(t, MINUS_IDENTITY)


# The presentations are paired with the generator data exactly as in the
# geometric model: sigma1 carries the (abc)^2 relations, sigma2 the (ab)^3 ones.
SIGMA1 = EmbeddingSpec(
    name="sigma1",
    generators={
        "a": _rot180((2, 1)),
        "b": _rot180((3, 3)),
        "c": _rot180((1, 2)),
    },
    relations=("aa", "bb", "cc", "abcabc", "bcabca", "cabcab"),
    witnesses={"bc": lin(1, 0), "ba": lin(0, 1)},
)

SIGMA2 = EmbeddingSpec(
    name="sigma2",
    generators={
        "a": AffineMap((0, 0), ((1, 0), (1, -1))),
        "b": AffineMap((3, 3), ((0, -1), (-1, 0))),
        "c": AffineMap((0, 0), ((-1, 1), (0, 1))),
    },
    relations=("aa", "bb", "cc", "ababab", "acacac", "bcbcbc"),
    witnesses={"abac": lin(2, -1), "cbca": lin(-1, 2)},
)

SIGMA3 = EmbeddingSpec(
    name="sigma3",
    generators={
        "a": _rot180((2, 1)),
        "b": AffineMap((1, 2), ((1, 0), (1, -1))),
    },
    relations=("aa", "abbabb", "babbab", "bbabba"),
    witnesses={"bb": lin(1, 0), "baba": lin(-1, 2)},
)

SIGMA4 = EmbeddingSpec(
    name="sigma4",
    generators={
        "a": _rot180((2, 1)),
        "b": AffineMap((2, 1), ((1, -1), (1, 0))),
    },
    relations=("aa", "bbbbbb", "ababab", "bababa"),
    witnesses={"bbba": None, "babb": None},
    claimed_subgroup=(lin(2, -1), lin(-1, 2)),
)

EMBEDDINGS: tuple[EmbeddingSpec, ...] = (SIGMA1, SIGMA2, SIGMA3, SIGMA4)
