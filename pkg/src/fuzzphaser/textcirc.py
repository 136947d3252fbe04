"""Controlled-grammar texts compiled to circuits of update gates.

Actors are wires carrying density matrices; each sentence becomes a
gate that updates the joint state over all live actors. Transitive
verbs act on the subject and object wires together, which is why the
world is one joint state rather than a bag of per-actor states.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from . import linalg, update
from .ddm import DoubleDensityMatrix, ddm_kraus
from .density import DensityMatrix, Projector, PureState, from_pure, renormalize
from .errors import (
    DimensionMismatchError,
    DimensionOverflowError,
    LexiconError,
    ParseError,
    SpaceMismatchError,
    UnknownActorError,
    UnknownWordError,
)

MECHANISMS = ("projector", "fuzz", "phaser", "ddm")

#: Which gate mechanisms each lexicon operand kind supports.
KIND_MECHANISMS = {
    "pure": ("projector", "fuzz", "phaser"),
    "density": ("fuzz", "phaser"),
    "ddm": ("ddm",),
}


@dataclass(frozen=True)
class Introduce:
    actor: str


@dataclass(frozen=True)
class IsA:
    actor: str
    noun: str


@dataclass(frozen=True)
class Turns:
    actor: str
    noun: str


@dataclass(frozen=True)
class Transitive:
    subject: str
    verb: str
    object: str


Sentence = Union[Introduce, IsA, Turns, Transitive]


def _line_at(text: str, index: int) -> int:
    return text.count("\n", 0, index) + 1


def _parse_sentence(tokens: list[str], line: int) -> Sentence:
    if len(tokens) == 4 and tokens[:3] == ["Once", "there", "was"]:
        return Introduce(tokens[3])
    if len(tokens) == 4 and tokens[1] == "is" and tokens[2] in ("a", "an"):
        return IsA(tokens[0], tokens[3])
    if len(tokens) == 3 and tokens[1] == "is":
        return IsA(tokens[0], tokens[2])
    if len(tokens) == 3 and tokens[1] == "turns":
        return Turns(tokens[0], tokens[2])
    if len(tokens) == 3:
        return Transitive(tokens[0], tokens[1], tokens[2])
    raise ParseError(line, f"unrecognized sentence shape: {' '.join(tokens)!r}")


def parse(text: str) -> list[Sentence]:
    """Split on '.', match each sentence against the four patterns.

    Patterns: "Once there was X", "X is (a|an) N", "X turns N", "X V Y".
    Whitespace-only segments are skipped; a trailing fragment without a
    terminating '.' is an error.
    """
    sentences = []
    pos = 0
    while pos < len(text):
        stop = text.find(".", pos)
        segment = text[pos:] if stop == -1 else text[pos:stop]
        tokens = segment.split()
        if tokens:
            line = _line_at(text, pos + len(segment) - len(segment.lstrip()))
            if stop == -1:
                raise ParseError(line, "sentence not terminated by '.'")
            sentences.append(_parse_sentence(tokens, line))
        if stop == -1:
            break
        pos = stop + 1
    return sentences


@dataclass(frozen=True, eq=False)
class LexiconEntry:
    """One word: an operand on a declared space plus a default mechanism.

    Nouns name one space; transitive verbs name two (subject, object)
    and their operand lives on the product space.
    """

    name: str
    space: tuple[str, ...]
    kind: str
    mechanism: str
    operand: object

    def __init__(self, name: str, space, kind: str, mechanism: str, operand):
        if not name:
            raise LexiconError("entry name must be non-empty")
        spaces = (space,) if isinstance(space, str) else tuple(space)
        if not 1 <= len(spaces) <= 2 or not all(isinstance(s, str) and s for s in spaces):
            raise LexiconError(f"entry {name!r}: space must be one or two labels")
        if kind not in KIND_MECHANISMS:
            raise LexiconError(f"entry {name!r}: unknown kind {kind!r}")
        if mechanism not in KIND_MECHANISMS[kind]:
            raise LexiconError(
                f"entry {name!r}: mechanism {mechanism!r} not usable "
                f"with a {kind} operand"
            )
        expected = {
            "pure": PureState,
            "density": DensityMatrix,
            "ddm": DoubleDensityMatrix,
        }[kind]
        if not isinstance(operand, expected):
            raise LexiconError(
                f"entry {name!r}: kind {kind!r} needs a {expected.__name__} operand"
            )
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "space", spaces)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "mechanism", mechanism)
        object.__setattr__(self, "operand", operand)

    @property
    def dim(self) -> int:
        return self.operand.dim


@dataclass(frozen=True, eq=False)
class Lexicon:
    """Named spaces with dimensions, plus word entries living on them."""

    spaces: dict[str, int]
    entries: dict[str, LexiconEntry]

    def __init__(self, spaces: Mapping[str, int], entries: Iterable[LexiconEntry]):
        space_map = {}
        for label, dim in spaces.items():
            dim = int(dim)
            if not label or dim < 1:
                raise LexiconError(f"space {label!r} needs a positive dimension")
            space_map[label] = dim
        entry_map = {}
        for entry in entries:
            if entry.name in entry_map:
                raise LexiconError(f"duplicate entry {entry.name!r}")
            expected = 1
            for label in entry.space:
                if label not in space_map:
                    raise LexiconError(
                        f"entry {entry.name!r} references undeclared space {label!r}"
                    )
                expected *= space_map[label]
            if entry.dim != expected:
                raise LexiconError(
                    f"entry {entry.name!r} has dimension {entry.dim}, "
                    f"space product is {expected}"
                )
            entry_map[entry.name] = entry
        object.__setattr__(self, "spaces", space_map)
        object.__setattr__(self, "entries", entry_map)

    def entry(self, name: str) -> LexiconEntry:
        if name not in self.entries:
            raise UnknownWordError(name)
        return self.entries[name]

    def space_dim(self, label: str) -> int:
        if label not in self.spaces:
            raise LexiconError(f"undeclared space {label!r}")
        return self.spaces[label]


@dataclass(frozen=True, eq=False)
class Actor:
    name: str
    space: str
    dim: int
    prior: DensityMatrix


@dataclass(frozen=True, eq=False)
class Gate:
    """One update: a mechanism with its operand, acting on actor slots."""

    slots: tuple[int, ...]
    mechanism: str
    operand: object
    label: str


@dataclass(frozen=True, eq=False)
class Circuit:
    actors: tuple[Actor, ...]
    gates: tuple[Gate, ...]

    @property
    def joint_dim(self) -> int:
        out = 1
        for a in self.actors:
            out *= a.dim
        return out

    def actor_index(self, name: str) -> int:
        for i, a in enumerate(self.actors):
            if a.name == name:
                return i
        raise UnknownActorError(f"no actor named {name!r}")


def _gate_operand(entry: LexiconEntry, mechanism: str):
    if mechanism not in KIND_MECHANISMS[entry.kind]:
        raise LexiconError(
            f"mechanism {mechanism!r} not usable with {entry.kind} "
            f"entry {entry.name!r}"
        )
    if mechanism == "projector":
        return Projector.onto_pure(entry.operand)
    if mechanism == "ddm":
        return entry.operand
    if entry.kind == "pure":
        return from_pure(entry.operand)
    return entry.operand


class _ActorTable:
    def __init__(self):
        self.order: list[str] = []
        self.space: dict[str, str | None] = {}

    def touch(self, name: str, space: str | None = None):
        if name not in self.space:
            self.order.append(name)
            self.space[name] = None
        if space is not None:
            known = self.space[name]
            if known is None:
                self.space[name] = space
            elif known != space:
                raise SpaceMismatchError(name, known, space)


def compile_sentences(
    sentences: Sequence[Sentence],
    lexicon: Lexicon,
    mechanism: str | None = None,
) -> Circuit:
    """Turn parsed sentences into a circuit, in text order.

    Actors appear at first mention; their space comes from their own
    lexicon entry if present, otherwise from the first gate touching
    them. ``mechanism`` overrides every gate's default where the
    operand kind allows it. Priors default to the maximally mixed
    state unless the lexicon carries an entry for the actor.
    """
    if mechanism is not None and mechanism not in MECHANISMS:
        raise LexiconError(f"unknown mechanism {mechanism!r}")
    table = _ActorTable()
    pending = []
    for s in sentences:
        if isinstance(s, Introduce):
            table.touch(s.actor)
            continue
        if isinstance(s, (IsA, Turns)):
            entry = lexicon.entry(s.noun)
            if len(entry.space) != 1:
                raise LexiconError(f"noun {s.noun!r} must live on a single space")
            table.touch(s.actor, entry.space[0])
            verb = "is" if isinstance(s, IsA) else "turns"
            pending.append(((s.actor,), entry, f"{s.actor} {verb} {s.noun}"))
            continue
        entry = lexicon.entry(s.verb)
        if len(entry.space) != 2:
            raise LexiconError(f"verb {s.verb!r} must live on a pair of spaces")
        if s.subject == s.object:
            raise LexiconError(
                f"transitive sentence needs two distinct actors, got {s.subject!r}"
            )
        table.touch(s.subject, entry.space[0])
        table.touch(s.object, entry.space[1])
        pending.append(
            ((s.subject, s.object), entry, f"{s.subject} {s.verb} {s.object}")
        )

    actors = []
    for name in table.order:
        space = table.space[name]
        prior = None
        if name in lexicon.entries:
            entry = lexicon.entries[name]
            if len(entry.space) != 1:
                raise LexiconError(f"actor {name!r} must live on a single space")
            if space is None:
                space = entry.space[0]
            elif entry.space[0] != space:
                raise SpaceMismatchError(name, space, entry.space[0])
            if entry.kind == "pure":
                prior = from_pure(entry.operand)
            elif entry.kind == "density":
                prior = entry.operand
            else:
                raise LexiconError(f"actor {name!r} prior cannot be a ddm entry")
        if space is None:
            raise LexiconError(f"cannot infer a space for actor {name!r}")
        dim = lexicon.space_dim(space)
        if prior is None:
            prior = DensityMatrix.maximally_mixed(dim)
        actors.append(Actor(name=name, space=space, dim=dim, prior=prior))

    joint = 1
    for a in actors:
        joint *= a.dim
        if joint > linalg.DIM_CAP:
            raise DimensionOverflowError(
                f"joint dimension exceeds cap {linalg.DIM_CAP}"
            )

    index = {a.name: i for i, a in enumerate(actors)}
    gates = []
    for names, entry, label in pending:
        effective = mechanism if mechanism is not None else entry.mechanism
        gates.append(
            Gate(
                slots=tuple(index[n] for n in names),
                mechanism=effective,
                operand=_gate_operand(entry, effective),
                label=label,
            )
        )
    return Circuit(actors=tuple(actors), gates=tuple(gates))


def compile_text(text: str, lexicon: Lexicon, mechanism: str | None = None) -> Circuit:
    return compile_sentences(parse(text), lexicon, mechanism)


@dataclass(frozen=True, eq=False)
class WorldState:
    """Joint state over all actors; per-actor views come by partial trace."""

    actor_names: tuple[str, ...]
    dims: tuple[int, ...]
    joint: DensityMatrix


def _apply_gate(joint: np.ndarray, gate: Gate, dims: Sequence[int]) -> np.ndarray:
    if gate.mechanism == "projector":
        p = linalg.embed_on_subsystem(gate.operand.matrix, dims, gate.slots)
        return p @ joint @ p
    if gate.mechanism in ("fuzz", "phaser"):
        sigma = DensityMatrix(
            linalg.embed_on_subsystem(gate.operand.matrix, dims, gate.slots)
        )
        mech = update.fuzz if gate.mechanism == "fuzz" else update.phaser
        return mech(DensityMatrix(joint), sigma).matrix
    if gate.mechanism == "ddm":
        out = np.zeros_like(joint)
        for a in ddm_kraus(gate.operand):
            big = linalg.embed_on_subsystem(a, dims, gate.slots)
            out += big @ joint @ big
        return linalg.hermitize(out)
    raise LexiconError(f"unknown mechanism {gate.mechanism!r}")


def evaluate_trajectory(
    circuit: Circuit, renormalize_each_step: bool = False
) -> list[WorldState]:
    """World state before any gate and after each gate, in order."""
    names = tuple(a.name for a in circuit.actors)
    dims = tuple(a.dim for a in circuit.actors)
    if circuit.actors:
        joint = linalg.kron_all([a.prior.matrix for a in circuit.actors])
    else:
        joint = np.array([[1.0]], dtype=np.complex128)
    states = [WorldState(names, dims, DensityMatrix(joint))]
    for gate in circuit.gates:
        joint = _apply_gate(joint, gate, dims)
        state = DensityMatrix(joint)
        if renormalize_each_step:
            state = renormalize(state)
            joint = np.asarray(state.matrix)
        states.append(WorldState(names, dims, state))
    return states


def evaluate(circuit: Circuit, renormalize_each_step: bool = False) -> WorldState:
    """Tensor the priors, apply every gate in sentence order."""
    return evaluate_trajectory(circuit, renormalize_each_step)[-1]


def reduced_state(world: WorldState, actor: str) -> DensityMatrix:
    """One wire of the world: partial trace over every other actor."""
    if actor not in world.actor_names:
        raise UnknownActorError(f"no actor named {actor!r}")
    keep = [world.actor_names.index(actor)]
    out = linalg.partial_trace(world.joint.matrix, world.dims, keep)
    return DensityMatrix(linalg.hermitize(out))
