"""Bounded bidirectional rewriting of 2-cell layer lists.

Moves:

* interchange of two consecutive layers acting on disjoint slice ranges;
* zigzag contraction/expansion for each declared adjunction F ⊣ G (η, ε):
  ``[(p+1, η), (p, ε)]`` on F and ``[(p, η), (p+1, ε)]`` on G are identities;
* oriented counits ``[(p, a), (p, b)] ⇝ []`` for declared pairs (a, b);
* cancellation of a declared invertible generator against its inverse.

Equalities are used in both directions; counits only forward.  The search
expands shorter layer lists first from both ends and stops after ``budget``
expansions.
"""

from __future__ import annotations

import heapq
import itertools
import os
from dataclasses import dataclass, field

from ..errors import TypecheckError
from .cells import OneCell, TwoCell, apply_layer, two_cell_type

__all__ = [
    "Adjunction",
    "RuleSet",
    "default_rules",
    "ProofStep",
    "ProofTrace",
    "RewriteFailure",
    "rewrite_check",
    "forward_moves",
    "replay_validate",
    "DEFAULT_BUDGET",
    "ambidexterity_goals",
    "verify_ambidexterity",
    "verify_radford",
]

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class Adjunction:
    left: str  # F
    right: str  # G
    unit: str  # η : id => G∘F
    counit: str  # ε : F∘G => id

    def __str__(self):
        return f"{self.left}⊣{self.right}"


@dataclass(frozen=True)
class RuleSet:
    adjunctions: tuple = ()
    counits: tuple = ()  # (a, b): a then b at the same spot reduces to nothing
    invertible: tuple = ()

    def extend(self, *, adjunctions=(), counits=(), invertible=()) -> "RuleSet":
        return RuleSet(self.adjunctions + tuple(adjunctions), self.counits + tuple(counits), self.invertible + tuple(invertible))


def default_rules() -> RuleSet:
    return RuleSet(
        adjunctions=(
            Adjunction("evL", "ev", "u1", "v1"),
            Adjunction("ev", "evR", "u2", "v2"),
            Adjunction("evR", "ev", "v2R", "u2R"),
            Adjunction("f", "fR", "u", "v"),
        ),
        counits=(("v", "vL"), ("u", "uL")),
    )


def _norm(name: str) -> str:
    from .cells import ALIASES

    if name.endswith("^-1"):
        return ALIASES.get(name[:-3], name[:-3]) + "^-1"
    return ALIASES.get(name, name)


def _cells(source: OneCell, layers) -> list[OneCell] | None:
    cells = [source]
    try:
        for layer in layers:
            cells.append(apply_layer(cells[-1], layer))
    except TypecheckError:
        return None
    return cells


def _sizes(name):
    src, tgt = two_cell_type(name)
    return len(src), len(tgt)


def _interchanges(layers, cells):
    for i in range(len(layers) - 1):
        (p1, g1, k1), (p2, g2, k2) = layers[i], layers[i + 1]
        s1, t1 = _sizes(g1)
        s2, t2 = _sizes(g2)
        variants = []
        if p2 + s2 <= p1:
            variants.append(((p2, g2, k2), (p1 + t2 - s2, g1, k1)))
        if p2 >= p1 + t1:
            variants.append(((p2 - t1 + s1, g2, k2), (p1, g1, k1)))
        for a, b in variants:
            try:
                after = apply_layer(apply_layer(cells[i], a), b)
            except TypecheckError:
                continue
            if after == cells[i + 2]:
                yield layers[:i] + (a, b) + layers[i + 2 :]


def _pairs(rules: RuleSet):
    """(first, second, shift, anchor, label): the pair [(q+shift, first), (q, second)] is an identity
    on the 1-cell generator ``anchor`` sitting at q."""
    out = []
    for adj in rules.adjunctions:
        out.append((adj.unit, adj.counit, 1, adj.left, f"zigzag {adj} on {adj.left}"))
        out.append((adj.unit, adj.counit, -1, adj.right, f"zigzag {adj} on {adj.right}"))
    return out


def _contractions(layers, rules: RuleSet):
    """(label, kind, new layers) for every removable adjacent pair."""
    for i in range(len(layers) - 1):
        (p1, g1, k1), (p2, g2, k2) = layers[i], layers[i + 1]
        if k1 != k2:
            continue
        n1, n2 = _norm(g1), _norm(g2)
        rest = layers[:i] + layers[i + 2 :]
        for first, second, shift, _, label in _pairs(rules):
            if n1 == first and n2 == second:
                # shift 1: (q+1, η), (q, ε); shift -1: (q, η), (q+1, ε)
                if (shift == 1 and p1 == p2 + 1) or (shift == -1 and p2 == p1 + 1):
                    yield label, "eq", rest
        if p1 == p2:
            for a, b in rules.counits:
                if n1 == a and n2 == b:
                    yield f"counit {a},{b}", "oriented", rest
            for g in rules.invertible:
                if (n1, n2) in ((g, g + "^-1"), (g + "^-1", g)):
                    yield f"cancel {g}", "eq", rest


def _insertions(layers, cells, rules: RuleSet, include_oriented: bool):
    """(label, kind, new layers) for every insertable pair."""
    for j, cell in enumerate(cells):
        gens = cell.slices
        for first, second, shift, anchor, label in _pairs(rules):
            for q, s in enumerate(gens):
                if s.gen != anchor:
                    continue
                k = len(s.left)
                pair = ((q + 1, first, k), (q, second, k)) if shift == 1 else ((q, first, k), (q + 1, second, k))
                yield label, "eq", layers[:j] + pair + layers[j:]
        candidates = [(g, g + "^-1") for g in rules.invertible] + [(g + "^-1", g) for g in rules.invertible]
        if include_oriented:
            candidates += [tuple(c) for c in rules.counits]
        for a, b in candidates:
            src, _ = two_cell_type(a)
            kind = "oriented" if (a, b) in rules.counits else "eq"
            if kind == "eq" and not src:
                continue  # inserting g g^-1 from nothing is unbounded
            label = f"counit {a},{b}" if kind == "oriented" else f"cancel {a.replace('^-1', '')}"
            for q in range(len(gens) + 1):
                top = cell.object_at(q)
                for k in range(len(top) + 1):
                    pair = ((q, a, k), (q, b, k))
                    yield label, kind, layers[:j] + pair + layers[j:]


def _valid(source, layers, target) -> bool:
    cells = _cells(source, layers)
    return cells is not None and cells[-1] == target


def forward_moves(source: OneCell, layers: tuple, rules: RuleSet, target: OneCell):
    """All (rule, layers') with layers ⇝ layers' in one step."""
    cells = _cells(source, layers)
    if cells is None:
        return []
    out = []
    seen = set()

    def add(label, new):
        if new not in seen and _valid(source, new, target):
            seen.add(new)
            out.append((label, new))

    for new in _interchanges(layers, cells):
        add("interchange", new)
    for label, kind, new in _contractions(layers, rules):
        add(label, new)
    for label, kind, new in _insertions(layers, cells, rules, include_oriented=False):
        add(label + " (expand)", new)
    return out


def _backward_moves(source, layers, rules, target):
    """All (forward rule, predecessor) with predecessor ⇝ layers in one step."""
    cells = _cells(source, layers)
    if cells is None:
        return []
    out = []
    seen = set()

    def add(label, new):
        if new not in seen and _valid(source, new, target):
            seen.add(new)
            out.append((label, new))

    for new in _interchanges(layers, cells):
        add("interchange", new)
    for label, kind, new in _insertions(layers, cells, rules, include_oriented=True):
        add(label, new)
    for label, kind, new in _contractions(layers, rules):
        if kind == "eq":
            add(label + " (expand)", new)
    return out


@dataclass(frozen=True)
class ProofStep:
    rule: str
    before: tuple
    after: tuple


@dataclass
class ProofTrace:
    source: OneCell
    target: OneCell
    lhs: tuple
    rhs: tuple
    steps: list = field(default_factory=list)
    explored: int = 0

    def __bool__(self):
        return True

    def render(self) -> str:
        lines = [f"source: {self.source}", f"target: {self.target}", f"start:  {_show(self.lhs)}"]
        for n, step in enumerate(self.steps, 1):
            lines.append(f"{n:3d}. {step.rule}: {_show(step.after)}")
        lines.append(f"proved in {len(self.steps)} steps ({self.explored} states expanded)")
        return "\n".join(lines)


@dataclass
class RewriteFailure:
    explored: int
    frontier: int
    budget: int

    def __bool__(self):
        return False

    def render(self) -> str:
        return f"no derivation found within budget {self.budget} ({self.explored} expanded, frontier {self.frontier})"


def _show(layers) -> str:
    if not layers:
        return "identity"
    return " ; ".join(f"{g}@{p}" + (f"+{k}" if k else "") for p, g, k in layers)


def replay_validate(trace: ProofTrace, rules: RuleSet) -> bool:
    """Every step is a legal single move and preserves both boundaries."""
    if not trace.steps:
        return trace.lhs == trace.rhs
    if trace.steps[0].before != trace.lhs or trace.steps[-1].after != trace.rhs:
        return False
    for prev, step in zip(trace.steps, trace.steps[1:]):
        if prev.after != step.before:
            return False
    for step in trace.steps:
        a = TwoCell(trace.source, step.before)
        b = TwoCell(trace.source, step.after)
        if a.target != trace.target or b.target != trace.target:
            return False
        if (step.rule, step.after) not in forward_moves(trace.source, step.before, rules, trace.target):
            return False
    return True


def _budget(budget):
    if budget is not None:
        return budget
    env = os.environ.get("TCKIT_REWRITE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def rewrite_check(lhs: TwoCell, rhs: TwoCell, rules: RuleSet | None = None, budget: int | None = None):
    """Search for a derivation lhs ⇝ rhs; returns :class:`ProofTrace` or :class:`RewriteFailure`."""
    rules = rules or default_rules()
    budget = _budget(budget)
    if lhs.source != rhs.source or lhs.target != rhs.target:
        raise TypecheckError(
            f"boundaries differ: {lhs.source} => {lhs.target} versus {rhs.source} => {rhs.target}"
        )
    source, target = lhs.source, lhs.target
    start, goal = lhs.layers, rhs.layers
    limit = max(len(start), len(goal)) + 4
    trace = ProofTrace(source, target, start, goal)
    if start == goal:
        return trace
    fwd = {start: None}
    bwd = {goal: None}
    counter = itertools.count()
    heaps = {"f": [(len(start), next(counter), start)], "b": [(len(goal), next(counter), goal)]}
    explored = 0
    while (heaps["f"] or heaps["b"]) and explored < budget:
        side = "f"
        if not heaps["f"] or (heaps["b"] and heaps["b"][0][0] < heaps["f"][0][0]):
            side = "b"
        _, _, state = heapq.heappop(heaps[side])
        explored += 1
        own, other = (fwd, bwd) if side == "f" else (bwd, fwd)
        moves = forward_moves if side == "f" else _backward_moves
        for rule, nxt in moves(source, state, rules, target):
            if nxt in own or len(nxt) > limit:
                continue
            own[nxt] = (state, rule)
            if nxt in other:
                trace.steps = _assemble(fwd, bwd, nxt)
                trace.explored = explored
                return trace
            heapq.heappush(heaps[side], (len(nxt), next(counter), nxt))
    return RewriteFailure(explored, len(heaps["f"]) + len(heaps["b"]), budget)


def _assemble(fwd, bwd, meet):
    head = []
    node = meet
    while fwd[node] is not None:
        prev, rule = fwd[node]
        head.append(ProofStep(rule, prev, node))
        node = prev
    head.reverse()
    node = meet
    while bwd[node] is not None:
        nxt, rule = bwd[node]
        head.append(ProofStep(rule, node, nxt))
        node = nxt
    return head


def _generator_cell(name: str) -> OneCell:
    return OneCell.generator(name)


def ambidexterity_goals() -> list[tuple[TwoCell, TwoCell]]:
    """The two zigzags of vL ⊣ uL read on f and on fR, each against the identity."""
    f, fr = _generator_cell("f"), _generator_cell("fR")
    return [
        (TwoCell(f, ((0, "vL", 0), (1, "uL", 0))), TwoCell.identity(f)),
        (TwoCell(fr, ((1, "vL", 0), (0, "uL", 0))), TwoCell.identity(fr)),
    ]


def verify_ambidexterity(rules: RuleSet | None = None, budget: int | None = None) -> list:
    """Derive both zigzag identities exhibiting fR ⊣ f with unit vL and counit uL."""
    return [rewrite_check(lhs, rhs, rules, budget) for lhs, rhs in ambidexterity_goals()]


def verify_radford(rules: RuleSet | None = None, budget: int | None = None) -> list:
    """Derive R^-1 ∘ R = id_evL and R ∘ R^-1 = id_evR."""
    from .words import radford_inverse_word, radford_word

    r, ri = radford_word().cell, radford_inverse_word().cell
    return [
        rewrite_check(r.then(ri), TwoCell.identity(r.source), rules, budget),
        rewrite_check(ri.then(r), TwoCell.identity(ri.source), rules, budget),
    ]
