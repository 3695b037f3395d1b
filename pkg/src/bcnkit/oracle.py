"""Brute-force ground truth, independent of the matrix machinery.

Everything here simulates the model's expression ASTs directly and
explores explicit graphs by breadth-first search.  The only shared code
with the matrix path is the state index codec, so agreement between the
two is meaningful evidence rather than self-confirmation.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .boolmat import BooleanMatrix
from .compiler import decode_state, encode_state
from .netlang import (
    And,
    Const,
    Expr,
    Iff,
    Implies,
    NetworkModel,
    Not,
    Or,
    Var,
    Xor,
    eval_expr,
)


class SizeLimitError(ValueError):
    pass


def _step(model: NetworkModel, state: int, control: int) -> int:
    env = dict(zip(model.inputs, decode_state(control, model.m)))
    env.update(zip(model.states, decode_state(state, model.n)))
    return encode_state([eval_expr(f, env) for f in model.updates])


def _output(model: NetworkModel, state: int) -> tuple[int, ...]:
    env = dict(zip(model.states, decode_state(state, model.n)))
    return tuple(eval_expr(h, env) for h in model.output_maps)


@dataclass(frozen=True)
class TransitionGraph:
    """One-step successor sets over all controls, found by simulation."""

    state_count: int
    successors: tuple[tuple[int, ...], ...]


def transition_graph(model: NetworkModel) -> TransitionGraph:
    nn = 1 << model.n
    succ = []
    for a in range(1, nn + 1):
        succ.append(tuple(sorted({_step(model, a, j) for j in range(1, (1 << model.m) + 1)})))
    return TransitionGraph(nn, tuple(succ))


def reach_oracle(model: NetworkModel) -> BooleanMatrix:
    """Entry (i, j) = 1 iff BFS from j reaches i in at least one step."""
    if model.n + model.m > 12:
        raise SizeLimitError("reach oracle is limited to n+m <= 12")
    graph = transition_graph(model)
    nn = graph.state_count
    bits = [0] * nn
    for j in range(1, nn + 1):
        seen = set()
        queue = deque(graph.successors[j - 1])
        seen.update(queue)
        while queue:
            a = queue.popleft()
            for b in graph.successors[a - 1]:
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        for i in seen:
            bits[i - 1] |= 1 << (j - 1)
    return BooleanMatrix(nn, nn, bits)


def distinguish_oracle(model: NetworkModel) -> tuple[tuple[tuple[int, int], bool], ...]:
    """For each unordered pair z < x with equal current output, BFS over
    joint states driven by a shared control; the pair is distinguishable
    iff some reachable joint state (any depth) has differing outputs."""
    if 2 * model.n > 20:
        raise SizeLimitError("distinguishability oracle is limited to 2n <= 20")
    if model.p == 0:
        raise ValueError("model has no outputs")
    nn = 1 << model.n
    controls = range(1, (1 << model.m) + 1)
    out = [_output(model, a) for a in range(1, nn + 1)]

    results = []
    for z in range(1, nn + 1):
        for x in range(z + 1, nn + 1):
            if out[z - 1] != out[x - 1]:
                continue
            flag = False
            seen = {(z, x)}
            queue = deque(((z, x),))
            while queue and not flag:
                a, b = queue.popleft()
                for j in controls:
                    nxt = (_step(model, a, j), _step(model, b, j))
                    if nxt in seen:
                        continue
                    seen.add(nxt)
                    if out[nxt[0] - 1] != out[nxt[1] - 1]:
                        flag = True
                        break
                    queue.append(nxt)
            results.append(((z, x), flag))
    return tuple(results)


# -- random model generation (for cross-validation runs) ---------------------


def _random_expr(rng: random.Random, variables: tuple[str, ...], depth: int) -> Expr:
    if depth == 0 or rng.random() < 0.3:
        if variables and rng.random() < 0.85:
            return Var(rng.choice(variables))
        return Const(rng.randint(0, 1))
    op = rng.choice(("not", "and", "or", "xor", "implies", "iff"))
    if op == "not":
        return Not(_random_expr(rng, variables, depth - 1))
    left = _random_expr(rng, variables, depth - 1)
    right = _random_expr(rng, variables, depth - 1)
    return {"and": And, "or": Or, "xor": Xor, "implies": Implies, "iff": Iff}[op](left, right)


def random_model(
    rng: random.Random, n: int, m: int, p: int, name: str = "random", depth: int = 3
) -> NetworkModel:
    """A random network with expression depth <= depth; pass a seeded
    Random for reproducibility."""
    states = tuple(f"x{i}" for i in range(1, n + 1))
    inputs = tuple(f"u{i}" for i in range(1, m + 1))
    outputs = tuple(f"y{i}" for i in range(1, p + 1))
    update_vars = states + inputs
    return NetworkModel(
        name=name,
        states=states,
        inputs=inputs,
        outputs=outputs,
        updates=tuple(_random_expr(rng, update_vars, depth) for _ in states),
        output_maps=tuple(_random_expr(rng, states, depth) for _ in outputs),
    )
