"""Single-field mutations of a certificate document.

A mutation changes exactly one leaf of the JSON tree (or one element of a
list).  Integer lists that look like vertex sets also get a "flip" that
adds or removes one member while keeping the list sorted.
"""

import copy


def _leaves(node, path=()):
    yield path, node
    if isinstance(node, dict):
        for k in sorted(node):
            yield from _leaves(node[k], path + (k,))
    elif isinstance(node, list):
        for i, x in enumerate(node):
            yield from _leaves(x, path + (i,))


def _set(doc, path, value):
    new = copy.deepcopy(doc)
    node = new
    for key in path[:-1]:
        node = node[key]
    node[path[-1]] = value
    return new


def _replacements(value, universe):
    if isinstance(value, bool):
        yield "flip", not value
    elif isinstance(value, int):
        yield "+1", value + 1
        yield "-1", value - 1
    elif isinstance(value, str):
        yield "append", value + "x"
        if value:
            yield "truncate", value[:-1]
    elif value is None:
        yield "zero", 0
        yield "empty", []
    elif isinstance(value, list):
        if value:
            yield "drop-last", value[:-1]
            yield "drop-first", value[1:]
            yield "duplicate", value + [copy.deepcopy(value[-1])]
        else:
            yield "fill", [0]
        if all(isinstance(x, int) and not isinstance(x, bool) for x in value):
            for x in range(universe):
                flipped = sorted(set(value) ^ {x})
                if flipped != value:
                    yield f"flip {x}", flipped
    elif isinstance(value, dict):
        yield "null", None


def single_field_mutations(doc):
    """Yield ``(description, mutated_doc)`` for every single-field change."""
    universe = max(doc["graph"]["n"], doc["value"]) + 1
    for path, value in _leaves(doc):
        if not path:
            continue
        for label, new in _replacements(value, universe):
            yield f"{'/'.join(map(str, path))}: {label}", _set(doc, path, new)
    for key in sorted(doc):
        rest = {k: v for k, v in doc.items() if k != key}
        yield f"delete {key}", rest
    yield "add key", dict(doc, extra=1)
