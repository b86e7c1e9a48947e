"""Brute-force helpers that share no code with the folding machinery."""

from __future__ import annotations

from collections import deque


def reduce_letters(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(letters):
    return tuple(-x for x in reversed(letters))


def all_reduced_words(rank, max_len):
    signed = [x for g in range(1, rank + 1) for x in (g, -g)]
    words = [()]
    layer = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for x in signed:
                if not w or w[-1] != -x:
                    nxt.append(w + (x,))
        words.extend(nxt)
        layer = nxt
    return words


def subgroup_ball(generators, radius):
    """Elements of <generators> reachable from 1 by right multiplication by
    generators and their inverses without leaving the ball of ``radius``."""
    steps = [tuple(g) for g in generators] + [inverse(g) for g in generators]
    seen = {()}
    queue = deque([()])
    while queue:
        h = queue.popleft()
        for s in steps:
            k = reduce_letters(h + s)
            if len(k) <= radius and k not in seen:
                seen.add(k)
                queue.append(k)
    return seen


def coset_classes(words, in_subgroup):
    """Partition ``words`` by right cosets Hu, testing u v^-1 in H."""
    reps = []
    classes = []
    for u in words:
        for i, r in enumerate(reps):
            if in_subgroup(reduce_letters(u + inverse(r))):
                classes[i].append(u)
                break
        else:
            reps.append(u)
            classes.append([u])
    return reps, classes


def same_partition(map_a, map_b):
    """True iff two vertex maps induce the same partition."""
    pairs = {}
    for a, b in zip(map_a, map_b):
        if pairs.setdefault(a, b) != b:
            return False
    return len(set(pairs.values())) == len(pairs)

