"""Intrusive doubly linked lists over integer node slots.

A :class:`ListArena` owns a pool of node slots and a pool of lists.  Slots
and lists are plain integers, so one element can carry several slots (an
edge owns one slot for its initial vertex's list and one for its terminal
vertex's list) without any per-node objects.

Per slot the arena keeps ``next``, ``prev`` and ``owner``; per list it keeps
``head`` and ``tail``.  ``owner`` is only meaningful on the head and tail of
a list and is cleared on interior nodes.  ``NIL`` marks an undefined value.
"""

from __future__ import annotations

from typing import Iterator

NIL = -1


class ListError(ValueError):
    pass


class _CountingArray(list):
    """List that reports every element read and write to a shared counter."""

    def __init__(self, values, counter):
        super().__init__(values)
        self._counter = counter

    def __getitem__(self, i):
        self._counter[0] += 1
        return list.__getitem__(self, i)

    def __setitem__(self, i, value):
        self._counter[0] += 1
        list.__setitem__(self, i, value)


class ListArena:
    """Pool of node slots and doubly linked lists.

    With ``instrument=True`` every read or write of a node-slot field
    (``next``, ``prev``, ``owner``) is counted in :attr:`slot_ops`; list
    fields (``head``, ``tail``) are not counted.
    """

    def __init__(self, slots: int = 0, lists: int = 0, *, instrument: bool = False):
        self.instrumented = instrument
        self._counter = [0]
        nxt = [NIL] * slots
        prv = [NIL] * slots
        owner = [NIL] * slots
        if instrument:
            nxt = _CountingArray(nxt, self._counter)
            prv = _CountingArray(prv, self._counter)
            owner = _CountingArray(owner, self._counter)
        self.nxt = nxt
        self.prv = prv
        self.owner = owner
        self.head = [NIL] * lists
        self.tail = [NIL] * lists

    @property
    def slot_ops(self) -> int:
        return self._counter[0]

    @property
    def num_slots(self) -> int:
        return list.__len__(self.nxt)

    @property
    def num_lists(self) -> int:
        return len(self.head)

    def new_slot(self) -> int:
        self.nxt.append(NIL)
        self.prv.append(NIL)
        self.owner.append(NIL)
        return self.num_slots - 1

    def new_list(self) -> int:
        self.head.append(NIL)
        self.tail.append(NIL)
        return len(self.head) - 1

    def extend_slots(self, count: int) -> range:
        start = self.num_slots
        filler = [NIL] * count
        self.nxt.extend(filler)
        self.prv.extend(filler)
        self.owner.extend(filler)
        return range(start, start + count)

    def extend_lists(self, count: int) -> range:
        start = len(self.head)
        self.head.extend([NIL] * count)
        self.tail.extend([NIL] * count)
        return range(start, start + count)

    def load(self, nxt: list, prv: list, owner: list, head: list, tail: list) -> None:
        """Replace the arena contents wholesale (bulk construction)."""
        if not len(nxt) == len(prv) == len(owner) or len(head) != len(tail):
            raise ListError("inconsistent array lengths")
        if self.instrumented:
            nxt = _CountingArray(nxt, self._counter)
            prv = _CountingArray(prv, self._counter)
            owner = _CountingArray(owner, self._counter)
        self.nxt, self.prv, self.owner = nxt, prv, owner
        self.head, self.tail = head, tail

    def is_detached(self, n: int) -> bool:
        return self.nxt[n] == NIL and self.prv[n] == NIL and self.owner[n] == NIL

    def is_empty(self, lst: int) -> bool:
        return self.head[lst] == NIL

    def remove(self, n: int) -> None:
        """Unlink slot ``n`` from whatever list holds it.

        Dispatches on whether ``prev``/``next`` are defined, because interior
        nodes carry no owner.  Removing a detached slot does nothing.
        """
        nxt, prv, owner = self.nxt, self.prv, self.owner
        p = prv[n]
        x = nxt[n]
        if p == NIL and x == NIL:
            lst = owner[n]
            if lst == NIL:
                return
            self.head[lst] = NIL
            self.tail[lst] = NIL
            owner[n] = NIL
        elif p == NIL:
            lst = owner[n]
            self.head[lst] = x
            owner[x] = lst
            prv[x] = NIL
            nxt[n] = NIL
            owner[n] = NIL
        elif x == NIL:
            lst = owner[n]
            self.tail[lst] = p
            owner[p] = lst
            nxt[p] = NIL
            prv[n] = NIL
            owner[n] = NIL
        else:
            nxt[p] = x
            prv[x] = p
            nxt[n] = NIL
            prv[n] = NIL

    def concatenate(self, l1: int, l2: int) -> None:
        """Append the nodes of ``l2`` to ``l1``, leaving ``l2`` empty."""
        if l1 == l2:
            raise ListError("cannot concatenate a list with itself")
        head, tail = self.head, self.tail
        h2 = head[l2]
        if h2 == NIL:
            return
        t2 = tail[l2]
        h1 = head[l1]
        owner = self.owner
        if h1 == NIL:
            head[l1] = h2
            tail[l1] = t2
            owner[h2] = l1
            owner[t2] = l1
        else:
            t1 = tail[l1]
            self.nxt[t1] = h2
            self.prv[h2] = t1
            tail[l1] = t2
            owner[t2] = l1
            if t1 != h1:
                owner[t1] = NIL
            if h2 != t2:
                owner[h2] = NIL
        head[l2] = NIL
        tail[l2] = NIL

    def addnode(self, n: int, lst: int) -> None:
        """Append detached slot ``n`` at the tail of ``lst``."""
        nxt, prv, owner = self.nxt, self.prv, self.owner
        if nxt[n] != NIL or prv[n] != NIL or owner[n] != NIL:
            raise ListError(f"slot {n} is already in a list")
        t = self.tail[lst]
        if t == NIL:
            self.head[lst] = n
        else:
            nxt[t] = n
            prv[n] = t
            if t != self.head[lst]:
                owner[t] = NIL
        self.tail[lst] = n
        owner[n] = lst

    def iterate(self, lst: int) -> Iterator[int]:
        nxt = self.nxt
        n = self.head[lst]
        while n != NIL:
            yield n
            n = nxt[n]

    def to_list(self, lst: int) -> list[int]:
        return list(self.iterate(lst))

    def check_well_formed(self, lst: int) -> list[int]:
        """Walk ``lst`` and verify its links; returns the nodes in order.

        Reads the raw arrays directly so that checking does not disturb the
        instrumentation counter.
        """
        get = list.__getitem__
        h, t = self.head[lst], self.tail[lst]
        if (h == NIL) != (t == NIL):
            raise ListError(f"list {lst}: head/tail definedness differs")
        if h == NIL:
            return []
        if get(self.prv, h) != NIL:
            raise ListError(f"list {lst}: prev(head) is defined")
        if get(self.nxt, t) != NIL:
            raise ListError(f"list {lst}: next(tail) is defined")
        if get(self.owner, h) != lst or get(self.owner, t) != lst:
            raise ListError(f"list {lst}: head or tail has the wrong owner")
        seen = set()
        order = []
        n = h
        prev = NIL
        while n != NIL:
            if n in seen:
                raise ListError(f"list {lst}: cycle at slot {n}")
            if get(self.prv, n) != prev:
                raise ListError(f"list {lst}: prev({n}) is not the inverse of next")
            if n != h and n != t and get(self.owner, n) != NIL:
                raise ListError(f"list {lst}: interior slot {n} has an owner")
            seen.add(n)
            order.append(n)
            prev = n
            n = get(self.nxt, n)
        if prev != t:
            raise ListError(f"list {lst}: walk from head does not end at tail")
        return order
