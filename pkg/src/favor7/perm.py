"""Permutations and permutation groups with a base/strong-generating-set engine.

Permutations are tuples img with img[i] = g(i), 0-based, composed so that
(g*h)(i) = g(h(i)).  The stabilizer chain is built by a deterministic
incremental Schreier-Sims; an optional base hint forces chosen points to the
front of the base, which exposes the pointwise stabilizer of those points as a
subgroup of the chain (used for block-action kernels).
"""

from __future__ import annotations

from math import prod


class Perm:
    __slots__ = ("img",)

    def __init__(self, img):
        img = tuple(img)
        if sorted(img) != list(range(len(img))):
            raise ValueError("not a permutation")
        self.img = img

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n, cycles, one_based=False):
        img = list(range(n))
        off = 1 if one_based else 0
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - off] = b - off
        return cls(img)

    @property
    def degree(self):
        return len(self.img)

    def __call__(self, i):
        return self.img[i]

    def __mul__(self, other):
        return Perm(tuple(self.img[j] for j in other.img))

    def inv(self):
        out = [0] * len(self.img)
        for i, j in enumerate(self.img):
            out[j] = i
        return Perm(out)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.img))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def order(self):
        from math import lcm

        seen = [False] * len(self.img)
        o = 1
        for i in range(len(self.img)):
            if seen[i]:
                continue
            ln = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.img[j]
                ln += 1
            o = lcm(o, ln)
        return o

    def fixed_points(self):
        return [i for i, j in enumerate(self.img) if i == j]

    def cycle_type(self):
        seen = [False] * len(self.img)
        out = []
        for i in range(len(self.img)):
            if seen[i]:
                continue
            ln = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.img[j]
                ln += 1
            out.append(ln)
        return tuple(sorted(out, reverse=True))

    def parity(self):
        """0 for even, 1 for odd."""
        return sum(l - 1 for l in self.cycle_type()) & 1

    def __repr__(self):
        return f"Perm({list(self.img)})"


class _Level:
    __slots__ = ("point", "gens", "transversal", "trans_inv", "dirty")

    def __init__(self, point, identity):
        self.point = point
        self.gens = []
        self.transversal = {point: identity}
        self.trans_inv = {point: identity}
        self.dirty = True


class PermGroup:
    def __init__(self, gens, degree=None, base_hint=None):
        gens = [g if isinstance(g, Perm) else Perm(g) for g in gens]
        if degree is None:
            if not gens:
                raise ValueError("degree required for trivial group")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("mixed degrees")
        self.degree = degree
        self.base_hint = list(base_hint) if base_hint else []
        self._id = Perm.identity(degree)
        self.levels: list[_Level] = []
        # pre-create a level per hint point, so the hint is a base prefix and
        # the chain exposes the pointwise stabilizer of the hinted points
        for b in self.base_hint:
            self.levels.append(_Level(b, self._id))
        self.gens = []
        for g in gens:
            self.extend_with(g)

    # chain machinery ----------------------------------------------------

    def _pick_base_point(self, g):
        for b in self.base_hint:
            if g(b) != b:
                return b
        for i in range(self.degree):
            if g(i) != i:
                return i
        raise AssertionError("identity has no moved point")

    def _strip(self, g):
        return self._strip_from(g, 0)

    def _strip_from(self, g, start):
        """Returns (residue, level) where level is the first failure depth."""
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            p = g(lvl.point)
            if p not in lvl.transversal:
                return g, i
            g = lvl.transversal[p].inv() * g
        return g, len(self.levels)

    def _place(self, residue, level):
        if level == len(self.levels):
            self.levels.append(_Level(self._pick_base_point(residue), self._id))
        self.levels[level].gens.append(residue)
        for lvl in self.levels[: level + 1]:
            lvl.dirty = True

    def extend_with(self, g):
        """Add a generator, updating the stabilizer chain to a verified state."""
        if not isinstance(g, Perm):
            g = Perm(g)
        if g.degree != self.degree:
            raise ValueError("degree mismatch")
        residue, level = self._strip(g)
        if residue.is_identity():
            return False
        self.gens.append(g)
        self._place(residue, level)
        self._complete()
        return True

    def _level_gens(self, i):
        """Strong generators fixing the base prefix before level i."""
        return [g for lvl in self.levels[i:] for g in lvl.gens]

    def _verify_level(self, i):
        """Rebuild orbit at level i and sift its Schreier generators.

        On the first missing strong generator, place it and return its level;
        return None when the level verifies clean.
        """
        lvl = self.levels[i]
        gens = self._level_gens(i)
        lvl.transversal = {lvl.point: self._id}
        lvl.trans_inv = {lvl.point: self._id}
        frontier = [lvl.point]
        k = 0
        while k < len(frontier):
            p = frontier[k]
            k += 1
            tp = lvl.transversal[p]
            for s in gens:
                q = s(p)
                if q not in lvl.transversal:
                    t = s * tp
                    lvl.transversal[q] = t
                    lvl.trans_inv[q] = t.inv()
                    frontier.append(q)
        for p in frontier:
            tp = lvl.transversal[p]
            for s in gens:
                u = lvl.trans_inv[s(p)] * (s * tp)
                if u.is_identity():
                    continue
                r, j = self._strip_from(u, i + 1)
                if not r.is_identity():
                    self._place(r, j)
                    return j
        lvl.dirty = False
        return None

    def _complete(self):
        """Bottom-up Schreier-Sims verification until every level is clean."""
        i = len(self.levels) - 1
        while i >= 0:
            if not self.levels[i].dirty:
                i -= 1
                continue
            j = self._verify_level(i)
            i = i - 1 if j is None else j

    # queries -------------------------------------------------------------

    def order(self):
        return prod(len(lvl.transversal) for lvl in self.levels) if self.levels else 1

    def __contains__(self, g):
        residue, _ = self._strip(g)
        return residue.is_identity()

    def base(self):
        return [lvl.point for lvl in self.levels]

    def validate(self):
        """BSGS self-check: every declared generator passes membership."""
        return all(g in self for g in self.gens)

    def random_element(self, rng):
        g = self._id
        for lvl in self.levels:
            p = rng.choice(list(lvl.transversal))
            g = g * lvl.transversal[p]
        return g

    def orbit(self, point):
        seen = {point}
        frontier = [point]
        while frontier:
            p = frontier.pop()
            for g in self.gens:
                q = g(p)
                if q not in seen:
                    seen.add(q)
                    frontier.append(q)
        return seen

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree

    def pointwise_stabilizer(self, points):
        """The pointwise stabilizer of `points` as a PermGroup.

        Requires the group to have been built with base_hint == points (the
        hint is then a base prefix, and the chain below it generates exactly
        the stabilizer).
        """
        depth = len(points)
        if [lvl.point for lvl in self.levels[:depth]] != list(points):
            raise ValueError("group must be built with base_hint == points")
        gens = [g for lvl in self.levels[depth:] for g in lvl.gens]
        sub = PermGroup(gens, degree=self.degree)
        expected = prod(len(l.transversal) for l in self.levels[depth:]) if self.levels[depth:] else 1
        assert sub.order() == expected
        return sub


def normal_closure(group: PermGroup, seeds, degree=None) -> PermGroup:
    """Normal closure of <seeds> in `group`."""
    n = degree or group.degree
    closure = PermGroup([s for s in seeds], degree=n)
    changed = True
    while changed:
        changed = False
        for h in list(closure.gens):
            for g in group.gens:
                c = g * h * g.inv()
                if c not in closure:
                    closure.extend_with(c)
                    changed = True
    return closure


def derived_subgroup(group: PermGroup) -> PermGroup:
    comms = []
    for a in group.gens:
        for b in group.gens:
            comms.append(a.inv() * b.inv() * a * b)
    comms = [c for c in comms if not c.is_identity()]
    if not comms:
        return PermGroup([], degree=group.degree)
    return normal_closure(group, comms)


def abelianization_order(group: PermGroup) -> int:
    d = derived_subgroup(group)
    return group.order() // d.order()


def minimal_block(gens, degree, a, b):
    """Finest block system of <gens> in which a and b share a block.

    Returns the partition as a sorted tuple of sorted tuples (Atkinson).
    """
    parent = list(range(degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        return True

    queue = [(a, b)]
    union(a, b)
    while queue:
        x, y = queue.pop()
        for g in gens:
            gx, gy = g(x), g(y)
            if union(gx, gy):
                queue.append((gx, gy))
    blocks = {}
    for i in range(degree):
        blocks.setdefault(find(i), []).append(i)
    return tuple(sorted(tuple(sorted(v)) for v in blocks.values()))


def block_systems_of_size(group: PermGroup, size: int):
    """All minimal block systems whose blocks have the given size."""
    out = []
    seen = set()
    for x in sorted(group.orbit(0) - {0}):
        system = minimal_block(group.gens, group.degree, 0, x)
        if system in seen:
            continue
        seen.add(system)
        if all(len(b) == size for b in system):
            out.append(system)
    return out


def action_on_blocks(gens, system):
    """Permutations induced on the blocks of a system."""
    index = {}
    for i, blk in enumerate(system):
        for p in blk:
            index[p] = i
    out = []
    for g in gens:
        img = [0] * len(system)
        for i, blk in enumerate(system):
            img[i] = index[g(blk[0])]
        out.append(Perm(img))
    return out
