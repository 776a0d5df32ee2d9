"""Graphs with directed darts, a fixed-point-free involution and a terminus
map, plus optional dart colours and vertex class labels.

A dart is an index; ``inv`` pairs each dart with its reverse and ``tau``
gives its head.  An undirected edge is a dart orbit under ``inv``; loops are
dart pairs with both termini equal and contribute 2 to the degree.
Multi-edges are simply repeated dart pairs, so the model is a multigraph.
"""

from __future__ import annotations

from collections import Counter, deque

from .errors import Disconnected, NotCayleyLike, SearchBoundExceeded
from .words import Alphabet, reduce as word_reduce


class ColouredGraph:

    def __init__(self):
        self.n = 0
        self.names = []          # optional per-vertex name (any hashable)
        self.classes = []        # optional per-vertex class label
        self.tau = []            # dart -> head vertex
        self.inv = []            # dart -> reverse dart
        self.colour = []         # dart -> colour string or None
        self.colour_inv = {}     # colour -> inverse colour (total on used colours)
        self._name_index = {}
        self.meta = {}

    # -- construction -------------------------------------------------------

    def add_vertex(self, name=None, cls=None):
        idx = self.n
        self.n += 1
        self.names.append(name)
        self.classes.append(cls)
        if name is not None:
            self._name_index[name] = idx
        return idx

    def vertex(self, name):
        return self._name_index[name]

    def declare_colour(self, colour, inverse=None):
        if colour is None:
            return
        inverse = colour if inverse is None else inverse
        self.colour_inv[colour] = inverse
        self.colour_inv[inverse] = colour

    def add_edge(self, u, v, colour=None, colour_rev=None):
        """Add one undirected edge as a dart pair.  Returns the forward dart."""
        if colour is not None and colour not in self.colour_inv:
            self.declare_colour(colour, colour_rev)
        if colour_rev is None:
            colour_rev = self.colour_inv.get(colour) if colour is not None else None
        d = len(self.tau)
        self.tau += [v, u]
        self.inv += [d + 1, d]
        self.colour += [colour, colour_rev]
        return d

    # -- basic queries -------------------------------------------------------

    @property
    def n_darts(self):
        return len(self.tau)

    @property
    def n_edges(self):
        return len(self.tau) // 2

    def src(self, d):
        return self.tau[self.inv[d]]

    def is_loop(self, d):
        return self.tau[d] == self.tau[self.inv[d]]

    def degree(self, v):
        return sum(1 for h in self.tau if h == v)

    def out_darts(self, v):
        """Darts leaving v (reverse darts of those arriving at v)."""
        return [self.inv[d] for d in range(self.n_darts) if self.tau[d] == v]

    def edges(self):
        """One canonical dart per undirected edge."""
        return [d for d in range(self.n_darts) if d < self.inv[d]]

    def edge_ends(self, d):
        return self.src(d), self.tau[d]

    def neighbours(self, v):
        return sorted({self.tau[d] for d in self.out_darts(v)})

    def is_regular(self):
        if self.n == 0:
            return True
        degs = {self.degree(v) for v in range(self.n)}
        return len(degs) == 1

    def is_connected(self):
        if self.n == 0:
            return True
        seen = {0}
        queue = deque([0])
        out = self._out_table()
        while queue:
            v = queue.popleft()
            for d in out[v]:
                w = self.tau[d]
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def _out_table(self):
        out = [[] for _ in range(self.n)]
        for d in range(self.n_darts):
            out[self.src(d)].append(d)
        return out

    def class_sizes(self):
        sizes = Counter()
        for c in self.classes:
            sizes[c] += 1
        return dict(sizes)

    def subgraph_edges(self, darts):
        """Subgraph on the same vertex set induced by the given canonical
        darts.  Each new edge remembers its origin in ``meta['origin']``."""
        sub = ColouredGraph()
        for v in range(self.n):
            sub.add_vertex(self.names[v], self.classes[v])
        sub.colour_inv = dict(self.colour_inv)
        origin = {}
        for d in darts:
            nd = sub.add_edge(self.src(d), self.tau[d], self.colour[d],
                              self.colour[self.inv[d]])
            origin[nd] = min(d, self.inv[d])
        sub.meta["origin"] = origin
        return sub

    def copy(self):
        g = self.subgraph_edges(self.edges())
        g.meta = dict(self.meta)
        g.meta.pop("origin", None)
        return g


# ---------------------------------------------------------------------------
# Cayley-like colourings, walks and word maps.


def cayley_like_witness(g):
    """Per-vertex colour -> outgoing dart table, or None if the colouring
    fails any of the three Cayley-likeness conditions."""
    colours = {c for c in g.colour if c is not None}
    if None in g.colour or not colours:
        return None
    for c in colours:
        if g.colour_inv.get(c) not in colours:
            return None
    table = [dict() for _ in range(g.n)]
    for d in range(g.n_darts):
        if g.colour[g.inv[d]] != g.colour_inv[g.colour[d]]:
            return None
        v = g.src(d)
        if g.colour[d] in table[v]:
            return None
        table[v][g.colour[d]] = d
    if any(len(t) != len(colours) for t in table):
        return None
    return table


class Walk:
    """Alternating vertex/dart sequence; stored as a start vertex plus darts."""

    def __init__(self, graph, start, darts=()):
        self.graph = graph
        self.start = start
        self.darts = tuple(darts)
        v = start
        for d in darts:
            if graph.src(d) != v:
                raise ValueError("darts do not chain into a walk")
            v = graph.tau[d]
        self.end = v

    def vertices(self):
        out = [self.start]
        for d in self.darts:
            out.append(self.graph.tau[d])
        return out

    def is_closed(self):
        return self.start == self.end

    def __eq__(self, other):
        return (isinstance(other, Walk) and self.graph is other.graph
                and self.start == other.start and self.darts == other.darts)

    def __len__(self):
        return len(self.darts)


def graph_alphabet(g):
    """Alphabet implied by the dart colours: self-inverse colours become
    involutive generators, inverse pairs contribute one free generator."""
    u_gens, i_gens, seen = [], [], set()
    for d in range(g.n_darts):
        c = g.colour[d]
        if c is None or c in seen:
            continue
        ci = g.colour_inv[c]
        seen.add(c)
        seen.add(ci)
        if ci == c:
            i_gens.append(c)
        else:
            u_gens.append(min(c, ci, key=lambda s: (len(s), s)))
    return Alphabet(u_gens, i_gens)


def _letter_for_colour(alphabet, g, colour):
    name = colour
    if name in alphabet.names:
        return alphabet.code(name)
    return alphabet.code(g.colour_inv[colour], -1)


def walk_word(g, walk, alphabet=None):
    """The reduced word read off a walk's dart colours."""
    witness = cayley_like_witness(g)
    if witness is None:
        raise NotCayleyLike("graph colouring is not Cayley-like")
    alphabet = alphabet or graph_alphabet(g)
    return word_reduce([_letter_for_colour(alphabet, g, g.colour[d])
                        for d in walk.darts], alphabet)


def dictated_walk(g, v, word):
    """Walk from v following the word's letters (first letter first)."""
    witness = cayley_like_witness(g)
    if witness is None:
        raise NotCayleyLike("graph colouring is not Cayley-like")
    alphabet = word.alphabet
    darts = []
    here = v
    for code in word.letters:
        colour = alphabet.colour_of(code)
        d = witness[here].get(colour)
        if d is None:
            raise NotCayleyLike(f"no outgoing dart coloured {colour!r} at {here}")
        darts.append(d)
        here = g.tau[d]
    return Walk(g, v, darts)


def spanning_tree(g, base):
    """BFS tree: returns (parent dart per vertex, BFS order).  Deterministic
    given dart numbering."""
    parent = [None] * g.n
    order = [base]
    seen = {base}
    out = g._out_table()
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for d in sorted(out[v]):
            w = g.tau[d]
            if w not in seen:
                seen.add(w)
                parent[w] = d
                order.append(w)
                queue.append(w)
    if len(order) != g.n:
        raise Disconnected("graph is not connected")
    return parent, order


def fundamental_cycle_words(g, base, alphabet=None):
    """Free generators of the image of the fundamental group at ``base``
    under the walk-to-word map: one word per non-tree edge."""
    witness = cayley_like_witness(g)
    if witness is None:
        raise NotCayleyLike("graph colouring is not Cayley-like")
    alphabet = alphabet or graph_alphabet(g)
    parent, _ = spanning_tree(g, base)

    path_letters = {base: []}

    def letters_to(v):
        if v not in path_letters:
            d = parent[v]
            path_letters[v] = letters_to(g.src(d)) + [
                _letter_for_colour(alphabet, g, g.colour[d])]
        return path_letters[v]

    tree_darts = {d for d in parent if d is not None}
    tree_darts |= {g.inv[d] for d in tree_darts}
    out = []
    for d in g.edges():
        if d in tree_darts:
            continue
        u, w = g.src(d), g.tau[d]
        letters = (letters_to(u) + [_letter_for_colour(alphabet, g, g.colour[d])]
                   + [alphabet.inverse_letter(c) for c in reversed(letters_to(w))])
        out.append(word_reduce(letters, alphabet))
    return out


# ---------------------------------------------------------------------------
# Isomorphism and automorphisms: exhaustive backtracking with degree and
# colour-profile pruning.  Complete at fixture scale (tens of vertices).


def _pair_profile(g, colour_key):
    """(u, v) -> multiset of dart colour keys from u to v."""
    prof = {}
    for d in range(g.n_darts):
        key = (g.src(d), g.tau[d])
        prof.setdefault(key, Counter())[colour_key(g.colour[d])] += 1
    return prof


def _colour_counts_compatible(cg, ch, colour_map):
    """Can the g-side colour multiset be mapped onto the h-side one, sending
    each g-colour into its allowed set?  Exact search over tiny multisets."""
    if sum(cg.values()) != sum(ch.values()):
        return False
    remaining = dict(ch)

    items = sorted(cg.items())

    def place(i):
        if i == len(items):
            return all(v == 0 for v in remaining.values())
        colour, count = items[i]
        allowed = [c for c in colour_map(colour) if remaining.get(c, 0) > 0]

        def distribute(k, idx):
            if k == 0:
                return place(i + 1)
            if idx >= len(allowed):
                return False
            c = allowed[idx]
            take_max = min(k, remaining.get(c, 0))
            for take in range(take_max, -1, -1):
                remaining[c] -= take
                if distribute(k - take, idx + 1):
                    remaining[c] += take
                    return True
                remaining[c] += take
            return False

        return distribute(count, 0)

    return place(0)


class _Matcher:
    """Backtracking search for graph maps g -> h commuting with tau and inv
    and compatible with colours/classes as requested."""

    def __init__(self, g, h, respect_colours=False, respect_classes=False,
                 colour_map=None):
        self.g, self.h = g, h
        self.respect_classes = respect_classes
        if colour_map is not None:
            self.colour_key_g = lambda c: c
            self.allowed = lambda c: colour_map.get(c, {c})
            self.dart_colour_ok = lambda gc, hc: hc in colour_map.get(gc, {gc})
        elif respect_colours:
            self.colour_key_g = lambda c: c
            self.allowed = lambda c: {c}
            self.dart_colour_ok = lambda gc, hc: gc == hc
        else:
            self.colour_key_g = lambda c: None
            self.allowed = lambda c: {None}
            self.dart_colour_ok = lambda gc, hc: True
        key_h = (lambda c: c) if (respect_colours or colour_map) else (lambda c: None)
        self.prof_g = _pair_profile(g, self.colour_key_g)
        self.prof_h = _pair_profile(h, key_h)
        self.deg_g = [g.degree(v) for v in range(g.n)]
        self.deg_h = [h.degree(v) for v in range(h.n)]
        self.order = self._vertex_order()

    def _vertex_order(self):
        g = self.g
        if g.n == 0:
            return []
        adj = [set() for _ in range(g.n)]
        for d in range(g.n_darts):
            adj[g.src(d)].add(g.tau[d])
        order, seen = [], set()
        for root in sorted(range(g.n), key=lambda v: -self.deg_g[v]):
            if root in seen:
                continue
            queue = deque([root])
            seen.add(root)
            while queue:
                v = queue.popleft()
                order.append(v)
                for w in sorted(adj[v]):
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return order

    def _feasible(self, v, w, mapping):
        g, h = self.g, self.h
        if self.deg_g[v] != self.deg_h[w]:
            return False
        if self.respect_classes and g.classes[v] != h.classes[w]:
            return False
        for u in range(g.n):
            img = mapping.get(u)
            if img is None:
                continue
            for a, b in (((v, u), (w, img)), ((u, v), (img, w))):
                cg = self.prof_g.get(a, Counter())
                ch = self.prof_h.get(b, Counter())
                if not _colour_counts_compatible(cg, ch, self.allowed):
                    return False
        return True

    def search(self, limit=None, fixed=None):
        """Yield complete vertex mappings; stop after ``limit`` if given."""
        g, h = self.g, self.h
        if g.n != h.n or g.n_edges != h.n_edges:
            return
        if sorted(self.deg_g) != sorted(self.deg_h):
            return
        mapping = dict(fixed or {})
        used = set(mapping.values())
        order = [v for v in self.order if v not in mapping]
        for v, w in (fixed or {}).items():
            if not self._feasible(v, w, {u: x for u, x in mapping.items() if u != v}):
                return
        results = []

        def extend(i):
            if limit is not None and len(results) >= limit:
                return
            if i == len(order):
                results.append(dict(mapping))
                return
            v = order[i]
            for w in range(h.n):
                if w in used:
                    continue
                if self._feasible(v, w, mapping):
                    mapping[v] = w
                    used.add(w)
                    extend(i + 1)
                    del mapping[v]
                    used.discard(w)
                if limit is not None and len(results) >= limit:
                    return

        extend(0)
        return results


def _dart_bijection(g, h, vmap, colour_ok):
    """Extend a vertex bijection to darts, respecting inv and colours.
    Parallel bundles are assigned by backtracking (bundles are tiny)."""
    by_ends_h = {}
    for e in range(h.n_darts):
        by_ends_h.setdefault((h.src(e), h.tau[e]), []).append(e)
    order = sorted(g.edges())
    dmap = {}
    used = set()

    def assign(i):
        if i == len(order):
            return True
        d = order[i]
        u, v = g.src(d), g.tau[d]
        for e in by_ends_h.get((vmap[u], vmap[v]), ()):
            if e in used or h.inv[e] in used:
                continue
            if not (colour_ok(g.colour[d], h.colour[e])
                    and colour_ok(g.colour[g.inv[d]], h.colour[h.inv[e]])):
                continue
            dmap[d] = e
            dmap[g.inv[d]] = h.inv[e]
            used.update((e, h.inv[e]))
            if assign(i + 1):
                return True
            used.difference_update((e, h.inv[e]))
            del dmap[d], dmap[g.inv[d]]
        return False

    return dict(dmap) if assign(0) else None


def isomorphic(g, h, respect_colours=False, respect_classes=False, colour_map=None):
    """A vertex/dart bijection witnessing isomorphism, or None (complete
    search, so None is a certificate at fixture scale)."""
    m = _Matcher(g, h, respect_colours, respect_classes, colour_map)
    found = m.search(limit=1)
    if not found:
        return None
    vmap = found[0]
    dmap = _dart_bijection(g, h, vmap, m.dart_colour_ok)
    if dmap is None:
        # Vertex-level match exists but dart multiplicities clash; keep
        # searching other vertex maps.
        for vmap in m.search() or []:
            dmap = _dart_bijection(g, h, vmap, m.dart_colour_ok)
            if dmap is not None:
                return vmap, dmap
        return None
    return vmap, dmap


AUTOMORPHISM_BOUND = 64


def automorphism_group(g, colour_mode="plain", bound=AUTOMORPHISM_BOUND):
    """Complete list of automorphisms as vertex-image tuples."""
    if g.n > bound:
        raise SearchBoundExceeded(f"{g.n} vertices exceeds the bound {bound}")
    if g.n == 0:
        return [()]
    respect = colour_mode == "colour_preserving"
    m = _Matcher(g, g, respect_colours=respect)
    sols = m.search()
    return sorted(tuple(s[v] for v in range(g.n)) for s in sols)


def colour_class_automorphisms(g):
    """Automorphisms preserving both dart colours and vertex class labels."""
    m = _Matcher(g, g, respect_colours=True, respect_classes=True)
    return sorted(tuple(s[v] for v in range(g.n)) for s in m.search())


def is_vertex_transitive(g, bound=AUTOMORPHISM_BOUND):
    auts = automorphism_group(g, bound=bound)
    orbit = {a[0] for a in auts}
    return len(orbit) == g.n


def _perm_mul(p, q):
    """Apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def mulclose(perms, cap=None):
    """Closure of a permutation set under composition; stops past ``cap``."""
    n = len(next(iter(perms)))
    ident = tuple(range(n))
    group = {ident}
    frontier = set(perms) - group
    group |= frontier
    while frontier:
        new = set()
        for p in frontier:
            for q in list(group):
                for r in (_perm_mul(p, q), _perm_mul(q, p)):
                    if r not in group:
                        new.add(r)
            if cap is not None and len(group) + len(new) > cap:
                return None
        group |= new
        frontier = new
    return group


def is_cayley(g, bound=AUTOMORPHISM_BOUND):
    """A subgroup of Aut(g) acting regularly on the vertices, as a generator
    list, or None after a complete search of semiregular subgroups."""
    auts = automorphism_group(g, bound=bound)
    n = g.n
    ident = tuple(range(n))

    def fixed_point_free(p):
        return all(p[i] != i for i in range(n))

    elements = [p for p in auts if p == ident or fixed_point_free(p)]

    def semiregular(group):
        return all(p == ident or fixed_point_free(p) for p in group)

    seen = set()
    stack = [(frozenset([ident]), ())]
    while stack:
        group, gens = stack.pop()
        if group in seen:
            continue
        seen.add(group)
        if len(group) == n:
            orbit = {p[0] for p in group}
            if len(orbit) == n:
                return list(gens)
            continue
        for p in elements:
            if p in group:
                continue
            closed = mulclose(group | {p}, cap=n)
            if closed is None:
                continue
            closed = frozenset(closed)
            if closed in seen or not semiregular(closed):
                continue
            if n % len(closed) != 0:
                continue
            stack.append((closed, gens + (p,)))
    return None


# ---------------------------------------------------------------------------
# Text exchange format and DOT export.


def write_graph(g):
    lines = [f"vertices {g.n}"]
    seen = set()
    for c in sorted(k for k in g.colour_inv if k is not None):
        ci = g.colour_inv[c]
        if c in seen:
            continue
        seen.add(c)
        seen.add(ci)
        if ci != c:
            lines.append(f"colour {c} {ci}")
    for v in range(g.n):
        if g.classes[v] is not None:
            lines.append(f"class {v} {g.classes[v]}")
    for d in sorted(g.edges()):
        colour = g.colour[d]
        tail = f" {colour}" if colour is not None else ""
        lines.append(f"edge {g.src(d)} {g.tau[d]}{tail}")
    return "\n".join(lines) + "\n"


def read_graph(text):
    g = ColouredGraph()
    declared = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            declared = int(parts[1])
            for _ in range(declared):
                g.add_vertex()
        elif parts[0] == "colour":
            g.declare_colour(parts[1], parts[2] if len(parts) > 2 else None)
        elif parts[0] == "class":
            g.classes[int(parts[1])] = parts[2]
        elif parts[0] == "edge":
            u, v = int(parts[1]), int(parts[2])
            colour = parts[3] if len(parts) > 3 else None
            g.add_edge(u, v, colour)
        else:
            raise ValueError(f"unknown graph line {line!r}")
    return g


_DOT_PALETTE = ["red", "blue", "forestgreen", "orange", "purple", "brown",
                "deeppink", "turquoise", "gray40", "olive"]


def to_dot(g):
    colours = sorted({c for c in g.colour if c is not None})
    pen = {}
    for c in colours:
        ci = g.colour_inv[c]
        key = min(c, ci)
        if key not in pen:
            pen[key] = _DOT_PALETTE[len(pen) % len(_DOT_PALETTE)]
        pen[c] = pen[key]
    lines = ["graph {"]
    for v in range(g.n):
        label = g.names[v] if g.names[v] is not None else v
        shape = ""
        if g.classes[v] is not None:
            shape = f' xlabel="{g.classes[v]}"'
        lines.append(f'  {v} [label="{label}"{shape}];')
    for d in sorted(g.edges()):
        c = g.colour[d]
        attr = f' [color={pen[c]} label="{c}"]' if c is not None else ""
        lines.append(f"  {g.src(d)} -- {g.tau[d]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
