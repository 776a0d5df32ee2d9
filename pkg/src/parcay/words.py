"""Words over a generator alphabet with designated involutive letters.

A letter is a signed integer code: ``+(i+1)`` / ``-(i+1)`` stand for the
i-th generator and its formal inverse.  Involutive generators are their own
inverses and never carry a negative code in normal form.  Normal form also
forbids adjacent cancelling pairs, so equal words are equal tuples, which
keeps relator scanning cheap.
"""

from __future__ import annotations

from .errors import UnknownClass, UnknownGenerator, WordSyntaxError


class Alphabet:
    """Ordered generator names split into free (``u_gens``) and involutive
    (``i_gens``) kinds."""

    def __init__(self, u_gens=(), i_gens=()):
        self.u_gens = tuple(u_gens)
        self.i_gens = tuple(i_gens)
        self.names = self.u_gens + self.i_gens
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be pairwise distinct")
        self._code = {name: i + 1 for i, name in enumerate(self.names)}
        self._n_u = len(self.u_gens)

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, Alphabet)
                and self.u_gens == other.u_gens and self.i_gens == other.i_gens)

    def __hash__(self):
        return hash((self.u_gens, self.i_gens))

    def __repr__(self):
        return f"Alphabet(u_gens={self.u_gens!r}, i_gens={self.i_gens!r})"

    def code(self, name, sign=1):
        try:
            c = self._code[name]
        except KeyError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None
        return c if sign >= 0 else -c

    def is_involution(self, code):
        return abs(code) > self._n_u

    def name_of(self, code):
        return self.names[abs(code) - 1]

    def normalize_letter(self, code):
        """Involutive letters always carry positive sign."""
        return abs(code) if self.is_involution(code) else code

    def inverse_letter(self, code):
        return abs(code) if self.is_involution(code) else -code

    def letters(self):
        """All distinct letter codes: u-gens signed both ways, i-gens once."""
        out = [i + 1 for i in range(self._n_u)]
        out += [-(i + 1) for i in range(self._n_u)]
        out += [i + 1 for i in range(self._n_u, len(self.names))]
        return out

    # Colour strings are how letters appear on graph darts and in files.
    def colour_of(self, code):
        name = self.name_of(code)
        return name if code > 0 or self.is_involution(code) else name + "^-1"

    def letter_of_colour(self, colour):
        if colour.endswith("^-1"):
            return self.code(colour[:-3], -1)
        return self.code(colour)

    def colour_inverse_table(self):
        """Map colour string -> inverse colour string, for graph building."""
        table = {}
        for code in self.letters():
            table[self.colour_of(code)] = self.colour_of(self.inverse_letter(code))
        return table


def reduce(raw, alphabet):
    """Normal form of a raw letter sequence: free cancellation plus s*s = 1
    for involutive s.  Idempotent."""
    stack = []
    for code in raw:
        if code == 0 or abs(code) > len(alphabet.names):
            raise UnknownGenerator(f"letter code {code} outside alphabet")
        code = alphabet.normalize_letter(code)
        if stack and stack[-1] == alphabet.inverse_letter(code):
            stack.pop()
        else:
            stack.append(code)
    return Word(alphabet, tuple(stack), _reduced=True)


class Word:
    """An element of the free product generated by the alphabet, stored in
    normal form."""

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet, letters=(), _reduced=False):
        if not _reduced:
            letters = reduce(letters, alphabet).letters
        self.alphabet = alphabet
        self.letters = tuple(letters)

    @classmethod
    def from_pairs(cls, alphabet, pairs):
        """Build from (name, sign) pairs."""
        return reduce([alphabet.code(n, s) for n, s in pairs], alphabet)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return (isinstance(other, Word) and self.letters == other.letters
                and self.alphabet == other.alphabet)

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        return reduce(self.letters + other.letters, self.alphabet)

    def __pow__(self, n):
        base = self if n >= 0 else self.inverse()
        return reduce(base.letters * abs(n), self.alphabet)

    def inverse(self):
        inv = self.alphabet.inverse_letter
        return Word(self.alphabet, tuple(inv(c) for c in reversed(self.letters)),
                    _reduced=True)

    def pairs(self):
        return [(self.alphabet.name_of(c), 1 if c > 0 else -1) for c in self.letters]

    def __str__(self):
        if not self.letters:
            return "1"
        out = []
        i = 0
        while i < len(self.letters):
            c = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == c:
                j += 1
            name = self.alphabet.name_of(c)
            exp = (j - i) if c > 0 else -(j - i)
            out.append(name if exp == 1 else f"{name}^{exp}")
            i = j
        return " ".join(out)

    def __repr__(self):
        return f"Word({self})"


def invert(word):
    return word.inverse()


def epsilon(alphabet):
    return Word(alphabet, (), _reduced=True)


# ---------------------------------------------------------------------------
# Word literals: juxtaposed names, ^k exponents, parenthesised subwords.

def _lex_names(run, alphabet, pos):
    """Split a run of name characters into known generator names, longest
    match first; single characters must then all be generators."""
    out = []
    i = 0
    names = sorted(alphabet.names, key=len, reverse=True)
    while i < len(run):
        for name in names:
            if run.startswith(name, i):
                out.append(name)
                i += len(name)
                break
        else:
            raise WordSyntaxError(f"unknown generator in {run!r}", pos + i)
    return out


def parse_word(text, alphabet):
    """Parse a word literal like ``a^5``, ``a b a^2 b`` or ``(ab)^5``."""
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_int():
        nonlocal pos
        start = pos
        if pos < n and text[pos] in "+-":
            pos += 1
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start or text[start:pos] in ("+", "-"):
            raise WordSyntaxError("expected an integer exponent", pos)
        return int(text[start:pos])

    def parse_factors(closing):
        nonlocal pos
        letters = []
        while True:
            skip_ws()
            if pos >= n or text[pos] == closing:
                return letters
            ch = text[pos]
            if ch == "(":
                pos += 1
                sub = parse_factors(")")
                if pos >= n or text[pos] != ")":
                    raise WordSyntaxError("unbalanced parenthesis", pos)
                pos += 1
            elif ch.isalnum() or ch == "_":
                start = pos
                while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                    pos += 1
                run = text[start:pos]
                sub = [alphabet.code(name) for name in _lex_names(run, alphabet, start)]
            else:
                raise WordSyntaxError(f"unexpected character {ch!r}", pos)
            skip_ws()
            if pos < n and text[pos] == "^":
                pos += 1
                skip_ws()
                k = parse_int()
                if k < 0:
                    sub = [alphabet.inverse_letter(c) for c in reversed(sub)]
                    k = -k
                sub = sub * k
            letters.extend(sub)

    letters = parse_factors(None)
    if pos < n:
        raise WordSyntaxError(f"unexpected character {text[pos]!r}", pos)
    return reduce(letters, alphabet)


# ---------------------------------------------------------------------------
# Class actions.

class ClassAction:
    """A permutation of the class set for each generator, acting on classes.

    A word acts by applying its letters left to right, matching the order in
    which a dictated walk traverses its edges: the first letter moves first.
    Consequently ``apply(vw, x) == apply(w, apply(v, x))``.
    """

    def __init__(self, alphabet, classes, images):
        """``images[name]`` maps each class to its image under the generator."""
        self.alphabet = alphabet
        self.classes = tuple(classes)
        class_set = set(self.classes)
        if len(class_set) != len(self.classes):
            raise ValueError("class names must be pairwise distinct")
        self._fwd = {}
        self._bwd = {}
        for name in alphabet.names:
            table = dict(images[name])
            if set(table) != class_set or set(table.values()) != class_set:
                raise ValueError(f"image table for {name!r} is not a permutation "
                                 f"of the class set")
            code = alphabet.code(name)
            self._fwd[code] = table
            self._bwd[code] = {v: k for k, v in table.items()}

    def image(self, code, x):
        table = self._fwd if code > 0 else self._bwd
        try:
            return table[abs(code)][x]
        except KeyError:
            raise UnknownClass(f"unknown class {x!r}") from None

    def table(self, name):
        return dict(self._fwd[self.alphabet.code(name)])

    def is_fixed_point_free_involution(self, name):
        t = self._fwd[self.alphabet.code(name)]
        return all(t[x] != x and t[t[x]] == x for x in self.classes)

    def is_transitive(self):
        if not self.classes:
            return False
        seen = {self.classes[0]}
        stack = [self.classes[0]]
        while stack:
            x = stack.pop()
            for code in self._fwd:
                for y in (self._fwd[code][x], self._bwd[code][x]):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        return len(seen) == len(self.classes)


def apply_action(action, word, x):
    """Image of class ``x`` under ``word``, letters applied left to right."""
    if x not in action.classes:
        raise UnknownClass(f"unknown class {x!r}")
    letters = word.letters if isinstance(word, Word) else word
    for code in letters:
        x = action.image(code, x)
    return x


def in_stabilizer(action, word, x):
    return apply_action(action, word, x) == x
