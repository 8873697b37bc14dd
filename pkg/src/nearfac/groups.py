"""Finite group arithmetic on integer-coded elements.

Every supported group lives on the code set ``0 .. order-1`` with the identity
at code 0.  Encodings:

* ``Z:m``      -- the residue itself.
* ``D:n``      -- ``e*n + h`` encodes ``a^e b^h`` (rotations first, then
                  reflections); requires n > 2.
* ``Z2xZ:n``   -- ``i*n + j`` encodes ``(i, j)`` in Z_2 x Z_n.
* ``D5xC5``    -- ``10*d + k`` where ``d`` is the D_5 code of the first
                  component and ``k`` the C_5 exponent of the second.
* ``C5sqC2``   -- ``25*e + 5*i + j`` encodes ``a^e b^i c^j`` in the
                  order-50 group <a,b,c | a^2=b^5=c^5=e, aba=b^-1,
                  aca=c^-1, bc=cb>.

Ascending code order is the element order used for every lexicographic
comparison elsewhere in the package.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

from .errors import CapabilityError, DomainError


def units(n: int) -> list[int]:
    return [r for r in range(1, n) if math.gcd(r, n) == 1]


@dataclass(frozen=True)
class Automorphism:
    """A group automorphism, stored as its full permutation table.

    The table is the ground truth; parametric descriptions (dihedral f_{i,j},
    cyclic unit multipliers) are recovered from it on demand.
    """

    group: "Group"
    table: tuple[int, ...]

    def __call__(self, code: int) -> int:
        return self.table[code]

    def apply_set(self, codes) -> tuple[int, ...]:
        return tuple(sorted(self.table[c] for c in codes))

    @property
    def is_identity(self) -> bool:
        return all(i == c for i, c in enumerate(self.table))

    @property
    def label(self) -> str:
        return self.group.aut_label(self)

    def __repr__(self):
        return f"Automorphism({self.group.name}, {self.label})"


def compose(f: Automorphism, f2: Automorphism) -> Automorphism:
    """Composite map "apply f first, then f2".

    For dihedral parametric forms this realizes
    f_{i,j} o f_{i',j'} = f_{i*i', j' + j*i'}; the permutation-table
    composition is authoritative and the parametric shortcut is only a
    label.
    """
    if f.group is not f2.group and f.group.name != f2.group.name:
        raise DomainError("cannot compose automorphisms of different groups")
    t2 = f2.table
    return Automorphism(f.group, tuple(t2[x] for x in f.table))


def aut_inverse(f: Automorphism) -> Automorphism:
    inv = [0] * len(f.table)
    for x, y in enumerate(f.table):
        inv[y] = x
    return Automorphism(f.group, tuple(inv))


def dihedral_compose_params(p1: tuple[int, int], p2: tuple[int, int], n: int) -> tuple[int, int]:
    """Parameters of f_{i,j} applied first, then f_{i',j'}: (i*i', j' + j*i')."""
    i1, j1 = p1
    i2, j2 = p2
    return (i1 * i2) % n, (j2 + j1 * i2) % n


def dihedral_inverse_params(p: tuple[int, int], n: int) -> tuple[int, int]:
    """Parameters of f_{i,j}^{-1} = f_{i^-1, -i^-1 j}."""
    i, j = p
    iinv = pow(i, -1, n)
    return iinv, (-iinv * j) % n


class Group:
    """Base class; subclasses define mul/inv formulas and automorphisms."""

    name: str
    order: int
    abelian: bool

    def check_code(self, x: int) -> int:
        if not isinstance(x, int) or not 0 <= x < self.order:
            raise DomainError(f"invalid element code {x!r} for group {self.name}")
        return x

    def mul(self, x: int, y: int) -> int:
        raise NotImplementedError

    def inv(self, x: int) -> int:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        n = self.order
        return tuple(tuple(self.mul(x, y) for y in range(n)) for x in range(n))

    @cached_property
    def inv_table(self) -> tuple[int, ...]:
        return tuple(self.inv(x) for x in self.elements())

    def element_order(self, x: int) -> int:
        self.check_code(x)
        k, y = 1, x
        while y != 0:
            y = self.mul(y, x)
            k += 1
        return k

    def automorphisms(self) -> Iterator[Automorphism]:
        raise CapabilityError(f"automorphism enumeration unsupported for {self.name}")

    @cached_property
    def aut_list(self) -> tuple[Automorphism, ...]:
        return tuple(self.automorphisms())

    @cached_property
    def identity_aut(self) -> Automorphism:
        return Automorphism(self, tuple(range(self.order)))

    @cached_property
    def aut_orbit_min(self) -> tuple[int, ...]:
        """For each code, the smallest code in its Aut(G)-orbit."""
        mins = list(range(self.order))
        for f in self.aut_list:
            for c, fc in enumerate(f.table):
                if fc < mins[c]:
                    mins[c] = fc
        # iterate until stable (orbits may need chaining)
        changed = True
        while changed:
            changed = False
            for f in self.aut_list:
                for c in range(self.order):
                    m = mins[f.table[c]]
                    if m < mins[c]:
                        mins[c] = m
                        changed = True
        return tuple(mins)

    def aut_label(self, f: Automorphism) -> str:
        return f"perm{f.table}"

    def element_name(self, code: int) -> str:
        raise NotImplementedError

    def parse_element(self, text: str) -> int:
        raise NotImplementedError

    def __repr__(self):
        return f"<group {self.name}>"

    def __eq__(self, other):
        return isinstance(other, Group) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __reduce__(self):
        return (group_from_name, (self.name,))


class CyclicGroup(Group):
    def __init__(self, n: int):
        if n < 1:
            raise DomainError("Z:n requires n >= 1")
        self.n = n
        self.order = n
        self.name = f"Z:{n}"
        self.abelian = True

    def mul(self, x, y):
        return (x + y) % self.n

    def inv(self, x):
        return (-x) % self.n

    def aut(self, r: int) -> Automorphism:
        """x -> r*x; requires gcd(r, n) = 1."""
        r %= self.n
        if math.gcd(r, self.n) != 1:
            raise DomainError(f"x->{r}x needs gcd(r,{self.n}) = 1")
        return Automorphism(self, tuple((r * x) % self.n for x in range(self.n)))

    def automorphisms(self):
        for r in units(self.n):
            yield self.aut(r)

    def unit_of(self, f: Automorphism) -> int:
        return f.table[1] if self.n > 1 else 1

    def aut_label(self, f):
        return f"x->{self.unit_of(f)}x"

    def element_name(self, code):
        self.check_code(code)
        return str(code)

    def parse_element(self, text):
        try:
            v = int(text.strip())
        except ValueError:
            raise DomainError(f"bad element {text!r} for {self.name}") from None
        return v % self.n


_DIHEDRAL_RE = re.compile(r"^(a)?(?:b(?:\^?(\d+))?)?$")


def _parse_dihedral_word(text: str) -> tuple[int, int] | None:
    """Parse 'e', 'a', 'b^3', 'ab3', 'a*b^3', 'a b^0' -> (refl, rot) or None."""
    s = text.strip().replace("*", "").replace(" ", "")
    if s in ("e", "1", ""):
        return (0, 0)
    m = _DIHEDRAL_RE.match(s)
    if not m:
        return None
    e = 1 if m.group(1) else 0
    if "b" in s:
        h = int(m.group(2)) if m.group(2) is not None else 1
    else:
        h = 0
    return (e, h)


def _dihedral_word_name(e: int, h: int) -> str:
    if e == 0:
        return "e" if h == 0 else f"b^{h}"
    return "a" if h == 0 else f"ab^{h}"


class DihedralGroup(Group):
    def __init__(self, n: int):
        if n <= 2:
            raise DomainError("D:n requires n > 2")
        self.n = n
        self.order = 2 * n
        self.name = f"D:{n}"
        self.abelian = False

    def split(self, code: int) -> tuple[int, int]:
        return code // self.n, code % self.n

    def join(self, e: int, h: int) -> int:
        return (e % 2) * self.n + h % self.n

    def mul(self, x, y):
        n = self.n
        e1, h1 = divmod(x, n)
        e2, h2 = divmod(y, n)
        if e2 == 0:
            return e1 * n + (h1 + h2) % n
        return (1 - e1) * n + (h2 - h1) % n

    def inv(self, x):
        e, h = divmod(x, self.n)
        if e == 1:
            return x
        return (-h) % self.n

    def is_rotation(self, code: int) -> bool:
        return code < self.n

    def aut(self, i: int, j: int) -> Automorphism:
        """f_{i,j}: b -> b^i, a -> a b^j; requires gcd(i, n) = 1."""
        n = self.n
        i %= n
        j %= n
        if math.gcd(i, n) != 1:
            raise DomainError(f"f_({i},{j}) needs gcd(i,{n}) = 1")
        table = [0] * (2 * n)
        for h in range(n):
            table[h] = (i * h) % n
            table[n + h] = n + (j + i * h) % n
        return Automorphism(self, tuple(table))

    def aut_params(self, f: Automorphism) -> tuple[int, int]:
        """(i, j) with f = f_{i,j}, read off the images of b and a."""
        return f.table[1], f.table[self.n] - self.n

    def automorphisms(self):
        for i in units(self.n):
            for j in range(self.n):
                yield self.aut(i, j)

    def aut_label(self, f):
        i, j = self.aut_params(f)
        return f"f_{{{i},{j}}}"

    def element_name(self, code):
        self.check_code(code)
        e, h = self.split(code)
        return _dihedral_word_name(e, h)

    def parse_element(self, text):
        w = _parse_dihedral_word(text)
        if w is None:
            raise DomainError(f"bad element {text!r} for {self.name}")
        return self.join(*w)


class DirectZ2Z(Group):
    """Z_2 x Z_n, the intermediate group of the cyclic-to-dihedral relabeling."""

    def __init__(self, n: int):
        if n < 1:
            raise DomainError("Z2xZ:n requires n >= 1")
        self.n = n
        self.order = 2 * n
        self.name = f"Z2xZ:{n}"
        self.abelian = True

    def mul(self, x, y):
        n = self.n
        i1, j1 = divmod(x, n)
        i2, j2 = divmod(y, n)
        return ((i1 + i2) % 2) * n + (j1 + j2) % n

    def inv(self, x):
        i, j = divmod(x, self.n)
        return i * self.n + (-j) % self.n

    def automorphisms(self):
        if self.n % 2 == 0:
            raise CapabilityError("Z2xZ:n automorphisms implemented only for odd n")
        for r in units(self.n):
            yield Automorphism(
                self,
                tuple((x // self.n) * self.n + (r * (x % self.n)) % self.n for x in range(self.order)),
            )

    def aut_label(self, f):
        return f"(i,j)->(i,{f.table[1]}j)"

    def element_name(self, code):
        self.check_code(code)
        i, j = divmod(code, self.n)
        return f"({i}, {j})"

    def parse_element(self, text):
        s = text.strip().strip("()")
        try:
            i, j = (int(p) for p in s.split(","))
        except ValueError:
            raise DomainError(f"bad element {text!r} for {self.name}") from None
        if i not in (0, 1) or not 0 <= j < self.n:
            raise DomainError(f"bad element {text!r} for {self.name}")
        return i * self.n + j


class DirectD5C5(Group):
    """D_5 x C_5, order 50; elements are pairs (a^e b^h, c^k)."""

    def __init__(self):
        self.d5 = DihedralGroup(5)
        self.order = 50
        self.name = "D5xC5"
        self.abelian = False

    def mul(self, x, y):
        d1, k1 = divmod(x, 5)
        d2, k2 = divmod(y, 5)
        return 5 * self.d5.mul(d1, d2) + (k1 + k2) % 5

    def inv(self, x):
        d, k = divmod(x, 5)
        return 5 * self.d5.inv(d) + (-k) % 5

    def aut(self, i: int, j: int, r: int) -> Automorphism:
        """(f_{i,j} on the dihedral part, c -> c^r on the cyclic part)."""
        fd = self.d5.aut(i, j)
        if r % 5 == 0:
            raise DomainError("cyclic part needs a unit r mod 5")
        return Automorphism(
            self, tuple(5 * fd.table[x // 5] + (r * (x % 5)) % 5 for x in range(50))
        )

    def automorphisms(self):
        for i in units(5):
            for j in range(5):
                for r in units(5):
                    yield self.aut(i, j, r)

    def aut_label(self, f):
        fd_img = [f.table[5 * d] // 5 for d in range(10)]
        i, j = fd_img[1], fd_img[5] - 5
        r = f.table[1] % 5
        return f"(f_{{{i},{j}}}, x->x^{r})"

    def element_name(self, code):
        self.check_code(code)
        d, k = divmod(code, 5)
        dname = self.d5.element_name(d)
        cname = "e" if k == 0 else ("c" if k == 1 else f"c^{k}")
        return f"({dname}, {cname})"

    def parse_element(self, text):
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise DomainError(f"bad element {text!r} for {self.name}")
        parts = s[1:-1].split(",")
        if len(parts) != 2:
            raise DomainError(f"bad element {text!r} for {self.name}")
        d = self.d5.parse_element(parts[0])
        cs = parts[1].strip().replace("*", "").replace(" ", "").replace("^", "")
        if cs in ("e", "1", ""):
            k = 0
        elif cs == "c":
            k = 1
        elif cs.startswith("c") and cs[1:].isdigit():
            k = int(cs[1:]) % 5
        else:
            raise DomainError(f"bad element {text!r} for {self.name}")
        return 5 * d + k


_MONOMIAL_RE = re.compile(r"^(a)?(?:b\^?(\d+)|b)?(?:c\^?(\d+)|c)?$")


class SemidirectC5sqC2(Group):
    """The order-50 group <a,b,c | a^2=b^5=c^5=e, aba=b^-1, aca=c^-1, bc=cb>.

    Multiplication is by normal-form rewriting a^e b^i c^j; conjugation by a
    inverts both b and c.
    """

    def __init__(self):
        self.order = 50
        self.name = "C5sqC2"
        self.abelian = False

    def split(self, code: int) -> tuple[int, int, int]:
        e, r = divmod(code, 25)
        i, j = divmod(r, 5)
        return e, i, j

    def join(self, e: int, i: int, j: int) -> int:
        return (e % 2) * 25 + (i % 5) * 5 + j % 5

    def mul(self, x, y):
        e1, i1, j1 = self.split(x)
        e2, i2, j2 = self.split(y)
        if e2 == 0:
            return self.join(e1, i1 + i2, j1 + j2)
        return self.join(1 - e1, i2 - i1, j2 - j1)

    def inv(self, x):
        e, i, j = self.split(x)
        if e == 1:
            return x
        return self.join(0, -i, -j)

    def aut_from_images(self, img_a: int, img_b: int, img_c: int) -> Automorphism:
        """Extend generator images to a full table; validated as a bijective
        homomorphism before being returned."""
        pow_b = [0]
        pow_c = [0]
        for _ in range(4):
            pow_b.append(self.mul(pow_b[-1], img_b))
            pow_c.append(self.mul(pow_c[-1], img_c))
        table = []
        for code in range(50):
            e, i, j = self.split(code)
            v = self.mul(self.mul(img_a if e else 0, pow_b[i]), pow_c[j])
            table.append(v)
        if len(set(table)) != 50:
            raise DomainError("generator images do not extend to a bijection")
        f = Automorphism(self, tuple(table))
        for x in range(50):
            for y in range(50):
                if f.table[self.mul(x, y)] != self.mul(f.table[x], f.table[y]):
                    raise DomainError("generator images do not define a homomorphism")
        return f

    @cached_property
    def aut_generators(self) -> dict[str, Automorphism]:
        """The four published generators w, x, y, z of Aut(G).

        y is a -> ab (an order-2 image; the bare 'a -> b' variant is not
        order-preserving and cannot be an automorphism).
        """
        a, b, c = self.join(1, 0, 0), self.join(0, 1, 0), self.join(0, 0, 1)
        return {
            "w": self.aut_from_images(a, self.join(0, 4, 4), b),
            "x": self.aut_from_images(a, self.join(0, 2, 0), c),
            "y": self.aut_from_images(self.mul(a, b), b, c),
            "z": self.aut_from_images(self.mul(a, c), b, c),
        }

    def automorphisms(self):
        return iter(self.aut_closure)

    @cached_property
    def aut_closure(self) -> tuple[Automorphism, ...]:
        """BFS closure of {w, x, y, z} under composition."""
        gens = [f.table for f in self.aut_generators.values()]
        identity = tuple(range(50))
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for t in frontier:
                for g in gens:
                    c = tuple(g[v] for v in t)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return tuple(Automorphism(self, t) for t in sorted(seen))

    def element_name(self, code):
        self.check_code(code)
        e, i, j = self.split(code)
        if e == 0 and i == 0 and j == 0:
            return "e"
        parts = []
        if e:
            parts.append("a")
        if i:
            parts.append("b" if i == 1 else f"b^{i}")
        if j:
            parts.append("c" if j == 1 else f"c^{j}")
        return "".join(parts)

    def parse_element(self, text):
        s = text.strip().replace("*", "").replace(" ", "")
        if s in ("e", "1", ""):
            return 0
        m = _MONOMIAL_RE.match(s)
        if not m:
            raise DomainError(f"bad element {text!r} for {self.name}")
        e = 1 if m.group(1) else 0
        i = int(m.group(2)) if m.group(2) else (1 if "b" in s else 0)
        j = int(m.group(3)) if m.group(3) else (1 if "c" in s else 0)
        return self.join(e, i, j)


@lru_cache(maxsize=None)
def group_from_name(name: str) -> Group:
    """Factory for the descriptor grammar: Z:16, D:8, Z2xZ:5, D5xC5, C5sqC2."""
    name = name.strip()
    if name == "D5xC5":
        return DirectD5C5()
    if name == "C5sqC2":
        return SemidirectC5sqC2()
    m = re.match(r"^(Z2xZ|Z|D):(\d+)$", name)
    if not m:
        raise DomainError(f"unknown group descriptor {name!r}")
    fam, n = m.group(1), int(m.group(2))
    if fam == "Z":
        return CyclicGroup(n)
    if fam == "D":
        return DihedralGroup(n)
    return DirectZ2Z(n)


def cyclic(n: int) -> CyclicGroup:
    return group_from_name(f"Z:{n}")


def dihedral(n: int) -> DihedralGroup:
    return group_from_name(f"D:{n}")


def direct_z2z(n: int) -> DirectZ2Z:
    return group_from_name(f"Z2xZ:{n}")
