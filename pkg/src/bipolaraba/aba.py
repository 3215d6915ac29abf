"""Assumption-based argumentation without the flatness restriction.

Assumptions may occur in rule heads, so a set of assumptions is not
automatically closed under derivation. All semantics below therefore work
with closed conflict-free sets and with the closure-aware notion of defense.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import CapExceeded, NotAnAssumption, ParseError, TooLarge

ENUM_LIMIT = 24
ARGUMENT_CAP = 5000

SEMANTICS = ("cf", "ad", "co", "gr", "pr", "stb")
DEFENSE_MODES = ("closed-sets", "attacker-closure")


@dataclass(frozen=True)
class Argument:
    """A deduction, recorded as its leaf assumptions plus the conclusion.

    Two derivation trees with the same leaves and conclusion count as the
    same argument.
    """

    support: frozenset
    conclusion: str

    def __str__(self):
        inner = ",".join(sorted(self.support))
        return "({%s},%s)" % (inner, self.conclusion)


class AbaFramework:
    """An ABA framework over named atoms.

    atoms: all sentence names, in a fixed order.
    assumptions: the defeasible atoms (kept in atom order).
    contrary: maps every assumption to some atom.
    rules: (head, body) pairs, the body being a collection of atoms.
    """

    def __init__(self, atoms, assumptions, contrary, rules):
        self.atoms = list(atoms)
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("duplicate atom names")
        self._atom_ix = {p: i for i, p in enumerate(self.atoms)}
        asm = set(assumptions)
        for a in asm:
            if a not in self._atom_ix:
                raise ValueError(f"assumption {a!r} is not an atom")
        self.assumptions = [p for p in self.atoms if p in asm]
        self.contrary = dict(contrary)
        for a in self.assumptions:
            if a not in self.contrary:
                raise ValueError(f"assumption {a!r} has no contrary")
            if self.contrary[a] not in self._atom_ix:
                raise ValueError(f"contrary of {a!r} is not an atom")
        for a in self.contrary:
            if a not in asm:
                raise NotAnAssumption(f"{a!r} has a contrary but is not an assumption")
        self.rules = []
        for head, body in rules:
            if head not in self._atom_ix:
                raise ValueError(f"rule head {head!r} is not an atom")
            body = tuple(body)
            for b in body:
                if b not in self._atom_ix:
                    raise ValueError(f"rule body atom {b!r} is not an atom")
            self.rules.append((head, body))

        # integer encodings used by every operation below
        self._asm_ix = {a: i for i, a in enumerate(self.assumptions)}
        self._asm_atom_bit = [1 << self._atom_ix[a] for a in self.assumptions]
        self._contrary_bit = [1 << self._atom_ix[self.contrary[a]]
                              for a in self.assumptions]
        self._rules_ix = []
        for head, body in self.rules:
            bmask = 0
            for b in body:
                bmask |= 1 << self._atom_ix[b]
            self._rules_ix.append((1 << self._atom_ix[head], bmask))
        self._th_memo = {}
        self._arg_memo = {}

    def __eq__(self, other):
        if not isinstance(other, AbaFramework):
            return NotImplemented
        return (self.atoms == other.atoms
                and self.assumptions == other.assumptions
                and self.contrary == other.contrary
                and self.rules == other.rules)

    def __repr__(self):
        return (f"AbaFramework({len(self.atoms)} atoms, "
                f"{len(self.assumptions)} assumptions, {len(self.rules)} rules)")

    # mask helpers ----------------------------------------------------

    def _asm_mask(self, names):
        m = 0
        for a in names:
            if a not in self._asm_ix:
                raise NotAnAssumption(f"{a!r} is not an assumption")
            m |= 1 << self._asm_ix[a]
        return m

    def _asm_names(self, mask):
        return frozenset(a for i, a in enumerate(self.assumptions) if mask >> i & 1)

    def _atom_names(self, mask):
        return frozenset(p for i, p in enumerate(self.atoms) if mask >> i & 1)

    def _close_atoms(self, atom_mask):
        """Forward chaining: every rule whose body holds fires."""
        cur = atom_mask
        changed = True
        while changed:
            changed = False
            for head_bit, body_mask in self._rules_ix:
                if body_mask & ~cur == 0 and not cur & head_bit:
                    cur |= head_bit
                    changed = True
        return cur

    def _theory_mask(self, asm_mask):
        memo = self._th_memo
        got = memo.get(asm_mask)
        if got is not None:
            return got
        if asm_mask == 0:
            val = self._close_atoms(0)
        else:
            low = asm_mask & -asm_mask
            parent = self._theory_mask(asm_mask ^ low)
            val = self._close_atoms(parent | self._asm_atom_bit[low.bit_length() - 1])
        memo[asm_mask] = val
        return val

    def _project_asm(self, atom_mask):
        m = 0
        for i, bit in enumerate(self._asm_atom_bit):
            if atom_mask & bit:
                m |= 1 << i
        return m

    def _contrary_mask(self, asm_mask):
        m = 0
        i = 0
        while asm_mask:
            if asm_mask & 1:
                m |= self._contrary_bit[i]
            asm_mask >>= 1
            i += 1
        return m


def theory(frame: AbaFramework, names):
    """Everything derivable from subsets of the given assumption set."""
    return frame._atom_names(frame._theory_mask(frame._asm_mask(names)))


def aba_closure(frame: AbaFramework, names):
    """Derivable assumptions of an assumption set."""
    m = frame._asm_mask(names)
    return frame._asm_names(frame._project_asm(frame._theory_mask(m)))


def attacks(frame: AbaFramework, attacker, target):
    """Does some subset of `attacker` derive the contrary of a member of `target`?"""
    th = frame._theory_mask(frame._asm_mask(attacker))
    return bool(th & frame._contrary_mask(frame._asm_mask(target)))


def enumerate_arguments(frame: AbaFramework, cap=ARGUMENT_CAP):
    """All arguments of the framework, deduplicated by (support, conclusion).

    Saturates: assumption bases and facts seed the pool, then rules combine
    existing arguments. Raises CapExceeded when more than `cap` distinct
    arguments exist, or when the combination work itself blows up.
    """
    cached = frame._arg_memo.get(cap)
    if cached is not None:
        return list(cached)
    by_concl: dict[str, list[frozenset]] = {}
    seen = set()

    def add(support, concl):
        key = (support, concl)
        if key in seen:
            return False
        seen.add(key)
        by_concl.setdefault(concl, []).append(support)
        if len(seen) > cap:
            raise CapExceeded(cap)
        return True

    for a in frame.assumptions:
        add(frozenset([a]), a)
    work_budget = max(1_000_000, cap * 200)
    work = 0
    changed = True
    while changed:
        changed = False
        for head, body in frame.rules:
            if not body:
                if add(frozenset(), head):
                    changed = True
                continue
            pools = [by_concl.get(b, ()) for b in body]
            if any(len(p) == 0 for p in pools):
                continue
            for combo in product(*[list(p) for p in pools]):
                work += 1
                if work > work_budget:
                    raise CapExceeded(cap, "argument construction work limit hit")
                support = frozenset().union(*combo)
                if add(support, head):
                    changed = True

    base_rank = {a: i for i, a in enumerate(frame.assumptions)}
    atom_rank = frame._atom_ix

    def key(arg):
        support, concl = arg
        if len(support) == 1 and concl in support:
            return (0, base_rank[concl], ())
        return (1, atom_rank[concl],
                tuple(sorted(atom_rank[a] for a in support)))

    ordered = [Argument(s, c) for s, c in sorted(seen, key=key)]
    frame._arg_memo[cap] = ordered
    return list(ordered)


def _closed_masks(frame: AbaFramework, n):
    out = []
    for m in range(1 << n):
        if frame._project_asm(frame._theory_mask(m)) == m:
            out.append(m)
    return out


def aba_defends(frame: AbaFramework, defender, assumption, mode="closed-sets",
                cap=ARGUMENT_CAP):
    """Does `defender` counter every attack on `assumption`?

    closed-sets mode follows the definition: every closed assumption set
    attacking the assumption must itself be attacked. attacker-closure mode
    goes through individual attacking arguments instead and counter-attacks
    the closure of each argument's support; it needs argument enumeration
    and therefore honours `cap`.
    """
    if assumption not in frame._asm_ix:
        raise NotAnAssumption(f"{assumption!r} is not an assumption")
    if mode not in DEFENSE_MODES:
        raise ValueError(f"unknown defense mode {mode!r}")
    s_mask = frame._asm_mask(defender)
    th_s = frame._theory_mask(s_mask)
    tgt_bit = frame._contrary_bit[frame._asm_ix[assumption]]
    if mode == "closed-sets":
        n = len(frame.assumptions)
        if n > ENUM_LIMIT:
            raise TooLarge("assumption count", n, ENUM_LIMIT)
        for t in _closed_masks(frame, n):
            if frame._theory_mask(t) & tgt_bit and not th_s & frame._contrary_mask(t):
                return False
        return True
    target_atom = frame.contrary[assumption]
    for arg in enumerate_arguments(frame, cap):
        if arg.conclusion != target_atom:
            continue
        cl_mask = frame._project_asm(frame._theory_mask(frame._asm_mask(arg.support)))
        if not th_s & frame._contrary_mask(cl_mask):
            return False
    return True


def aba_extensions(frame: AbaFramework, semantics, limit=ENUM_LIMIT):
    """Enumerate extensions by scanning all assumption subsets.

    Conflict-freeness and closedness are required across the board, and
    defense counter-attacks closed attacker sets, so even grounded and
    stable go through the same filters.
    """
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}")
    n = len(frame.assumptions)
    if n > limit:
        raise TooLarge("assumption count", n, limit)
    full = (1 << n) - 1
    th = [frame._theory_mask(m) for m in range(1 << n)]
    cmask = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        cmask[m] = cmask[m ^ low] | frame._contrary_bit[low.bit_length() - 1]

    if semantics == "cf":
        found = [m for m in range(1 << n) if not th[m] & cmask[m]]
        return _as_families(frame, found)

    closed = [m for m in range(1 << n)
              if frame._project_asm(th[m]) == m]
    closed_flag = [False] * (1 << n)
    for m in closed:
        closed_flag[m] = True

    if semantics == "stb":
        found = []
        for m in closed:
            if th[m] & cmask[m]:
                continue
            attacked = 0
            for i in range(n):
                if th[m] & frame._contrary_bit[i]:
                    attacked |= 1 << i
            if attacked & ~m == full & ~m:
                found.append(m)
        return _as_families(frame, found)

    # which assumptions each closed set attacks, for bulk defense
    attacked_by = []
    for t in closed:
        am = 0
        for i in range(n):
            if th[t] & frame._contrary_bit[i]:
                am |= 1 << i
        attacked_by.append(am)

    candidates = [m for m in closed if not th[m] & cmask[m]]
    results = []
    for m in candidates:
        defended = full
        for t, am in zip(closed, attacked_by):
            if not th[m] & cmask[t]:
                defended &= ~am
            if defended == 0:
                break
        if semantics in ("ad", "pr"):
            if m & ~defended == 0:
                results.append(m)
        else:
            if m == defended:
                results.append(m)

    if semantics == "pr":
        results = [m for m in results
                   if not any(m != o and m & ~o == 0 for o in results)]
    if semantics == "gr":
        inter = full
        for m in results:
            inter &= m
        results = [inter] if results else [0]
    return _as_families(frame, results)


def _as_families(frame, masks):
    sets = [frame._asm_names(m) for m in masks]
    rank = frame._asm_ix
    return sorted(sets, key=lambda s: tuple(sorted(rank[a] for a in s)))


def aba_decide(frame: AbaFramework, task, semantics, query=None, limit=ENUM_LIMIT):
    """Decide credulous / skeptical acceptance or verify a candidate set.

    cred: query assumption lies in some extension. skept: in every extension
    (vacuously true when there are none). ver: the query set is an extension.
    """
    family = aba_extensions(frame, semantics, limit)
    if task == "enumerate":
        return family
    if task == "ver":
        target = frozenset(query)
        for a in target:
            if a not in frame._asm_ix:
                raise NotAnAssumption(f"{a!r} is not an assumption")
        return target in family
    if query not in frame._asm_ix:
        raise NotAnAssumption(f"{query!r} is not an assumption")
    if task == "cred":
        return any(query in ext for ext in family)
    if task == "skept":
        return all(query in ext for ext in family)
    raise ValueError(f"unknown task {task!r}")


# ------------------------------------------------------------------ text io

def parse_aba(text):
    """Read the line-oriented ABA format.

    p aba <n_atoms>        header, atoms are 1..n
    a <i>                  atom i is an assumption
    c <i> <j>              the contrary of assumption i is atom j
    r <h> <b1> ... <bk>    rule, k may be 0
    name <i> <label>       optional display name for atom i
    Blank lines and lines starting with # are ignored.
    """
    n = None
    asm = []
    contrary_ix = {}
    rules_ix = []
    names = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 3 or parts[1] != "aba":
                raise ParseError("expected 'p aba <n>'", lineno)
            n = _int(parts[2], lineno)
            if n < 0:
                raise ParseError("negative atom count", lineno)
            continue
        if n is None:
            raise ParseError("missing 'p aba <n>' header", lineno)
        if parts[0] == "a":
            if len(parts) != 2:
                raise ParseError("expected 'a <i>'", lineno)
            asm.append(_atom(parts[1], n, lineno))
        elif parts[0] == "c":
            if len(parts) != 3:
                raise ParseError("expected 'c <i> <j>'", lineno)
            i = _atom(parts[1], n, lineno)
            j = _atom(parts[2], n, lineno)
            if i in contrary_ix:
                raise ParseError(f"atom {i} already has a contrary", lineno)
            contrary_ix[i] = j
        elif parts[0] == "r":
            if len(parts) < 2:
                raise ParseError("expected 'r <head> <body...>'", lineno)
            rules_ix.append(tuple(_atom(p, n, lineno) for p in parts[1:]))
        elif parts[0] == "name":
            if len(parts) < 3:
                raise ParseError("expected 'name <i> <label>'", lineno)
            i = _atom(parts[1], n, lineno)
            names[i] = line.split(None, 2)[2]
        else:
            raise ParseError(f"unknown directive {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p aba <n>' header")
    asm_set = set(asm)
    for i in contrary_ix:
        if i not in asm_set:
            raise ParseError(f"atom {i} has a contrary but is not an assumption")
    for i in asm_set:
        if i not in contrary_ix:
            raise ParseError(f"assumption {i} has no contrary")
    label = {i: names.get(i, str(i)) for i in range(1, n + 1)}
    if len(set(label.values())) != n:
        raise ParseError("duplicate atom names")
    atoms = [label[i] for i in range(1, n + 1)]
    assumptions = [label[i] for i in sorted(asm_set)]
    contrary = {label[i]: label[j] for i, j in contrary_ix.items()}
    rules = [(label[r[0]], tuple(label[b] for b in r[1:])) for r in rules_ix]
    return AbaFramework(atoms, assumptions, contrary, rules)


def format_aba(frame: AbaFramework):
    """Serialize in the same format parse_aba reads. Deterministic."""
    ix = {p: i + 1 for i, p in enumerate(frame.atoms)}
    out = [f"p aba {len(frame.atoms)}"]
    for a in frame.assumptions:
        out.append(f"a {ix[a]}")
    for a in frame.assumptions:
        out.append(f"c {ix[a]} {ix[frame.contrary[a]]}")
    for head, body in frame.rules:
        out.append(" ".join(["r", str(ix[head])] + [str(ix[b]) for b in body]))
    for i, p in enumerate(frame.atoms, 1):
        if p != str(i):
            out.append(f"name {i} {p}")
    return "\n".join(out) + "\n"


def _int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def _atom(token, n, lineno):
    i = _int(token, lineno)
    if not 1 <= i <= n:
        raise ParseError(f"atom id {i} out of range 1..{n}", lineno)
    return i
