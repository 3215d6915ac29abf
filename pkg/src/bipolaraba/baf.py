"""Bipolar argumentation frameworks with deductive support, their
premise-augmented variant, and plain Dung frameworks for the support-free
degenerate case.

Accepting an argument forces accepting everything it supports, so every
semantics here works with closed sets and defense counter-attacks the
closure of an attacker.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import masks
from .errors import NotAnAssumption, ParseError, SupportsPresent, TooLarge

SEMANTICS = ("cf", "ad", "co", "gr", "pr", "stb")
DEFENSE_MODES = ("closed-sets", "attacker-closure")
AF_LIMIT = 16


@dataclass
class Baf:
    """n arguments 0..n-1, attack edges, support edges, display names."""

    n: int
    att: list = field(default_factory=list)
    sup: list = field(default_factory=list)
    names: list = field(default_factory=list)

    def __post_init__(self):
        self.att = [(int(s), int(t)) for s, t in self.att]
        self.sup = [(int(s), int(t)) for s, t in self.sup]
        for s, t in self.att + self.sup:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise ValueError(f"edge ({s},{t}) out of range")
        if not self.names:
            self.names = [str(i) for i in range(self.n)]
        if len(self.names) != self.n or len(set(self.names)) != self.n:
            raise ValueError("need one distinct name per argument")
        self._name_ix = {nm: i for i, nm in enumerate(self.names)}

    def resolve(self, ref):
        """Accept an argument name or a numeric id."""
        if isinstance(ref, int):
            i = ref
        elif ref in self._name_ix:
            return self._name_ix[ref]
        else:
            try:
                i = int(ref)
            except (TypeError, ValueError):
                raise KeyError(f"unknown argument {ref!r}") from None
        if not 0 <= i < self.n:
            raise KeyError(f"argument id {i} out of range")
        return i


@dataclass
class Pbaf:
    """A BAF whose arguments carry premise sets.

    premises[i] is a frozenset of premise ids, all below premise_bound.
    """

    baf: Baf
    premises: list = field(default_factory=list)
    premise_bound: int = 0

    def __post_init__(self):
        if len(self.premises) != self.baf.n:
            raise ValueError("need one premise set per argument")
        self.premises = [frozenset(int(p) for p in ps) for ps in self.premises]
        for ps in self.premises:
            for p in ps:
                if not 0 <= p < self.premise_bound:
                    raise ValueError(f"premise id {p} out of range")


# ------------------------------------------------------------- set algebra

def baf_closure(frame: Baf, ext):
    """Least superset closed under outgoing support edges."""
    cur = {frame.resolve(x) for x in ext}
    changed = True
    while changed:
        changed = False
        for s, t in frame.sup:
            if s in cur and t not in cur:
                cur.add(t)
                changed = True
    return frozenset(cur)


def attack_range(frame: Baf, ext):
    """All arguments attacked by the set."""
    members = {frame.resolve(x) for x in ext}
    return frozenset(t for s, t in frame.att if s in members)


def _attacks_set(frame, members, target):
    return any(s in members and t in target for s, t in frame.att)


def baf_defends(frame: Baf, ext, arg, mode="attacker-closure"):
    """Closure-aware defense of one argument by a set.

    attacker-closure: for each attacker b of the argument, the set attacks
    the closure of {b}. closed-sets: every closed set attacking the
    argument is attacked; exponential, kept for cross-checking.
    """
    if mode not in DEFENSE_MODES:
        raise ValueError(f"unknown defense mode {mode!r}")
    members = {frame.resolve(x) for x in ext}
    a = frame.resolve(arg)
    if mode == "attacker-closure":
        for b, t in frame.att:
            if t != a:
                continue
            if not _attacks_set(frame, members, baf_closure(frame, {b})):
                return False
        return True
    if frame.n > masks.ENUM_LIMIT:
        raise TooLarge("argument count", frame.n, masks.ENUM_LIMIT)
    attackers = {b for b, t in frame.att if t == a}
    for m in range(1 << frame.n):
        group = {i for i in range(frame.n) if m >> i & 1}
        if baf_closure(frame, group) != frozenset(group):
            continue
        if group & attackers and not _attacks_set(frame, members, group):
            return False
    return True


def characteristic(frame: Baf, ext):
    """All arguments the set defends."""
    return frozenset(a for a in range(frame.n)
                     if baf_defends(frame, ext, a))


def is_exhaustive(pframe: Pbaf, ext):
    """Does the set contain every argument its own premises can build?"""
    members = {pframe.baf.resolve(x) for x in ext}
    pool = set()
    for i in members:
        pool |= pframe.premises[i]
    return all(i in members
               for i in range(pframe.baf.n) if pframe.premises[i] <= pool)


# ------------------------------------------------------------- enumeration

def _engine(frame: Baf, limit):
    return masks.SubsetEngine(frame.n, frame.att, frame.sup, limit)


def _family(frame: Baf, mask_list):
    sets = [frozenset(i for i in range(frame.n) if int(m) >> i & 1)
            for m in mask_list]
    return sorted(sets, key=lambda s: tuple(sorted(s)))


def _extension_masks(eng, semantics, exhaustive=None):
    if semantics == "cf":
        return np.flatnonzero(eng.conflict_free).astype(np.uint32)
    if semantics == "stb":
        return eng.stable_masks()
    cand = eng.candidate_masks()
    g = eng.gamma(cand)
    if exhaustive is not None:
        keep = exhaustive(cand)
        cand, g = cand[keep], g[keep]
    if semantics == "ad":
        return cand[eng.admissible_flags(cand, g)]
    if semantics == "co":
        return cand[cand == g]
    if semantics == "pr":
        return masks.maximal_masks(cand[eng.admissible_flags(cand, g)])
    if semantics == "gr":
        co = cand[cand == g]
        return np.array([masks.intersect_masks(co, eng.full)], dtype=np.uint32)
    raise ValueError(f"unknown semantics {semantics!r}")


def baf_extensions(frame: Baf, semantics, limit=masks.ENUM_LIMIT):
    """Enumerate extensions under the closed-set semantics."""
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}")
    eng = _engine(frame, limit)
    return _family(frame, _extension_masks(eng, semantics))


def pbaf_extensions(pframe: Pbaf, semantics, limit=masks.ENUM_LIMIT):
    """Premise-aware extensions.

    Admissibility additionally requires exhaustiveness; stable and
    conflict-free sets are taken from the underlying BAF unchanged.
    """
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}")
    frame = pframe.baf
    eng = _engine(frame, limit)
    if semantics in ("cf", "stb"):
        return _family(frame, _extension_masks(eng, semantics))
    premise_masks = _premise_masks(pframe)
    table = eng.premise_tables(premise_masks)

    def exhaustive(cand):
        return eng.exhaustive_flags(cand, premise_masks, table)

    return _family(frame, _extension_masks(eng, semantics, exhaustive))


def _premise_masks(pframe: Pbaf):
    ids = sorted({p for ps in pframe.premises for p in ps})
    if len(ids) > masks.PREMISE_LIMIT:
        raise TooLarge("premise universe", len(ids), masks.PREMISE_LIMIT)
    pos = {p: k for k, p in enumerate(ids)}
    out = []
    for ps in pframe.premises:
        m = 0
        for p in ps:
            m |= 1 << pos[p]
        out.append(m)
    return out


def af_extensions(frame: Baf, semantics, limit=AF_LIMIT):
    """Textbook Dung semantics for support-free frameworks.

    Implemented independently of the closed-set machinery (plain subset
    scan, attacker-wise defense, grounded as the least complete set) so the
    two routes can be compared on degenerate inputs.
    """
    if frame.sup:
        raise SupportsPresent("framework has support edges")
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}")
    n = frame.n
    if n > limit:
        raise TooLarge("argument count", n, limit)
    atts = frame.att
    attackers = [set() for _ in range(n)]
    for s, t in atts:
        attackers[t].add(s)

    def members(m):
        return {i for i in range(n) if m >> i & 1}

    def cf(ms):
        return not any(s in ms and t in ms for s, t in atts)

    def defends(ms, a):
        return all(any(x in attackers[b] for x in ms) for b in attackers[a])

    if semantics == "cf":
        return _family(frame, [m for m in range(1 << n) if cf(members(m))])
    if semantics == "stb":
        out = []
        for m in range(1 << n):
            ms = members(m)
            rng = {t for s, t in atts if s in ms}
            if not ms & rng and rng == set(range(n)) - ms:
                out.append(m)
        return _family(frame, out)
    admissible = []
    complete = []
    for m in range(1 << n):
        ms = members(m)
        if not cf(ms):
            continue
        if all(defends(ms, a) for a in ms):
            admissible.append(m)
            if all(a in ms for a in range(n) if defends(ms, a)):
                complete.append(m)
    if semantics == "ad":
        return _family(frame, admissible)
    if semantics == "co":
        return _family(frame, complete)
    if semantics == "gr":
        least = [m for m in complete
                 if not any(o != m and o & ~m == 0 for o in complete)]
        return _family(frame, least)
    maximal = [m for m in admissible
               if not any(o != m and m & ~o == 0 for o in admissible)]
    return _family(frame, maximal)


# ----------------------------------------------------------------- tasks

def baf_decide(frame, task, semantics, query=None, limit=masks.ENUM_LIMIT,
               classic=False):
    """Credulous / skeptical / verification tasks over one semantics.

    `frame` may be a Baf or a Pbaf. Skeptical acceptance over an empty
    family is vacuously true.
    """
    pframe = None
    if isinstance(frame, Pbaf):
        pframe, base = frame, frame.baf
    else:
        base = frame
    if classic:
        family = af_extensions(base, semantics, limit)
    elif pframe is not None:
        family = pbaf_extensions(pframe, semantics, limit)
    else:
        family = baf_extensions(base, semantics, limit)
    if task == "enumerate":
        return family
    if task == "ver":
        target = frozenset(base.resolve(x) for x in query)
        return target in family
    a = base.resolve(query)
    if task == "cred":
        return any(a in ext for ext in family)
    if task == "skept":
        return all(a in ext for ext in family)
    raise ValueError(f"unknown task {task!r}")


# ---------------------------------------------------------------- text io

def parse_baf(text):
    """Read the line-oriented BAF format.

    p baf <n>       header, arguments are 0..n-1
    att <i> <j>     i attacks j
    sup <i> <j>     i supports j
    name <i> <s>    optional display name
    # ...           comment; 'arg' annotation lines are ignored
    """
    n, att, sup, names = _parse_graph(text, "baf")
    return Baf(n, att, sup, _names(n, names))


def parse_pbaf(text):
    """Like parse_baf plus a premise bound and 'prem <i> <p...>' lines."""
    n, att, sup, names, bound, prem = _parse_graph(text, "pbaf", premises=True)
    premises = [frozenset(prem.get(i, ())) for i in range(n)]
    return Pbaf(Baf(n, att, sup, _names(n, names)), premises, bound)


def _names(n, names):
    return [names.get(i, str(i)) for i in range(n)]


def _parse_graph(text, kind, premises=False):
    n = None
    bound = None
    att, sup = [], []
    names = {}
    prem = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            want = 4 if premises else 3
            if len(parts) != want or parts[1] != kind:
                raise ParseError(f"expected 'p {kind} <n>'"
                                 + (" with a premise bound" if premises else ""),
                                 lineno)
            n = _nonneg(parts[2], lineno)
            if premises:
                bound = _nonneg(parts[3], lineno)
            continue
        if parts[0] == "arg":
            continue
        if n is None:
            raise ParseError(f"missing 'p {kind} <n>' header", lineno)
        if parts[0] in ("att", "sup"):
            if len(parts) != 3:
                raise ParseError(f"expected '{parts[0]} <i> <j>'", lineno)
            edge = (_arg_id(parts[1], n, lineno), _arg_id(parts[2], n, lineno))
            (att if parts[0] == "att" else sup).append(edge)
        elif parts[0] == "name":
            if len(parts) < 3:
                raise ParseError("expected 'name <i> <s>'", lineno)
            names[_arg_id(parts[1], n, lineno)] = line.split(None, 2)[2]
        elif parts[0] == "prem" and premises:
            if len(parts) < 2:
                raise ParseError("expected 'prem <i> <p...>'", lineno)
            i = _arg_id(parts[1], n, lineno)
            vals = [_nonneg(p, lineno) for p in parts[2:]]
            for v in vals:
                if v >= bound:
                    raise ParseError(f"premise id {v} not below bound {bound}",
                                     lineno)
            prem[i] = vals
        else:
            raise ParseError(f"unknown directive {parts[0]!r}", lineno)
    if n is None:
        raise ParseError(f"missing 'p {kind} <n>' header")
    if premises:
        return n, att, sup, names, bound, prem
    return n, att, sup, names


def format_baf(frame: Baf, annotations=()):
    out = [f"p baf {frame.n}"]
    out.extend(f"# {note}" for note in annotations)
    out.extend(f"att {s} {t}" for s, t in frame.att)
    out.extend(f"sup {s} {t}" for s, t in frame.sup)
    for i, nm in enumerate(frame.names):
        if nm != str(i):
            out.append(f"name {i} {nm}")
    return "\n".join(out) + "\n"


def format_pbaf(pframe: Pbaf, annotations=()):
    frame = pframe.baf
    out = [f"p pbaf {frame.n} {pframe.premise_bound}"]
    out.extend(f"# {note}" for note in annotations)
    out.extend(f"att {s} {t}" for s, t in frame.att)
    out.extend(f"sup {s} {t}" for s, t in frame.sup)
    for i, ps in enumerate(pframe.premises):
        if ps:
            out.append("prem %d %s" % (i, " ".join(str(p) for p in sorted(ps))))
    for i, nm in enumerate(frame.names):
        if nm != str(i):
            out.append(f"name {i} {nm}")
    return "\n".join(out) + "\n"


def _nonneg(token, lineno):
    try:
        v = int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None
    if v < 0:
        raise ParseError(f"expected a non-negative integer, got {v}", lineno)
    return v


def _arg_id(token, n, lineno):
    v = _nonneg(token, lineno)
    if v >= n:
        raise ParseError(f"argument id {v} out of range 0..{n - 1}", lineno)
    return v
