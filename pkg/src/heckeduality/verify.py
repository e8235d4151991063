"""Verification suites over a roster of Coxeter systems and parabolic subsets.

A run is cut into tasks ``(system, suite, subset)``; each task is a pure
function of its arguments and the seed, so tasks may run in any process and
the merged report only depends on the task order.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import garside as gs
from .coxeter import (
    DEFAULT_MAX_GROUP_ORDER,
    CoxeterSystem,
    WeylElement,
    elements_of_parabolic,
    flipped_complement,
    is_downward_closed,
    load_datum,
    longest_coset_representative,
    named_system,
)
from .hecke import (
    HeckeElt,
    costandard,
    eval_braid,
    expand_costandard,
    from_costandard,
    h_inv_standard,
    h_mul,
    render,
    standard,
    to_costandard,
)
from .laurent import LaurentPoly
from .parabolic import (
    ParabolicContext,
    cone_containment_check,
    kernel_exchange_check,
    kernel_swap_check,
    recollement_check,
    restricted_twist_check,
    right_orbit,
    serre_duality_check,
)
from .report import Entry, Outcome, Report

SUITES = ("combinatorics", "braid", "hecke", "serre")
DEFAULT_ROSTER = ("A1", "A2", "A3", "A1xA1", "B2", "B3", "G2", "A4", "D4")
PROBE_TITLE = "weak-order hypothesis for Bruhat pairs"

RANDOM_WORD_PAIRS = 100
RECOLLEMENT_SAMPLES = 50
LINEARITY_SAMPLES = 5
ASSOCIATIVITY_SAMPLES = 20
LIFT_PAIRS = 100
# the probe also tests the conclusion on each counterexample below this order
PROBE_CONCLUSION_MAX_ORDER = 48


@dataclass
class SuiteConfig:
    systems: list[str] = field(default_factory=lambda: list(DEFAULT_ROSTER))
    parabolics: str | list[frozenset] = "all"
    suites: list[str] = field(default_factory=lambda: list(SUITES))
    seed: int = 0
    jobs: int = 1
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER


_SYSTEMS: dict[tuple[str, int], CoxeterSystem] = {}


def resolve_system(source: str, max_group_order: int = DEFAULT_MAX_GROUP_ORDER) -> CoxeterSystem:
    """A named type (``"B3"``, ``"A2xA1"``) or a path to a JSON datum file."""
    key = (source, max_group_order)
    if key not in _SYSTEMS:
        if source.endswith(".json") or Path(source).is_file():
            system = load_datum(source, max_group_order=max_group_order)
        else:
            system = named_system(source, max_group_order=max_group_order)
        _SYSTEMS[key] = system
    return _SYSTEMS[key]


def all_subsets(rank: int) -> list[frozenset]:
    return [frozenset(c) for r in range(rank + 1) for c in itertools.combinations(range(rank), r)]


def subset_label(subset) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(subset)) + "}"


def _case(w: WeylElement) -> str:
    return "[" + " ".join(str(i + 1) for i in w.word) + "]"


def _rng(seed: int, *parts) -> random.Random:
    return random.Random("|".join(map(str, (seed,) + parts)))


def _random_poly(rng: random.Random) -> LaurentPoly:
    return LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3) for _ in range(rng.randint(1, 3))})


def random_hecke(system: CoxeterSystem, rng: random.Random, terms: int = 4) -> HeckeElt:
    elements = system.elements()
    return HeckeElt(system, {rng.choice(elements): _random_poly(rng) for _ in range(terms)})


# -- combinatorics ---------------------------------------------------------------------

def combinatorics_system(system: CoxeterSystem, seed: int) -> list[tuple[str, list[Outcome]]]:
    w0 = system.longest
    elements = system.elements()
    reverses, lengths = [], []
    for x in elements:
        lower = system.bruhat_lower_set(x)
        w0x = w0 * x
        bad = [y for y in elements
               if system.bruhat_leq(x, y) != system.bruhat_leq(w0 * y, w0x)
               or system.bruhat_leq(y, x) != (y in lower)]
        reverses.append(Outcome(_case(x), not bad,
                                "" if not bad else "disagrees with " + ", ".join(map(_case, bad[:5]))))
        ok = w0x.length == w0.length - x.length and x.inverse().length == x.length
        lengths.append(Outcome(_case(x), ok, "" if ok else f"l(w0 x)={w0x.length}"))
    roots = Outcome("all", len(system.positive_roots) == w0.length,
                    f"roots={len(system.positive_roots)} l(w0)={w0.length}")
    return [
        ("longest_reverses_bruhat", reverses),
        ("length_complement", lengths),
        ("roots_count_longest", [roots]),
    ]


def combinatorics_parabolic(system: CoxeterSystem, subset: frozenset) -> list[tuple[str, list[Outcome]]]:
    inside = elements_of_parabolic(system, subset)
    w0 = system.longest
    w0_i = system.longest_element(subset)
    u = longest_coset_representative(system, subset)
    outside = [w for w in system.elements() if w not in inside]
    up_closed = not any(system.bruhat_leq(x, y) for x in outside for y in inside)
    closed_group = all(a * b in inside and a.inverse() in inside for a in inside for b in inside)
    tau = flipped_complement(system, subset)
    lower_u = system.bruhat_lower_set(u) - {u}
    meets = sorted((u.inverse() * v for v in lower_u if u.inverse() * v in inside),
                   key=WeylElement.sort_key)
    return [
        ("parabolic_subgroup", [Outcome("all", closed_group)]),
        ("parabolic_downward_closed", [Outcome("all", is_downward_closed(system, inside),
                                               f"|W_I|={len(inside)}")]),
        ("complement_upward_closed", [Outcome("all", up_closed)]),
        ("flipped_complement_downward_closed", [Outcome(
            "all", is_downward_closed(system, tau) and len(tau) == system.order - len(inside),
            f"|set|={len(tau)}")]),
        ("coset_length_additivity", [Outcome(
            _case(u), w0.length == u.length + w0_i.length,
            f"l(w0)={w0.length} l(u)={u.length} l(w0_I)={w0_i.length}")]),
        ("coset_translates_avoid_parabolic", [Outcome(
            _case(u), not meets, "" if not meets else "meets at " + ", ".join(map(_case, meets)))]),
    ]


def weak_order_probe(system: CoxeterSystem) -> dict:
    """Does Bruhat ``x < y`` force ``l(x^-1 y) = l(y) - l(x)``?  Reports, never asserts."""
    elements = system.elements()
    pairs = 0
    counterexamples = []
    conclusion_fails = []
    check_conclusion = system.order <= PROBE_CONCLUSION_MAX_ORDER
    for y in elements:
        for x in sorted(system.bruhat_lower_set(y), key=WeylElement.sort_key):
            if x is y:
                continue
            pairs += 1
            z = x.inverse() * y
            if z.length != y.length - x.length:
                counterexamples.append(f"x={_case(x)} y={_case(y)} l(x^-1 y)={z.length}")
                if check_conclusion:
                    lhs = h_mul(h_inv_standard(y), standard(x))
                    if lhs != costandard(y.inverse() * x):
                        conclusion_fails.append(f"x={_case(x)} y={_case(y)}")
    out = {
        "bruhat_pairs": pairs,
        "hypothesis_holds_for_all": not counterexamples,
        "counterexamples": counterexamples,
    }
    if check_conclusion:
        out["conclusion_checked"] = True
        out["conclusion_fails"] = conclusion_fails
    else:
        out["conclusion_checked"] = False
    return out


# -- braids ------------------------------------------------------------------------------

def random_braid_word(system: CoxeterSystem, rng: random.Random, max_len: int = 12):
    return tuple((rng.randrange(system.rank), rng.choice((1, -1)))
                 for _ in range(rng.randint(0, max_len)))


def scramble_word(system: CoxeterSystem, word, rng: random.Random, moves: int = 6):
    """Apply random braid-group relations; the result represents the same braid."""
    word = list(word)
    for _ in range(moves):
        if rng.random() < 0.3 or not word:
            i = rng.randrange(system.rank)
            sign = rng.choice((1, -1))
            pos = rng.randint(0, len(word))
            word[pos:pos] = [(i, sign), (i, -sign)]
            continue
        spots = []
        for pos in range(len(word)):
            i, sign = word[pos]
            for j in system.generators:
                if j == i:
                    continue
                m = system.bond_matrix[i][j]
                alt = [(i if k % 2 == 0 else j, sign) for k in range(m)]
                if word[pos:pos + m] == alt:
                    spots.append((pos, j, m, sign))
        if spots:
            pos, j, m, sign = rng.choice(spots)
            i = word[pos][0]
            word[pos:pos + m] = [(j if k % 2 == 0 else i, sign) for k in range(m)]
        else:
            for pos in range(len(word) - 1):
                if word[pos][0] == word[pos + 1][0] and word[pos][1] == -word[pos + 1][1]:
                    del word[pos:pos + 2]
                    break
    return tuple(word)


def braid_system(system: CoxeterSystem, seed: int) -> list[tuple[str, list[Outcome]]]:
    rng = _rng(seed, system.name, "braid")
    laws, rewrites, cross, roundtrip = [], [], [], []
    one = gs.identity(system)
    for k in range(RANDOM_WORD_PAIRS):
        w1 = random_braid_word(system, rng)
        w2 = scramble_word(system, w1, rng)
        w3 = random_braid_word(system, rng)
        a, b, c = (gs.nf_from_word(system, w) for w in (w1, w2, w3))
        ac = gs.nf_from_word(system, w1 + w3)
        case = f"{k}: {gs.format_braid_word(w1)} | {gs.format_braid_word(w3)}"
        ok = (
            gs.nf_equal(ac, gs.nf_multiply(a, c))
            and gs.nf_equal(gs.nf_multiply(a, gs.nf_inverse(a)), one)
            and gs.nf_equal(gs.nf_inverse(ac), gs.nf_multiply(gs.nf_inverse(c), gs.nf_inverse(a)))
            and gs.nf_equal(gs.nf_multiply(gs.nf_multiply(a, b), c),
                            gs.nf_multiply(a, gs.nf_multiply(b, c)))
        )
        laws.append(Outcome(case, ok))
        rewrites.append(Outcome(f"{k}: {gs.format_braid_word(w1)} ~ {gs.format_braid_word(w2)}",
                                gs.nf_equal(a, b), f"{a} vs {b}" if not gs.nf_equal(a, b) else ""))
        ok = True
        for x, y, wx, wy in ((a, b, w1, w2), (a, c, w1, w3)):
            if gs.nf_equal(x, y) and eval_braid(system, wx) != eval_braid(system, wy):
                ok = False
        cross.append(Outcome(f"{k}", ok))
        roundtrip.append(Outcome(f"{k}", all(
            gs.nf_equal(gs.nf_from_word(system, gs.word_of(x)), x) for x in (a, c, ac))))

    elements = system.elements()
    lifts = []
    pairs = [(system.simple(0), system.simple(0))]
    pairs += [(rng.choice(elements), rng.choice(elements)) for _ in range(LIFT_PAIRS)]
    for x, y in pairs:
        additive = (x * y).length == x.length + y.length
        equal = gs.nf_equal(gs.nf_multiply(gs.positive_lift(x), gs.positive_lift(y)),
                            gs.positive_lift(x * y))
        lifts.append(Outcome(f"{_case(x)}*{_case(y)}", additive == equal,
                             f"additive={additive} multiplicative={equal}"))

    w0 = system.longest
    d = gs.positive_lift(w0)
    splits = []
    for u in elements:
        ok = gs.nf_equal(d, gs.nf_multiply(gs.positive_lift(w0 * u), gs.positive_lift(u.inverse())))
        splits.append(Outcome(_case(u), ok))
    return [
        ("group_laws", laws),
        ("relation_rewrites_equal", rewrites),
        ("hecke_cross_oracle", cross),
        ("word_roundtrip", roundtrip),
        ("positive_lift_multiplicative", lifts),
        ("longest_splits", splits),
        ("full_twist_central", [Outcome("all", gs.check_ft_central(system))]),
    ]


def braid_parabolic(system: CoxeterSystem, subset: frozenset) -> list[tuple[str, list[Outcome]]]:
    res = gs.conjugation_identities(system, subset)
    u = longest_coset_representative(system, subset)
    return [
        ("full_twist_conjugation", [Outcome(_case(u), res["conjugation"])]),
        ("full_twist_costandard_form", [Outcome(_case(u), res["costandard_form"])]),
    ]


# -- Hecke -------------------------------------------------------------------------------

def _alternating(i, j, m, sign=1):
    return tuple((i if k % 2 == 0 else j, sign) for k in range(m))


def hecke_system(system: CoxeterSystem, seed: int) -> list[tuple[str, list[Outcome]]]:
    rng = _rng(seed, system.name, "hecke")
    w0 = system.longest
    exchange = []
    orbit = right_orbit(system, standard(w0), lambda h, s: h.rmul_simple(s, inverse=True))
    for u, h in orbit:
        direct = h_mul(standard(w0), costandard(u)) if system.order <= 48 else h
        ok = h == standard(w0 * u) and direct == h
        exchange.append(Outcome(_case(u), ok, "" if ok else f"got {render(h)}"))

    tri = []
    for w in system.elements():
        lower = system.bruhat_lower_set(w)
        cos = costandard(w)
        coords = to_costandard(standard(w))
        ok = (set(cos.terms) <= lower and cos.coeff(w).is_one()
              and set(coords) <= lower and coords.get(w) is not None and coords[w].is_one())
        tri.append(Outcome(_case(w), ok))

    relations = []
    for i, j in itertools.combinations(system.generators, 2):
        m = system.bond_matrix[i][j]
        for sign in (1, -1):
            ok = eval_braid(system, _alternating(i, j, m, sign)) == eval_braid(
                system, _alternating(j, i, m, sign))
            relations.append(Outcome(f"s{i + 1},s{j + 1} m={m} sign={sign:+d}", ok))
    for i in system.generators:
        one = eval_braid(system, ((i, 1), (i, -1)))
        relations.append(Outcome(f"s{i + 1} inverse", one == HeckeElt.one(system)))

    weak = []
    for y in system.elements():
        ok = True
        hy_inv = h_inv_standard(y)
        for k in range(len(y.word) + 1):
            x = system.from_word(y.word[:k])
            if h_mul(hy_inv, standard(x)) != costandard(y.inverse() * x):
                ok = False
        weak.append(Outcome(_case(y), ok))

    assoc = []
    for k in range(ASSOCIATIVITY_SAMPLES):
        a, b, c = (random_hecke(system, rng, 2) for _ in range(3))
        ok = h_mul(h_mul(a, b), c) == h_mul(a, h_mul(b, c)) and h_mul(HeckeElt.one(system), a) == a
        assoc.append(Outcome(str(k), ok))

    solve = []
    for k in range(ASSOCIATIVITY_SAMPLES):
        h = random_hecke(system, rng, 3)
        coords = expand_costandard(h)
        ok = coords == to_costandard(h) and from_costandard(system, coords) == h
        solve.append(Outcome(str(k), ok))
    return [
        ("longest_times_costandard", exchange),
        ("costandard_unitriangular", tri),
        ("braid_relations", relations),
        ("prefix_factorization", weak),
        ("associativity", assoc),
        ("costandard_expansion_routes", solve),
    ]


# -- parabolic duality ---------------------------------------------------------------

def _is_type_a(name: str) -> int | None:
    if name.startswith("A") and name[1:].isdigit():
        return int(name[1:])
    return None


def serre_parabolic(system: CoxeterSystem, subset: frozenset, seed: int) -> list[tuple[str, list[Outcome]]]:
    ctx = ParabolicContext(system, subset)
    rng = _rng(seed, system.name, "serre", subset_label(subset))
    duality = serre_duality_check(ctx)
    results: list[tuple[str, list[Outcome]]] = [("serre_duality", duality)]

    rank = _is_type_a(system.name)
    if rank is not None and subset == frozenset(range(len(subset))):
        r = len(subset) + 1
        results.append((
            "partition_levi",
            [Outcome(f"n={rank + 1} r={r} {o.case}", o.ok, o.detail) for o in duality],
        ))

    spot = []
    for k in range(RECOLLEMENT_SAMPLES):
        h = random_hecke(system, rng)
        lhs, rhs = ctx.proj_cos(h), ctx.proj_std(h_mul(ctx.ft_rel, h))
        spot.append(Outcome(str(k), lhs == rhs, "" if lhs == rhs else f"lhs={render(lhs)} rhs={render(rhs)}"))
    results.append(("serre_duality_random", spot))

    exchange = kernel_exchange_check(ctx)
    for name, outcomes in exchange.items():
        results.append((name, outcomes))
    results.append(("kernel_swap", kernel_swap_check(ctx)))
    restricted = restricted_twist_check(ctx)
    results.append(("restricted_full_twist", [Outcome(
        "all", restricted, "" if restricted else "standard part of the full twist on W_I is not the Levi full twist")]))
    cone = cone_containment_check(ctx)
    support = ", ".join(map(_case, cone["support"]))
    results.append(("cone_support", [Outcome(_case(ctx.u), cone["contained"], f"support={{{support}}}")]))
    results.append(("cone_avoids_parabolic", [Outcome(
        _case(ctx.u), cone["disjoint"], "" if cone["disjoint"] else "translates u^-1 v meet W_I")]))

    rec = []
    for k in range(RECOLLEMENT_SAMPLES):
        rec.append(Outcome(str(k), recollement_check(ctx, random_hecke(system, rng))))
    results.append(("recollement", rec))

    unit = []
    for x in ctx.levi.elements():
        for name, h in (("standard", standard(x)), ("costandard", costandard(x))):
            ok = ctx.proj_std(ctx.incl(h)) == h and ctx.proj_cos(ctx.incl(h)) == h
            unit.append(Outcome(f"{name} {_case(x)}", ok))
    results.append(("adjunction_unit", unit))

    ft_levi = ctx.incl(eval_braid(ctx.levi, gs.word_of(gs.full_twist(ctx.levi))))
    results.append(("levi_full_twist_embeds", [Outcome("all", ft_levi == ctx.ft_L)]))

    lin = []
    for k in range(LINEARITY_SAMPLES):
        a = random_hecke(ctx.levi, rng, 2)
        h = random_hecke(system, rng, 3)
        ah = h_mul(ctx.incl(a), h)
        ok = (ctx.proj_std(ah) == h_mul(a, ctx.proj_std(h))
              and ctx.proj_cos(ah) == h_mul(a, ctx.proj_cos(h))
              and ctx.incl(h_mul(a, a)) == h_mul(ctx.incl(a), ctx.incl(a)))
        lin.append(Outcome(str(k), ok))
    results.append(("levi_linearity", lin))
    return results


# -- orchestration ---------------------------------------------------------------------

@dataclass(frozen=True)
class Task:
    system: str
    suite: str
    subset: frozenset | None
    seed: int
    max_group_order: int


def run_task(task: Task) -> tuple[list[Entry], dict | None]:
    system = resolve_system(task.system, task.max_group_order)
    label = "-" if task.subset is None else subset_label(task.subset)
    if task.suite == "combinatorics":
        if task.subset is None:
            groups = combinatorics_system(system, task.seed)
        else:
            groups = combinatorics_parabolic(system, task.subset)
    elif task.suite == "braid":
        groups = braid_system(system, task.seed) if task.subset is None else braid_parabolic(system, task.subset)
    elif task.suite == "hecke":
        groups = hecke_system(system, task.seed)
    elif task.suite == "serre":
        groups = serre_parabolic(system, task.subset, task.seed)
    elif task.suite == "probe":
        return [], weak_order_probe(system)
    else:
        raise ValueError(f"unknown suite {task.suite!r}")
    entries = [
        Entry(system.name, label, task.suite, check, o.case, "pass" if o.ok else "fail", o.detail)
        for check, outcomes in groups
        for o in outcomes
    ]
    return entries, None


def plan(config: SuiteConfig) -> list[Task]:
    suites = list(SUITES) if "all" in config.suites else [s for s in SUITES if s in config.suites]
    tasks = []
    for name in config.systems:
        system = resolve_system(name, config.max_group_order)
        if config.parabolics == "all":
            subsets = all_subsets(system.rank)
        else:
            subsets = list(config.parabolics)
            for s in subsets:
                if not s <= set(system.generators):
                    raise ValueError(f"parabolic {subset_label(s)} is not a subset of the generators of {name}")
        for suite in suites:
            if suite in ("combinatorics", "braid", "hecke"):
                tasks.append(Task(name, suite, None, config.seed, config.max_group_order))
            if suite in ("combinatorics", "braid", "serre"):
                tasks.extend(Task(name, suite, s, config.seed, config.max_group_order) for s in subsets)
        if "combinatorics" in suites:
            tasks.append(Task(name, "probe", None, config.seed, config.max_group_order))
    return tasks


def run(config: SuiteConfig) -> Report:
    tasks = plan(config)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(run_task, tasks))
    else:
        results = [run_task(t) for t in tasks]
    names = [resolve_system(n, config.max_group_order).name for n in config.systems]
    report = Report(seed=config.seed, roster=names)
    probe: dict[str, dict] = {}
    for task, (entries, finding) in zip(tasks, results):
        report.entries.extend(entries)
        if finding is not None:
            probe[resolve_system(task.system, task.max_group_order).name] = finding
    if probe:
        report.findings[PROBE_TITLE] = probe
    return report
