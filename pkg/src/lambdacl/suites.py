"""Verification suites.  Each suite returns a list of Check records."""
from __future__ import annotations

import copy
import itertools
import math
import random
import time
from dataclasses import dataclass, field, asdict
from fractions import Fraction

from .augmentation import augmentation_power_lattice, power_lattice, power_lattice_bruteforce
from .bott import bott_checks
from .chartab import CATALOG, CharTable, IntegralityError, VirtualCharacter, load_table, pairing, product
from .classgroup import (build_classgroup, compose_on, h1_model, ind_subgroup,
                         apply_on, reduce_matrix, sigma_on_cl, sigma_on_quotient,
                         verify_cnt_duality, verify_unramified_formula)
from .lambda_ops import (adams, adams_composition_holds, adjoint_matrix, exterior_powers,
                         pullback_matrix, sigma_difference_expansion, symmetric_power, symmetric_powers)
from .lattice import AbGroup
from .local_cover import (check_chase_identity, check_different_identity, check_resolvent_structure,
                          resolvent_cokernel, setup_cover)
from .report import Check

SUITES = ("lambda-identities", "cnt-duality", "unramified-h1", "bott", "augmentation", "local-cover")

LAMBDA_TABLES = ("c2", "c3", "c5", "c2xc4", "s3", "d4", "q8", "a4")
UNRAMIFIED_TABLES = ("c5", "c2xc4", "c7")
UNRAMIFIED_GROUPS = ("25", "4,8", "0,49")


@dataclass
class SuiteConfig:
    suites: list[str] = field(default_factory=lambda: list(SUITES))
    seed: int = 0
    kmax: int = 5
    samples: int = 20
    diff_max: int = 4
    bott_k: int = 6
    bott_kprime: int = 8
    series_order: int = 12
    aug_max: int = 6
    cover_qs: tuple[int, ...] = (5, 7, 13)
    cover_emax: int = 6
    corrupt_expected: bool = False     # harness self-test: perturb one expected value

    def __post_init__(self):
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)} or all")
        for name in ("kmax", "samples", "diff_max", "bott_k", "bott_kprime", "series_order",
                     "aug_max", "cover_emax"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def echo(self) -> dict:
        d = asdict(self)
        d["cover_qs"] = list(self.cover_qs)
        return d


def expand_suites(names: list[str]) -> list[str]:
    out = []
    for n in names:
        for s in (SUITES if n == "all" else (n,)):
            if s not in out:
                out.append(s)
    return out


def _rng(config: SuiteConfig, suite: str) -> random.Random:
    return random.Random(f"{config.seed}/{suite}")


def random_character(table: CharTable, rng: random.Random) -> VirtualCharacter:
    return table.character([rng.randint(-3, 3) for _ in range(table.rank)])


def _coords(x: VirtualCharacter) -> list[int]:
    return list(x.coords)


# --- explicit symmetric square on S3 ---------------------------------------------------

def _s3_std_matrices() -> dict[str, list[list[Fraction]]]:
    """S3 on the sum-zero plane of Q^3, in the basis e1-e2, e2-e3, one matrix per cycle type."""
    basis = [(1, -1, 0), (0, 1, -1)]

    def coords(v):
        # v = a(e1-e2) + b(e2-e3): a = v1, b = v1 + v2
        return [Fraction(v[0]), Fraction(v[0] + v[1])]

    out = {}
    for perm in itertools.permutations(range(3)):
        fixed = sum(1 for i in range(3) if perm[i] == i)
        kind = {3: "1", 1: "2a", 0: "3a"}[fixed]
        if kind in out:
            continue
        cols = []
        for b in basis:
            img = [0, 0, 0]
            for i in range(3):
                img[perm[i]] = b[i]
            cols.append(coords(img))
        out[kind] = [[cols[c][r] for c in range(2)] for r in range(2)]
    return out


def _sym2_matrix(m):
    # basis x^2, xy, y^2 with x -> a x + c y, y -> b x + d y
    (a, b), (c, d) = m
    return [
        [a * a, a * b, b * b],
        [2 * a * c, a * d + b * c, 2 * b * d],
        [c * c, c * d, d * d],
    ]


def sym_square_oracle() -> dict[str, Fraction]:
    return {k: sum(_sym2_matrix(m)[i][i] for i in range(3)) for k, m in _s3_std_matrices().items()}


# --- suites ---------------------------------------------------------------------------

ANCHOR_SIGMA_INT = "sigma^k of a virtual character is a virtual character"
ANCHOR_SIGMA_SUM = "sigma^k(x + y) = sum_a sigma^a(x) sigma^(k-a)(y)"
ANCHOR_PSI_HOM = "psi^k is a ring endomorphism"
ANCHOR_PSI_COMP = "psi^k psi^l = psi^(kl)"
ANCHOR_DIFF = "sigma^i(x - y) = sum (-1)^u sigma^a(x) sigma^(b_1)(y) ... sigma^(b_u)(y)"
ANCHOR_SYM2 = "sigma^2 of the 2-dimensional S3 character equals the trace of its symmetric square"
ANCHOR_ADJ = "<adjoint psi^k x, y> = <x, psi^k y>"
ANCHOR_ADJ_PULL = "adjoint psi^k = phi_k' on abelian character rings"
ANCHOR_COMP = "sigma^k sigma^l = sigma^(kl) on Cl"
ANCHOR_IND = "sigma^k fixes classes induced from the trivial group"
ANCHOR_QUOT = "the projection to Cl / Ind commutes with sigma^k"
ANCHOR_H = "equivariant Hom group matches brute-force enumeration"
ANCHOR_BOTT_T = "theta^k(d) sum_{i<k'} d^(ik) = sum_{i<kk'} d^i"
ANCHOR_BOTT_I = "theta^k inverse identity in Q[[d-1]]"
ANCHOR_AUG = "I^m from iterated products equals the lattice of all m-fold products"
ANCHOR_AUG_IDX = "[I : I^m] is a power of l and l^a(m) I lies in I^m"


def _timed_check(id, anchor, inputs, fn):
    t0 = time.perf_counter()
    expected, actual = fn()
    return Check(id, anchor, inputs, expected, actual, time.perf_counter() - t0)


def suite_lambda_identities(config: SuiteConfig) -> list[Check]:
    rng = _rng(config, "lambda-identities")
    K = config.kmax
    out = []
    for name in LAMBDA_TABLES:
        t = load_table(name)
        xs = [random_character(t, rng) for _ in range(config.samples)]
        ys = [random_character(t, rng) for _ in range(config.samples)]
        for s, (x, y) in enumerate(zip(xs, ys)):
            tag = f"lambda/{name}/{s:02d}"
            inputs = {"table": name, "x": _coords(x), "y": _coords(y), "kmax": K}
            t0 = time.perf_counter()
            try:
                sx, sy, sxy = symmetric_powers(x, K), symmetric_powers(y, K), symmetric_powers(x + y, K)
                exterior_powers(x, K)
                integral = True
            except IntegralityError:
                integral = False
            out.append(Check(f"{tag}/sigma-integral", ANCHOR_SIGMA_INT, inputs, True, integral,
                             time.perf_counter() - t0))
            if not integral:
                continue
            for k in range(K + 1):
                def conv(k=k):
                    rhs = t.zero()
                    for a in range(k + 1):
                        rhs = rhs + product(sx[a], sy[k - a])
                    return _coords(rhs), _coords(sxy[k])
                out.append(_timed_check(f"{tag}/sigma-sum/k={k}", ANCHOR_SIGMA_SUM, inputs, conv))
            for k in range(1, K + 1):
                def hom(k=k):
                    exp = [_coords(adams(k, x) + adams(k, y)), _coords(product(adams(k, x), adams(k, y))),
                           _coords(t.trivial())]
                    act = [_coords(adams(k, x + y)), _coords(adams(k, product(x, y))), _coords(adams(k, t.trivial()))]
                    return exp, act
                out.append(_timed_check(f"{tag}/psi-hom/k={k}", ANCHOR_PSI_HOM, inputs, hom))
            for i in range(config.diff_max + 1):
                def diff(i=i):
                    d = sigma_difference_expansion(i, x, y)
                    return _coords(d.rhs), _coords(d.lhs)
                out.append(_timed_check(f"{tag}/difference/i={i}", ANCHOR_DIFF, inputs, diff))
        for k in range(1, K + 1):
            for l in range(1, K + 1):
                out.append(_timed_check(f"lambda/{name}/psi-compose/{k}x{l}", ANCHOR_PSI_COMP,
                                        {"table": name, "k": k, "l": l},
                                        lambda k=k, l=l: (True, adams_composition_holds(t, k, l))))
    s3 = load_table("s3")

    def sym2():
        oracle = sym_square_oracle()
        names = [c.name for c in s3.classes]
        vals = symmetric_power(2, s3.irreducible(2)).class_function().values
        return [oracle[n] for n in names], [v.to_rational() for v in vals]
    out.append(_timed_check("lambda/s3/sym-square-oracle", ANCHOR_SYM2, {"table": "s3", "char": [0, 0, 1]}, sym2))
    return out


def adjointness_checks(kmax: int = 8) -> list[Check]:
    out = []
    for name in CATALOG:
        t = load_table(name)

        def run(t=t):
            bad = []
            for k in range(1, kmax + 1):
                for a in range(t.rank):
                    for b in range(t.rank):
                        xa, yb = t.irreducible(a), t.irreducible(b)
                        lhs = pairing(adjoint_matrix(t, k).apply(xa), yb)
                        rhs = pairing(xa, adams(k, yb))
                        if lhs != rhs:
                            bad.append([k, a, b])
            return [], bad
        out.append(_timed_check(f"duality/{name}/adjoint", ANCHOR_ADJ, {"table": name, "kmax": kmax}, run))
    return out


def adjoint_pullback_checks(orders=(2, 3, 4, 5, 8, 12), kmax: int = 11) -> list[Check]:
    out = []
    for n in orders:
        t = load_table(f"c{n}")
        for k in range(1, kmax + 1):
            if math.gcd(k, n) != 1:
                continue
            kp = pow(k, -1, t.exponent) if t.exponent > 1 else 1
            out.append(_timed_check(f"duality/c{n}/adjoint-pullback/k={k}", ANCHOR_ADJ_PULL,
                                    {"table": f"c{n}", "k": k, "k_prime": kp},
                                    lambda t=t, k=k, kp=kp: (pullback_matrix(t, kp).as_lists(),
                                                             adjoint_matrix(t, k).as_lists())))
    return out


def classgroup_structure_checks(table_name: str, q: int, C: AbGroup, phi=None, kmax: int = 12) -> list[Check]:
    m = build_classgroup(load_table(table_name), q, C, phi)
    H, n, e = m.H, m.table.order, m.table.exponent
    tag = f"classgroup/{table_name}/q={q}/C={C}"
    ks = [k for k in range(1, kmax + 1) if math.gcd(k, n) == 1]
    out = []
    for k in ks:
        for l in ks:
            kl = (k * l - 1) % e + 1 if e > 1 else 1

            def comp(k=k, l=l, kl=kl):
                if not H.ngens:
                    return [], []
                return reduce_matrix(H, sigma_on_cl(kl, m)), compose_on(H, sigma_on_cl(k, m), sigma_on_cl(l, m))
            out.append(_timed_check(f"{tag}/compose/{k}x{l}", ANCHOR_COMP, {"k": k, "l": l}, comp))
    ind = ind_subgroup(m)
    for k in ks:
        def fixed(k=k):
            sig = sigma_on_cl(k, m)
            return [list(H.reduce(z)) for z in ind.generators], [list(apply_on(H, sig, z)) for z in ind.generators]
        out.append(_timed_check(f"{tag}/ind-fixed/k={k}", ANCHOR_IND, {"k": k}, fixed))

        def commutes(k=k):
            sig, sbar = sigma_on_cl(k, m), sigma_on_quotient(ind, k)
            Q = ind.quotient
            gens = [tuple(int(i == j) for j in range(H.ngens)) for i in range(H.ngens)]
            lhs = [list(Q.project(apply_on(H, sig, z))) for z in gens]
            rhs = [list(apply_on(Q.group, sbar, Q.project(z))) if Q.group.ngens else [] for z in gens]
            return rhs, lhs
        out.append(_timed_check(f"{tag}/quotient-commutes/k={k}", ANCHOR_QUOT, {"k": k}, commutes))
    return out


def brute_force_equivariant_count(table_name: str, q: int, C: AbGroup, phi) -> int:
    """Number of maps (irreducibles -> C) satisfying the Galois equivariance, by enumeration."""
    m = build_classgroup(load_table(table_name), q, C, phi)
    elems = list(C.elements())
    count = 0
    for cols in itertools.product(elems, repeat=m.table.rank):
        F = [[c[i] for c in cols] for i in range(C.ngens)]
        count += m.is_equivariant(F)
    return count


def suite_cnt_duality(config: SuiteConfig) -> list[Check]:
    out = adjointness_checks(8) + adjoint_pullback_checks()
    models = [("c5", 1, AbGroup((25,)), None), ("c3", 2, AbGroup((3,)), [[2]]),
              ("c2", 1, AbGroup((4,)), None), ("s3", 1, AbGroup((4, 0)), None),
              ("c2xc4", 3, AbGroup((4, 8)), None)]
    for name, q, C, phi in models:
        m = build_classgroup(load_table(name), q, C, phi)
        for k in range(1, 2 * m.table.exponent + 1):
            if math.gcd(k, m.table.order) == 1:
                for c in verify_cnt_duality(m, k).checks:
                    c.id = f"duality/{c.id}"
                    out.append(c)
    out += classgroup_structure_checks("c5", 1, AbGroup((25,)))
    out += classgroup_structure_checks("c2", 1, AbGroup((4,)))

    def h_c3():
        m = build_classgroup(load_table("c3"), 2, AbGroup((3,)), [[2]])
        return brute_force_equivariant_count("c3", 2, AbGroup((3,)), [[2]]), m.H.order()
    out.append(_timed_check("classgroup/c3/q=2/C=3/brute-force", ANCHOR_H, {"table": "c3", "q": 2, "C": "3", "phi": 2},
                            h_c3))
    return out


def suite_unramified(config: SuiteConfig) -> list[Check]:
    out = []
    for name in UNRAMIFIED_TABLES:
        t = load_table(name)
        for cspec in UNRAMIFIED_GROUPS:
            C = AbGroup.parse(cspec)
            m = build_classgroup(t, 1, C)
            h1 = h1_model(t, C)
            for k in range(1, 10):
                if math.gcd(k, t.order) != 1:
                    continue
                for h in h1.generators():
                    t0 = time.perf_counter()
                    checks = verify_unramified_formula(h, k, h1, m).checks
                    dt = (time.perf_counter() - t0) / len(checks)
                    for c in checks:
                        c.seconds = dt
                    out.extend(checks)
    return out


def suite_bott(config: SuiteConfig) -> list[Check]:
    out = []
    for k in range(1, config.bott_k + 1):
        for kp in range(1, config.bott_kprime + 1):
            t0 = time.perf_counter()
            r = bott_checks(k, kp, config.series_order)
            dt = time.perf_counter() - t0
            inputs = {"k": k, "k_prime": kp, "N": config.series_order}
            w = r.witnesses
            out.append(Check(f"bott/k={k}/kp={kp}/telescoping", ANCHOR_BOTT_T, inputs, True, r.telescoping, dt / 2))
            out.append(Check(f"bott/k={k}/kp={kp}/inverse", ANCHOR_BOTT_I, {**inputs, **w}, True, r.inverse, dt / 2))
    return out


def suite_augmentation(config: SuiteConfig) -> list[Check]:
    out = []
    plan = [("c2", config.aug_max), ("c3", min(5, config.aug_max)), ("c4", min(5, config.aug_max))]
    for name, mmax in plan:
        t = load_table(name)
        for m in range(1, mmax + 1):
            tag = f"augmentation/{name}/m={m}"

            def lattice_eq(m=m):
                it = power_lattice(t, m)
                bf = power_lattice_bruteforce(t, m)
                return [True, True], [it.contains_lattice(bf), bf.contains_lattice(it)]
            out.append(_timed_check(f"{tag}/bruteforce", ANCHOR_AUG, {"table": name, "m": m}, lattice_eq))

            def index(m=m):
                a = augmentation_power_lattice(t, m)
                return {"prime_power": True, "exponent_found": True}, \
                    {"prime_power": bool(a.index_is_prime_power), "exponent_found": a.exponent is not None}
            out.append(_timed_check(f"{tag}/index", ANCHOR_AUG_IDX, {"table": name, "m": m}, index))
            if name == "c2":
                def scalar(m=m):
                    a = augmentation_power_lattice(t, m)
                    return [2 ** (m - 1)], a.invariants
                out.append(_timed_check(f"{tag}/power-of-two", ANCHOR_AUG_IDX, {"table": name, "m": m}, scalar))
    return out


def suite_local_cover(config: SuiteConfig) -> list[Check]:
    out = []
    for q in config.cover_qs:
        for e in range(2, config.cover_emax + 1):
            if (q - 1) % e:
                continue
            cover = setup_cover(q, e)
            for j in range(-e, e + 1):
                t0 = time.perf_counter()
                res = resolvent_cokernel(cover, j)
                checks = check_chase_identity(cover, j, res).checks + check_resolvent_structure(cover, j, res).checks
                if j <= 0:
                    checks += check_different_identity(cover, j, res).checks
                dt = (time.perf_counter() - t0) / len(checks)
                for c in checks:
                    c.seconds = dt
                out.extend(checks)
    return out


RUNNERS = {
    "lambda-identities": suite_lambda_identities,
    "cnt-duality": suite_cnt_duality,
    "unramified-h1": suite_unramified,
    "bott": suite_bott,
    "augmentation": suite_augmentation,
    "local-cover": suite_local_cover,
}


def _corrupt(value):
    if isinstance(value, bool):
        return not value
    if isinstance(value, int):
        return value + 1
    if isinstance(value, list) and value:
        return [_corrupt(value[0])] + value[1:]
    if isinstance(value, dict) and value:
        k = sorted(value)[0]
        return {**value, k: _corrupt(value[k])}
    return ["corrupted", value]


def run_suites(config: SuiteConfig) -> list[Check]:
    checks: list[Check] = []
    for name in config.suites:
        got = RUNNERS[name](config)
        if config.corrupt_expected and got:
            target = min(got, key=lambda c: c.id)
            target.expected = _corrupt(copy.deepcopy(target.expected))
        checks.extend(got)
    return checks
