"""Recursive construction of centred tree-decompositions, with verifiers.

The builder turns an inductive argument into an executable algorithm: below an
independence-number threshold the whole graph becomes a single bag; above it,
vertices whose closed neighborhoods are "alpha-dense" are set aside, balanced
ball-separators are demanded for two maximum independent sets, and the
construction recurses into components before stitching everything onto a hub
bag that contains the closed neighborhood of the tracked set X.  The honest
thresholds are astronomically large, so they are parameters defaulting to the
formula values, overridable for desk-scale experiments; correctness of the
output is established by independent validation, never by trusting constants.

The module also houses the subdivided-clique obstruction check (no k balls of
radius 1 can balance the branch vertices of the 3-path subdivision of
K_{2k+2}), an exact-rational quasi-isometry verifier, and the corpus scan
collecting radius-1 versus radius-2 centre statistics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence, Union

from .centred import CentreCertificate, centre_number
from .errors import HypothesisViolation, InputError, InternalError, ScaleError
from .graph import Graph, bits_of, complete, mask_of, set_of, two_subdivision
from .independence import alpha
from .separators import (
    WeightFunction,
    admits_kr_balanced_separators_indicator,
    find_centred_balanced_separator,
)
from .treedecomp import TreeDecomposition

_MAX_FORMULA_EXPONENT = 1 << 16


@dataclass(frozen=True)
class ConstructionParams:
    """Thresholds steering the recursive builder.

    ``formula_d`` is the exact big-integer formula value (512*20k)^((2k+2)^(2t));
    the three thresholds default to their formula values (1/(20k), 20dk, 10dk)
    and may be overridden for desk-scale runs.  Overrides are recorded so every
    output can echo them.
    """

    k: int
    t: int = 1
    z_fraction_denominator: Optional[int] = None
    base_alpha_threshold: Optional[int] = None
    x_alpha_cap: Optional[int] = None
    formula_d: int = field(init=False, repr=False)
    overridden: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"separator centre budget k must be >= 1, got {self.k}")
        if self.t < 1:
            raise InputError(f"biclique parameter t must be >= 1, got {self.t}")
        exponent = (2 * self.k + 2) ** (2 * self.t)
        if exponent > _MAX_FORMULA_EXPONENT:
            raise InputError(
                f"formula constant is not materializable: exponent {exponent} exceeds "
                f"{_MAX_FORMULA_EXPONENT}"
            )
        d = (512 * 20 * self.k) ** exponent
        object.__setattr__(self, "formula_d", d)
        overridden = []
        if self.z_fraction_denominator is None:
            object.__setattr__(self, "z_fraction_denominator", 20 * self.k)
        else:
            overridden.append("z_fraction_denominator")
        if self.base_alpha_threshold is None:
            object.__setattr__(self, "base_alpha_threshold", 20 * d * self.k)
        else:
            overridden.append("base_alpha_threshold")
        if self.x_alpha_cap is None:
            object.__setattr__(self, "x_alpha_cap", 10 * d * self.k)
        else:
            overridden.append("x_alpha_cap")
        object.__setattr__(self, "overridden", tuple(overridden))
        if self.z_fraction_denominator < 1:
            raise InputError("z_fraction_denominator must be >= 1")
        if self.base_alpha_threshold < 0 or self.x_alpha_cap < 0:
            raise InputError("alpha thresholds must be nonnegative")
        if self.x_alpha_cap > self.base_alpha_threshold:
            raise InputError("x_alpha_cap must not exceed base_alpha_threshold")

    @property
    def uses_formula_thresholds(self) -> bool:
        return not self.overridden


@dataclass(frozen=True)
class CentredDecomposition:
    """A validating tree-decomposition with one bag-induced radius-2 certificate per bag."""

    decomposition: TreeDecomposition
    certificates: tuple[CentreCertificate, ...]
    hub_node: int
    realized_k: int
    guard_tripped: bool


def alpha_dense_set(g: Graph, x: Iterable[int], params: ConstructionParams) -> frozenset[int]:
    """Vertices whose closed neighborhood is alpha-dense in g or in x.

    v qualifies when denom * alpha(N[v]) >= alpha(V) or
    denom * alpha(N[v] ∩ x) >= alpha(x); all comparisons in exact integers.
    """
    x_mask = g._check_subset(x)
    denom = params.z_fraction_denominator
    a_g = alpha(g).value
    a_x = alpha(g, set_of(x_mask)).value
    out = 0
    for v in range(g.n):
        closed = g.adj[v] | (1 << v)
        if denom * alpha(g, set_of(closed)).value >= a_g:
            out |= 1 << v
        elif denom * alpha(g, set_of(closed & x_mask)).value >= a_x:
            out |= 1 << v
    return set_of(out)


def extend_to_alpha(g: Graph, x: Iterable[int], target_alpha: int) -> frozenset[int]:
    """Grow x by ascending-id vertices that raise its independence number.

    Returns x unchanged when alpha(x) already meets the target.  A single
    ascending pass can stall below the target (independence gains are not
    monotone), so a completion phase walks the lexicographically smallest
    maximum independent set of g, which always reaches the target exactly.
    """
    x_mask = g._check_subset(x)
    cur = alpha(g, set_of(x_mask)).value
    if cur >= target_alpha:
        return set_of(x_mask)
    if alpha(g).value < target_alpha:
        raise InputError(
            f"target alpha {target_alpha} exceeds the graph's independence number"
        )
    for v in range(g.n):
        if x_mask >> v & 1:
            continue
        grown = alpha(g, set_of(x_mask | (1 << v))).value
        if grown > cur:
            x_mask |= 1 << v
            cur = grown
            if cur == target_alpha:
                return set_of(x_mask)
    for v in sorted(alpha(g).witness):
        if x_mask >> v & 1:
            continue
        x_mask |= 1 << v
        cur = alpha(g, set_of(x_mask)).value
        if cur == target_alpha:
            return set_of(x_mask)
    raise InternalError("independent-set completion failed to reach the target")


def _single_bag_decomposition(g: Graph, guard_tripped: bool) -> CentredDecomposition:
    bag = frozenset(range(g.n))
    _, cert = centre_number(g, bag, 2, within=bag)
    td = TreeDecomposition((bag,), ())
    return CentredDecomposition(td, (cert,), 0, cert.size, guard_tripped)


def _lift_certificate(cert: CentreCertificate, inv: list[int]) -> CentreCertificate:
    return CentreCertificate(
        frozenset(inv[v] for v in cert.centres),
        cert.radius,
        frozenset(inv[v] for v in cert.covered),
        None if cert.within is None else frozenset(inv[v] for v in cert.within),
    )


def build_coarse_decomposition(
    g: Graph, x: Iterable[int], params: ConstructionParams
) -> CentredDecomposition:
    """Recursively build a centred tree-decomposition whose hub bag contains N[x].

    Raises HypothesisViolation (carrying the independent set, in g's ids) when
    some recursion level finds a maximum independent set with no balanced
    separator made of at most k radius-1 balls.  Under overridden thresholds a
    progress guard may fire, in which case the affected branch is emitted as a
    single bag and the output is stamped guard_tripped.
    """
    x_set = set_of(g._check_subset(x))
    if alpha(g, x_set).value > params.x_alpha_cap:
        raise InputError("alpha(x) exceeds x_alpha_cap")
    result = _build(g, x_set, params)
    hub_bag = result.decomposition.bags[result.hub_node]
    if not g.ball(x_set, 1) <= hub_bag:  # pragma: no cover - internal consistency
        raise InternalError("hub bag lost the closed neighborhood of x")
    return result


def _build(g: Graph, x: frozenset[int], params: ConstructionParams) -> CentredDecomposition:
    a_g = alpha(g).value
    if a_g <= params.base_alpha_threshold:
        return _single_bag_decomposition(g, False)
    cap = params.x_alpha_cap
    if alpha(g, x).value < cap:
        x = extend_to_alpha(g, x, cap)

    z = alpha_dense_set(g, x, params)
    keep = frozenset(range(g.n)) - z
    gp, to_new = g.induced_subgraph(keep)
    inv = sorted(keep)
    xp = frozenset(to_new[v] for v in x & keep)

    i_g = alpha(gp).witness
    i_x = alpha(gp, xp).witness
    wit_g = find_centred_balanced_separator(
        gp, WeightFunction.indicator(gp.n, i_g), params.k, 1
    )
    if wit_g is None:
        raise HypothesisViolation(frozenset(inv[v] for v in i_g), params.k, 1)
    wit_x = find_centred_balanced_separator(
        gp, WeightFunction.indicator(gp.n, i_x), params.k, 1
    )
    if wit_x is None:
        raise HypothesisViolation(frozenset(inv[v] for v in i_x), params.k, 1)

    s_hat = frozenset(inv[v] for v in wit_g.centres | wit_x.centres)
    s = frozenset(inv[v] for v in wit_g.separator | wit_x.separator)
    comps = [
        frozenset(inv[v] for v in comp)
        for comp in gp.components(wit_g.separator | wit_x.separator)
    ]

    x_mask = mask_of(x)
    hub_bag = g.ball(x, 1) | s | z
    bags: list[frozenset[int]] = [hub_bag]
    certs: list[Optional[CentreCertificate]] = [None]
    edges: list[tuple[int, int]] = []
    guard = False

    for comp in comps:
        cpr = comp | s | z
        x_c = ((comp | s) & x) | s_hat | z
        tripped = (
            alpha(g, cpr).value >= a_g or alpha(g, x_c).value > cap
        )
        if tripped and params.uses_formula_thresholds:  # pragma: no cover
            raise InternalError("progress inequality failed under formula thresholds")
        sub, tr = g.induced_subgraph(cpr)
        sub_inv = sorted(cpr)
        x_c_new = frozenset(tr[v] for v in x_c)

        # the stitching step depends on N_g[x] ∩ C' ⊆ N_{C'}[x_c]; check, don't assume
        ball_xc_sub = sub.ball_mask(mask_of(x_c_new), 1)
        ball_xc_old = mask_of(sub_inv[v] for v in bits_of(ball_xc_sub))
        if g.ball_mask(x_mask, 1) & mask_of(cpr) & ~ball_xc_old:  # pragma: no cover
            raise InternalError("stitching containment failed")

        if tripped:
            child = _single_bag_decomposition(sub, True)
        else:
            try:
                child = _build(sub, x_c_new, params)
            except HypothesisViolation as violation:
                raise violation.relabel(dict(enumerate(sub_inv))) from None
        child_hub_bag = child.decomposition.bags[child.hub_node]
        if not set_of(ball_xc_sub) <= child_hub_bag:  # pragma: no cover
            raise InternalError("child hub bag misses the tracked neighborhood")

        offset = len(bags)
        for bag in child.decomposition.bags:
            bags.append(frozenset(sub_inv[v] for v in bag))
        for cert in child.certificates:
            certs.append(_lift_certificate(cert, sub_inv))
        for a, b in child.decomposition.edges:
            edges.append((a + offset, b + offset))
        edges.append((0, offset + child.hub_node))
        guard = guard or child.guard_tripped

    _, hub_cert = centre_number(g, hub_bag, 2, within=hub_bag)
    certs[0] = hub_cert
    realized = max(c.size for c in certs)
    if params.uses_formula_thresholds and realized > 20 * params.formula_d * params.k:
        raise InternalError("realized centre count exceeded the formula bound")  # pragma: no cover
    return CentredDecomposition(
        TreeDecomposition(tuple(bags), tuple(edges)), tuple(certs), 0, realized, guard
    )


# -- subdivided-clique obstruction ------------------------------------------------


@dataclass(frozen=True)
class ObstructionReport:
    """Exhaustive evidence that no small ball-separator balances the branch set."""

    k: int
    vertex_count: int
    centre_sets_checked: int
    balanced_found: int
    branch_pairs_at_distance_3: int
    surviving_pair_checks: int

    @property
    def ok(self) -> bool:
        return self.balanced_found == 0


def check_subdivided_clique_obstruction(k: int) -> ObstructionReport:
    """Check that the 2-subdivision of K_{2k+2} defeats every (k,1) ball separator.

    Builds the subdivision, takes X = the branch vertices, enumerates every
    nonempty centre set of size <= k, and asserts that none of their radius-1
    balls is balanced for indicator(X).  The intermediate facts of the
    argument (branch vertices pairwise at distance 3; surviving branch pairs
    keep their private path) are asserted along the way.
    """
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if k > 2:
        raise ScaleError("check_subdivided_clique_obstruction", k, 2)
    base = complete(2 * k + 2)
    base_edges = base.edges()
    g, branch = two_subdivision(base)
    internals = {
        (u, v): (base.n + 2 * i, base.n + 2 * i + 1)
        for i, (u, v) in enumerate(base_edges)
    }
    branch_sorted = sorted(branch)
    pairs3 = 0
    for u, v in combinations(branch_sorted, 2):
        if g.distance(u, v) != 3:  # pragma: no cover - structural fact
            raise InternalError("branch vertices are not pairwise at distance 3")
        pairs3 += 1

    x_mask = mask_of(branch)
    x_size = len(branch)
    checked = 0
    balanced_found = 0
    pair_checks = 0
    for size in range(1, k + 1):
        for centres in combinations(range(g.n), size):
            checked += 1
            sep = g.ball_mask(mask_of(centres), 1)
            surviving = [b for b in branch_sorted if not sep >> b & 1]
            if len(surviving) < x_size - size:  # pragma: no cover - structural fact
                raise InternalError("a radius-1 ball covered two branch vertices")
            comps = g.components_masks(sep)
            for a, b in combinations(surviving, 2):
                w1, w2 = internals[(a, b)]
                if sep >> w1 & 1 or sep >> w2 & 1:  # pragma: no cover
                    raise InternalError("path interior removed without its endpoint")
                comp_a = next(c for c in comps if c >> a & 1)
                if not comp_a >> b & 1:  # pragma: no cover
                    raise InternalError("surviving branch pair was separated")
                pair_checks += 1
            if all(2 * (c & x_mask).bit_count() <= x_size for c in comps):
                balanced_found += 1
    return ObstructionReport(k, g.n, checked, balanced_found, pairs3, pair_checks)


# -- quasi-isometry verifier ------------------------------------------------------


@dataclass(frozen=True)
class QuasiIsometryViolation:
    """The first inequality the checked map breaks, with its witnesses."""

    kind: str  # "lower" | "upper" | "density"
    u: Optional[int] = None
    v: Optional[int] = None
    vertex: Optional[int] = None
    source_distance: object = None
    image_distance: object = None
    bound: object = None

    def __str__(self):
        if self.kind == "density":
            return (
                f"density violation at target vertex {self.vertex}: nearest image "
                f"at distance {self.image_distance} > {self.bound}"
            )
        side = "below lower bound" if self.kind == "lower" else "above upper bound"
        return (
            f"pair ({self.u},{self.v}): image distance {self.image_distance} "
            f"{side} {self.bound} (source distance {self.source_distance})"
        )


def verify_quasi_isometry(
    g: Graph,
    h: Graph,
    mapping: Union[Mapping[int, int], Sequence[int]],
    q: Union[Fraction, int, str],
) -> Optional[QuasiIsometryViolation]:
    """Check the two distance inequalities and q-density, exactly.

    q is a positive rational; all finite arithmetic uses Fractions, so there
    is no tolerance anywhere.  Returns None when the map is a q-quasi-isometry
    and otherwise the first violation in scan order (pairs by ascending ids,
    then density by target vertex).
    """
    q = Fraction(q)
    if q <= 0:
        raise InputError(f"q must be positive, got {q}")
    phi = []
    for v in range(g.n):
        try:
            image = mapping[v]
        except (KeyError, IndexError):
            raise InputError(f"map is not total: vertex {v} has no image") from None
        h._check_vertex(image)
        phi.append(image)
    dist_g = [g.distances_from(u) for u in range(g.n)]
    dist_h = [h.distances_from(u) for u in range(h.n)]
    q_inv = 1 / q
    for u in range(g.n):
        row = dist_g[u]
        for v in range(u, g.n):
            dg = row[v]
            dh = dist_h[phi[u]][phi[v]]
            lower = q_inv * dg - q
            upper = q * dg + q
            if dh < lower:
                return QuasiIsometryViolation(
                    "lower", u=u, v=v, source_distance=dg, image_distance=dh, bound=lower
                )
            if dh > upper:
                return QuasiIsometryViolation(
                    "upper", u=u, v=v, source_distance=dg, image_distance=dh, bound=upper
                )
    for target in range(h.n):
        row = dist_h[target]
        nearest = min((row[p] for p in phi), default=float("inf"))
        if nearest > q:
            return QuasiIsometryViolation(
                "density", vertex=target, image_distance=nearest, bound=q
            )
    return None


# -- corpus scan -------------------------------------------------------------------


SCAN_FIELDS = (
    "graph",
    "n",
    "k",
    "admits",
    "realized_k_r2",
    "max_bag_r1_centres",
    "guard_tripped",
)


def scan_corpus(
    corpus: Sequence[tuple[str, Graph]],
    k: int,
    params: Optional[ConstructionParams] = None,
    admits_max_n: Optional[int] = None,
) -> list[dict]:
    """Collect radius-1 versus radius-2 centre evidence over a graph corpus.

    Per graph: decide whether every indicator weighting has a balanced
    (k,1)-centred separator; if so, build the centred decomposition and record
    the realized radius-2 centre count plus the bag-induced radius-1 centre
    number of every bag.  Failures become rows, never abort the scan.
    """
    if params is None:
        params = ConstructionParams(
            k, z_fraction_denominator=2, base_alpha_threshold=4, x_alpha_cap=2
        )
    rows = []
    for name, g in corpus:
        row = {f: "" for f in SCAN_FIELDS}
        row["graph"] = name
        row["n"] = g.n
        row["k"] = k
        try:
            ok, _ = admits_kr_balanced_separators_indicator(g, k, 1, max_n=admits_max_n)
            row["admits"] = "true" if ok else "false"
            if ok:
                built = build_coarse_decomposition(g, frozenset(), params)
                row["realized_k_r2"] = built.realized_k
                row["max_bag_r1_centres"] = max(
                    centre_number(g, bag, 1, within=bag)[0]
                    for bag in built.decomposition.bags
                )
                row["guard_tripped"] = "true" if built.guard_tripped else "false"
        except (ScaleError, InputError, HypothesisViolation) as exc:
            row["admits"] = f"error:{type(exc).__name__}"
        rows.append(row)
    return rows


def builtin_corpus(name: str) -> list[tuple[str, Graph]]:
    """Named graph corpora for scans and demos."""
    from .graph import cycle, path, random_tree, complete_bipartite

    if name == "trees-cycles":
        out = []
        for n in (2, 4, 6, 8, 10):
            out.append((f"path-{n}", path(n)))
        for s in (3, 5, 7):
            out.append((f"star-{s}", complete_bipartite(1, s)))
        for n, seed in ((8, 1), (10, 2), (12, 3), (14, 4)):
            out.append((f"tree-{n}-s{seed}", random_tree(n, seed)))
        for n in (3, 4, 5, 6, 7, 8, 10, 12):
            out.append((f"cycle-{n}", cycle(n)))
        return out
    raise InputError(f"unknown builtin corpus {name!r}")
