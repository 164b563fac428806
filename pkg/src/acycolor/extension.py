"""Extending a valid coloring of G-e to G by local recoloring.

Each handler plays one branch of the recoloring analysis: it first tries to
assign any valid candidate to the uncolored edge, and only when none exists
performs the branch's scripted moves (every move is re-checked against the
real alternating-path machinery, never trusted blindly).  The scripts either
finish the edge or provably reduce to an easier branch; the driver loops
until done.

A failed script check raises _ScriptError, which rolls the coloring back and
enters a bounded local repair search.  The scripts are total on sparse
inputs, so repairs indicate a bug or a precondition violation and are
counted for the caller to assert on.
"""

from __future__ import annotations

from .configurations import Configuration
from .coloring import Palette, PartialColoring
from .errors import ExtensionExhausted
from .graph import Graph, edge_key

MAX_ROUNDS = 16
REPAIR_NODE_CAP = 200_000

#: every scripted branch, for coverage accounting
BRANCH_TAGS = (
    "pendant",
    "b1-adjacent",
    "b1-degree2",
    "b1-degree2-recolor",
    "claim2",
    "claim2-recolor",
    "b2-shared2",
    "b2-shared1",
    "b2-shared1-swap",
    "claim4",
    "claim5-sub1",
    "claim5-bothY",
    "claim5-main",
    "claim5-sub2",
    "claim6",
    "claim7",
    "claim67-mu",
    "claim9-lemma1",
    "claim9-try45",
    "claim9-pair",
    "claim12-subsetQ",
    "claim12-two-candidates",
    "claim12-uw-valid",
    "claim12-va",
    "claim13-lemma1",
    "claim13-try",
    "claim13-pair",
    "step1-i",
    "step1-ii",
    "step2-valid",
    "step3",
)

_DONE = "done"
_CONTINUE = "continue"


class _ScriptError(Exception):
    """A scripted move failed its check; triggers rollback + repair."""


class _Ext:
    """Working state for one extension call, with an undo journal."""

    def __init__(self, graph: Graph, col: PartialColoring, palette: Palette,
                 v: int, u: int, counts, debug: bool):
        self.graph = graph
        self.col = col
        self.palette = palette
        self.v = v
        self.u = u
        self.counts = counts
        self.debug = debug
        self.journal: list[tuple[str, int, int, int]] = []

    # -- bookkeeping -------------------------------------------------------

    def tag(self, name: str) -> None:
        if self.counts is not None:
            self.counts[name] = self.counts.get(name, 0) + 1

    def rollback(self) -> None:
        for op, a, b, c in reversed(self.journal):
            if op == "assign":
                self.col.unassign(a, b)
            else:
                self.col.assign(a, b, c, check_valid=False)
        self.journal.clear()

    def _assign(self, a: int, b: int, c: int) -> None:
        self.col.assign(a, b, c, check_valid=False)
        self.journal.append(("assign", a, b, c))

    def _unassign(self, a: int, b: int) -> int:
        old = self.col.unassign(a, b)
        self.journal.append(("unassign", a, b, old))
        return old

    # -- checked moves -------------------------------------------------------

    def scan_assign(self, a: int, b: int) -> bool:
        """Assign the smallest valid candidate to the uncolored edge ab."""
        col = self.col
        for c in col.candidate_colors(a, b, self.palette):
            if col._valid_unchecked(a, b, c):
                self._assign(a, b, c)
                self._debug_check()
                return True
        return False

    def rescan(self) -> bool:
        return self.scan_assign(self.v, self.u)

    def recolor_checked(self, a: int, b: int, c: int, tag: str | None = None) -> None:
        """Recolor a colored edge; the script asserts this move is valid."""
        self._unassign(a, b)
        self.assign_checked(a, b, c, tag)

    def assign_checked(self, a: int, b: int, c: int, tag: str | None = None) -> None:
        col = self.col
        if c in col.colors_at(a) or c in col.colors_at(b):
            raise _ScriptError(f"color {c} not a candidate for {edge_key(a, b)}")
        if not col._valid_unchecked(a, b, c):
            raise _ScriptError(f"color {c} invalid for {edge_key(a, b)}")
        self._assign(a, b, c)
        if tag:
            self.tag(tag)
        self._debug_check()

    def try_recolor(self, a: int, b: int, c: int) -> bool:
        """Recolor if c is a candidate and valid; otherwise restore and say no."""
        col = self.col
        old = self._unassign(a, b)
        if (c in col.colors_at(a) or c in col.colors_at(b)
                or not col._valid_unchecked(a, b, c)):
            self._assign(a, b, old)
            return False
        self._assign(a, b, c)
        self._debug_check()
        return True

    def unchecked_assign(self, a: int, b: int, c: int) -> None:
        if c in self.col.colors_at(a) or c in self.col.colors_at(b):
            raise _ScriptError(f"color {c} not a candidate for {edge_key(a, b)}")
        self._assign(a, b, c)

    def cycle_through(self, x: int, c1: int, c2: int) -> bool:
        """Does the (c1,c2) component through x close into a cycle?"""
        ray = self.col._ray(x, c1, c2)
        return bool(ray) and ray[-1] == x

    def _debug_check(self) -> None:
        if not self.debug:
            return
        from .graph import Graph as _G
        from .verification import verify

        assignment = self.col.assignment()
        sub = _G.from_edge_list(self.graph.n, sorted(assignment))
        report = verify(sub, assignment, self.palette.size)
        if not report.proper or not report.acyclic:
            raise _ScriptError("debug revalidation failed mid-script")

    # -- shared set views ------------------------------------------------------

    def fv(self) -> set[int]:
        return self.col.colors_at(self.v)

    def fu(self) -> set[int]:
        return self.col.colors_at(self.u)

    def seen(self, a: int, b: int) -> set[int]:
        return self.col.seen_from(a, b)


def extend_coloring(graph: Graph, edge: tuple[int, int], col: PartialColoring,
                    palette: Palette, cfg: Configuration | None = None, *,
                    counts=None, repair_log=None, debug: bool = False) -> PartialColoring:
    """Color `edge` in `graph`, given `col` valid on graph minus the edge.

    May recolor other edges.  `cfg` carries the local pattern that selected
    the edge (None for pendant edges); `counts`/`repair_log` collect branch
    and repair statistics.
    """
    a, b = edge_key(*edge)
    if col.color_of(a, b) is not None:
        raise ValueError(f"edge {edge} already colored")

    if cfg is not None and cfg.kind != "B1":
        v, u = cfg.pivot, cfg.co_pivot
    elif graph.degree(a) == 1 or graph.degree(b) == 1:
        v, u = (b, a) if graph.degree(a) == 1 else (a, b)
    elif cfg is not None and cfg.kind == "B1":
        v, u = cfg.pivot, cfg.co_pivot
    else:
        v, u = a, b

    ctx = _Ext(graph, col, palette, v, u, counts, debug)
    try:
        _dispatch(ctx, cfg)
        if col.color_of(a, b) is None:
            raise _ScriptError("script finished without coloring the edge")
        return col
    except _ScriptError as exc:
        ctx.rollback()
        if repair_log is not None:
            repair_log.append((edge_key(a, b), str(exc)))
        if _repair(ctx):
            return col
        raise ExtensionExhausted(
            f"could not extend coloring across edge {edge_key(a, b)}: {exc}"
        ) from exc


def _dispatch(ctx: _Ext, cfg: Configuration | None) -> None:
    graph, v, u = ctx.graph, ctx.v, ctx.u
    if graph.degree(u) == 1 or graph.degree(v) == 1:
        _pendant(ctx)
        return
    if cfg is not None and cfg.kind == "B1":
        _b1(ctx)
        return
    if cfg is None:
        raise _ScriptError("no configuration supplied for a non-pendant edge")
    _config_loop(ctx, cfg)


def _pendant(ctx: _Ext) -> None:
    # no cycle can pass through a degree-1 endpoint: any candidate works
    if not ctx.rescan():
        raise _ScriptError("pendant edge has no candidate color")
    ctx.tag("pendant")


# -- section 3.2: a degree-2 vertex exists -------------------------------------


def _b1(ctx: _Ext) -> None:
    graph, col, v, u = ctx.graph, ctx.col, ctx.v, ctx.u
    if graph.degree(v) == 2 and graph.degree(u) == 2:
        if not ctx.rescan():
            raise _ScriptError("adjacent degree-2 pair: no valid candidate")
        ctx.tag("b1-adjacent")
        return

    # x has at most three neighbours of degree > 3; y is its degree-2 neighbour
    x, y = (v, u) if graph.degree(u) == 2 else (u, v)
    if graph.degree(y) != 2:
        raise _ScriptError("degree-2 removal without a degree-2 endpoint")
    if ctx.rescan():
        ctx.tag("b1-degree2")
        return
    yprime = min(graph.neighbors(y) - {x})
    zeta = col.color_of(y, yprime)
    if zeta is None or zeta not in col.colors_at(x):
        raise _ScriptError("shared color missing despite failed candidate scan")
    high = {t for t in graph.neighbors(x) if graph.degree(t) > 3}
    f_high = {col.color_of(x, t) for t in high if col.color_of(x, t) is not None}
    if len(f_high) > 3:
        raise _ScriptError("removal vertex has too many high-degree neighbours")
    if zeta in f_high:
        blocked = ctx.seen(y, yprime) | f_high
        choices = [c for c in ctx.palette if c not in blocked]
        if not choices:
            raise _ScriptError("no recoloring frees the pendant-side edge")
        ctx.recolor_checked(y, yprime, choices[0], tag="b1-degree2-recolor")
    if not ctx.rescan():
        raise _ScriptError("degree-2 extension stuck after normalization")
    ctx.tag("b1-degree2")


# -- section 3.1: pivot in B2..B5 -----------------------------------------------


def _config_loop(ctx: _Ext, cfg: Configuration) -> None:
    graph, col, v, u = ctx.graph, ctx.col, ctx.v, ctx.u
    for _ in range(MAX_ROUNDS):
        if ctx.rescan():
            return
        if graph.degree(u) == 2:
            _claim2(ctx)
            return
        if cfg.kind == "B2":
            _b2(ctx, cfg)
            return
        # co-pivot has degree 3: two colored edges besides uv
        shared = col.colors_at(u) & col.colors_at(v)
        if len(shared) == 2:
            outcome = _case1(ctx, cfg)
        elif len(shared) == 1:
            outcome = _case2(ctx, cfg)
        else:
            raise _ScriptError("disjoint endpoint colors but no valid candidate")
        if outcome is _DONE:
            return
    raise _ScriptError("extension loop exceeded its round budget")


def _claim2(ctx: _Ext) -> None:
    """Co-pivot of degree 2: push the shared color onto a low-degree spoke."""
    graph, col, v, u = ctx.graph, ctx.col, ctx.v, ctx.u
    vprime = min(graph.neighbors(u) - {v})
    zeta = col.color_of(u, vprime)
    if zeta is None or zeta not in ctx.fv():
        raise _ScriptError("claim2: shared color missing despite failed scan")
    d_v = {
        col.color_of(v, x)
        for x in graph.neighbors(v)
        if x != u and graph.degree(x) > 3 and col.color_of(v, x) is not None
    }
    if len(d_v) > 2:
        raise _ScriptError("claim2: more than two high-degree spokes")
    if zeta in d_v:
        blocked = ctx.seen(u, vprime) | d_v
        choices = [c for c in ctx.palette if c not in blocked]
        if not choices:
            raise _ScriptError("claim2: no color frees the co-pivot edge")
        ctx.recolor_checked(u, vprime, choices[0], tag="claim2-recolor")
    if not ctx.rescan():
        raise _ScriptError("claim2: still stuck after normalization")
    ctx.tag("claim2")


def _b2(ctx: _Ext, cfg: Configuration) -> None:
    """Degree-3 pivot with both named spokes of degree at most 4."""
    graph, col, v, u = ctx.graph, ctx.col, ctx.v, ctx.u
    a = cfg.n_double_prime[0]
    v1 = next(x for x in cfg.n_prime if x != u)
    fu, fv = ctx.fu(), ctx.fv()
    shared = fu & fv
    if len(shared) == 2:
        cand = col.candidate_colors(v, u, ctx.palette)
        alpha = next((c for c in cand if c not in ctx.seen(v, a)), None)
        if alpha is None:
            raise _ScriptError("b2: every candidate meets the heavy spoke")
        beta_blocked = ctx.seen(v, v1) | fu | fv | {alpha}
        beta = next((c for c in ctx.palette if c not in beta_blocked), None)
        if beta is None:
            raise _ScriptError("b2: no recoloring color for the light spoke")
        ctx.recolor_checked(v, v1, beta, tag="b2-shared2")
        if not ctx.rescan():
            raise _ScriptError("b2: stuck after breaking the double overlap")
        return
    if len(shared) != 1:
        raise _ScriptError("b2: unexpected overlap size")
    zeta = next(iter(shared))
    if col.color_of(v, v1) != zeta:
        # shared color sits on the heavy spoke; only a degree-4 co-pivot
        # can reach this point, and moving its matching edge fixes it
        if graph.degree(u) != 4:
            raise _ScriptError("b2: misplaced shared color with light co-pivot")
        x = col.partner(u, zeta)
        ctx.recolor_checked(u, x, col.color_of(v, v1), tag="b2-shared1-swap")
    if not ctx.rescan():
        raise _ScriptError("b2: stuck with shared color on the light spoke")
    ctx.tag("b2-shared1")


def _n_prime_colors(ctx: _Ext, cfg: Configuration) -> set[int]:
    col, v, u = ctx.col, ctx.v, ctx.u
    out = set()
    for x in cfg.n_prime:
        if x == u:
            continue
        c = col.color_of(v, x)
        if c is not None:
            out.add(c)
    return out


def _case1(ctx: _Ext, cfg: Configuration):
    """Both co-pivot colors appear at the pivot."""
    col, v, u = ctx.col, ctx.v, ctx.u
    fu = ctx.fu()
    fprime = _n_prime_colors(ctx, cfg)
    if fu <= fprime:
        return _claim4(ctx)
    if cfg.kind == "B3":
        return _case1_b3(ctx, cfg, fprime)
    if cfg.kind == "B4":
        return _case1_b4(ctx, cfg)
    raise _ScriptError("case1: a B5 pivot cannot miss the all-light spoke set")


def _claim4(ctx: _Ext):
    """Both shared colors on light spokes: vacate one and rescan."""
    col, v, u = ctx.col, ctx.v, ctx.u
    q1 = min(ctx.fu())
    n1 = col.partner(v, q1)
    blocked = ctx.seen(v, n1) | ctx.fu() | ctx.fv()
    choices = [c for c in ctx.palette if c not in blocked]
    if not choices:
        raise _ScriptError("claim4: nothing to vacate the light spoke with")
    ctx.recolor_checked(v, n1, choices[0], tag="claim4")
    if not ctx.rescan():
        raise _ScriptError("claim4: stuck after vacating a light spoke")
    return _DONE


def _split_copivot(ctx: _Ext, one: int):
    """The co-pivot's two colored edges: z along `one`, w the other spoke."""
    col, u = ctx.col, ctx.u
    z = col.partner(u, one)
    fu = ctx.fu()
    two = next(iter(fu - {one}))
    w = col.partner(u, two)
    return z, w, two


def _case1_b3(ctx: _Ext, cfg: Configuration, fprime: set[int]):
    graph, col, v, u = ctx.graph, ctx.col, ctx.v, ctx.u
    fu = ctx.fu()
    on_heavy = sorted(c for c in fu if col.partner(v, c) in cfg.n_double_prime)
    if not on_heavy:
        raise _ScriptError("case1/B3 entered without a heavy-spoke overlap")
    one = on_heavy[0]
    z, w, two = _split_copivot(ctx, one)
    y_set = set(ctx.palette) - (fu | ctx.fv())
    s_uz, s_uw = ctx.seen(u, z), ctx.seen(u, w)

    if s_uz != y_set and s_uw != y_set:
        diff = sorted(y_set - s_uz)
        if not diff:
            raise _ScriptError("claim5.1: free-color pool exhausted")
        ctx.recolor_checked(u, z, diff[0], tag="claim5-sub1")
        if not ctx.rescan():
            raise _ScriptError("claim5.1: stuck after freeing one side")
        return _DONE

    if s_uz == y_set and s_uw == y_set:
        p, q = sorted(fprime)
        ctx.tag("claim5-bothY")
        if two in (p, q):
            ctx.recolor_checked(u, z, p if q == two else q)
        else:
            ctx.recolor_checked(u, z, p)
            ctx.recolor_checked(u, w, q)
        return _CONTINUE  # both co-pivot colors now on light spokes

    uprime, udouble = (z, w) if s_uz == y_set else (w, z)
    gamma = col.color_of(u, uprime)
    if col.partner(v, gamma) in cfg.n_double_prime:
        tcand = sorted(fprime - fu)
        if not tcand:
            raise _ScriptError("claim5: no light color free for the pinned side")
        ctx.recolor_checked(u, uprime, tcand[0], tag="claim5-main")
        if ctx.rescan():
            return _DONE
    diff = sorted(y_set - ctx.seen(u, udouble))
    if not diff:
        raise _ScriptError("claim5.2: free-color pool exhausted")
    ctx.recolor_checked(u, udouble, diff[0], tag="claim5-sub2")
    if not ctx.rescan():
        raise _ScriptError("claim5.2: stuck after freeing the loose side")
    return _DONE


def _case1_b4(ctx: _Ext, cfg: Configuration):
    graph, col, v, u = ctx.graph, ctx.col, ctx.v, ctx.u
    a = cfg.n_double_prime[0]
    one = col.color_of(v, a)
    fu, fv = ctx.fu(), ctx.fv()
    if one not in fu:
        raise _ScriptError("case1/B4 entered without the heavy-spoke overlap")
    z, w, two = _split_copivot(ctx, one)
    x_set = set(ctx.palette) - fv  # fu is a subset of fv here

    free_z = sorted(x_set - ctx.seen(u, z))
    if free_z:
        ctx.recolor_checked(u, z, free_z[0], tag="claim6")
        if not ctx.rescan():
            raise _ScriptError("claim6: stuck after freeing the pinned side")
        return _DONE

    free_w = sorted(x_set - ctx.seen(u, w))
    if free_w:
        ctx.recolor_checked(u, w, free_w[0], tag="claim7")
        if ctx.rescan():
            return _DONE
        # both uncolored-pool colors are pinned along va; rotate a light
        # spoke color onto va and re-open the vacated spoke
        fprime_cols = fv - {one}
        s_va = ctx.seen(v, a)
        extra = sorted(s_va - x_set)
        if len(extra) > 1:
            raise _ScriptError("claim7: heavy spoke sees two light colors")
        if extra:
            s = extra[0]
            if s not in fprime_cols:
                raise _ScriptError("claim7: unexpected extra color on va")
            v1s = col.partner(v, s)
            t3cand = sorted(fprime_cols - {s} - ctx.seen(v, v1s))
            if not t3cand:
                raise _ScriptError("claim7: no rotation color available")
            t3 = t3cand[0]
        else:
            t3 = min(fprime_cols)
        v2 = col.partner(v, t3)
        ctx._unassign(v, v2)
        ctx.recolor_checked(v, a, t3)
        if not ctx.scan_assign(v, v2):
            raise _ScriptError("claim7: vacated spoke has no valid candidate")
        if not ctx.rescan():
            raise _ScriptError("claim7: stuck after the rotation")
        return _DONE

    mu_cand = sorted((fv - {one, two}) - (ctx.seen(u, z) | ctx.seen(u, w)))
    if not mu_cand:
        raise _ScriptError("claims 6+7: no light color misses both sides")
    ctx.recolor_checked(u, z, mu_cand[0], tag="claim67-mu")
    return _CONTINUE  # both co-pivot colors now on light spokes


def _case2(ctx: _Ext, cfg: Configuration):
    """Exactly one co-pivot color appears at the pivot."""
    col, v, u = ctx.col, ctx.v, ctx.u
    shared = ctx.fu() & ctx.fv()
    one = next(iter(shared))
    if col.partner(v, one) not in cfg.n_double_prime:
        raise _ScriptError("case2: shared color on a light spoke but no candidate")
    if cfg.kind == "B3":
        return _case2_b3(ctx, cfg, one)
    if cfg.kind == "B4":
        return _case2_b4(ctx, cfg, one)
    raise _ScriptError("case2: B5 pivot cannot hold the shared color")


def _case2_b3(ctx: _Ext, cfg: Configuration, one: int):
    graph, col, v, u = ctx.graph, ctx.col, ctx.v, ctx.u
    a = col.partner(v, one)
    z, w, two = _split_copivot(ctx, one)
    b = next(x for x in cfg.n_double_prime if x != a)
    three = col.color_of(v, b)
    fv = ctx.fv()
    light = sorted(fv - {one, three})
    four, five = light
    v1, v2 = col.partner(v, four), col.partner(v, five)

    s_uz = ctx.seen(u, z)
    in_z = sorted(set(light) & s_uz)
    if len(in_z) >= 2:
        raise _ScriptError("claim9: both light colors pinned on the one-side")
    if len(in_z) == 1:
        other = four if in_z[0] == five else five
        ctx.recolor_checked(u, z, other, tag="claim9-lemma1")
        if not ctx.rescan():
            raise _ScriptError("claim9: stuck after the light swap")
        return _DONE

    for c in (four, five):
        if ctx.try_recolor(u, z, c):
            ctx.tag("claim9-try45")
            if not ctx.rescan():
                raise _ScriptError("claim9: stuck after a light recolor")
            return _DONE

    if one not in ctx.seen(u, w):
        # swap the shared color onto the w-side and free the z-side
        ctx._unassign(u, z)
        ctx._unassign(u, w)
        ctx.unchecked_assign(u, w, one)
        ctx.unchecked_assign(u, z, four)
        if ctx.cycle_through(u, one, four):
            raise _ScriptError("claim9: pair move closed a cycle")
        ctx._debug_check()
        ctx.tag("claim9-pair")
        return _CONTINUE  # both co-pivot colors now at the pivot

    ctx._unassign(u, w)  # discard; re-colored below with the pivot color
    q_pool = sorted(c for c in ctx.palette if c not in fv and c not in ctx.seen(u, w))
    if len(q_pool) < 3 or two not in q_pool:
        raise _ScriptError("claim10: free pool too small")
    substep_subset = None
    for vt, vtcol in ((v1, four), (v2, five)):
        if ctx.seen(v, vt) <= set(q_pool):
            substep_subset = (vt, vtcol)
            break
    if substep_subset is not None:
        vt, vtcol = substep_subset
        gamma = min(set(q_pool) - ctx.seen(v, vt))
        ctx.recolor_checked(v, vt, gamma, tag="claim12-subsetQ")
    else:
        both = sorted(set(q_pool) - ctx.seen(v, v1) - ctx.seen(v, v2))
        if not both:
            raise _ScriptError("claim12: no color open at both light spokes")
        gamma = both[0]
        ctx.tag("claim12-two-candidates")
        if ctx.try_recolor(v, v1, gamma):
            vt, vtcol = v1, four
        else:
            ctx.recolor_checked(v, v2, gamma)
            vt, vtcol = v2, five
    if gamma in col.colors_at(w) or gamma in col.colors_at(u):
        raise _ScriptError("claim12: chosen color blocked at the discarded spoke")
    ok = col._valid_unchecked(u, w, gamma)
    ctx._assign(u, w, gamma)
    if ok:
        ctx.tag("claim12-uw-valid")
        ctx._debug_check()
        return _CONTINUE  # both co-pivot colors now at the pivot
    if substep_subset is not None:
        raise _ScriptError("claim12: cycle through a spoke that avoids the pool")
    ctx.recolor_checked(v, a, vtcol, tag="claim12-va")
    if not ctx.rescan():
        raise _ScriptError("claim12: stuck after breaking the cycle at va")
    return _DONE


def _case2_b4(ctx: _Ext, cfg: Configuration, one: int):
    graph, col, v, u = ctx.graph, ctx.col, ctx.v, ctx.u
    a = cfg.n_double_prime[0]
    if col.color_of(v, a) != one:
        raise _ScriptError("case2/B4: shared color not on the heavy spoke")
    z, w, two = _split_copivot(ctx, one)
    fv = ctx.fv()
    z_cols = sorted(fv - {one})

    s_uz = ctx.seen(u, z)
    if two not in s_uz:
        free = sorted(set(z_cols) - s_uz)
        if not free:
            raise _ScriptError("claim13: light colors all pinned on the one-side")
        ctx.recolor_checked(u, z, free[0], tag="claim13-lemma1")
        if not ctx.rescan():
            raise _ScriptError("claim13: stuck after the light recolor")
        return _DONE

    free_z = sorted(set(z_cols) - s_uz)
    if not free_z:
        raise _ScriptError("claim13: one-side pins every light color")
    for mu in free_z:
        if ctx.try_recolor(u, z, mu):
            ctx.tag("claim13-try")
            if not ctx.rescan():
                raise _ScriptError("claim13: stuck after a light recolor")
            return _DONE

    if one not in ctx.seen(u, w):
        mu0 = free_z[0]
        ctx._unassign(u, z)
        ctx._unassign(u, w)
        ctx.unchecked_assign(u, w, one)
        ctx.unchecked_assign(u, z, mu0)
        if ctx.cycle_through(u, one, mu0):
            raise _ScriptError("claim13: pair move closed a cycle")
        ctx._debug_check()
        ctx.tag("claim13-pair")
        return _CONTINUE

    ctx._unassign(u, w)
    q_pool = sorted(c for c in ctx.palette if c not in fv and c not in ctx.seen(u, w))
    if len(q_pool) < 3 or two not in q_pool:
        raise _ScriptError("claim14: free pool too small")

    s_va = ctx.seen(v, a)
    pinned = sorted(set(z_cols) & s_va)
    if len(pinned) > 1:
        raise _ScriptError("claim15: heavy spoke sees two light colors")
    if pinned:
        alpha = pinned[0]
        v_t = col.partner(v, alpha)
        bcand = sorted(set(z_cols) - {alpha} - ctx.seen(v, v_t))
        if not bcand:
            raise _ScriptError("assumption 2: no backup color available")
        beta = bcand[0]
    else:
        beta = z_cols[0]

    substep_subset = None
    for c in z_cols:
        vi = col.partner(v, c)
        if ctx.seen(v, vi) <= set(q_pool):
            substep_subset = (vi, c)
            break
    if substep_subset is not None:
        vt, vtcol = substep_subset
        gamma = min(set(q_pool) - ctx.seen(v, vt))
        ctx.recolor_checked(v, vt, gamma, tag="step1-i")
    else:
        vt, vtcol = col.partner(v, beta), beta
        gamma = None
        for g in sorted(set(q_pool) - ctx.seen(v, vt)):
            if ctx.try_recolor(v, vt, g):
                gamma = g
                break
        if gamma is None:
            raise _ScriptError("step1: no pool color recolors the chosen spoke")
        ctx.tag("step1-ii")

    if gamma in col.colors_at(w) or gamma in col.colors_at(u):
        raise _ScriptError("step2: chosen color blocked at the discarded spoke")
    ok = col._valid_unchecked(u, w, gamma)
    ctx._assign(u, w, gamma)
    if ok:
        ctx.tag("step2-valid")
        ctx._debug_check()
        return _CONTINUE
    if substep_subset is not None:
        raise _ScriptError("step2: cycle through a spoke that avoids the pool")
    ctx.recolor_checked(v, a, beta, tag="step3")
    if not ctx.rescan():
        raise _ScriptError("step3: stuck after breaking the cycle at va")
    return _DONE


# -- bounded local repair --------------------------------------------------------


def _repair(ctx: _Ext) -> bool:
    """Try all candidates, then single-edge recolorings within distance two
    of the target edge, nesting at most three deep."""
    graph, col, v, u = ctx.graph, ctx.col, ctx.v, ctx.u
    near = {v, u}
    for x in tuple(near):
        near |= set(graph.neighbors(x))
    edges_near = sorted(
        e for e in graph.edges()
        if (e[0] in near or e[1] in near) and e != edge_key(v, u)
    )
    budget = [REPAIR_NODE_CAP]

    def attempt(depth: int) -> bool:
        if budget[0] <= 0:
            return False
        budget[0] -= 1
        if ctx.scan_assign(v, u):
            return True
        if depth == 0:
            return False
        for (x, y) in edges_near:
            old = col.color_of(x, y)
            if old is None:
                continue
            for c in ctx.palette:
                if c == old:
                    continue
                if budget[0] <= 0:
                    return False
                if not ctx.try_recolor(x, y, c):
                    continue
                if attempt(depth - 1):
                    return True
                ctx._unassign(x, y)
                ctx._assign(x, y, old)
        return False

    if attempt(3):
        ctx.tag("repair")
        return True
    ctx.rollback()
    return False
