"""Right modules over a linear category and the abelian-category toolkit.

A module assigns a finite-dimensional rational vector space to every object
and a matrix to every basis morphism, contravariantly: for f: V -> U the
matrix X(f) maps X(U) to X(V), and X(g∘f) = X(f)·X(g).  Natural
transformations are solved as one global linear system, kernels and cokernels
are computed objectwise, and Ext^1 comes from a single syzygy of the canonical
cover by representables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .category import LinearCategory, Morphism, compose
from .linalg import (
    ZERO,
    EchelonBasis,
    RationalMatrix,
    Subspace,
    block_diag,
    image_basis,
    kernel_basis,
    solve,
    solve_matrix,
    unit_vec,
    vec,
)

ActionKey = tuple[str, str, int]  # (V, U, basis index of Hom(V, U))


class Module:
    """A right module: spaces X(U) plus action matrices X(b): X(U) -> X(V)."""

    def __init__(
        self,
        over: LinearCategory,
        dims: Mapping[str, int],
        action: Mapping[ActionKey, RationalMatrix],
    ):
        self.over = over
        self.dims = {u: int(dims.get(u, 0)) for u in over.objects}
        self.action: dict[ActionKey, RationalMatrix] = {}
        for v, u in over.hom_pairs():
            for i in range(over.hom_dim(v, u)):
                m = action.get((v, u, i))
                if m is None:
                    m = RationalMatrix.zeros(self.dims[v], self.dims[u])

                if (m.rows, m.cols) != (self.dims[v], self.dims[u]):
                    raise ValueError(f"action matrix shape mismatch at {(v, u, i)}")
                self.action[(v, u, i)] = m

    def dim(self, u: str) -> int:
        return self.dims[u]

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def act(self, m: Morphism) -> RationalMatrix:
        """Matrix of X(m): X(target) -> X(source), by bilinearity."""
        out = RationalMatrix.zeros(self.dims[m.source], self.dims[m.target])
        for i, c in enumerate(m.coords):
            if c:
                out = out + self.action[(m.source, m.target, i)].scale(c)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Module)
            and (self.over is other.over or self.over == other.over)
            and self.dims == other.dims
            and self.action == other.action
        )

    def __repr__(self):
        return f"Module(dims={self.dims})"


class ModuleMap:
    """A natural transformation between modules over the same category."""

    def __init__(self, source: Module, target: Module, components: Mapping[str, RationalMatrix]):
        if not (source.over is target.over or source.over == target.over):
            raise ValueError("module map endpoints live over different categories")
        self.source = source
        self.target = target
        self.components: dict[str, RationalMatrix] = {}
        for u in source.over.objects:
            m = components.get(u)
            if m is None:
                m = RationalMatrix.zeros(target.dims[u], source.dims[u])
            if (m.rows, m.cols) != (target.dims[u], source.dims[u]):
                raise ValueError(f"component shape mismatch at {u}")
            self.components[u] = m

    def component(self, u: str) -> RationalMatrix:
        return self.components[u]

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.components.values())

    def is_iso(self) -> bool:
        from .linalg import is_iso as _is_iso

        return all(_is_iso(m) for m in self.components.values())

    def is_epi(self) -> bool:
        return all(image_basis(m).dim == m.rows for m in self.components.values())

    def is_mono(self) -> bool:
        return all(kernel_basis(m).is_zero() for m in self.components.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModuleMap)
            and self.source == other.source
            and self.target == other.target
            and self.components == other.components
        )

    def __repr__(self):
        shapes = {u: (m.rows, m.cols) for u, m in self.components.items()}
        return f"ModuleMap({shapes})"


@dataclass
class Submodule:
    """Per-object subspaces of a module, stable under the action."""

    of: Module
    spaces: dict[str, Subspace]

    def dim(self, u: str) -> int:
        return self.spaces[u].dim

    def total_dim(self) -> int:
        return sum(s.dim for s in self.spaces.values())

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def is_full(self) -> bool:
        return all(s.is_full() for s in self.spaces.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Submodule)
            and self.of == other.of
            and self.spaces == other.spaces
        )


def full_submodule(x: Module) -> Submodule:
    return Submodule(x, {u: Subspace.full(x.dims[u]) for u in x.over.objects})


def zero_submodule(x: Module) -> Submodule:
    return Submodule(x, {u: Subspace.zero(x.dims[u]) for u in x.over.objects})


def submodule_sum(a: Submodule, b: Submodule) -> Submodule:
    if a.of is not b.of and a.of != b.of:
        raise ValueError("submodules of different modules")
    return Submodule(a.of, {u: a.spaces[u].sum(b.spaces[u]) for u in a.spaces})


def validate_module(x: Module) -> list[str]:
    """Identity actions and contravariance on all composable basis pairs."""
    c = x.over
    problems = []
    for u in c.objects:
        if x.act(c.identity(u)) != RationalMatrix.identity(x.dims[u]):
            problems.append(f"identity does not act as identity at {u}")
    for w in c.objects:
        for v in c.objects:
            for u in c.objects:
                dg, df = c.hom_dim(v, u), c.hom_dim(w, v)
                if not (dg and df):
                    continue
                for gi in range(dg):
                    g = c.basis_morphism(v, u, gi)
                    for fi in range(df):
                        f = c.basis_morphism(w, v, fi)
                        gf = compose(c, g, f)
                        if x.act(gf) != x.action[(w, v, fi)] * x.action[(v, u, gi)]:
                            problems.append(
                                f"contravariance fails at g={c.label_of(v, u, gi)}, "
                                f"f={c.label_of(w, v, fi)}"
                            )
    return problems


def validate_module_map(f: ModuleMap) -> list[str]:
    """Naturality squares on all basis morphisms."""
    c = f.source.over
    problems = []
    for v, u in c.hom_pairs():
        for i in range(c.hom_dim(v, u)):
            lhs = f.target.action[(v, u, i)] * f.components[u]
            rhs = f.components[v] * f.source.action[(v, u, i)]
            if lhs != rhs:
                problems.append(f"naturality fails at {c.label_of(v, u, i)}")
    return problems


def validate_submodule(s: Submodule) -> list[str]:
    """Stability of the subspaces under every basis action."""
    x = s.of
    problems = []
    for v, u in x.over.hom_pairs():
        for i in range(x.over.hom_dim(v, u)):
            m = x.action[(v, u, i)]
            tgt = s.spaces[v]
            for bv in s.spaces[u].basis_vectors():
                if not tgt.contains(m.apply(bv)):
                    problems.append(
                        f"subspace at {u} not stable under {x.over.label_of(v, u, i)}"
                    )
                    break
    return problems


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def zero_module(c: LinearCategory) -> Module:
    return Module(c, {}, {})


def yoneda(c: LinearCategory, u: str) -> Module:
    """The representable Hom(-, u) with precomposition action."""
    if u not in c.objects:
        raise ValueError(f"unknown object {u}")
    dims = {v: c.hom_dim(v, u) for v in c.objects}
    action: dict[ActionKey, RationalMatrix] = {}
    for w, v in c.hom_pairs():
        dv, dw = dims[v], dims[w]
        for i in range(c.hom_dim(w, v)):
            cols = [c.comp_coords(w, v, u, j, i) for j in range(dv)]
            action[(w, v, i)] = RationalMatrix(cols, dv, dw).transpose() if dv else RationalMatrix.zeros(dw, 0)
    return Module(c, dims, action)


def yoneda_map(c: LinearCategory, m: Morphism) -> ModuleMap:
    """Postcomposition by m as a map of representables yoneda(source) -> yoneda(target)."""
    ys, yt = yoneda(c, m.source), yoneda(c, m.target)
    comps = {}
    for w in c.objects:
        cols = [compose(c, m, b).coords for b in c.basis_morphisms(w, m.source)]
        comps[w] = (
            RationalMatrix(cols, len(cols), yt.dims[w]).transpose()
            if cols
            else RationalMatrix.zeros(yt.dims[w], 0)
        )
    return ModuleMap(ys, yt, comps)


def identity_map(x: Module) -> ModuleMap:
    return ModuleMap(x, x, {u: RationalMatrix.identity(x.dims[u]) for u in x.over.objects})


def zero_map(x: Module, y: Module) -> ModuleMap:
    return ModuleMap(x, y, {})


def map_compose(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    if g.source != f.target:
        raise ValueError("module maps not composable")
    return ModuleMap(
        f.source, g.target, {u: g.components[u] * f.components[u] for u in f.components}
    )


def map_add(f: ModuleMap, g: ModuleMap) -> ModuleMap:
    return ModuleMap(
        f.source, f.target, {u: f.components[u] + g.components[u] for u in f.components}
    )


def map_scale(c, f: ModuleMap) -> ModuleMap:
    return ModuleMap(f.source, f.target, {u: f.components[u].scale(c) for u in f.components})


def flatten_map(f: ModuleMap) -> tuple[Fraction, ...]:
    """All component entries in fixed object order (for rank computations)."""
    out: list[Fraction] = []
    for u in f.source.over.objects:
        for row in f.components[u].data:
            out.extend(row)
    return tuple(out)


def direct_sum(xs: Sequence[Module], over: LinearCategory | None = None):
    """(sum module, inclusion maps, projection maps)."""
    if not xs:
        if over is None:
            raise ValueError("empty direct sum needs an explicit category")
        z = zero_module(over)
        return z, [], []
    c = xs[0].over
    dims = {u: sum(x.dims[u] for x in xs) for u in c.objects}
    action = {}
    for v, u in c.hom_pairs():
        for i in range(c.hom_dim(v, u)):
            action[(v, u, i)] = block_diag([x.action[(v, u, i)] for x in xs])
    total = Module(c, dims, action)
    inclusions, projections = [], []
    for k, x in enumerate(xs):
        incl, proj = {}, {}
        for u in c.objects:
            before = sum(y.dims[u] for y in xs[:k])
            rows = []
            for r in range(x.dims[u]):
                rows.append(unit_vec(dims[u], before + r))
            incl[u] = RationalMatrix(rows, x.dims[u], dims[u]).transpose()
            proj[u] = RationalMatrix(rows, x.dims[u], dims[u])
        inclusions.append(ModuleMap(x, total, incl))
        projections.append(ModuleMap(total, x, proj))
    return total, inclusions, projections


# ---------------------------------------------------------------------------
# hom spaces
# ---------------------------------------------------------------------------

def hom_modules(x: Module, y: Module) -> list[ModuleMap]:
    """Basis of the natural transformations x -> y (one global linear system)."""
    if not (x.over is y.over or x.over == y.over):
        raise ValueError("hom between modules over different categories")
    c = x.over
    offsets: dict[str, int] = {}
    n = 0
    for u in c.objects:
        offsets[u] = n
        n += y.dims[u] * x.dims[u]
    if n == 0:
        return []
    rows: list[list[Fraction]] = []
    for v, u in c.hom_pairs():
        for i in range(c.hom_dim(v, u)):
            ym = y.action[(v, u, i)]  # y(U) -> y(V)
            xm = x.action[(v, u, i)]  # x(U) -> x(V)
            # equation (r, cc): sum_s ym[r,s]·a_U[s,cc] - sum_s a_V[r,s]·xm[s,cc] = 0
            for r in range(y.dims[v]):
                for cc in range(x.dims[u]):
                    row = [ZERO] * n
                    base_u = offsets[u]
                    for s in range(y.dims[u]):
                        coef = ym[r, s]
                        if coef:
                            row[base_u + s * x.dims[u] + cc] += coef
                    base_v = offsets[v]
                    for s in range(x.dims[v]):
                        coef = xm[s, cc]
                        if coef:
                            row[base_v + r * x.dims[v] + s] -= coef
                    if any(row):
                        rows.append(row)
    if rows:
        ker = kernel_basis(RationalMatrix(rows, len(rows), n))
        basis_vecs = ker.basis_vectors()
    else:
        basis_vecs = [unit_vec(n, i) for i in range(n)]
    out = []
    for bv in basis_vecs:
        comps = {}
        for u in c.objects:
            ru, cu = y.dims[u], x.dims[u]
            base = offsets[u]
            comps[u] = RationalMatrix(
                [bv[base + r * cu : base + (r + 1) * cu] for r in range(ru)], ru, cu
            )
        out.append(ModuleMap(x, y, comps))
    return out


def hom_dim(x: Module, y: Module) -> int:
    return len(hom_modules(x, y))


def coordinates_in_hom_basis(
    f: ModuleMap, basis: Sequence[ModuleMap]
) -> tuple[Fraction, ...] | None:
    """Coefficients of f as a combination of the given hom basis, or None."""
    target = flatten_map(f)
    if not basis:
        return () if not any(target) else None
    mat = RationalMatrix([flatten_map(b) for b in basis]).transpose()
    return solve(mat, target)


# ---------------------------------------------------------------------------
# kernels, cokernels, images, quotients
# ---------------------------------------------------------------------------

def kernel(f: ModuleMap) -> tuple[Module, ModuleMap]:
    """Objectwise kernel with the induced action and its inclusion."""
    x = f.source
    c = x.over
    bases = {u: kernel_basis(f.components[u]) for u in c.objects}
    return _module_from_subspaces(x, bases)


def _module_from_subspaces(x: Module, bases: Mapping[str, Subspace]) -> tuple[Module, ModuleMap]:
    c = x.over
    dims = {u: bases[u].dim for u in c.objects}
    incl = {u: bases[u].basis.transpose() for u in c.objects}
    action = {}
    for v, u in c.hom_pairs():
        for i in range(c.hom_dim(v, u)):
            img = x.action[(v, u, i)] * incl[u]
            coords = solve_matrix(incl[v], img)
            if coords is None:
                raise ValueError("subspaces are not action-stable")
            action[(v, u, i)] = coords
    sub = Module(c, dims, action)
    return sub, ModuleMap(sub, x, incl)


def sub_to_module(s: Submodule) -> tuple[Module, ModuleMap]:
    return _module_from_subspaces(s.of, s.spaces)


def cokernel(f: ModuleMap) -> tuple[Module, ModuleMap]:
    """Objectwise cokernel with the induced action and its projection."""
    return quotient_by(image(f))


def image(f: ModuleMap) -> Submodule:
    return Submodule(
        f.target, {u: image_basis(f.components[u]) for u in f.target.over.objects}
    )


def quotient_by(s: Submodule) -> tuple[Module, ModuleMap]:
    x = s.of
    c = x.over
    maps = {u: s.spaces[u].quotient_maps() for u in c.objects}
    dims = {u: maps[u][0].rows for u in c.objects}
    action = {}
    for v, u in c.hom_pairs():
        for i in range(c.hom_dim(v, u)):
            action[(v, u, i)] = maps[v][0] * x.action[(v, u, i)] * maps[u][1]
    quot = Module(c, dims, action)
    proj = ModuleMap(x, quot, {u: maps[u][0] for u in c.objects})
    return quot, proj


def cyclic_submodule(x: Module, u: str, v: Sequence) -> Submodule:
    """The submodule generated by the element v of X(u)."""
    v = vec(v)
    c = x.over
    spaces = {}
    for w in c.objects:
        eb = EchelonBasis(x.dims[w])
        for i in range(c.hom_dim(w, u)):
            eb.insert(x.action[(w, u, i)].apply(v))
        spaces[w] = eb.to_subspace()
    return Submodule(x, spaces)


def generated_submodule(x: Module, gens: Sequence[tuple[str, Sequence]]) -> Submodule:
    """Submodule generated by elements (object, vector)."""
    out = zero_submodule(x)
    for u, v in gens:
        out = submodule_sum(out, cyclic_submodule(x, u, v))
    return out


# ---------------------------------------------------------------------------
# covers, Ext^1, projectivity
# ---------------------------------------------------------------------------

def free_cover(x: Module) -> tuple[ModuleMap, list[str]]:
    """Canonical epi from a finite sum of representables, one per basis element."""
    c = x.over
    summands: list[Module] = []
    objs: list[str] = []
    maps: list[ModuleMap] = []
    for u in c.objects:
        yu = None
        for a in range(x.dims[u]):
            yu = yoneda(c, u) if yu is None else yu
            comps = {}
            for v in c.objects:
                cols = [x.action[(v, u, j)].col(a) for j in range(c.hom_dim(v, u))]
                comps[v] = (
                    RationalMatrix(cols, len(cols), x.dims[v]).transpose()
                    if cols
                    else RationalMatrix.zeros(x.dims[v], 0)
                )
            summands.append(yu)
            objs.append(u)
            maps.append(ModuleMap(yu, x, comps))
    total, _, projections = direct_sum(summands, over=c)
    comps = {}
    for v in c.objects:
        m = RationalMatrix.zeros(x.dims[v], 0)
        for part in maps:
            m = m.hstack(part.components[v])
        comps[v] = m
    cover = ModuleMap(total, x, comps)
    return cover, objs


def ext1(l: Module, x: Module) -> int:
    """dim Ext^1(l, x) from one syzygy: coker(Hom(P, x) -> Hom(K, x))."""
    cover, _ = free_cover(l)
    return _ext1_from_cover(cover, x)


def _ext1_from_cover(cover: ModuleMap, x: Module) -> int:
    syz, incl = kernel(cover)
    hom_kx = hom_modules(syz, x)
    if not hom_kx:
        return 0
    hom_px = hom_modules(cover.source, x)
    eb = EchelonBasis(len(flatten_map(zero_map(syz, x))))
    for alpha in hom_px:
        eb.insert(flatten_map(map_compose(alpha, incl)))
    return len(hom_kx) - eb.dim


def is_projective(x: Module) -> tuple[bool, ModuleMap | None]:
    """Does the canonical cover split?  Returns the section when it does."""
    if x.is_zero():
        return True, identity_map(x)
    cover, _ = free_cover(x)
    sections = hom_modules(x, cover.source)
    if not sections:
        return False, None
    cols = [flatten_map(map_compose(cover, s)) for s in sections]
    target = flatten_map(identity_map(x))
    sol = solve(RationalMatrix(cols, len(cols), len(target)).transpose(), target)
    if sol is None:
        return False, None
    sigma = zero_map(x, cover.source)
    for c, s in zip(sol, sections):
        if c:
            sigma = map_add(sigma, map_scale(c, s))
    return True, sigma


def trace_span(c: LinearCategory, through: Sequence[str], v: str) -> Subspace:
    """Span of all composites v -> g -> v with g drawn from `through`."""
    eb = EchelonBasis(c.hom_dim(v, v))
    for g in through:
        for a in c.basis_morphisms(v, g):
            for b in c.basis_morphisms(g, v):
                eb.insert(compose(c, b, a).coords)
    return eb.to_subspace()


def module_trace(family: Sequence[Module], x: Module) -> Submodule:
    """Sum of the images of all maps from the family members into x."""
    out = zero_submodule(x)
    for a in family:
        for f in hom_modules(a, x):
            out = submodule_sum(out, image(f))
    return out


def tor1(x: Module, b) -> Module:
    """Tor_1(x, b) = ker( K ⊗ b -> P ⊗ b ) for the canonical presentation of x."""
    from .functors import tensor_map

    cover, _ = free_cover(x)
    syz, incl = kernel(cover)
    tincl = tensor_map(incl, b)
    tor, _ = kernel(tincl)
    return tor
