"""Independent brute-force oracles.

Everything here is deliberately written against the raw presentations
(structure constants, span arithmetic, global hom systems) rather than the
induction/localization machinery it cross-checks:

* corner algebra eAe and the corner functor X -> Xe, the classical
  recollement equivalence used to certify quotient-category hom dimensions;
* the multiplication-map criterion for epimorphisms, via direct span
  computation of the middle tensor product in each hom component;
* restriction-hom bijectivity/fullness checked as one rank computation;
* a bounded, deterministic family of quotients of representables used as an
  enumeration corpus.
"""

from __future__ import annotations

from .category import LinearCategory, Morphism, compose
from .linalg import ONE, ZERO, EchelonBasis, image_basis, solve_matrix
from .modules import (
    Module,
    cyclic_submodule,
    hom_modules,
    quotient_by,
    submodule_sum,
    yoneda,
)


# ---------------------------------------------------------------------------
# corner algebra (recollement) oracle
# ---------------------------------------------------------------------------

class CornerContext:
    """eAe for an idempotent e of a one-object category, with X -> Xe."""

    def __init__(self, cat: LinearCategory, e: Morphism):
        if len(cat.objects) != 1:
            raise ValueError("corner oracle expects a one-object category")
        obj = cat.objects[0]
        if compose(cat, e, e).coords != e.coords:
            raise ValueError("corner element is not idempotent")
        self.cat = cat
        self.obj = obj
        self.e = e
        d = cat.hom_dim(obj, obj)
        eb = EchelonBasis(d)
        for i in range(d):
            b = cat.basis_morphism(obj, obj, i)
            eb.insert(compose(cat, compose(cat, e, b), e).coords)
        self.span = eb.to_subspace()  # eAe inside End(obj)
        n = self.span.dim
        basis = [Morphism(obj, obj, v) for v in self.span.basis_vectors()]
        mult = []
        for x in basis:
            row = []
            for y in basis:
                coords = self.span.coordinates_of(compose(cat, x, y).coords)
                assert coords is not None, "corner span not closed under composition"
                row.append(list(coords))
            mult.append(row)
        unit = self.span.coordinates_of(e.coords)
        assert unit is not None
        from .category import from_algebra

        self.corner = from_algebra(mult, list(unit), object_name="*")

    def corner_module(self, x: Module) -> Module:
        """Xe with its eAe action, as a module over the corner algebra."""
        me = x.act(self.e)
        img = image_basis(me)  # Xe inside X
        incl = img.basis.transpose()
        action = {}
        for i, v in enumerate(self.span.basis_vectors()):
            z = Morphism(self.obj, self.obj, v)
            m = x.act(z) * incl
            coords = solve_matrix(incl, m)
            assert coords is not None, "Xe not stable under eAe"
            action[("*", "*", i)] = coords
        return Module(self.corner, {"*": img.dim}, action)

    def hom_dim(self, x: Module, y: Module) -> int:
        return len(hom_modules(self.corner_module(x), self.corner_module(y)))


# ---------------------------------------------------------------------------
# multiplication-map epimorphism oracle
# ---------------------------------------------------------------------------

def multiplication_map_iso(s) -> tuple[bool, dict]:
    """Is the middle tensor product's multiplication an iso in every hom component?

    Works directly with spans: the big space ⊕_U Hom(SU,H) ⊗ Hom(H',SU), its
    bilinearity relations over the source category, and composition down to
    Hom(H',H).  No module machinery involved.
    """
    src, tgt = s.source, s.target
    witness: dict = {}
    for hp in tgt.objects:
        for h in tgt.objects:
            slots = []
            offset = 0
            for u in src.objects:
                su = s.object_map[u]
                d1 = tgt.hom_dim(su, h)
                d2 = tgt.hom_dim(hp, su)
                slots.append((u, su, d1, d2, offset))
                offset += d1 * d2
            total = offset
            dh = tgt.hom_dim(hp, h)

            def pos(slot, i, j):
                _, _, d1, d2, off = slot
                return off + i * d2 + j

            # multiplication to Hom(H', H)
            mult_cols: list[tuple] = [None] * total
            for slot in slots:
                u, su, d1, d2, off = slot
                for i in range(d1):
                    g = tgt.basis_morphism(su, h, i)
                    for j in range(d2):
                        f = tgt.basis_morphism(hp, su, j)
                        mult_cols[pos(slot, i, j)] = compose(tgt, g, f).coords
            mult_rank = EchelonBasis(dh)
            for col in mult_cols:
                mult_rank.insert(col)

            rel = EchelonBasis(total)
            slot_of = {sl[0]: sl for sl in slots}
            for v in src.objects:
                for u in src.objects:
                    for k in range(src.hom_dim(v, u)):
                        su_mor = s.apply(src.basis_morphism(v, u, k))  # S(u_k): SV -> SU
                        slot_u, slot_v = slot_of[u], slot_of[v]
                        _, su, d1u, d2u, _ = slot_u
                        _, sv, d1v, d2v, _ = slot_v
                        for i in range(d1u):
                            g = tgt.basis_morphism(su, h, i)
                            g_su = compose(tgt, g, su_mor)  # in Hom(SV, h)
                            for j in range(d2v):
                                f = tgt.basis_morphism(hp, sv, j)
                                su_f = compose(tgt, su_mor, f)  # in Hom(hp, SU)
                                row = [ZERO] * total
                                for ii, cc in enumerate(g_su.coords):
                                    if cc:
                                        row[pos(slot_v, ii, j)] += cc
                                for jj, cc in enumerate(su_f.coords):
                                    if cc:
                                        row[pos(slot_u, i, jj)] -= cc
                                if any(row):
                                    # associativity: relations die under multiplication
                                    acc = [ZERO] * dh
                                    for p, cc in enumerate(row):
                                        if cc:
                                            acc = [a + cc * b for a, b in zip(acc, mult_cols[p])]
                                    assert not any(acc)
                                    rel.insert(row)
            surjective = mult_rank.dim == dh
            exact_kernel = rel.dim == total - mult_rank.dim
            if not (surjective and exact_kernel):
                witness[(hp, h)] = {
                    "big_dim": total,
                    "relation_dim": rel.dim,
                    "mult_rank": mult_rank.dim,
                    "hom_dim": dh,
                }
    return (not witness), witness


# ---------------------------------------------------------------------------
# restriction-hom oracles
# ---------------------------------------------------------------------------

def restriction_hom_ranks(s, x: Module, y: Module) -> tuple[int, int, int]:
    """(dim Hom_target, dim Hom_source, rank of the restricted family)."""
    from .functors import restrict, restrict_map
    from .modules import flatten_map

    top = hom_modules(x, y)
    rx, ry = restrict(s, x), restrict(s, y)
    bottom = hom_modules(rx, ry)
    eb = EchelonBasis(sum(ry.dims[u] * rx.dims[u] for u in s.source.objects))
    for alpha in top:
        eb.insert(flatten_map(restrict_map(s, alpha, rx, ry)))
    return len(top), len(bottom), eb.dim


def restriction_hom_bijective(s, x: Module, y: Module) -> bool:
    up, down, rk = restriction_hom_ranks(s, x, y)
    return up == down == rk


def restriction_hom_full(s, x: Module, y: Module) -> bool:
    _, down, rk = restriction_hom_ranks(s, x, y)
    return rk == down


# ---------------------------------------------------------------------------
# bounded enumeration family
# ---------------------------------------------------------------------------

def bounded_quotient_family(c: LinearCategory, cap: int = 12) -> list[Module]:
    """Deterministic quotients of representables: by single-generator cyclic
    submodules and their pairwise sums, capped."""
    out: list[Module] = []
    seen: set[tuple] = set()

    def push(m: Module) -> None:
        key = (tuple(sorted(m.dims.items())), tuple(sorted(m.action.items(), key=lambda kv: kv[0])))
        kh = (key[0], hash(key[1]))
        if kh in seen or len(out) >= cap:
            return
        seen.add(kh)
        out.append(m)

    for u in c.objects:
        yu = yoneda(c, u)
        push(yu)
        gens = []
        for v in c.objects:
            for i in range(c.hom_dim(v, u)):
                vvec = [ONE if k == i else ZERO for k in range(c.hom_dim(v, u))]
                gens.append(cyclic_submodule(yu, v, vvec))
        for g in gens:
            q, _ = quotient_by(g)
            push(q)
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                q, _ = quotient_by(submodule_sum(gens[a], gens[b]))
                push(q)
    return out
