//! The morphism category `H(Λ)`: objects are maps `(A --f--> B)`, morphisms
//! are commuting squares. Includes the translation `τ_H` computed from
//! minimal projective presentations in `H`, its closed forms, and the
//! equivalence `Υ` with modules over `T2(Λ)`.

use std::fmt;

use log::warn;

use crate::algebra::Algebra;
use crate::ar::{
    is_injective, is_projective, is_self_injective, omega_inv, presentation, projective_cover, strip_projective,
    tau_once,
};
use crate::decompose::{decompose, find_iso_indecomposable, is_indecomposable, isomorphic, summands};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::module::{
    cokernel, direct_sum, factor_through_epi, hom_basis, kernel, lift_through_mono, radical, socle, Module, ModuleMap,
    ProjMap, ProjModule,
};

/// An object `(A --f--> B)` of `H(Λ)`.
#[derive(Clone)]
pub struct MorphObject {
    f: ModuleMap,
}

impl fmt::Debug for MorphObject {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "({:?} -> {:?})", self.a().dims(), self.b().dims())
    }
}

impl MorphObject {
    pub fn new(f: ModuleMap) -> MorphObject {
        MorphObject { f }
    }

    /// `(0 -> m)`.
    pub fn zero_to(m: &Module) -> MorphObject {
        MorphObject::new(ModuleMap::zero(&Module::zero(m.algebra()), m))
    }

    /// `(m -> 0)`.
    pub fn to_zero(m: &Module) -> MorphObject {
        MorphObject::new(ModuleMap::zero(m, &Module::zero(m.algebra())))
    }

    /// `(m = m)`.
    pub fn identity(m: &Module) -> MorphObject {
        MorphObject::new(ModuleMap::identity(m))
    }

    pub fn zero(alg: &Algebra) -> MorphObject {
        MorphObject::zero_to(&Module::zero(alg))
    }

    pub fn a(&self) -> &Module {
        self.f.source()
    }
    pub fn b(&self) -> &Module {
        self.f.target()
    }
    pub fn f(&self) -> &ModuleMap {
        &self.f
    }
    pub fn algebra(&self) -> &Algebra {
        self.a().algebra()
    }
    pub fn dim(&self) -> usize {
        self.a().dim() + self.b().dim()
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
}

/// A morphism `(h1, h2): (A -f-> B) -> (C -g-> D)` with `g h1 = h2 f`.
#[derive(Clone, Debug)]
pub struct MorphMap {
    src: MorphObject,
    dst: MorphObject,
    pub h1: ModuleMap,
    pub h2: ModuleMap,
}

impl MorphMap {
    pub fn new(src: &MorphObject, dst: &MorphObject, h1: ModuleMap, h2: ModuleMap) -> Result<MorphMap> {
        let ends_match = h1.source().same_as(src.a())
            && h1.target().same_as(dst.a())
            && h2.source().same_as(src.b())
            && h2.target().same_as(dst.b());
        if !ends_match {
            return Err(Error::InvalidMap("components do not match the objects".into()));
        }
        if dst.f().after(&h1).comps() != h2.after(src.f()).comps() {
            return Err(Error::InvalidMap("square does not commute".into()));
        }
        Ok(MorphMap { src: src.clone(), dst: dst.clone(), h1: h1.retarget(src.a(), dst.a()), h2: h2.retarget(src.b(), dst.b()) })
    }

    pub(crate) fn trusted(src: &MorphObject, dst: &MorphObject, h1: ModuleMap, h2: ModuleMap) -> MorphMap {
        if cfg!(debug_assertions) {
            MorphMap::new(src, dst, h1, h2).expect("internal morphism is valid")
        } else {
            MorphMap { src: src.clone(), dst: dst.clone(), h1: h1.retarget(src.a(), dst.a()), h2: h2.retarget(src.b(), dst.b()) }
        }
    }

    pub fn identity(x: &MorphObject) -> MorphMap {
        MorphMap::trusted(x, x, ModuleMap::identity(x.a()), ModuleMap::identity(x.b()))
    }

    pub fn zero(x: &MorphObject, y: &MorphObject) -> MorphMap {
        MorphMap::trusted(x, y, ModuleMap::zero(x.a(), y.a()), ModuleMap::zero(x.b(), y.b()))
    }

    pub fn source(&self) -> &MorphObject {
        &self.src
    }
    pub fn target(&self) -> &MorphObject {
        &self.dst
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &MorphMap) -> MorphMap {
        MorphMap { src: first.src.clone(), dst: self.dst.clone(), h1: self.h1.after(&first.h1), h2: self.h2.after(&first.h2) }
    }

    pub fn add(&self, other: &MorphMap) -> MorphMap {
        MorphMap { src: self.src.clone(), dst: self.dst.clone(), h1: self.h1.add(&other.h1), h2: self.h2.add(&other.h2) }
    }

    pub fn scale(&self, s: u32) -> MorphMap {
        MorphMap { src: self.src.clone(), dst: self.dst.clone(), h1: self.h1.scale(s), h2: self.h2.scale(s) }
    }

    pub fn is_zero(&self) -> bool {
        self.h1.is_zero() && self.h2.is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.h1.is_iso() && self.h2.is_iso()
    }

    pub fn is_injective(&self) -> bool {
        self.h1.is_injective() && self.h2.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.h1.is_surjective() && self.h2.is_surjective()
    }

    pub fn inverse(&self) -> Option<MorphMap> {
        Some(MorphMap { src: self.dst.clone(), dst: self.src.clone(), h1: self.h1.inverse()?, h2: self.h2.inverse()? })
    }

    pub fn to_vector(&self) -> Vector {
        let mut v = self.h1.to_vector();
        v.extend(self.h2.to_vector());
        v
    }
}

/// A basis of `Hom_H(x, y)`.
pub fn hom_basis_h(x: &MorphObject, y: &MorphObject) -> Result<Vec<MorphMap>> {
    x.a().same_algebra(y.a())?;
    let fld = x.algebra().field();
    let hac = hom_basis(x.a(), y.a())?;
    let hbd = hom_basis(x.b(), y.b())?;
    let n: usize = x.a().dims().iter().zip(y.b().dims()).map(|(p, q)| p * q).sum();
    let mut cols: Vec<Vector> = hac.iter().map(|h| y.f().after(h).to_vector()).collect();
    cols.extend(hbd.iter().map(|h| h.after(x.f()).scale(fld.neg(1)).to_vector()));
    let eq = Matrix::from_columns(fld, n, &cols);
    let mut out = Vec::new();
    for v in eq.kernel_basis() {
        let mut h1 = ModuleMap::zero(x.a(), y.a());
        let mut h2 = ModuleMap::zero(x.b(), y.b());
        for (c, h) in v.iter().zip(&hac) {
            if *c != 0 {
                h1 = h1.add(&h.scale(*c));
            }
        }
        for (c, h) in v[hac.len()..].iter().zip(&hbd) {
            if *c != 0 {
                h2 = h2.add(&h.scale(*c));
            }
        }
        out.push(MorphMap::trusted(x, y, h1, h2));
    }
    Ok(out)
}

pub fn hom_dim_h(x: &MorphObject, y: &MorphObject) -> Result<usize> {
    Ok(hom_basis_h(x, y)?.len())
}

/// Componentwise kernel with its inclusion.
pub fn kernel_h(h: &MorphMap) -> (MorphObject, MorphMap) {
    let (_, i1) = kernel(&h.h1);
    let (_, i2) = kernel(&h.h2);
    let f = lift_through_mono(&i2, &h.src.f().after(&i1)).expect("kernels are compatible");
    let k = MorphObject::new(f);
    let incl = MorphMap::trusted(&k, &h.src, i1, i2);
    (k, incl)
}

/// Componentwise cokernel with its projection.
pub fn cokernel_h(h: &MorphMap) -> (MorphObject, MorphMap) {
    let (c1, p1) = cokernel(&h.h1);
    let (c2, p2) = cokernel(&h.h2);
    let f = factor_through_epi(&p1, &p2.after(h.dst.f())).expect("cokernels are compatible");
    debug_assert!(f.source().same_as(&c1) && f.target().same_as(&c2));
    let c = MorphObject::new(f);
    let proj = MorphMap::trusted(&h.dst, &c, p1, p2);
    (c, proj)
}

/// Biproduct in `H` with injections and projections.
#[derive(Clone, Debug)]
pub struct HSum {
    pub object: MorphObject,
    pub injections: Vec<MorphMap>,
    pub projections: Vec<MorphMap>,
}

pub fn direct_sum_h(alg: &Algebra, xs: &[MorphObject]) -> Result<HSum> {
    let sa = direct_sum(alg, &xs.iter().map(|x| x.a().clone()).collect::<Vec<_>>())?;
    let sb = direct_sum(alg, &xs.iter().map(|x| x.b().clone()).collect::<Vec<_>>())?;
    let mut f = ModuleMap::zero(&sa.module, &sb.module);
    for (i, x) in xs.iter().enumerate() {
        f = f.add(&sb.injections[i].after(x.f()).after(&sa.projections[i]));
    }
    let object = MorphObject::new(f);
    let injections = xs
        .iter()
        .enumerate()
        .map(|(i, x)| MorphMap::trusted(x, &object, sa.injections[i].clone(), sb.injections[i].clone()))
        .collect();
    let projections = xs
        .iter()
        .enumerate()
        .map(|(i, x)| MorphMap::trusted(&object, x, sa.projections[i].clone(), sb.projections[i].clone()))
        .collect();
    Ok(HSum { object, injections, projections })
}

/// `D_H(A -f-> B) = (D B -D f-> D A)` over the opposite algebra.
pub fn dual_h(x: &MorphObject) -> MorphObject {
    MorphObject::new(x.f().dual())
}

/// `D_H(h): D_H(y) -> D_H(x)` for `h: x -> y`, between the given duals.
pub fn dual_map_h(h: &MorphMap, dy: &MorphObject, dx: &MorphObject) -> MorphMap {
    let h1 = h.h2.dual_between(dy.a(), dx.a());
    let h2 = h.h1.dual_between(dy.b(), dx.b());
    MorphMap::trusted(dy, dx, h1, h2)
}

/// `Υ(A -f-> B)`: the `T2(Λ)`-module with `A` on the first copy, `B` on the
/// second and `f` on the connectors.
pub fn upsilon(x: &MorphObject) -> Module {
    let t2 = x.algebra().t2();
    let mut dims = x.a().dims().to_vec();
    dims.extend_from_slice(x.b().dims());
    let mut arrows = x.a().arrows().to_vec();
    arrows.extend_from_slice(x.b().arrows());
    arrows.extend_from_slice(x.f().comps());
    Module::trusted(t2, dims, arrows)
}

pub fn upsilon_map(h: &MorphMap, ux: &Module, uy: &Module) -> ModuleMap {
    let mut comps = h.h1.comps().to_vec();
    comps.extend_from_slice(h.h2.comps());
    ModuleMap::trusted(ux, uy, comps)
}

/// Inverse of `Υ`, for a module over `alg.t2()`.
pub fn upsilon_inv(alg: &Algebra, m: &Module) -> Result<MorphObject> {
    if m.algebra() != alg.t2() {
        return Err(Error::AlgebraMismatch(format!("expected a module over T2({})", alg.name())));
    }
    let n = alg.num_vertices();
    let na = alg.arrows().len();
    let a = Module::trusted(alg, m.dims()[..n].to_vec(), m.arrows()[..na].to_vec());
    let b = Module::trusted(alg, m.dims()[n..].to_vec(), m.arrows()[na..2 * na].to_vec());
    let f = ModuleMap::trusted(&a, &b, m.arrows()[2 * na..].to_vec());
    Ok(MorphObject::new(f))
}

pub fn upsilon_inv_map(h: &ModuleMap, x: &MorphObject, y: &MorphObject) -> MorphMap {
    let n = x.algebra().num_vertices();
    let h1 = ModuleMap::trusted(x.a(), y.a(), h.comps()[..n].to_vec());
    let h2 = ModuleMap::trusted(x.b(), y.b(), h.comps()[n..].to_vec());
    MorphMap::trusted(x, y, h1, h2)
}

/// Indecomposable summands with multiplicities, computed through `Υ`.
pub fn decompose_h(x: &MorphObject) -> Result<Vec<(MorphObject, usize)>> {
    let alg = x.algebra().clone();
    decompose(&upsilon(x))?.into_iter().map(|(m, k)| Ok((upsilon_inv(&alg, &m)?, k))).collect()
}

/// Indecomposable summands with inclusions and projections.
pub fn summands_h(x: &MorphObject) -> Result<Vec<(MorphObject, MorphMap, MorphMap)>> {
    let alg = x.algebra().clone();
    let ux = upsilon(x);
    let mut out = Vec::new();
    for s in summands(&ux)? {
        let y = upsilon_inv(&alg, &s.module)?;
        let uy = upsilon(&y);
        let incl = upsilon_inv_map(&s.incl.retarget(&uy, &ux), &y, x);
        let proj = upsilon_inv_map(&s.proj.retarget(&ux, &uy), x, &y);
        out.push((y, incl, proj));
    }
    Ok(out)
}

pub fn is_indecomposable_h(x: &MorphObject) -> Result<bool> {
    is_indecomposable(&upsilon(x))
}

/// Isomorphism test for indecomposable objects.
pub fn iso_h(x: &MorphObject, y: &MorphObject) -> Result<bool> {
    if x.algebra() != y.algebra() || x.a().dims() != y.a().dims() || x.b().dims() != y.b().dims() {
        return Ok(false);
    }
    Ok(hom_basis_h(x, y)?.iter().any(MorphMap::is_iso))
}

pub fn find_iso_h(x: &MorphObject, y: &MorphObject) -> Result<Option<MorphMap>> {
    if x.algebra() != y.algebra() || x.a().dims() != y.a().dims() || x.b().dims() != y.b().dims() {
        return Ok(None);
    }
    Ok(hom_basis_h(x, y)?.into_iter().find(MorphMap::is_iso))
}

/// Isomorphism test for arbitrary objects.
pub fn isomorphic_h(x: &MorphObject, y: &MorphObject) -> Result<bool> {
    if x.algebra() != y.algebra() {
        return Ok(false);
    }
    isomorphic(&upsilon(x), &upsilon(y))
}

/// A projective object `(P --[1;0]--> P ⊕ Q)`, isomorphic to
/// `(P = P) ⊕ (0 -> Q)`.
#[derive(Clone, Debug)]
pub struct ProjObject {
    pub p: ProjModule,
    pub q: ProjModule,
    pub pq: ProjModule,
    pub object: MorphObject,
}

impl ProjObject {
    pub fn new(alg: &Algebra, p: Vec<usize>, q: Vec<usize>) -> ProjObject {
        let p = ProjModule::new(alg, p);
        let q = ProjModule::new(alg, q);
        let pq = p.concat(&q);
        let fld = alg.field();
        let comps = (0..alg.num_vertices())
            .map(|v| {
                let d = p.module().dims()[v];
                let mut m = Matrix::zeros(fld, pq.module().dims()[v], d);
                m.paste(0, 0, &Matrix::identity(fld, d));
                m
            })
            .collect();
        let object = MorphObject::new(ModuleMap::trusted(p.module(), pq.module(), comps));
        ProjObject { p, q, pq, object }
    }
}

/// Projective cover in `H` from covers of `A` and of `coker f`.
#[derive(Clone, Debug)]
pub struct CoverH {
    pub proj: ProjObject,
    pub epi: MorphMap,
}

pub fn projective_cover_h(x: &MorphObject) -> Result<CoverH> {
    let alg = x.algebra();
    let ca = projective_cover(x.a())?;
    let (cok, p) = cokernel(x.f());
    let cq = projective_cover(&cok)?;
    let proj = ProjObject::new(alg, ca.proj.summands().to_vec(), cq.proj.summands().to_vec());
    let mut images: Vec<Vector> = ca
        .proj
        .generator_images(&ca.epi)
        .iter()
        .zip(ca.proj.summands())
        .map(|(t, &w)| x.f().comp(w).mul_vec(t))
        .collect();
    for (t, &w) in cq.proj.generator_images(&cq.epi).iter().zip(cq.proj.summands()) {
        let d = p.comp(w).solve(t)?.ok_or_else(|| Error::Verification("cokernel projection not onto".into()))?;
        images.push(d);
    }
    let alpha = ca.epi.retarget(proj.p.module(), x.a());
    let second = proj.pq.map_from_generators(x.b(), &images);
    let epi = MorphMap::new(&proj.object, x, alpha, second)?;
    if !epi.is_surjective() {
        return Err(Error::Verification("cover in H is not surjective".into()));
    }
    let (_, kincl) = kernel_h(&epi);
    let up = upsilon(&proj.object);
    let (_, rad) = radical(&up);
    let uk = upsilon_map(&kincl, &upsilon(kincl.source()), &up);
    for (v, c) in uk.comps().iter().enumerate() {
        if rad.comp(v).hstack(c).rank() != rad.comp(v).rank() {
            return Err(Error::Verification("cover in H has a non-superfluous kernel".into()));
        }
    }
    Ok(CoverH { proj, epi })
}

/// Minimal projective presentation `P1 --g--> P0 --epi--> X -> 0` in `H`.
#[derive(Clone, Debug)]
pub struct PresentationH {
    pub p0: ProjObject,
    pub epi: MorphMap,
    pub p1: ProjObject,
    pub g: MorphMap,
}

pub fn presentation_h(x: &MorphObject) -> Result<PresentationH> {
    let c0 = projective_cover_h(x)?;
    let (k, incl) = kernel_h(&c0.epi);
    let c1 = projective_cover_h(&k)?;
    let g = incl.after(&c1.epi);
    Ok(PresentationH { p0: c0.proj, epi: c0.epi, p1: c1.proj, g })
}

pub fn is_projective_h(x: &MorphObject) -> Result<bool> {
    let c = projective_cover_h(x)?;
    Ok(c.proj.object.dim() == x.dim())
}

pub fn is_injective_h(x: &MorphObject) -> Result<bool> {
    is_projective_h(&dual_h(x))
}

/// `(-)*_H` on a projective object: `(P -[1;0]-> P⊕Q)* = (Q* -[0;1]-> (P⊕Q)*)`.
fn star_object(x: &ProjObject) -> (ProjModule, ProjModule, MorphObject) {
    let alg = x.p.algebra().opposite();
    let qs = x.q.star();
    let pqs = x.pq.star();
    let np = x.p.summands().len();
    let coef = (0..qs.summands().len())
        .map(|i| {
            (0..pqs.summands().len())
                .map(|j| {
                    let mut lam = vec![0u32; alg.dim()];
                    if j == np + i {
                        lam[alg.idempotent(qs.summands()[i])] = 1;
                    }
                    lam
                })
                .collect()
        })
        .collect();
    let incl = ProjMap { src: qs.clone(), dst: pqs.clone(), coef };
    let obj = MorphObject::new(incl.to_module_map());
    (qs, pqs, obj)
}

/// `(-)*_H` on a map of projective objects, with its source and target.
pub fn star_h(g: &MorphMap, src: &ProjObject, dst: &ProjObject) -> Result<MorphMap> {
    let g2 = ProjMap::from_module_map(&src.pq, &dst.pq, &g.h2);
    let (np0, np1) = (dst.p.summands().len(), src.p.summands().len());
    let w = ProjMap {
        src: src.q.clone(),
        dst: dst.q.clone(),
        coef: g2.coef[np1..].iter().map(|row| row[np0..].to_vec()).collect(),
    };
    let (dq, dpq, dobj) = star_object(dst);
    let (sq, spq, sobj) = star_object(src);
    let ws = ProjMap { src: dq, dst: sq, coef: w.star().coef };
    let g2s = ProjMap { src: dpq, dst: spq, coef: g2.star().coef };
    MorphMap::new(&dobj, &sobj, ws.to_module_map(), g2s.to_module_map())
}

/// Star of a projective object in its `(P = P) ⊕ (0 -> Q)` form.
pub fn star_proj_object(x: &ProjObject) -> MorphObject {
    star_object(x).2
}

/// `Tr_H X`, the cokernel of `g*_H` for the minimal presentation `g`.
pub fn transpose_h(x: &MorphObject) -> Result<MorphObject> {
    let pr = presentation_h(x)?;
    let gs = star_h(&pr.g, &pr.p1, &pr.p0)?;
    Ok(cokernel_h(&gs).0)
}

/// `τ_H X = D_H Tr_H X`.
pub fn tau_h_once(x: &MorphObject) -> Result<MorphObject> {
    Ok(dual_h(&transpose_h(x)?))
}

/// `τ_H⁻¹ X = Tr_H D_H X`.
pub fn tau_h_inv_once(x: &MorphObject) -> Result<MorphObject> {
    transpose_h(&dual_h(x))
}

fn strip_h(x: &MorphObject, drop_projective: bool) -> Result<MorphObject> {
    let parts = summands_h(x)?;
    let mut keep = Vec::new();
    for (y, _, _) in &parts {
        let bad = if drop_projective { is_projective_h(y)? } else { is_injective_h(y)? };
        if !bad {
            keep.push(y.clone());
        }
    }
    if keep.len() == parts.len() {
        return Ok(x.clone());
    }
    warn!(
        "dropping {} {} summand(s) in H",
        parts.len() - keep.len(),
        if drop_projective { "projective" } else { "injective" }
    );
    Ok(direct_sum_h(x.algebra(), &keep)?.object)
}

/// `τ_H^i X`; projective (resp. injective) summands of the input are dropped.
pub fn tau_h(x: &MorphObject, i: i64) -> Result<MorphObject> {
    if i >= 0 {
        let mut y = strip_h(x, true)?;
        for _ in 0..i {
            y = tau_h_once(&y)?;
        }
        Ok(y)
    } else {
        let mut y = strip_h(x, false)?;
        for _ in 0..(-i) {
            y = tau_h_inv_once(&y)?;
        }
        Ok(y)
    }
}

/// `τ_H` computed as `Υ⁻¹ τ_{T2} Υ`.
pub fn tau_h_via_t2(x: &MorphObject) -> Result<MorphObject> {
    upsilon_inv(x.algebra(), &tau_once(&upsilon(x))?)
}

/// The shapes for which `τ_H` has a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `(C -> 0)` goes to `(νP1 -> νP0)`.
    ToZero,
    /// `(C -e-> I)`, an injective envelope over a self-injective algebra,
    /// goes to the projective cover `(P -> τΩ⁻¹C)`.
    Envelope,
    /// `(P -f-> Q)` between projectives goes to `(0 -> τ Coker f)`.
    BetweenProjectives,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 3] = [ClosedForm::ToZero, ClosedForm::Envelope, ClosedForm::BetweenProjectives];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::ToZero => "to-zero",
            ClosedForm::Envelope => "envelope",
            ClosedForm::BetweenProjectives => "between-projectives",
        }
    }
}

/// Whether `x` satisfies the hypotheses of a closed form.
pub fn closed_form_applies(x: &MorphObject, which: ClosedForm) -> Result<bool> {
    Ok(closed_form_check(x, which)?.is_none())
}

fn closed_form_check(x: &MorphObject, which: ClosedForm) -> Result<Option<String>> {
    Ok(match which {
        ClosedForm::ToZero => (!x.b().is_zero()).then(|| "target is not zero".into()),
        ClosedForm::Envelope => {
            if !is_self_injective(x.algebra())? {
                Some("algebra is not self-injective".into())
            } else if !x.f().is_injective() {
                Some("map is not injective".into())
            } else if x.a().is_zero() {
                Some("source is zero".into())
            } else if strip_projective(x.a())?.dim() != x.a().dim() {
                Some("source has a projective summand".into())
            } else {
                let (_, soc) = socle(x.b());
                let essential = (0..soc.comps().len()).all(|v| {
                    let im = x.f().comp(v);
                    im.hstack(soc.comp(v)).rank() == im.rank()
                });
                let injective = is_injective(x.b())?;
                (!(essential && injective)).then(|| "map is not an injective envelope".into())
            }
        }
        ClosedForm::BetweenProjectives => {
            if !is_projective(x.a())? || !is_projective(x.b())? {
                Some("source or target is not projective".into())
            } else if x.b().is_zero() {
                // `(P -> 0)` goes to `(0 -> νP)`, not to `(0 -> τ0)`.
                Some("target is zero".into())
            } else if !is_indecomposable_h(x)? {
                Some("object is not indecomposable".into())
            } else if is_projective_h(x)? {
                Some("object is projective".into())
            } else {
                None
            }
        }
    })
}

pub fn tau_h_closed_form(x: &MorphObject, which: ClosedForm) -> Result<MorphObject> {
    if let Some(why) = closed_form_check(x, which)? {
        return Err(Error::Hypothesis(format!("{} form: {why}", which.name())));
    }
    match which {
        ClosedForm::ToZero => {
            let pr = presentation(x.a())?;
            Ok(MorphObject::new(pr.g.nakayama()))
        }
        ClosedForm::Envelope => {
            let c = tau_once(&omega_inv(x.a())?)?;
            Ok(MorphObject::new(projective_cover(&c)?.epi))
        }
        ClosedForm::BetweenProjectives => {
            let (m, _) = cokernel(x.f());
            Ok(MorphObject::zero_to(&tau_once(&m)?))
        }
    }
}

/// Whether `x` lies in `add{(0 -> P), (P = P)}`, resp. `add{(I -> 0), (I = I)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjInj {
    pub projective: bool,
    pub injective: bool,
}

pub fn classify_proj_inj(x: &MorphObject) -> Result<ProjInj> {
    Ok(ProjInj { projective: is_projective_h(x)?, injective: is_injective_h(x)? })
}

/// Shape of an indecomposable object, as used to tag middle terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Shape {
    /// `(X -> 0)`
    ToZero,
    /// `(0 -> X)`
    FromZero,
    /// `(X = X)`
    Identity,
    Generic,
}

pub fn shape(x: &MorphObject) -> Shape {
    if x.b().is_zero() {
        Shape::ToZero
    } else if x.a().is_zero() {
        Shape::FromZero
    } else if x.f().is_iso() {
        Shape::Identity
    } else {
        Shape::Generic
    }
}

/// Isoclasses of indecomposable objects of `H`, enumerated over `T2(Λ)`.
#[derive(Clone, Debug)]
pub struct HCatalog {
    pub algebra: Algebra,
    pub t2: crate::ar::Catalog,
    pub objects: Vec<MorphObject>,
}

impl HCatalog {
    pub fn build(alg: &Algebra, caps: crate::ar::Caps) -> Result<HCatalog> {
        let t2 = crate::ar::enumerate_indecomposables(alg.t2(), caps)?;
        let objects = t2.modules.iter().map(|m| upsilon_inv(alg, m)).collect::<Result<_>>()?;
        Ok(HCatalog { algebra: alg.clone(), t2, objects })
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Index of the class of an indecomposable object.
    pub fn find(&self, x: &MorphObject) -> Result<Option<usize>> {
        self.t2.find(&upsilon(x))
    }

    pub fn index(&self, x: &MorphObject) -> Result<usize> {
        self.find(x)?.ok_or_else(|| Error::Verification("object missing from the catalog of H".into()))
    }
}

/// An isomorphism between two indecomposable objects, where one exists.
pub fn iso_witness(x: &MorphObject, y: &MorphObject) -> Result<Option<MorphMap>> {
    let ux = upsilon(x);
    let uy = upsilon(y);
    Ok(find_iso_indecomposable(&ux, &uy)?.map(|h| upsilon_inv_map(&h, x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar::Caps;
    use crate::module::tests::poly;

    fn x_map(l: &Algebra) -> MorphObject {
        let p = Module::projective(l, 0);
        let comps = vec![p.arrow(0).clone()];
        MorphObject::new(ModuleMap::new(&p, &p, comps).unwrap())
    }

    fn cover_of_simple(l: &Algebra) -> MorphObject {
        let s = Module::simple(l, 0);
        MorphObject::new(projective_cover(&s).unwrap().epi)
    }

    #[test]
    fn hom_dimensions_in_h() {
        let l = poly(2);
        let s = Module::simple(&l, 0);
        assert_eq!(hom_dim_h(&MorphObject::zero_to(&s), &MorphObject::zero_to(&s)).unwrap(), 1);
        assert_eq!(hom_dim_h(&MorphObject::to_zero(&s), &MorphObject::zero_to(&s)).unwrap(), 0);
        let ll = MorphObject::identity(&Module::projective(&l, 0));
        assert_eq!(hom_dim_h(&ll, &cover_of_simple(&l)).unwrap(), 2);
    }

    #[test]
    fn upsilon_round_trip_preserves_hom() {
        let l = poly(2);
        let s = Module::simple(&l, 0);
        let objs = [
            MorphObject::zero_to(&s),
            MorphObject::identity(&s),
            MorphObject::to_zero(&s),
            x_map(&l),
            cover_of_simple(&l),
        ];
        for x in &objs {
            let back = upsilon_inv(&l, &upsilon(x)).unwrap();
            assert_eq!(back.f().comps(), x.f().comps());
            for y in &objs {
                assert_eq!(
                    hom_dim_h(x, y).unwrap(),
                    crate::module::hom_dim(&upsilon(x), &upsilon(y)).unwrap()
                );
            }
        }
    }

    #[test]
    fn kernels_and_cokernels() {
        let l = poly(2);
        let x = x_map(&l);
        let (c, _) = cokernel_h(&MorphMap::identity(&x));
        assert!(c.is_zero());
        let z = MorphObject::zero(&l);
        let (c, _) = cokernel_h(&MorphMap::zero(&z, &x));
        assert_eq!(c.dim(), x.dim());
    }

    #[test]
    fn covers_in_h() {
        let l = poly(2);
        let s = Module::simple(&l, 0);
        let c = projective_cover_h(&MorphObject::zero_to(&s)).unwrap();
        assert!(c.proj.p.summands().is_empty());
        assert_eq!(c.proj.q.summands(), &[0]);
        let c = projective_cover_h(&MorphObject::to_zero(&s)).unwrap();
        assert_eq!(c.proj.p.summands(), &[0]);
        assert!(c.proj.q.summands().is_empty());
        let ll = MorphObject::identity(&Module::projective(&l, 0));
        assert!(projective_cover_h(&ll).unwrap().epi.is_iso());
    }

    #[test]
    fn classification_of_small_objects() {
        let l = poly(2);
        let p = Module::projective(&l, 0);
        let s = Module::simple(&l, 0);
        assert_eq!(classify_proj_inj(&MorphObject::zero_to(&p)).unwrap(), ProjInj { projective: true, injective: false });
        assert_eq!(classify_proj_inj(&MorphObject::identity(&p)).unwrap(), ProjInj { projective: true, injective: true });
        assert_eq!(classify_proj_inj(&MorphObject::to_zero(&s)).unwrap(), ProjInj { projective: false, injective: false });
    }

    #[test]
    fn star_of_basic_projectives() {
        let l = poly(2);
        let pp = ProjObject::new(&l, vec![0], vec![]);
        let s = star_proj_object(&pp);
        assert!(s.a().is_zero() && s.b().dim() == 2);
        let zp = ProjObject::new(&l, vec![], vec![0]);
        let s = star_proj_object(&zp);
        assert!(s.f().is_iso() && s.a().dim() == 2);
    }

    #[test]
    fn dual_is_involutive() {
        let l = poly(2);
        let x = cover_of_simple(&l);
        let dd = dual_h(&dual_h(&x));
        assert!(dd.algebra() == x.algebra());
        assert!(iso_h(&dd, &x).unwrap());
        let d = dual_h(&x_map(&l));
        assert!(iso_h(&d, &x_map(&l.opposite())).unwrap());
    }

    #[test]
    fn tau_h_on_dual_numbers() {
        let l = poly(2);
        let s = Module::simple(&l, 0);
        let t = tau_h(&MorphObject::zero_to(&s), 1).unwrap();
        assert!(iso_h(&t, &MorphObject::identity(&s)).unwrap());
        let t = tau_h(&MorphObject::to_zero(&s), 1).unwrap();
        assert!(iso_h(&t, &x_map(&l)).unwrap());
        let t = tau_h(&x_map(&l), 1).unwrap();
        assert!(iso_h(&t, &MorphObject::zero_to(&s)).unwrap());
    }

    #[test]
    fn closed_forms_on_dual_numbers() {
        let l = poly(2);
        let s = Module::simple(&l, 0);
        let r = tau_h_closed_form(&MorphObject::to_zero(&s), ClosedForm::ToZero).unwrap();
        assert!(iso_h(&r, &x_map(&l)).unwrap());
        let env = crate::ar::injective_envelope(&s).unwrap();
        let r = tau_h_closed_form(&MorphObject::new(env.mono), ClosedForm::Envelope).unwrap();
        assert!(iso_h(&r, &cover_of_simple(&l)).unwrap());
        let r = tau_h_closed_form(&x_map(&l), ClosedForm::BetweenProjectives).unwrap();
        assert!(iso_h(&r, &MorphObject::zero_to(&s)).unwrap());
        assert!(matches!(
            tau_h_closed_form(&x_map(&l), ClosedForm::ToZero),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn native_tau_matches_t2_on_catalog() {
        let l = poly(2);
        let cat = HCatalog::build(&l, Caps::default()).unwrap();
        assert_eq!(cat.len(), 9);
        for x in &cat.objects {
            if is_projective_h(x).unwrap() {
                continue;
            }
            let a = tau_h_once(x).unwrap();
            let b = tau_h_via_t2(x).unwrap();
            assert!(iso_h(&a, &b).unwrap());
            assert!(iso_h(&tau_h_inv_once(&a).unwrap(), x).unwrap());
        }
    }
}
