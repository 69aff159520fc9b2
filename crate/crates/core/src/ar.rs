//! Auslander–Reiten theory in `mod Λ`: covers, presentations, syzygies,
//! transpose, translation and almost split sequences.

use log::debug;

use crate::algebra::Algebra;
use crate::decompose::{decompose, iso_indecomposable, iso_key, local_radical, summands, IsoKey};
use crate::error::{Error, Result};
use crate::linalg::{span_basis, span_rank, Matrix, Vector};
use crate::module::{
    cokernel, direct_sum, factor_through_epi, hom_basis, kernel, lift_through_mono, map_from_sum, map_into_sum,
    radical, socle, Module, ModuleMap, ProjMap, ProjModule,
};
use crate::translation::{QuiverArrow, TranslationQuiver};

/// Minimal projective cover `proj -> M`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub proj: ProjModule,
    pub epi: ModuleMap,
}

pub fn projective_cover(m: &Module) -> Result<Cover> {
    let alg = m.algebra();
    let (_, rad) = radical(m);
    let mut summands = Vec::new();
    let mut images = Vec::new();
    for v in 0..alg.num_vertices() {
        for col in rad.comp(v).complement_columns().columns() {
            summands.push(v);
            images.push(col);
        }
    }
    let proj = ProjModule::new(alg, summands);
    let epi = proj.map_from_generators(m, &images);
    if !epi.is_surjective() {
        return Err(Error::Verification("projective cover is not surjective".into()));
    }
    let (_, k) = kernel(&epi);
    for j in 0..proj.summands().len() {
        let (w, pos) = proj.generator(j);
        if k.comp(w).row(pos).iter().any(|&x| x != 0) {
            return Err(Error::Verification("projective cover has a non-superfluous kernel".into()));
        }
    }
    Ok(Cover { proj, epi })
}

/// Injective envelope `M -> inj`, built as the dual of the projective cover of
/// `D M`; `dual_proj` is that cover's projective over the opposite algebra, so
/// `inj = D(dual_proj)`.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub inj: Module,
    pub mono: ModuleMap,
    pub dual_proj: ProjModule,
}

pub fn injective_envelope(m: &Module) -> Result<Envelope> {
    let c = projective_cover(&m.dual())?;
    let d = c.epi.dual();
    let inj = d.target().clone();
    let mono = d.retarget(m, &inj);
    if !mono.is_injective() {
        return Err(Error::Verification("injective envelope is not injective".into()));
    }
    let (_, soc) = socle(&inj);
    for v in 0..inj.dims().len() {
        let both = mono.comp(v).hstack(soc.comp(v));
        if both.rank() != mono.comp(v).rank() {
            return Err(Error::Verification("injective envelope is not essential".into()));
        }
    }
    Ok(Envelope { inj, mono, dual_proj: c.proj })
}

/// Minimal projective presentation `P1 --g--> P0 --epi--> M -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: ProjModule,
    pub epi: ModuleMap,
    pub p1: ProjModule,
    pub g: ProjMap,
    /// `Ω M` with its inclusion into `P0`.
    pub kernel: Module,
    pub kernel_incl: ModuleMap,
}

impl Presentation {
    pub fn map(&self) -> ModuleMap {
        self.g.to_module_map()
    }
}

pub fn presentation(m: &Module) -> Result<Presentation> {
    let c0 = projective_cover(m)?;
    let (k, incl) = kernel(&c0.epi);
    let c1 = projective_cover(&k)?;
    let g = incl.after(&c1.epi);
    let g = ProjMap::from_module_map(&c1.proj, &c0.proj, &g);
    Ok(Presentation { p0: c0.proj, epi: c0.epi, p1: c1.proj, g, kernel: k, kernel_incl: incl })
}

pub fn is_projective(m: &Module) -> Result<bool> {
    Ok(projective_cover(m)?.proj.module().dim() == m.dim())
}

pub fn is_injective(m: &Module) -> Result<bool> {
    is_projective(&m.dual())
}

/// Every indecomposable projective is injective.
pub fn is_self_injective(alg: &Algebra) -> Result<bool> {
    for v in 0..alg.num_vertices() {
        if !is_injective(&Module::projective(alg, v))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn strip(m: &Module, drop_projective: bool) -> Result<Module> {
    let parts = summands(m)?;
    let mut keep = Vec::new();
    for s in &parts {
        let bad = if drop_projective { is_projective(&s.module)? } else { is_injective(&s.module)? };
        if !bad {
            keep.push(s.module.clone());
        }
    }
    if keep.len() == parts.len() {
        return Ok(m.clone());
    }
    let kind = if drop_projective { "projective" } else { "injective" };
    debug!("dropping {} {kind} summand(s)", parts.len() - keep.len());
    Ok(direct_sum(m.algebra(), &keep)?.module)
}

/// `M` with its projective summands removed.
pub fn strip_projective(m: &Module) -> Result<Module> {
    strip(m, true)
}

/// `M` with its injective summands removed.
pub fn strip_injective(m: &Module) -> Result<Module> {
    strip(m, false)
}

/// Kernel of the projective cover.
pub fn omega(m: &Module) -> Result<Module> {
    let c = projective_cover(m)?;
    Ok(kernel(&c.epi).0)
}

/// Cokernel of the injective envelope.
pub fn omega_inv(m: &Module) -> Result<Module> {
    let e = injective_envelope(m)?;
    Ok(cokernel(&e.mono).0)
}

/// `Ω^i M`; negative `i` uses cosyzygies.
pub fn syzygy(m: &Module, i: i64) -> Result<Module> {
    if i >= 0 {
        let mut x = strip_projective(m)?;
        for _ in 0..i {
            x = omega(&x)?;
        }
        Ok(x)
    } else {
        let mut x = strip_injective(m)?;
        for _ in 0..(-i) {
            x = omega_inv(&x)?;
        }
        Ok(x)
    }
}

/// `Tr M`, the cokernel of `g*` for the minimal presentation; a module over
/// the opposite algebra.
pub fn transpose(m: &Module) -> Result<Module> {
    let p = presentation(m)?;
    Ok(cokernel(&p.g.star().to_module_map()).0)
}

/// `τ M = D Tr M`.
pub fn tau_once(m: &Module) -> Result<Module> {
    Ok(transpose(m)?.dual())
}

/// `τ⁻¹ M = Tr D M`.
pub fn tau_inv_once(m: &Module) -> Result<Module> {
    transpose(&m.dual())
}

/// `τ^i M`, with projective (resp. injective) summands of the input dropped.
pub fn tau(m: &Module, i: i64) -> Result<Module> {
    if i >= 0 {
        let mut x = strip_projective(m)?;
        for _ in 0..i {
            x = tau_once(&x)?;
        }
        Ok(x)
    } else {
        let mut x = strip_injective(m)?;
        for _ in 0..(-i) {
            x = tau_inv_once(&x)?;
        }
        Ok(x)
    }
}

/// Nakayama functor `ν = D Hom(-, Λ)` on a module, via its presentation.
pub fn nakayama(m: &Module) -> Result<Module> {
    let p = presentation(m)?;
    Ok(cokernel(&p.g.nakayama()).0)
}

/// `ν⁻¹ = D ν_op D`, right adjoint inverse on injectives.
pub fn nakayama_inv(m: &Module) -> Result<Module> {
    Ok(nakayama(&m.dual())?.dual())
}

/// A short exact sequence `0 -> A --f--> B --g--> C -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSeq {
    pub f: ModuleMap,
    pub g: ModuleMap,
}

impl ShortExactSeq {
    pub fn left(&self) -> &Module {
        self.f.source()
    }
    pub fn middle(&self) -> &Module {
        self.f.target()
    }
    pub fn right(&self) -> &Module {
        self.g.target()
    }

    pub fn is_exact(&self) -> bool {
        self.f.target().same_as(self.g.source())
            && self.f.is_injective()
            && self.g.is_surjective()
            && self.g.after(&self.f).is_zero()
            && self.left().dim() + self.right().dim() == self.middle().dim()
    }

    /// Whether `g` admits a section.
    pub fn is_split(&self) -> Result<bool> {
        is_retraction(&self.g)
    }
}

fn contains_all(n: usize, base: &[Vector], targets: &[Vector], field: crate::linalg::Fp) -> bool {
    let r = span_rank(field, n, base);
    let mut all = base.to_vec();
    all.extend_from_slice(targets);
    span_rank(field, n, &all) == r
}

fn flat_len(src: &Module, dst: &Module) -> usize {
    src.dims().iter().zip(dst.dims()).map(|(a, b)| a * b).sum()
}

/// Whether `g: B -> C` has a right inverse.
pub fn is_retraction(g: &ModuleMap) -> Result<bool> {
    let c = g.target();
    let id = ModuleMap::identity(c).to_vector();
    let imgs: Vec<Vector> = hom_basis(c, g.source())?.iter().map(|s| g.after(s).to_vector()).collect();
    Ok(contains_all(flat_len(c, c), &imgs, &[id], c.algebra().field()))
}

/// Whether `f: A -> B` has a left inverse.
pub fn is_section(f: &ModuleMap) -> Result<bool> {
    let a = f.source();
    let id = ModuleMap::identity(a).to_vector();
    let imgs: Vec<Vector> = hom_basis(f.target(), a)?.iter().map(|r| r.after(f).to_vector()).collect();
    Ok(contains_all(flat_len(a, a), &imgs, &[id], a.algebra().field()))
}

/// The almost split sequence `0 -> τC -> E -> C -> 0`, realized as a pushout
/// of `0 -> ΩC -> P0 -> C -> 0` along a socle element of `Ext¹(C, τC)`.
pub fn almost_split_sequence_ending_at(c: &Module) -> Result<ShortExactSeq> {
    let alg = c.algebra();
    let fld = alg.field();
    let rad_c = local_radical(c)?.ok_or_else(|| Error::Hypothesis("module is not indecomposable".into()))?;
    let cover = projective_cover(c)?;
    let p0 = cover.proj.module().clone();
    let (k, iota) = kernel(&cover.epi);
    if k.is_zero() {
        return Err(Error::Hypothesis("module is projective".into()));
    }
    let a = tau_once(c)?;
    let hka = hom_basis(&k, &a)?;
    let n = flat_len(&k, &a);
    let restr: Vec<Vector> = hom_basis(&p0, &a)?.iter().map(|h| h.after(&iota).to_vector()).collect();

    // Each radical endomorphism of C, lifted to P0 and restricted to ΩC.
    let gens = cover.proj.generator_images(&cover.epi);
    let mut phis_k = Vec::new();
    for phi in &rad_c {
        let mut ys = Vec::new();
        for (j, t) in gens.iter().enumerate() {
            let w = cover.proj.summands()[j];
            let y = cover.epi.comp(w).solve(&phi.comp(w).mul_vec(t))?.ok_or_else(|| {
                Error::Verification("endomorphism does not lift to the projective cover".into())
            })?;
            ys.push(y);
        }
        let lift = cover.proj.map_from_generators(&p0, &ys);
        phis_k.push(lift_through_mono(&iota, &lift.after(&iota))?);
    }

    // Socle: coefficient vectors s with (Σ s_i h_i) ∘ φ_K ∈ restrictions for
    // every φ, cut down one φ at a time.
    let m = hka.len();
    let r = restr.len();
    let mut socle_basis: Vec<Vector> = (0..m)
        .map(|i| {
            let mut e = vec![0; m];
            e[i] = 1;
            e
        })
        .collect();
    for phi in &phis_k {
        if socle_basis.is_empty() {
            break;
        }
        let composed: Vec<Vector> = hka.iter().map(|h| h.after(phi).to_vector()).collect();
        let d = socle_basis.len();
        let mut sys = Matrix::zeros(fld, n, d + r);
        for (col, s) in socle_basis.iter().enumerate() {
            for (coef, v) in s.iter().zip(&composed) {
                if *coef == 0 {
                    continue;
                }
                for (row, &x) in v.iter().enumerate() {
                    sys.set(row, col, fld.add(sys.get(row, col), fld.mul(*coef, x)));
                }
            }
        }
        for (jj, v) in restr.iter().enumerate() {
            for (row, &x) in v.iter().enumerate() {
                sys.set(row, d + jj, fld.neg(x));
            }
        }
        let next: Vec<Vector> = sys
            .kernel_basis()
            .into_iter()
            .map(|t| {
                let mut out = vec![0; m];
                for (c, s) in t[..d].iter().zip(&socle_basis) {
                    for (o, &x) in out.iter_mut().zip(s) {
                        *o = fld.add(*o, fld.mul(*c, x));
                    }
                }
                out
            })
            .collect();
        socle_basis = span_basis(fld, m, &next);
    }
    let hmat = Matrix::from_columns(fld, n, &hka.iter().map(ModuleMap::to_vector).collect::<Vec<_>>());
    let mut r_coords = Vec::new();
    for v in &restr {
        let s = hmat
            .solve(v)?
            .ok_or_else(|| Error::Verification("restricted map is not a homomorphism".into()))?;
        r_coords.push(s);
    }
    let base = span_rank(fld, m, &r_coords);
    let pick = socle_basis
        .iter()
        .find(|s| {
            let mut all = r_coords.clone();
            all.push((*s).clone());
            span_rank(fld, m, &all) > base
        })
        .ok_or_else(|| Error::Verification("Ext socle is trivial".into()))?;
    let mut xi = ModuleMap::zero(&k, &a);
    for (coef, h) in pick.iter().zip(&hka) {
        if *coef != 0 {
            xi = xi.add(&h.scale(*coef));
        }
    }

    let ds = direct_sum(alg, &[a.clone(), p0.clone()])?;
    let phi = map_into_sum(&ds, &[xi, iota.scale(fld.neg(1))]);
    let (e, pi) = cokernel(&phi);
    let f = pi.after(&ds.injections[0]);
    let down = map_from_sum(&ds, &[ModuleMap::zero(&a, c), cover.epi.clone()]);
    let g = factor_through_epi(&pi, &down)?;
    debug!("almost split sequence with middle dims {:?}", e.dims());
    let seq = ShortExactSeq { f, g };
    if !seq.is_exact() {
        return Err(Error::Verification("constructed sequence is not exact".into()));
    }
    if seq.is_split()? {
        return Err(Error::Verification("constructed sequence splits".into()));
    }
    Ok(seq)
}

/// The almost split sequence starting at a non-injective indecomposable `A`.
pub fn almost_split_sequence_starting_at(a: &Module) -> Result<ShortExactSeq> {
    if is_injective(a)? {
        return Err(Error::Hypothesis("module is injective".into()));
    }
    let c = tau_inv_once(a)?;
    let seq = almost_split_sequence_ending_at(&c)?;
    let iso = crate::decompose::find_iso_indecomposable(a, seq.left())?
        .ok_or_else(|| Error::Verification("τ⁻¹ did not invert τ".into()))?;
    Ok(ShortExactSeq { f: seq.f.after(&iso), g: seq.g })
}

/// Right almost split test against a complete catalog of indecomposables.
pub fn is_right_almost_split(g: &ModuleMap, catalog: &[Module]) -> Result<bool> {
    let c = g.target();
    let b = g.source();
    let fld = c.algebra().field();
    let rad = local_radical(c)?.ok_or_else(|| Error::Hypothesis("target is not indecomposable".into()))?;
    if is_retraction(g)? {
        return Ok(false);
    }
    let through = |y: &Module| -> Result<Vec<Vector>> {
        Ok(hom_basis(y, b)?.iter().map(|k| g.after(k).to_vector()).collect())
    };
    let rad_v: Vec<Vector> = rad.iter().map(ModuleMap::to_vector).collect();
    if !contains_all(flat_len(c, c), &through(c)?, &rad_v, fld) {
        return Ok(false);
    }
    for y in catalog {
        if iso_indecomposable(y, c)? {
            continue;
        }
        let targets: Vec<Vector> = hom_basis(y, c)?.iter().map(ModuleMap::to_vector).collect();
        if !contains_all(flat_len(y, c), &through(y)?, &targets, fld) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Left almost split test against a complete catalog of indecomposables.
pub fn is_left_almost_split(f: &ModuleMap, catalog: &[Module]) -> Result<bool> {
    let a = f.source();
    let b = f.target();
    let fld = a.algebra().field();
    let rad = local_radical(a)?.ok_or_else(|| Error::Hypothesis("source is not indecomposable".into()))?;
    if is_section(f)? {
        return Ok(false);
    }
    let through = |y: &Module| -> Result<Vec<Vector>> {
        Ok(hom_basis(b, y)?.iter().map(|h| h.after(f).to_vector()).collect())
    };
    let rad_v: Vec<Vector> = rad.iter().map(ModuleMap::to_vector).collect();
    if !contains_all(flat_len(a, a), &through(a)?, &rad_v, fld) {
        return Ok(false);
    }
    for y in catalog {
        if iso_indecomposable(y, a)? {
            continue;
        }
        let targets: Vec<Vector> = hom_basis(a, y)?.iter().map(ModuleMap::to_vector).collect();
        if !contains_all(flat_len(a, y), &through(y)?, &targets, fld) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Isoclasses of indecomposables, closed under the AR structure.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub algebra: Algebra,
    pub modules: Vec<Module>,
    pub keys: Vec<IsoKey>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
    pub tau: Vec<Option<usize>>,
    pub tau_inv: Vec<Option<usize>>,
    /// Almost split sequence ending at each non-projective.
    pub sequences: Vec<Option<ShortExactSeq>>,
    /// Decomposition of the middle term ending at each vertex (of the
    /// radical, for projectives), as `(class, multiplicity)`.
    pub middle: Vec<Vec<(usize, usize)>>,
}

/// Caps guarding enumeration against infinite representation type.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_dim: usize,
    pub max_classes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_dim: 64, max_classes: 400 }
    }
}

impl Catalog {
    fn empty(alg: &Algebra) -> Catalog {
        Catalog {
            algebra: alg.clone(),
            modules: Vec::new(),
            keys: Vec::new(),
            projective: Vec::new(),
            injective: Vec::new(),
            tau: Vec::new(),
            tau_inv: Vec::new(),
            sequences: Vec::new(),
            middle: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// Index of the class of an indecomposable module.
    pub fn find(&self, m: &Module) -> Result<Option<usize>> {
        let key = iso_key(m)?;
        self.find_keyed(m, &key)
    }

    fn find_keyed(&self, m: &Module, key: &IsoKey) -> Result<Option<usize>> {
        for (i, k) in self.keys.iter().enumerate() {
            if k == key && iso_indecomposable(&self.modules[i], m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn insert(&mut self, m: &Module, caps: Caps) -> Result<usize> {
        let key = iso_key(m)?;
        if let Some(i) = self.find_keyed(m, &key)? {
            return Ok(i);
        }
        if m.dim() > caps.max_dim {
            return Err(Error::CapExceeded(format!(
                "indecomposable of dimension {} exceeds the cap {}",
                m.dim(),
                caps.max_dim
            )));
        }
        if self.len() >= caps.max_classes {
            return Err(Error::CapExceeded(format!("more than {} isoclasses", caps.max_classes)));
        }
        self.modules.push(m.clone());
        self.keys.push(key);
        self.projective.push(is_projective(m)?);
        self.injective.push(is_injective(m)?);
        self.tau.push(None);
        self.tau_inv.push(None);
        self.sequences.push(None);
        self.middle.push(Vec::new());
        Ok(self.len() - 1)
    }

    fn insert_all(&mut self, m: &Module, caps: Caps) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (x, mult) in decompose(m)? {
            out.push((self.insert(&x, caps)?, mult));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Decompose an arbitrary module into catalog classes.
    pub fn classify(&self, m: &Module) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (x, mult) in decompose(m)? {
            let i = self.find(&x)?.ok_or_else(|| Error::Verification("summand missing from the catalog".into()))?;
            out.push((i, mult));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The AR quiver; valuations are middle-term multiplicities on both sides.
    pub fn ar_quiver(&self) -> Result<TranslationQuiver> {
        let fld = self.algebra.field();
        for m in &self.modules {
            let end = crate::module::hom_dim(m, m)?;
            let rad = local_radical(m)?.map_or(0, |r| r.len());
            if end - rad != 1 {
                return Err(Error::Hypothesis(format!(
                    "endomorphism ring modulo radical has dimension {} over F_{}; asymmetric valuations are unsupported",
                    end - rad,
                    fld.p()
                )));
            }
        }
        let mut arrows = Vec::new();
        for (z, parts) in self.middle.iter().enumerate() {
            for &(y, mult) in parts {
                arrows.push(QuiverArrow { from: y, to: z, valuation: (mult, mult) });
            }
        }
        Ok(TranslationQuiver {
            labels: self.modules.iter().map(crate::naming::module_name).collect(),
            arrows,
            tau: self.tau.clone(),
            projective: self.projective.clone(),
            injective: self.injective.clone(),
        })
    }
}

/// Enumerate all indecomposables by closing the projectives and injectives
/// under `τ^{±1}`, middle terms, radicals of projectives and quotients of
/// injectives by their socles.
pub fn enumerate_indecomposables(alg: &Algebra, caps: Caps) -> Result<Catalog> {
    let mut cat = Catalog::empty(alg);
    for v in 0..alg.num_vertices() {
        cat.insert(&Module::projective(alg, v), caps)?;
    }
    for v in 0..alg.num_vertices() {
        cat.insert(&Module::injective(alg, v), caps)?;
    }
    let mut i = 0;
    while i < cat.len() {
        let m = cat.modules[i].clone();
        if cat.projective[i] {
            let (r, _) = radical(&m);
            cat.middle[i] = cat.insert_all(&r, caps)?;
        } else {
            let seq = almost_split_sequence_ending_at(&m)?;
            let t = cat.insert(seq.left(), caps)?;
            cat.tau[i] = Some(t);
            cat.tau_inv[t] = Some(i);
            cat.middle[i] = cat.insert_all(seq.middle(), caps)?;
            cat.sequences[i] = Some(seq);
        }
        if cat.injective[i] {
            let (_, s) = socle(&m);
            let (q, _) = cokernel(&s);
            cat.insert_all(&q, caps)?;
        } else if cat.tau_inv[i].is_none() {
            let t = tau_inv_once(&m)?;
            let j = cat.insert(&t, caps)?;
            cat.tau_inv[i] = Some(j);
        }
        i += 1;
    }
    for (i, t) in cat.tau.iter().enumerate() {
        if let Some(t) = t {
            if cat.tau_inv[*t] != Some(i) {
                return Err(Error::Verification("τ and τ⁻¹ disagree on the catalog".into()));
            }
        }
    }
    Ok(cat)
}

pub fn ar_quiver(alg: &Algebra, caps: Caps) -> Result<TranslationQuiver> {
    enumerate_indecomposables(alg, caps)?.ar_quiver()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::isomorphic;
    use crate::module::tests::{a2, poly};

    #[test]
    fn cover_and_envelope_of_simple_over_dual_numbers() {
        let l = poly(2);
        let s = Module::simple(&l, 0);
        let c = projective_cover(&s).unwrap();
        assert_eq!(c.proj.summands(), &[0]);
        assert_eq!(c.proj.module().dim(), 2);
        let e = injective_envelope(&s).unwrap();
        assert_eq!(e.inj.dim(), 2);
        assert!(e.mono.is_injective());
        let z = Module::zero(&l);
        assert_eq!(projective_cover(&z).unwrap().proj.module().dim(), 0);
        assert_eq!(injective_envelope(&z).unwrap().inj.dim(), 0);
    }

    #[test]
    fn presentation_of_simple_is_multiplication_by_x() {
        let l = poly(3);
        let s = Module::simple(&l, 0);
        let p = presentation(&s).unwrap();
        assert_eq!(p.p1.summands(), &[0]);
        assert_eq!(p.kernel.dim(), 2);
        // The coefficient is the path x.
        let x = l.arrow_basis(0);
        let mut expect = vec![0; l.dim()];
        expect[x] = 1;
        assert_eq!(p.g.coef[0][0], expect);
        let proj = Module::projective(&l, 0);
        assert!(presentation(&proj).unwrap().p1.summands().is_empty());
    }

    #[test]
    fn syzygies_of_truncated_polynomials() {
        let l2 = poly(2);
        let s = Module::simple(&l2, 0);
        assert!(isomorphic(&syzygy(&s, 1).unwrap(), &s).unwrap());
        assert!(isomorphic(&syzygy(&s, -1).unwrap(), &s).unwrap());
        assert!(syzygy(&Module::projective(&l2, 0), 1).unwrap().is_zero());
        let l3 = poly(3);
        let s3 = Module::simple(&l3, 0);
        let o = syzygy(&s3, 1).unwrap();
        assert_eq!(o.dim(), 2);
        assert!(isomorphic(&syzygy(&s3, 2).unwrap(), &s3).unwrap());
    }

    #[test]
    fn transpose_and_translate() {
        let l = poly(2);
        let s = Module::simple(&l, 0);
        let tr = transpose(&s).unwrap();
        assert!(isomorphic(&tr, &Module::simple(&l.opposite(), 0)).unwrap());
        assert!(isomorphic(&tau(&s, 1).unwrap(), &s).unwrap());
        assert!(tau(&Module::projective(&l, 0), 1).unwrap().is_zero());
        assert!(transpose(&Module::projective(&l, 0)).unwrap().is_zero());
    }

    #[test]
    fn tau_matches_omega_squared_for_symmetric_algebra() {
        let l = poly(4);
        let cat = enumerate_indecomposables(&l, Caps::default()).unwrap();
        for (i, m) in cat.modules.iter().enumerate() {
            if cat.projective[i] {
                continue;
            }
            let t = tau(m, 1).unwrap();
            assert!(isomorphic(&t, &syzygy(m, 2).unwrap()).unwrap());
            assert!(isomorphic(&tau(&t, -1).unwrap(), m).unwrap());
        }
    }

    #[test]
    fn nakayama_of_projective_is_injective() {
        let l = a2();
        for v in 0..2 {
            let n = nakayama(&Module::projective(&l, v)).unwrap();
            assert!(isomorphic(&n, &Module::injective(&l, v)).unwrap());
            let back = nakayama_inv(&n).unwrap();
            assert!(isomorphic(&back, &Module::projective(&l, v)).unwrap());
        }
    }

    #[test]
    fn almost_split_sequences_over_small_algebras() {
        let l = poly(2);
        let s = Module::simple(&l, 0);
        let seq = almost_split_sequence_ending_at(&s).unwrap();
        assert!(isomorphic(seq.middle(), &Module::projective(&l, 0)).unwrap());
        assert!(isomorphic(seq.left(), &s).unwrap());

        let l3 = poly(3);
        let seq = almost_split_sequence_ending_at(&Module::simple(&l3, 0)).unwrap();
        assert_eq!(seq.middle().dim(), 2);
        assert_eq!(decompose(seq.middle()).unwrap().len(), 1);

        let a = a2();
        let s1 = Module::simple(&a, 0);
        let seq = almost_split_sequence_ending_at(&s1).unwrap();
        assert!(isomorphic(seq.left(), &Module::simple(&a, 1)).unwrap());
        assert!(isomorphic(seq.middle(), &Module::projective(&a, 0)).unwrap());
        assert!(matches!(almost_split_sequence_ending_at(&Module::projective(&a, 1)), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn right_almost_split_checks() {
        let l = poly(2);
        let cat = enumerate_indecomposables(&l, Caps::default()).unwrap();
        let s = Module::simple(&l, 0);
        let c = projective_cover(&s).unwrap();
        assert!(is_right_almost_split(&c.epi, &cat.modules).unwrap());
        assert!(!is_right_almost_split(&ModuleMap::identity(&s), &cat.modules).unwrap());
        for seq in cat.sequences.iter().flatten() {
            assert!(is_right_almost_split(&seq.g, &cat.modules).unwrap());
            assert!(is_left_almost_split(&seq.f, &cat.modules).unwrap());
        }
    }

    #[test]
    fn catalogs_have_classical_sizes() {
        assert_eq!(enumerate_indecomposables(&poly(2), Caps::default()).unwrap().len(), 2);
        assert_eq!(enumerate_indecomposables(&poly(3), Caps::default()).unwrap().len(), 3);
        let cat = enumerate_indecomposables(&a2(), Caps::default()).unwrap();
        assert_eq!(cat.len(), 3);
        let q = cat.ar_quiver().unwrap();
        assert_eq!(q.arrows.len(), 2);
    }

    #[test]
    fn ar_quiver_of_dual_numbers() {
        let q = ar_quiver(&poly(2), Caps::default()).unwrap();
        assert_eq!(q.len(), 2);
        let s = q.labels.iter().position(|l| l == "S").unwrap();
        let p = q.labels.iter().position(|l| l == "Λ").unwrap();
        assert!(q.has_arrow(s, p) && q.has_arrow(p, s));
        assert_eq!(q.tau[s], Some(s));
        assert!(q.arrows.iter().all(|a| a.from != a.to));
    }

    #[test]
    fn cap_is_reported() {
        let caps = Caps { max_dim: 1, max_classes: 10 };
        assert!(matches!(enumerate_indecomposables(&poly(3), caps), Err(Error::CapExceeded(_))));
    }
}
