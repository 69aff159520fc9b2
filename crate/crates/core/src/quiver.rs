//! The AR quiver of `H(Λ)`, its stable part, `τ_H`-orbits and Dynkin types.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::ar::{
    injective_envelope, is_projective, is_self_injective, nakayama, nakayama_inv, omega, omega_inv, presentation,
    projective_cover, strip_projective, tau_inv_once, tau_once, Catalog, Caps,
};
use crate::decompose::{isomorphic, iso_indecomposable};
use crate::error::{Error, Result};
use crate::module::{cokernel, Module, ModuleMap};
use crate::morph::{is_projective_h, iso_h, tau_h_inv_once, tau_h_once, HCatalog, MorphObject};
use crate::naming::{module_name, object_name, short_name};
use crate::translation::TranslationQuiver;

/// `Γ_H`, knitted over `T2(Λ)` and relabelled; every translate is checked
/// against the native `τ_H`.
pub fn gamma_h(hcat: &HCatalog) -> Result<TranslationQuiver> {
    let mut q = hcat.t2.ar_quiver()?;
    q.labels = hcat.objects.iter().map(short_name).collect();
    // Equal labels (e.g. multiplication by x and by x² on Λ) get the rank of f.
    let dup: Vec<bool> =
        q.labels.iter().map(|l| q.labels.iter().filter(|m| *m == l).count() > 1).collect();
    for (i, l) in q.labels.iter_mut().enumerate() {
        if dup[i] {
            l.insert_str(l.len() - 1, &format!(",r{}", hcat.objects[i].f().rank()));
        }
    }
    for (i, t) in q.tau.iter().enumerate() {
        if let Some(t) = t {
            let native = tau_h_once(&hcat.objects[i])?;
            if !iso_h(&native, &hcat.objects[*t])? {
                return Err(Error::Verification(format!(
                    "native τ_H of {} disagrees with the knitted quiver",
                    q.labels[i]
                )));
            }
        }
    }
    Ok(q)
}

/// Remove every projective and every injective vertex.
pub fn stable_quiver(g: &TranslationQuiver) -> TranslationQuiver {
    let keep: Vec<usize> = (0..g.len()).filter(|&i| !g.projective[i] && !g.injective[i]).collect();
    g.induced(&keep).0
}

/// Every vertex has `τ` and `τ⁻¹` inside the quiver.
pub fn stability_check(g: &TranslationQuiver) -> bool {
    g.is_stable()
}

pub fn connectedness_check(g: &TranslationQuiver) -> bool {
    g.is_connected()
}

/// Predecessors of each vertex agree, as a multiset, with the successors of
/// its translate.
pub fn mesh_complete(g: &TranslationQuiver) -> bool {
    (0..g.len()).all(|v| match g.tau[v] {
        Some(t) => {
            let mut a = g.predecessors(v);
            let mut b = g.successors(t);
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }
        None => true,
    })
}

/// Objects whose `τ_H`-orbit has a closed form over a self-injective algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrbitFamily {
    /// `(0 -> C)`
    ZeroTo,
    /// `(C = C)`
    Identity,
    /// `(C -> 0)`
    ToZero,
    /// `(P -> Q)` between projectives
    BetweenProjectives,
    /// `(P -> C)`, a projective cover
    Cover,
    /// `(C -> I)`, an injective envelope
    Envelope,
}

impl OrbitFamily {
    pub const ALL: [OrbitFamily; 6] = [
        OrbitFamily::ZeroTo,
        OrbitFamily::Identity,
        OrbitFamily::ToZero,
        OrbitFamily::BetweenProjectives,
        OrbitFamily::Cover,
        OrbitFamily::Envelope,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrbitFamily::ZeroTo => "zero-to",
            OrbitFamily::Identity => "identity",
            OrbitFamily::ToZero => "to-zero",
            OrbitFamily::BetweenProjectives => "between-projectives",
            OrbitFamily::Cover => "cover",
            OrbitFamily::Envelope => "envelope",
        }
    }
}

/// `A = τντ²` and `B = τΩ⁻¹τ` on the stable category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StableFunctor {
    A,
    B,
}

fn a_once(m: &Module) -> Result<Module> {
    tau_once(&nakayama(&tau_once(&tau_once(m)?)?)?)
}

fn a_inv_once(m: &Module) -> Result<Module> {
    tau_inv_once(&tau_inv_once(&nakayama_inv(&tau_inv_once(m)?)?)?)
}

fn b_once(m: &Module) -> Result<Module> {
    tau_once(&omega_inv(&tau_once(m)?)?)
}

fn b_inv_once(m: &Module) -> Result<Module> {
    tau_inv_once(&omega(&tau_inv_once(m)?)?)
}

/// `A^i` or `B^i`; projective summands are dropped first.
pub fn stable_functor(m: &Module, which: StableFunctor, i: i64) -> Result<Module> {
    let mut y = strip_projective(m)?;
    let step = match (which, i >= 0) {
        (StableFunctor::A, true) => a_once,
        (StableFunctor::A, false) => a_inv_once,
        (StableFunctor::B, true) => b_once,
        (StableFunctor::B, false) => b_inv_once,
    };
    for _ in 0..i.unsigned_abs() {
        y = step(&y)?;
    }
    Ok(y)
}

fn nakayama_pow(m: &Module, k: usize) -> Result<Module> {
    let mut y = m.clone();
    for _ in 0..k {
        y = nakayama(&y)?;
    }
    Ok(y)
}

/// Isomorphism after removing projective summands.
pub fn stably_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    isomorphic(&strip_projective(m)?, &strip_projective(n)?)
}

fn cover_object(c: &Module) -> Result<MorphObject> {
    Ok(MorphObject::new(projective_cover(c)?.epi))
}

fn envelope_object(c: &Module) -> Result<MorphObject> {
    Ok(MorphObject::new(injective_envelope(c)?.mono))
}

fn presentation_object(c: &Module) -> Result<MorphObject> {
    Ok(MorphObject::new(presentation(c)?.map()))
}

fn zero_to_orbit(c: &Module, i: i64) -> Result<MorphObject> {
    let (m, k) = (i.abs() / 4, i.abs() % 4);
    if i >= 0 {
        let cm = stable_functor(c, StableFunctor::A, m)?;
        Ok(match k {
            0 => MorphObject::zero_to(&cm),
            1 => MorphObject::identity(&tau_once(&cm)?),
            2 => MorphObject::to_zero(&tau_once(&tau_once(&cm)?)?),
            _ => MorphObject::new(presentation(&tau_once(&tau_once(&cm)?)?)?.g.nakayama()),
        })
    } else {
        let cm = stable_functor(c, StableFunctor::A, -m)?;
        let d = || -> Result<Module> { nakayama_inv(&tau_inv_once(&cm)?) };
        Ok(match k {
            0 => MorphObject::zero_to(&cm),
            1 => presentation_object(&tau_inv_once(&cm)?)?,
            2 => MorphObject::to_zero(&d()?),
            _ => MorphObject::identity(&tau_inv_once(&d()?)?),
        })
    }
}

fn cover_orbit(c: &Module, i: i64) -> Result<MorphObject> {
    let (m, k) = (i.abs() / 2, i.abs() % 2);
    if i >= 0 {
        let cm = stable_functor(c, StableFunctor::B, m)?;
        if k == 0 {
            cover_object(&cm)
        } else {
            envelope_object(&tau_once(&cm)?)
        }
    } else {
        let cm = stable_functor(c, StableFunctor::B, -m)?;
        if k == 0 {
            cover_object(&cm)
        } else {
            envelope_object(&omega(&tau_inv_once(&cm)?)?)
        }
    }
}

fn require_self_injective(alg: &Algebra) -> Result<()> {
    if !is_self_injective(alg)? {
        return Err(Error::Hypothesis("algebra is not self-injective".into()));
    }
    Ok(())
}

fn nonprojective_indecomposable(c: &Module, what: &str) -> Result<()> {
    if c.is_zero() || !crate::decompose::is_indecomposable(c)? || is_projective(c)? {
        return Err(Error::Hypothesis(format!("{what} is not indecomposable non-projective")));
    }
    Ok(())
}

/// The module `C` parametrising `x` within a family.
fn family_parameter(x: &MorphObject, family: OrbitFamily) -> Result<Module> {
    let bad = |s: &str| Error::Hypothesis(format!("object does not have the {} shape: {s}", family.name()));
    let c = match family {
        OrbitFamily::ZeroTo => {
            if !x.a().is_zero() {
                return Err(bad("source is not zero"));
            }
            x.b().clone()
        }
        OrbitFamily::Identity => {
            if !x.f().is_iso() {
                return Err(bad("map is not an isomorphism"));
            }
            x.a().clone()
        }
        OrbitFamily::ToZero => {
            if !x.b().is_zero() {
                return Err(bad("target is not zero"));
            }
            x.a().clone()
        }
        OrbitFamily::BetweenProjectives => {
            if !is_projective(x.a())? || !is_projective(x.b())? || x.b().is_zero() {
                return Err(bad("not a map between projectives"));
            }
            if is_projective_h(x)? || !crate::morph::is_indecomposable_h(x)? {
                return Err(bad("not indecomposable non-projective"));
            }
            cokernel(x.f()).0
        }
        OrbitFamily::Cover => {
            let ok = x.f().is_surjective()
                && is_projective(x.a())?
                && projective_cover(x.b())?.proj.module().dim() == x.a().dim();
            if !ok {
                return Err(bad("map is not a projective cover"));
            }
            x.b().clone()
        }
        OrbitFamily::Envelope => {
            let ok = x.f().is_injective() && injective_envelope(x.a())?.inj.dim() == x.b().dim();
            if !ok {
                return Err(bad("map is not an injective envelope"));
            }
            x.a().clone()
        }
    };
    nonprojective_indecomposable(&c, "parameter module")?;
    Ok(c)
}

/// `τ_H^i x` from the case tables rather than by iterating `τ_H`.
pub fn orbit_closed_form(x: &MorphObject, family: OrbitFamily, i: i64) -> Result<MorphObject> {
    require_self_injective(x.algebra())?;
    let c = family_parameter(x, family)?;
    if i == 0 {
        return Ok(x.clone());
    }
    match family {
        OrbitFamily::ZeroTo => zero_to_orbit(&c, i),
        OrbitFamily::Identity => zero_to_orbit(&tau_inv_once(&c)?, i + 1),
        OrbitFamily::ToZero => zero_to_orbit(&tau_inv_once(&tau_inv_once(&c)?)?, i + 2),
        OrbitFamily::BetweenProjectives => zero_to_orbit(&tau_once(&c)?, i - 1),
        OrbitFamily::Cover => cover_orbit(&c, i),
        OrbitFamily::Envelope => cover_orbit(&tau_inv_once(&c)?, i + 1),
    }
}

/// Families whose shape `x` has.
pub fn families_of(x: &MorphObject) -> Result<Vec<OrbitFamily>> {
    let mut out = Vec::new();
    for f in OrbitFamily::ALL {
        match family_parameter(x, f) {
            Ok(_) => out.push(f),
            Err(Error::Hypothesis(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// `τ_H^i x` for `i` in `-bound..=bound`, by iteration.
pub fn iterate_orbit(x: &MorphObject, bound: usize) -> Result<BTreeMap<i64, MorphObject>> {
    let mut out = BTreeMap::new();
    out.insert(0, x.clone());
    let mut y = x.clone();
    for i in 1..=bound as i64 {
        y = tau_h_once(&y)?;
        out.insert(i, y.clone());
    }
    let mut y = x.clone();
    for i in 1..=bound as i64 {
        y = tau_h_inv_once(&y)?;
        out.insert(-i, y.clone());
    }
    Ok(out)
}

/// Exponents `i` where the closed form disagrees with direct iteration.
pub fn orbit_disagreements(x: &MorphObject, family: OrbitFamily, bound: usize) -> Result<Vec<i64>> {
    let direct = iterate_orbit(x, bound)?;
    let mut bad = Vec::new();
    for (i, y) in &direct {
        if !iso_h(&orbit_closed_form(x, family, *i)?, y)? {
            bad.push(*i);
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitRecord {
    pub base: String,
    pub iterates: Vec<(i64, String)>,
    pub period: Option<usize>,
}

/// Least `m ≤ bound` with `τ_H^m x ≅ x`.
pub fn periodicity(x: &MorphObject, bound: usize) -> Result<Option<usize>> {
    if x.is_zero() || !crate::morph::is_indecomposable_h(x)? {
        return Err(Error::Hypothesis("object is not indecomposable".into()));
    }
    if is_projective_h(x)? {
        return Err(Error::Hypothesis("object is projective; τ_H is undefined".into()));
    }
    let mut y = x.clone();
    for m in 1..=bound {
        y = tau_h_once(&y)?;
        if y.is_zero() {
            return Ok(None);
        }
        if iso_h(&y, x)? {
            return Ok(Some(m));
        }
        if is_projective_h(&y)? {
            return Ok(None);
        }
    }
    Ok(None)
}

/// The first `period` (or `bound`) iterates with names, stopping early at a
/// projective.
pub fn orbit_record(x: &MorphObject, bound: usize) -> Result<OrbitRecord> {
    let period = periodicity(x, bound)?;
    let mut iterates = vec![(0, object_name(x))];
    let mut y = x.clone();
    for i in 1..period.unwrap_or(bound) {
        y = tau_h_once(&y)?;
        iterates.push((i as i64, object_name(&y)));
        if y.is_zero() || is_projective_h(&y)? {
            break;
        }
    }
    Ok(OrbitRecord { base: object_name(x), iterates, period })
}

/// The objects `(0 -> U)`, `(U = U)`, `(U -> 0)` and `(Λ -h-> Λ)` over
/// `k[x]/(x^n)`, where `U = k[x]/(x^i)` for `1 ≤ i < n` and `h` factors
/// through `U`.
pub fn truncated_polynomial_family(alg: &Algebra) -> Result<Vec<(usize, MorphObject)>> {
    if alg.num_vertices() != 1 || alg.arrows().len() != 1 {
        return Err(Error::Hypothesis("algebra is not a truncated polynomial ring".into()));
    }
    let n = alg.dim();
    let p = Module::projective(alg, 0);
    let x = ModuleMap::new(&p, &p, vec![p.arrow(0).clone()])?;
    let power = |k: usize| (0..k).fold(ModuleMap::identity(&p), |acc, _| x.after(&acc));
    let mut out = Vec::new();
    for i in 1..n {
        let (u, _) = cokernel(&power(i));
        out.push((i, MorphObject::zero_to(&u)));
        out.push((i, MorphObject::identity(&u)));
        out.push((i, MorphObject::to_zero(&u)));
        out.push((i, MorphObject::new(power(n - i))));
    }
    Ok(out)
}

/// Underlying tree of `Δ`: sectional paths out of `root`, where consecutive
/// steps `y -> z -> w` must satisfy `τw ≠ y`. Returns parent links, or `None`
/// if the walk exceeds `limit` nodes.
fn sectional_tree(g: &TranslationQuiver, root: usize, limit: usize) -> Option<Vec<Option<usize>>> {
    let mut nodes: Vec<(usize, Option<usize>, Option<usize>)> = vec![(root, None, None)];
    let mut i = 0;
    while i < nodes.len() {
        let (v, prev, _) = nodes[i];
        for w in g.successors(v) {
            if prev.is_some_and(|y| g.tau[w] == Some(y)) {
                continue;
            }
            nodes.push((w, Some(v), Some(i)));
            if nodes.len() > limit {
                return None;
            }
        }
        i += 1;
    }
    Some(nodes.into_iter().map(|(_, _, p)| p).collect())
}

/// Dynkin type of a finite tree given by parent links.
fn classify_tree(parent: &[Option<usize>]) -> Option<String> {
    let n = parent.len();
    let mut adj = vec![Vec::new(); n];
    for (i, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            adj[i].push(p);
            adj[p].push(i);
        }
    }
    let branch: Vec<usize> = (0..n).filter(|&i| adj[i].len() > 2).collect();
    match branch.as_slice() {
        [] => Some(format!("A{n}")),
        [b] if adj[*b].len() == 3 => {
            let mut arms: Vec<usize> = adj[*b]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&y| y != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Some(format!("D{}", k + 3)),
                [1, 2, 2] => Some("E6".into()),
                [1, 2, 3] => Some("E7".into()),
                [1, 2, 4] => Some("E8".into()),
                _ => None,
            }
        }
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DynkinReport {
    pub dynkin: Option<String>,
    pub tree_size: usize,
    pub orbit_sizes: Vec<usize>,
    pub orbits: usize,
}

/// `τ`-orbits of a stable quiver, each sorted.
pub fn tau_orbits(g: &TranslationQuiver) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
    for s in 0..g.len() {
        if seen[s] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut v = s;
        while !seen[v] {
            seen[v] = true;
            orbit.push(v);
            match g.tau[v] {
                Some(t) => v = t,
                None => break,
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Recognise the tree class of a finite stable connected translation quiver
/// with simple arrows.
pub fn dynkin_recognition(g: &TranslationQuiver) -> Result<DynkinReport> {
    if !g.is_stable() || !g.is_connected() || g.is_empty() {
        return Err(Error::Hypothesis("quiver is not finite, stable and connected".into()));
    }
    if g.arrows.iter().any(|a| a.valuation != (1, 1)) {
        return Err(Error::Hypothesis("quiver has multiple or valued arrows".into()));
    }
    let orbits = tau_orbits(g);
    let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let limit = orbits.len() + 1;
    let mut types = Vec::new();
    let mut tree_size = 0;
    for root in 0..g.len() {
        let t = sectional_tree(g, root, limit);
        let ty = t.as_ref().and_then(|t| classify_tree(t));
        tree_size = tree_size.max(t.map_or(limit, |t| t.len()));
        types.push(ty);
    }
    let first = types[0].clone();
    let dynkin = if types.iter().all(|t| *t == first) { first } else { None };
    Ok(DynkinReport { dynkin, tree_size, orbit_sizes: sizes, orbits: orbits.len() })
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentMap {
    pub functor: StableFunctor,
    /// Each orbit of ind-Λ under the functor, with the components its
    /// members' objects meet.
    pub orbits: Vec<(Vec<String>, Vec<usize>)>,
    pub well_defined: bool,
    pub surjective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaBetaReport {
    pub delta: ComponentMap,
    pub beta: ComponentMap,
}

fn functor_orbits(cat: &Catalog, which: StableFunctor) -> Result<Vec<Vec<usize>>> {
    let nonproj: Vec<usize> = (0..cat.len()).filter(|&i| !cat.projective[i]).collect();
    let mut image = BTreeMap::new();
    for &i in &nonproj {
        let y = stable_functor(&cat.modules[i], which, 1)?;
        let j = cat.find(&y)?.ok_or_else(|| Error::Verification("functor leaves the catalog".into()))?;
        image.insert(i, j);
    }
    let mut seen = BTreeMap::new();
    let mut out = Vec::new();
    for &s in &nonproj {
        if seen.contains_key(&s) {
            continue;
        }
        let mut orbit = Vec::new();
        let mut v = s;
        while !seen.contains_key(&v) {
            seen.insert(v, out.len());
            orbit.push(v);
            v = image[&v];
        }
        out.push(orbit);
    }
    Ok(out)
}

fn component_map(
    cat: &Catalog,
    hcat: &HCatalog,
    comp_of: &[usize],
    which: StableFunctor,
    object: impl Fn(&Module) -> Result<MorphObject>,
) -> Result<ComponentMap> {
    let mut orbits = Vec::new();
    let mut well_defined = true;
    let mut hit = Vec::new();
    for orbit in functor_orbits(cat, which)? {
        let mut comps = Vec::new();
        for &i in &orbit {
            let k = hcat.index(&object(&cat.modules[i])?)?;
            comps.push(comp_of[k]);
        }
        comps.sort_unstable();
        comps.dedup();
        well_defined &= comps.len() == 1;
        hit.extend(comps.iter().copied());
        orbits.push((orbit.iter().map(|&i| module_name(&cat.modules[i])).collect(), comps));
    }
    // Codomain: components that contain such an object for some non-projective M.
    let mut codomain = Vec::new();
    for i in (0..cat.len()).filter(|&i| !cat.projective[i]) {
        codomain.push(comp_of[hcat.index(&object(&cat.modules[i])?)?]);
    }
    codomain.sort_unstable();
    codomain.dedup();
    hit.sort_unstable();
    hit.dedup();
    Ok(ComponentMap { functor: which, orbits, well_defined, surjective: hit == codomain })
}

/// Maps from `A`-orbits (resp. `B`-orbits) of ind-Λ to components of `Γ_H`
/// through `(0 -> M)` (resp. the projective cover of `M`).
pub fn delta_beta_maps(cat: &Catalog, hcat: &HCatalog) -> Result<DeltaBetaReport> {
    require_self_injective(&cat.algebra)?;
    let g = gamma_h(hcat)?;
    let mut comp_of = vec![0; g.len()];
    for (c, members) in g.components().iter().enumerate() {
        for &v in members {
            comp_of[v] = c;
        }
    }
    let delta = component_map(cat, hcat, &comp_of, StableFunctor::A, |m| Ok(MorphObject::zero_to(m)))?;
    let beta = component_map(cat, hcat, &comp_of, StableFunctor::B, cover_object)?;
    Ok(DeltaBetaReport { delta, beta })
}

/// Result of comparing `A` and `B` with powers of `Ω` and `ν` on one module.
#[derive(Clone, Debug, Serialize)]
pub struct FunctorIdentity {
    pub module: String,
    pub a_matches_nu4_omega6: bool,
    pub b_matches_nu2_omega3: bool,
    pub b_matches_omega3_nu: bool,
    /// Only meaningful when `ν` fixes every indecomposable.
    pub a_matches_omega6: bool,
    pub b_matches_omega3: bool,
}

/// Whether `ν` fixes every catalogued indecomposable up to isomorphism.
pub fn nakayama_fixes_all(cat: &Catalog) -> Result<bool> {
    for m in &cat.modules {
        if !iso_indecomposable(&nakayama(m)?, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn functor_identities(cat: &Catalog) -> Result<Vec<FunctorIdentity>> {
    require_self_injective(&cat.algebra)?;
    let mut out = Vec::new();
    for (i, m) in cat.modules.iter().enumerate() {
        if cat.projective[i] {
            continue;
        }
        let a = stable_functor(m, StableFunctor::A, 1)?;
        let b = stable_functor(m, StableFunctor::B, 1)?;
        let o3 = crate::ar::syzygy(m, 3)?;
        let o6 = crate::ar::syzygy(m, 6)?;
        out.push(FunctorIdentity {
            module: module_name(m),
            a_matches_nu4_omega6: stably_isomorphic(&a, &nakayama_pow(&o6, 4)?)?,
            b_matches_nu2_omega3: stably_isomorphic(&b, &nakayama_pow(&o3, 2)?)?,
            b_matches_omega3_nu: stably_isomorphic(&b, &crate::ar::syzygy(&nakayama(m)?, 3)?)?,
            a_matches_omega6: stably_isomorphic(&a, &o6)?,
            b_matches_omega3: stably_isomorphic(&b, &o3)?,
        });
    }
    Ok(out)
}

/// `Γ_H` for `alg`, built with the given caps.
pub fn knit_h(alg: &Algebra, caps: Caps) -> Result<(HCatalog, TranslationQuiver)> {
    let hcat = HCatalog::build(alg, caps)?;
    let g = gamma_h(&hcat)?;
    Ok((hcat, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar::enumerate_indecomposables;
    use crate::module::tests::poly;

    fn label_index(g: &TranslationQuiver, l: &str) -> usize {
        g.labels.iter().position(|x| x == l).unwrap_or_else(|| panic!("{l} missing from {:?}", g.labels))
    }

    #[test]
    fn stable_quiver_of_dual_numbers() {
        let l = poly(2);
        let (_, g) = knit_h(&l, Caps::default()).unwrap();
        assert_eq!(g.len(), 9);
        assert!(mesh_complete(&g));
        let s = stable_quiver(&g);
        let mut labels = s.labels.clone();
        labels.sort();
        assert_eq!(labels, ["[0S]", "[S0]", "[SS_1]", "[SΛ_i]", "[ΛS_p]", "[ΛΛ_f]"]);
        let arrows = [
            ("[S0]", "[ΛS_p]"),
            ("[0S]", "[ΛS_p]"),
            ("[ΛS_p]", "[SS_1]"),
            ("[ΛS_p]", "[ΛΛ_f]"),
            ("[SS_1]", "[SΛ_i]"),
            ("[ΛΛ_f]", "[SΛ_i]"),
            ("[SΛ_i]", "[0S]"),
            ("[SΛ_i]", "[S0]"),
        ];
        assert_eq!(s.arrows.len(), arrows.len());
        for (a, b) in arrows {
            assert!(s.has_arrow(label_index(&s, a), label_index(&s, b)), "{a} -> {b}");
        }
        let taus = [
            ("[0S]", "[SS_1]"),
            ("[SS_1]", "[S0]"),
            ("[S0]", "[ΛΛ_f]"),
            ("[ΛΛ_f]", "[0S]"),
            ("[ΛS_p]", "[SΛ_i]"),
            ("[SΛ_i]", "[ΛS_p]"),
        ];
        for (a, b) in taus {
            assert_eq!(s.tau[label_index(&s, a)], Some(label_index(&s, b)), "τ{a}");
        }
        assert!(stability_check(&s) && connectedness_check(&s) && mesh_complete(&s));
        let d = dynkin_recognition(&s).unwrap();
        assert_eq!(d.dynkin.as_deref(), Some("A3"));
        assert_eq!(d.orbit_sizes, vec![2, 4]);
    }

    #[test]
    fn tree_classification() {
        let path = [None, Some(0), Some(1)];
        assert_eq!(classify_tree(&path).as_deref(), Some("A3"));
        let d4 = [None, Some(0), Some(0), Some(0)];
        assert_eq!(classify_tree(&d4).as_deref(), Some("D4"));
        let e6 = [None, Some(0), Some(0), Some(0), Some(2), Some(3)];
        assert_eq!(classify_tree(&e6).as_deref(), Some("E6"));
        let star = [None, Some(0), Some(0), Some(0), Some(0)];
        assert_eq!(classify_tree(&star), None);
    }

    #[test]
    fn closed_forms_match_iteration() {
        for n in [2, 3] {
            let l = poly(n);
            let hcat = HCatalog::build(&l, Caps::default()).unwrap();
            for x in &hcat.objects {
                for fam in families_of(x).unwrap() {
                    let bad = orbit_disagreements(x, fam, 8).unwrap();
                    assert!(bad.is_empty(), "{} {}: {bad:?}", object_name(x), fam.name());
                }
            }
        }
    }

    #[test]
    fn zero_to_simple_orbit_over_dual_numbers() {
        let l = poly(2);
        let x = MorphObject::zero_to(&Module::simple(&l, 0));
        let names: Vec<String> =
            (1..=4).map(|i| object_name(&orbit_closed_form(&x, OrbitFamily::ZeroTo, i).unwrap())).collect();
        assert_eq!(names, ["(S = S)_1", "(S -> 0)", "(Λ -> Λ)_f", "(0 -> S)"]);
        assert_eq!(periodicity(&x, 24).unwrap(), Some(4));
        let cover = cover_object(&Module::simple(&l, 0)).unwrap();
        assert_eq!(periodicity(&cover, 24).unwrap(), Some(2));
        assert!(periodicity(&MorphObject::zero_to(&Module::projective(&l, 0)), 24).is_err());
    }

    #[test]
    fn truncated_polynomial_objects_have_period_dividing_four() {
        for n in [2, 3, 4] {
            let l = poly(n);
            for (_, x) in truncated_polynomial_family(&l).unwrap() {
                let p = periodicity(&x, 24).unwrap().unwrap();
                assert_eq!(4 % p, 0, "{}", object_name(&x));
            }
        }
    }

    #[test]
    fn functor_identities_on_symmetric_algebras() {
        let l = poly(3);
        let cat = enumerate_indecomposables(&l, Caps::default()).unwrap();
        assert!(nakayama_fixes_all(&cat).unwrap());
        for r in functor_identities(&cat).unwrap() {
            assert!(r.a_matches_omega6 && r.b_matches_omega3 && r.a_matches_nu4_omega6, "{r:?}");
        }
    }

    #[test]
    fn delta_beta_over_dual_numbers() {
        let l = poly(2);
        let cat = enumerate_indecomposables(&l, Caps::default()).unwrap();
        let hcat = HCatalog::build(&l, Caps::default()).unwrap();
        let r = delta_beta_maps(&cat, &hcat).unwrap();
        assert!(r.delta.well_defined && r.delta.surjective);
        assert!(r.beta.well_defined && r.beta.surjective);
        assert_eq!(r.delta.orbits.len(), 1);
    }
}
